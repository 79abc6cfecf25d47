#include "hvol/magnus.hpp"

#include <sstream>

namespace hvol {

// ---- words ----

Word::Word(const std::vector<Letter>& letters) {
  for (const auto& x : letters) {
    if (x.exp != 1 && x.exp != -1) throw DomainError("Word: exponents must be +1 or -1");
    if (!l_.empty() && l_.back().gen == x.gen && l_.back().exp == -x.exp)
      l_.pop_back();
    else
      l_.push_back(x);
  }
}

Word Word::operator*(const Word& o) const {
  std::vector<Letter> all = l_;
  all.insert(all.end(), o.l_.begin(), o.l_.end());
  return Word(all);
}

Word Word::inverse() const {
  std::vector<Letter> r;
  for (auto it = l_.rbegin(); it != l_.rend(); ++it) r.push_back(Letter{it->gen, -it->exp});
  return Word(r);
}

std::vector<long long> Word::abelianize(int rank) const {
  std::vector<long long> v(rank, 0);
  for (const auto& x : l_) {
    if (x.gen < 0 || x.gen >= rank) throw DimensionError("Word: generator outside rank");
    v[x.gen] += x.exp;
  }
  return v;
}

std::string Word::to_string() const {
  if (l_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < l_.size(); ++i) {
    if (i) os << ' ';
    os << 'x' << l_[i].gen;
    if (l_[i].exp < 0) os << "^-1";
  }
  return os.str();
}

// ---- truncated series ----

namespace {

std::size_t ipow(int m, int d) {
  std::size_t r = 1;
  for (int i = 0; i < d; ++i) r *= static_cast<std::size_t>(m);
  return r;
}

void check_compatible(const TruncSeries& a, const TruncSeries& b) {
  if (a.rank() != b.rank() || a.bound() != b.bound())
    throw DimensionError("truncated series with different rank or degree bound");
}

}  // namespace

TruncSeries::TruncSeries(int rank, int D) : rank_(rank), D_(D) {
  if (rank < 1 || D < 0) throw DomainError("TruncSeries: invalid rank or degree");
  for (int d = 0; d <= D; ++d) c_.emplace_back(ipow(rank, d), Rat(0));
}

TruncSeries TruncSeries::one(int rank, int D) {
  TruncSeries s(rank, D);
  s.c_[0][0] = 1;
  return s;
}

TruncSeries TruncSeries::unit_plus_generator(int rank, int D, int gen) {
  TruncSeries s = one(rank, D);
  if (D >= 1) s.c_[1].at(gen) = 1;
  return s;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  check_compatible(*this, o);
  TruncSeries r(rank_, D_);
  for (int p = 0; p <= D_; ++p)
    for (int q = 0; p + q <= D_; ++q) {
      const auto& A = c_[p];
      const auto& B = o.c_[q];
      auto& R = r.c_[p + q];
      const std::size_t nb = B.size();
      for (std::size_t ia = 0; ia < A.size(); ++ia) {
        if (A[ia] == 0) continue;
        for (std::size_t ib = 0; ib < nb; ++ib)
          if (B[ib] != 0) R[ia * nb + ib] += A[ia] * B[ib];
      }
    }
  return r;
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  check_compatible(*this, o);
  TruncSeries r = *this;
  for (int d = 0; d <= D_; ++d)
    for (std::size_t i = 0; i < c_[d].size(); ++i) r.c_[d][i] += o.c_[d][i];
  return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const { return *this + o.scaled(-1); }

TruncSeries TruncSeries::scaled(const Rat& s) const {
  TruncSeries r = *this;
  for (auto& part : r.c_)
    for (auto& x : part) x *= s;
  return r;
}

bool TruncSeries::operator==(const TruncSeries& o) const {
  return rank_ == o.rank_ && D_ == o.D_ && c_ == o.c_;
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) { return a * b; }

TruncSeries series_inv(const TruncSeries& a) {
  if (a.part(0)[0] != 1) throw DomainError("series_inv: degree-0 component is not 1");
  const TruncSeries one = TruncSeries::one(a.rank(), a.bound());
  const TruncSeries minus_u = one - a;
  TruncSeries result = one, term = one;
  for (int k = 1; k <= a.bound(); ++k) {
    term = term * minus_u;
    result = result + term;
  }
  return result;
}

// ---- expansions ----

Expansion make_expansion(const std::vector<TruncSeries>& images) {
  if (images.empty()) throw DomainError("make_expansion: no generators");
  Expansion e;
  e.rank = images.front().rank();
  e.D = images.front().bound();
  for (int i = 0; i < static_cast<int>(images.size()); ++i) {
    const auto& s = images[i];
    if (s.rank() != e.rank || s.bound() != e.D) throw DimensionError("make_expansion: inconsistent images");
    if (s.part(0)[0] != 1) throw DomainError("make_expansion: image is not group-like in degree 0");
    if (e.D >= 1)
      for (int j = 0; j < e.rank; ++j)
        if (s.part(1)[j] != (i == j ? 1 : 0))
          throw DomainError("make_expansion: image is not 1 + [x] modulo degree 2");
    e.images.push_back(s);
    e.inverse_images.push_back(series_inv(s));
  }
  if (static_cast<int>(e.images.size()) != e.rank) throw DimensionError("make_expansion: need one image per generator");
  return e;
}

Expansion standard_expansion(int rank, int D) {
  std::vector<TruncSeries> images;
  for (int i = 0; i < rank; ++i) images.push_back(TruncSeries::unit_plus_generator(rank, D, i));
  return make_expansion(images);
}

TruncSeries evaluate(const Expansion& e, const Word& w) {
  TruncSeries acc = TruncSeries::one(e.rank, e.D);
  for (const auto& x : w.letters()) {
    if (x.gen < 0 || x.gen >= e.rank) throw DimensionError("evaluate: generator outside rank");
    acc = acc * (x.exp > 0 ? e.images[x.gen] : e.inverse_images[x.gen]);
  }
  return acc;
}

std::vector<Rat> theta2(const Expansion& e, const Word& w) {
  if (e.D < 2) throw DomainError("theta2 needs truncation degree at least 2");
  return evaluate(e, w).part(2);
}

// ---- free group endomorphisms ----

FreeAut identity_aut(int rank) {
  FreeAut f{rank, {}};
  for (int i = 0; i < rank; ++i) f.images.push_back(Word::generator(i));
  return f;
}

Word apply(const FreeAut& f, const Word& w) {
  std::vector<Letter> out;
  for (const auto& x : w.letters()) {
    if (x.gen < 0 || x.gen >= f.rank) throw DimensionError("apply: generator outside rank");
    const Word img = x.exp > 0 ? f.images[x.gen] : f.images[x.gen].inverse();
    out.insert(out.end(), img.letters().begin(), img.letters().end());
  }
  return Word(out);
}

FreeAut compose(const FreeAut& f, const FreeAut& g) {
  if (f.rank != g.rank) throw DimensionError("compose: rank mismatch");
  FreeAut h{f.rank, {}};
  for (const auto& w : g.images) h.images.push_back(apply(f, w));
  return h;
}

ZMatrix homology_matrix(const FreeAut& f) {
  ZMatrix m(f.rank, std::vector<long long>(f.rank, 0));
  for (int i = 0; i < f.rank; ++i) {
    auto v = f.images[i].abelianize(f.rank);
    for (int r = 0; r < f.rank; ++r) m[r][i] = v[r];
  }
  return m;
}

namespace {

// Diagonal action of an integer matrix on a rank^2 rational tensor.
std::vector<Rat> act2(const ZMatrix& m, const std::vector<Rat>& t, int rank) {
  std::vector<Rat> r(t.size(), Rat(0));
  for (int a = 0; a < rank; ++a)
    for (int b = 0; b < rank; ++b) {
      const Rat& v = t[a * rank + b];
      if (v == 0) continue;
      for (int p = 0; p < rank; ++p) {
        if (!m[p][a]) continue;
        for (int q = 0; q < rank; ++q)
          if (m[q][b]) r[p * rank + q] += v * Rat(m[p][a] * m[q][b]);
      }
    }
  return r;
}

std::vector<Rat> minus(std::vector<Rat> a, const std::vector<Rat>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

// Substitute X_j -> t[j] in a series; t[j] has no constant term.
TruncSeries substitute(const std::vector<TruncSeries>& t, const TruncSeries& s) {
  const int m = s.rank(), D = s.bound();
  TruncSeries out = TruncSeries::one(m, D).scaled(s.part(0)[0]);
  for (int d = 1; d <= D; ++d) {
    const auto& coeffs = s.part(d);
    for (std::size_t idx = 0; idx < coeffs.size(); ++idx) {
      if (coeffs[idx] == 0) continue;
      // decode idx into letters, most significant first
      std::vector<int> letters(d);
      std::size_t rest = idx;
      for (int p = d - 1; p >= 0; --p) {
        letters[p] = static_cast<int>(rest % m);
        rest /= m;
      }
      TruncSeries prod = t[letters[0]];
      for (int p = 1; p < d; ++p) prod = prod * t[letters[p]];
      out = out + prod.scaled(coeffs[idx]);
    }
  }
  return out;
}

std::vector<std::vector<Rat>> rational_inverse(const ZMatrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) { piv = r; break; }
    if (piv < 0) throw DomainError("homology action is not invertible");
    std::swap(a[col], a[piv]);
    Rat inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<Rat>> out(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

}  // namespace

std::vector<Rat> tau1_at_image(const Expansion& e, const FreeAut& f, const Word& w) {
  return minus(theta2(e, apply(f, w)), act2(homology_matrix(f), theta2(e, w), e.rank));
}

std::vector<Rat> tau1(const Expansion& e, const FreeAut& f, const FreeAut& f_inv, const Word& gamma) {
  return minus(theta2(e, gamma), act2(homology_matrix(f), theta2(e, apply(f_inv, gamma)), e.rank));
}

bool tau1_cocycle_check(const Expansion& e, const FreeAut& f, const FreeAut& g, const std::vector<Word>& samples) {
  const FreeAut fg = compose(f, g);
  const ZMatrix mf = homology_matrix(f);
  for (const auto& w : samples) {
    auto lhs = tau1_at_image(e, fg, w);
    auto rhs = tau1_at_image(e, f, apply(g, w));
    auto inner = act2(mf, tau1_at_image(e, g, w), e.rank);
    for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += inner[i];
    if (lhs != rhs) return false;
  }
  return true;
}

std::vector<std::vector<Rat>> tau_k(const Expansion& e, const FreeAut& f, int k) {
  if (k < 1) throw DomainError("tau_k: k must be positive");
  if (e.D < k + 1) throw DomainError("tau_k: truncation degree must be at least k + 1");
  const int m = e.rank, D = e.D;
  // T(X_i), solved degree by degree from T(theta(x_i)) = theta(f(x_i)).
  std::vector<TruncSeries> target, higher, t;
  for (int i = 0; i < m; ++i) {
    target.push_back(evaluate(e, f.images[i]));
    TruncSeries h = e.images[i];
    h.part(0)[0] = 0;
    if (D >= 1) std::fill(h.part(1).begin(), h.part(1).end(), Rat(0));
    higher.push_back(h);
    t.emplace_back(m, D);
  }
  for (int d = 1; d <= D; ++d) {
    std::vector<TruncSeries> next = t;
    for (int i = 0; i < m; ++i) {
      TruncSeries th = substitute(t, higher[i]);
      next[i].part(d) = minus(target[i].part(d), th.part(d));
    }
    t = std::move(next);
  }
  const auto minv = rational_inverse(homology_matrix(f));
  std::vector<std::vector<Rat>> out;
  for (int col = 0; col < m; ++col) {
    std::vector<Rat> acc(ipow(m, k + 1), Rat(0));
    for (int i = 0; i < m; ++i) {
      if (minv[i][col] == 0) continue;
      const auto& part = t[i].part(k + 1);
      for (std::size_t x = 0; x < acc.size(); ++x) acc[x] += minv[i][col] * part[x];
    }
    out.push_back(std::move(acc));
  }
  return out;
}

// ---- hyperelliptic data ----

namespace {

int gen_a(int i) { return 2 * (i - 1); }
int gen_b(int i) { return 2 * (i - 1) + 1; }

Word product(const std::vector<Word>& W, int from, int to, int step) {
  Word r;
  for (int k = from; k <= to; k += step) r = r * W[k];
  return r;
}

}  // namespace

std::vector<Word> ell_words(const Curve& c) {
  const int g = c->g, n = c->n;
  std::vector<Word> W(n);
  for (int i = 1; i <= g; ++i) W[2 * (g - i) + 1] = Word::generator(gen_a(i), -1);
  for (int i = g; i >= 1; --i) {
    const int m = g - i;
    Word P = product(W, 1, 2 * m - 1, 2);
    Word R = product(W, 0, 2 * m - 1, 1);
    W[2 * m] = R.inverse() * P * Word::generator(gen_b(i));
  }
  Word R = product(W, 0, 2 * g - 1, 1);
  if (c->parity == Parity::Even) {
    Word P = product(W, 1, 2 * g - 1, 2);
    W[2 * g] = R.inverse() * P;
    W[2 * g + 1] = P.inverse();
  } else {
    W[2 * g] = R.inverse();
  }
  return W;
}

ZMatrix generator_classes(const Curve& c) {
  auto basis = symplectic_basis(c, BasisScheme::Word);
  const int N = c->rank();
  ZMatrix A(N, std::vector<long long>(N, 0));
  for (int x = 0; x < N; ++x)
    for (int r = 0; r < N; ++r) A[r][x] = basis[x].coords[r];
  return A;
}

Tensor2 to_ell_basis(const Curve& c, const std::vector<Rat>& t) {
  const ZMatrix A = generator_classes(c);
  const int N = c->rank();
  std::vector<Rat> img = act2(A, t, N);
  Tensor2 out(N);
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (!is_integral(img[i])) throw DomainError("to_ell_basis: non-integral tensor");
    out.c[i] = static_cast<long long>(boost::multiprecision::numerator(img[i]));
  }
  return out;
}

Tensor2 std2_ell_words(const Curve& c, long long k, int D) {
  const auto e = standard_expansion(c->rank(), D);
  const auto W = ell_words(c);
  return to_ell_basis(c, theta2(e, W[pmod(k, c->n)]));
}

namespace {

// Builder for tensors written in the raw loop classes L_k.
struct TBuilder {
  Curve c;
  Tensor2 t;
  explicit TBuilder(const Curve& cv) : c(cv), t(cv->rank()) {}

  void add(long long coef, long long a, long long b) { t += outer(ell(c, a), ell(c, b)) * coef; }
  void add(long long coef, const std::vector<long long>& A, const std::vector<long long>& B) {
    for (auto a : A)
      for (auto b : B) add(coef, a, b);
  }
};

// Indices of Lt_i = L_0 + L_2 + ... + L_{2i-2}.
std::vector<long long> lt(int i) {
  std::vector<long long> r;
  for (int m = 0; m < i; ++m) r.push_back(2 * m);
  return r;
}

// Indices of |phi| Lt_i = L_1 + L_3 + ... + L_{2i-1}.
std::vector<long long> lt_shift(int i) {
  std::vector<long long> r;
  for (int m = 0; m < i; ++m) r.push_back(2 * m + 1);
  return r;
}

// L_{2i-1} Lt_i - Lt_i (L_{2i-1} + L_{2i})
void add_even_block(TBuilder& b, int i, long long sign) {
  b.add(sign, {2 * i - 1}, lt(i));
  b.add(-sign, lt(i), {2 * i - 1, 2 * i});
}

Tensor2 std2_closed_impl(const Curve& c, long long k, bool corrected) {
  const int g = c->g, n = c->n;
  k = pmod(k, n);
  TBuilder b(c);
  if (k == 0) return b.t;
  const bool even = c->parity == Parity::Even;
  if (even && k == 2 * g + 1) {
    for (int i = 1; i <= g; ++i)
      for (int j = i + 1; j <= g; ++j) b.add(1, 2 * j - 1, 2 * i - 1);
    return b.t;
  }
  if (!even && k == 2 * g) {
    const int lo = corrected ? 0 : 1;
    for (int i = lo; i <= 2 * g - 1; ++i)
      for (int j = i + 1; j <= 2 * g - 1; ++j) b.add(1, j, i);
    const int sq_hi = corrected ? g - 1 : g;
    for (int i = 0; i <= sq_hi; ++i) b.add(1, 2 * i, 2 * i);
    for (int i = 1; i <= g - 1; ++i) add_even_block(b, i, -1);
    return b.t;
  }
  if (k % 2 == 1) {
    b.add(1, k, k);
  } else {
    add_even_block(b, static_cast<int>(k / 2), 1);
  }
  return b.t;
}

}  // namespace

Tensor2 std2_ell_closed(const Curve& c, long long k) { return std2_closed_impl(c, k, false); }

Tensor2 std2_ell_closed_corrected(const Curve& c, long long k) { return std2_closed_impl(c, k, true); }

Tensor2 tau1_closed(const Curve& c, long long k) {
  const int g = c->g, n = c->n;
  k = pmod(k, n);
  const bool even = c->parity == Parity::Even;
  TBuilder b(c);
  if (k == 1) {
    b.add(1, 1, 1);
    return b.t;
  }
  if (even) {
    if (k == 0) {
      for (int i = 1; i <= g; ++i)
        for (int j = i + 1; j <= g; ++j) b.add(-1, 2 * j, 2 * i);
      return b.t;
    }
    if (k == 2 * g) {
      b.add(1, 2 * g + 1, 2 * g);
      b.add(-1, 2 * g, 2 * g + 1);
      b.add(1, 2 * g + 1, 2 * g + 1);
      b.add(-1, 2 * g, 2 * g);
      return b.t;
    }
    if (k == 2 * g + 1) {
      for (int i = 1; i <= g; ++i)
        for (int j = i + 1; j <= g; ++j) b.add(1, 2 * j - 1, 2 * i - 1);
      b.add(1, 2 * g, 2 * g + 1);
      b.add(-1, 2 * g + 1, 2 * g);
      b.add(-1, 2 * g + 1, 2 * g + 1);
      return b.t;
    }
  } else {
    if (k == 0) {
      for (int i = 1; i <= 2 * g - 1; ++i)
        for (int j = i + 1; j <= 2 * g - 1; ++j) b.add(-1, j + 1, i + 1);
      for (int i = 1; i <= g - 1; ++i) {
        b.add(1, {2 * i}, lt_shift(i));
        b.add(-1, lt_shift(i), {2 * i, 2 * i + 1});
      }
      for (int i = 0; i <= g - 1; ++i) b.add(1, 2 * i + 1, 2 * i + 1);
      return b.t;
    }
    if (k == 2 * g) {
      for (int i = 1; i <= 2 * g - 1; ++i)
        for (int j = i + 1; j <= 2 * g - 1; ++j) b.add(1, j, i);
      for (int i = 1; i <= g - 1; ++i) add_even_block(b, i, -1);
      for (int i = 0; i <= g - 1; ++i) b.add(1, 2 * i, 2 * i);
      b.add(-1, 2 * g, 2 * g);
      return b.t;
    }
  }
  if (k % 2 == 1) {
    const int i = static_cast<int>((k - 1) / 2);
    b.add(1, k, k);
    b.add(-1, {2 * i}, lt_shift(i));
    b.add(1, lt_shift(i), {2 * i, 2 * i + 1});
  } else {
    const int i = static_cast<int>(k / 2);
    add_even_block(b, i, 1);
    b.add(-1, k, k);
  }
  return b.t;
}

std::vector<Tensor2> std2_table(const Curve& c, Std2Source src, int D) {
  std::vector<Tensor2> out;
  if (src == Std2Source::Words) {
    const auto e = standard_expansion(c->rank(), D);
    for (const auto& w : ell_words(c)) out.push_back(to_ell_basis(c, theta2(e, w)));
    return out;
  }
  for (int k = 0; k < c->n; ++k)
    out.push_back(src == Std2Source::Closed ? std2_ell_closed(c, k) : std2_ell_closed_corrected(c, k));
  return out;
}

Tensor2 Tau1Map::on_class(const HClass& x) const {
  Tensor2 t(curve->rank());
  for (std::size_t cc = 0; cc < x.coords.size(); ++cc)
    if (x.coords[cc]) t += on_loop[cc] * x.coords[cc];
  return t;
}

Tau1Map tau1_hyperelliptic(const Curve& c, long long power, const std::vector<Tensor2>& std2) {
  if (static_cast<int>(std2.size()) != c->n) throw DimensionError("tau1: need std2 for every loop");
  const ZMatrix P = phi_matrix(c, power);
  Tau1Map m{c, power, {}};
  for (int k = 0; k < c->n; ++k) m.on_loop.push_back(std2[k] - act(P, std2[pmod(k - power, c->n)]));
  return m;
}

Tau1Map tau1_hyperelliptic(const Curve& c, long long power) {
  return tau1_hyperelliptic(c, power, std2_table(c, Std2Source::Words));
}

Tau1Map tau1_closed_map(const Curve& c) {
  Tau1Map m{c, 1, {}};
  for (int k = 0; k < c->n; ++k) m.on_loop.push_back(tau1_closed(c, k));
  return m;
}

bool tau1_cyclic_cocycle_check(const Curve& c, long long a, long long b, const std::vector<Tensor2>& std2) {
  const Tau1Map ta = tau1_hyperelliptic(c, a, std2);
  const Tau1Map tb = tau1_hyperelliptic(c, b, std2);
  const Tau1Map tab = tau1_hyperelliptic(c, a + b, std2);
  const ZMatrix Pa = phi_matrix(c, a);
  for (int cc = 0; cc < c->rank(); ++cc) {
    Tensor2 rhs = ta.on_loop[cc] + act(Pa, tb.on_loop[pmod(cc - a, c->n)]);
    if (!(rhs == tab.on_loop[cc])) return false;
  }
  return true;
}

std::vector<long long> hom_identify(const Curve& c, const std::vector<Tensor2>& basis_images) {
  const int N = c->rank(), n = c->n;
  std::vector<long long> out(static_cast<std::size_t>(N) * N * N, 0);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int cc = 0; cc < N; ++cc) {
        const Tensor2& T = basis_images[cc];
        long long s = 0;
        for (int p = 0; p < N; ++p) {
          const int ip = raw_intersection(n, a, p);
          if (!ip) continue;
          for (int q = 0; q < N; ++q) {
            const int iq = raw_intersection(n, b, q);
            if (iq) s += T.at(p, q) * ip * iq;
          }
        }
        out[(static_cast<std::size_t>(a) * N + b) * N + cc] = s;
      }
  return out;
}

std::vector<long long> hom_identify(const Curve& c, const Tau1Map& tau) {
  std::vector<Tensor2> imgs(tau.on_loop.begin(), tau.on_loop.begin() + c->rank());
  return hom_identify(c, imgs);
}

std::map<Triple, long long> reference_s_values(Parity p) {
  const std::vector<Triple> minus_even = {{0, 1, 2}, {0, 2, 1}, {0, 3, 3}, {1, 0, 3}, {1, 2, 2},
                                          {2, 0, 1}, {2, 1, 3}, {3, 1, 0}, {3, 2, 3}, {3, 3, 2}};
  const std::vector<Triple> plus_even = {{0, 0, 1}, {0, 1, 3}, {0, 2, 3}, {1, 0, 2}, {1, 2, 3}, {2, 1, 2},
                                         {2, 2, 1}, {2, 3, 3}, {3, 0, 3}, {3, 1, 2}, {3, 3, 0}};
  std::map<Triple, long long> m;
  for (const auto& t : minus_even) m[t] = -1;
  for (const auto& t : plus_even) m[t] = 1;
  if (p == Parity::Odd) {
    for (const Triple t : {Triple{0, 2, 0}, Triple{1, 2, 0}, Triple{2, 0, 0}, Triple{3, 0, 0}}) m[t] = -1;
    for (const Triple t : {Triple{0, 0, 0}, Triple{1, 0, 0}}) m[t] = 1;
    m[Triple{2, 2, 0}] = 3;
  }
  return m;
}

}  // namespace hvol
