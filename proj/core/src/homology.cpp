#include "hvol/homology.hpp"

namespace hvol {

std::string to_string(Parity p) { return p == Parity::Odd ? "odd" : "even"; }

Parity parse_parity(const std::string& s) {
  if (s == "odd") return Parity::Odd;
  if (s == "even") return Parity::Even;
  throw DomainError("parity must be 'odd' or 'even', got '" + s + "'");
}

Curve build_curve(int g, Parity parity) {
  if (g < 2) throw DomainError("genus must be at least 2, got " + std::to_string(g));
  auto m = std::make_shared<CurveModel>();
  m->g = g;
  m->parity = parity;
  m->n = parity == Parity::Odd ? 2 * g + 1 : 2 * g + 2;
  if (parity == Parity::Odd) {
    m->relation_matrix.assign(1, std::vector<long long>(m->n, 1));
  } else {
    m->relation_matrix.assign(2, std::vector<long long>(m->n, 0));
    for (int k = 0; k < m->n; ++k) m->relation_matrix[k % 2][k] = 1;
  }
  return m;
}

namespace {

void check_curve(const HClass& x, const HClass& y) {
  if (x.curve != y.curve && (x.curve->g != y.curve->g || x.curve->parity != y.curve->parity))
    throw DomainError("homology classes live on different curves");
}

}  // namespace

HClass HClass::operator+(const HClass& o) const {
  check_curve(*this, o);
  HClass r = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
  return r;
}

HClass HClass::operator-(const HClass& o) const { return *this + (-o); }

HClass HClass::operator-() const { return *this * -1; }

HClass HClass::operator*(long long s) const {
  HClass r = *this;
  for (auto& v : r.coords) v *= s;
  return r;
}

bool HClass::operator==(const HClass& o) const {
  check_curve(*this, o);
  return coords == o.coords;
}

HClass zero_class(const Curve& c) { return HClass{c, std::vector<long long>(c->rank(), 0)}; }

HClass reduce(const Curve& c, const std::vector<long long>& raw) {
  if (static_cast<int>(raw.size()) != c->n)
    throw DimensionError("reduce: expected " + std::to_string(c->n) + " raw coordinates, got " +
                         std::to_string(raw.size()));
  HClass x = zero_class(c);
  const int N = c->rank();
  for (int k = 0; k < N; ++k) x.coords[k] = raw[k];
  if (c->parity == Parity::Odd) {
    // L_{n-1} = -(L_0 + ... + L_{n-2})
    for (int k = 0; k < N; ++k) x.coords[k] -= raw[c->n - 1];
  } else {
    // L_{n-2} = -(L_0 + L_2 + ...), L_{n-1} = -(L_1 + L_3 + ...)
    for (int k = 0; k < N; ++k) x.coords[k] -= raw[k % 2 == 0 ? c->n - 2 : c->n - 1];
  }
  return x;
}

HClass ell(const Curve& c, long long k) {
  std::vector<long long> raw(c->n, 0);
  raw[pmod(k, c->n)] = 1;
  return reduce(c, raw);
}

std::vector<long long> raw_coords(const HClass& x) {
  std::vector<long long> raw(x.curve->n, 0);
  for (std::size_t k = 0; k < x.coords.size(); ++k) raw[k] = x.coords[k];
  return raw;
}

int raw_intersection(int n, long long i, long long j) {
  long long d = pmod(j - i, n);
  if (d == 1) return 1;
  if (d == n - 1) return -1;
  return 0;
}

long long intersection(const HClass& x, const HClass& y) {
  check_curve(x, y);
  const int n = x.curve->n;
  const int N = x.curve->rank();
  long long s = 0;
  for (int a = 0; a < N; ++a) {
    if (!x.coords[a]) continue;
    for (int b = 0; b < N; ++b)
      if (y.coords[b]) s += x.coords[a] * y.coords[b] * raw_intersection(n, a, b);
  }
  return s;
}

ZMatrix gram_matrix(const Curve& c) {
  const int N = c->rank();
  ZMatrix G(N, std::vector<long long>(N));
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) G[a][b] = raw_intersection(c->n, a, b);
  return G;
}

ZMatrix gram_matrix(const std::vector<HClass>& xs) {
  ZMatrix G(xs.size(), std::vector<long long>(xs.size()));
  for (std::size_t a = 0; a < xs.size(); ++a)
    for (std::size_t b = 0; b < xs.size(); ++b) G[a][b] = intersection(xs[a], xs[b]);
  return G;
}

HClass phi_action(const HClass& x, long long power) {
  const int n = x.curve->n;
  std::vector<long long> raw(n, 0);
  for (std::size_t k = 0; k < x.coords.size(); ++k) raw[pmod(static_cast<long long>(k) + power, n)] += x.coords[k];
  return reduce(x.curve, raw);
}

ZMatrix phi_matrix(const Curve& c, long long power) {
  const int N = c->rank();
  ZMatrix P(N, std::vector<long long>(N, 0));
  for (int col = 0; col < N; ++col) {
    HClass img = ell(c, col + power);
    for (int row = 0; row < N; ++row) P[row][col] = img.coords[row];
  }
  return P;
}

ChiVector chi(const Curve& c, int j) {
  if (j < 1 || j > c->n - 1) throw DomainError("chi: index out of range 1..n-1");
  ChiVector v{j, {}};
  for (int k = 0; k < c->n; ++k) v.coords.push_back(zeta_pow(c->n, static_cast<long long>(j) * k));
  return v;
}

std::vector<CycNum> ell_in_chi(const Curve& c, int i) {
  if (i < 0 || i > c->n - 1) throw DomainError("ell_in_chi: index out of range 0..n-1");
  std::vector<CycNum> out;
  for (int j = 1; j < c->n; ++j) out.push_back(zeta_pow(c->n, -static_cast<long long>(i) * j) * Rat(1, c->n));
  return out;
}

ChiVector shift_raw(const ChiVector& v, long long power) {
  ChiVector r = v;
  const int n = static_cast<int>(v.coords.size());
  for (int k = 0; k < n; ++k) r.coords[pmod(k + power, n)] = v.coords[k];
  return r;
}

CycNum chi_pairing(const Curve& c, const ChiVector& v, long long k) {
  CycNum s(c->n);
  for (int m = 0; m < c->n; ++m) {
    int e = raw_intersection(c->n, m, k);
    if (e) s += v.coords[m] * Rat(e);
  }
  return s;
}

PoincareDual poincare_dual(const Curve& c, int i) {
  if (i < 1 || i > c->n - 1) throw DomainError("poincare_dual: index out of range 1..n-1");
  CycNum denom = CycNum::rational(c->n, 1) + zeta_pow(c->n, -i);
  if (denom.is_zero()) throw DomainError("poincare_dual: pole at i = n/2 (1 + zeta^{-i} = 0)");
  return PoincareDual{denom.inv(), chi(c, i)};
}

std::vector<HClass> symplectic_basis(const Curve& c, BasisScheme scheme) {
  const int g = c->g;
  std::vector<HClass> out;
  if (scheme == BasisScheme::OddLoops) {
    if (c->parity != Parity::Even) throw DomainError("odd-loop basis requires n = 2g + 2");
    for (int i = 1; i <= g; ++i) {
      HClass b = zero_class(c);
      for (int m = 0; m < i; ++m) b = b - ell(c, 2 * m);
      out.push_back(ell(c, 2 * i - 1));
      out.push_back(b);
    }
    return out;
  }
  // a_i = -L_{2(g-i)+1}; b_i is the class of (l_1 l_3 .. l_{2m-1})^{-1} l_0 l_1 .. l_{2m}, m = g - i.
  for (int i = 1; i <= g; ++i) {
    const int m = g - i;
    HClass b = zero_class(c);
    for (int r = 0; r <= m; ++r) b = b + ell(c, 2 * r);
    out.push_back(-ell(c, 2 * m + 1));
    out.push_back(b);
  }
  return out;
}

ZMatrix standard_symplectic(int g) {
  ZMatrix J(2 * g, std::vector<long long>(2 * g, 0));
  for (int i = 0; i < g; ++i) {
    J[2 * i][2 * i + 1] = 1;
    J[2 * i + 1][2 * i] = -1;
  }
  return J;
}

}  // namespace hvol
