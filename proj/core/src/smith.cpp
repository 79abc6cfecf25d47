#include "hvol/smith.hpp"

#include <sstream>

namespace hvol {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw DimensionError("IntMatrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (c_ != o.r_) throw DimensionError("IntMatrix product: shape mismatch");
  IntMatrix r(r_, o.c_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < c_; ++k) {
      if (a_[i][k] == 0) continue;
      const Int& x = a_[i][k];
      for (std::size_t j = 0; j < o.c_; ++j)
        if (o.a_[k][j] != 0) r.a_[i][j] += x * o.a_[k][j];
    }
  return r;
}

std::vector<Int> IntMatrix::operator*(const std::vector<Int>& v) const {
  if (c_ != v.size()) throw DimensionError("IntMatrix times vector: shape mismatch");
  std::vector<Int> r(r_, Int(0));
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < c_; ++k)
      if (a_[i][k] != 0 && v[k] != 0) r[i] += a_[i][k] * v[k];
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t.a_[j][i] = a_[i][j];
  return t;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < r_; ++i) {
    for (std::size_t j = 0; j < c_; ++j) os << (j ? " " : "") << a_[i][j];
    os << '\n';
  }
  return os.str();
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      std::swap(a.row(k), a.row(p));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<Int> SNFData::diagonal() const {
  std::vector<Int> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

namespace {

// Tracks U, U^{-1}, V, V^{-1} alongside the elementary operations on D.
struct Reducer {
  IntMatrix D, U, Uinv, V, Vinv;

  explicit Reducer(const IntMatrix& a)
      : D(a), U(IntMatrix::identity(a.rows())), Uinv(IntMatrix::identity(a.rows())),
        V(IntMatrix::identity(a.cols())), Vinv(IntMatrix::identity(a.cols())) {}

  static void axpy(std::vector<Int>& dst, const std::vector<Int>& src, const Int& f) {
    for (std::size_t j = 0; j < dst.size(); ++j)
      if (src[j] != 0) dst[j] += f * src[j];
  }

  // row dst += f * row src
  void add_row(std::size_t src, std::size_t dst, const Int& f) {
    if (f == 0) return;
    axpy(D.row(dst), D.row(src), f);
    axpy(U.row(dst), U.row(src), f);
    for (std::size_t i = 0; i < Uinv.rows(); ++i)
      if (Uinv(i, dst) != 0) Uinv(i, src) -= f * Uinv(i, dst);
  }

  // col dst += f * col src
  void add_col(std::size_t src, std::size_t dst, const Int& f) {
    if (f == 0) return;
    for (std::size_t i = 0; i < D.rows(); ++i)
      if (D(i, src) != 0) D(i, dst) += f * D(i, src);
    for (std::size_t i = 0; i < V.rows(); ++i)
      if (V(i, src) != 0) V(i, dst) += f * V(i, src);
    Int nf = -f;
    axpy(Vinv.row(src), Vinv.row(dst), nf);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap(D.row(a), D.row(b));
    std::swap(U.row(a), U.row(b));
    for (std::size_t i = 0; i < Uinv.rows(); ++i) std::swap(Uinv(i, a), Uinv(i, b));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < D.rows(); ++i) std::swap(D(i, a), D(i, b));
    for (std::size_t i = 0; i < V.rows(); ++i) std::swap(V(i, a), V(i, b));
    std::swap(Vinv.row(a), Vinv.row(b));
  }

  void negate_row(std::size_t r) {
    for (auto& x : D.row(r)) x = -x;
    for (auto& x : U.row(r)) x = -x;
    for (std::size_t i = 0; i < Uinv.rows(); ++i) Uinv(i, r) = -Uinv(i, r);
  }
};

// Nearest-integer quotient, so that |a - q b| <= |b| / 2.
Int round_div(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a - q * b;
  if (2 * abs(r) > abs(b)) q += ((r < 0) == (b < 0)) ? 1 : -1;
  return q;
}

}  // namespace

SNFData smith_normal_form(const IntMatrix& a) {
  Reducer R(a);
  const std::size_t m = a.rows(), n = a.cols();
  // Smallest nonzero entry of the trailing block, moved to (t, t); false if the block is zero.
  auto place_pivot = [&](std::size_t t) {
    std::size_t bi = m, bj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        const Int& x = R.D(i, j);
        if (x != 0 && (bi == m || abs(x) < abs(R.D(bi, bj)))) {
          bi = i;
          bj = j;
          if (abs(x) == 1) break;
        }
      }
    if (bi == m) return false;
    R.swap_rows(t, bi);
    R.swap_cols(t, bj);
    return true;
  };
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    if (!place_pivot(t)) break;
    for (;;) {
      // reduce row t and column t by the pivot, remainders in (-|p|/2, |p|/2]
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (R.D(i, t) == 0) continue;
        R.add_row(t, i, -round_div(R.D(i, t), R.D(t, t)));
        clean = clean && R.D(i, t) == 0;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (R.D(t, j) == 0) continue;
        R.add_col(t, j, -round_div(R.D(t, j), R.D(t, t)));
        clean = clean && R.D(t, j) == 0;
      }
      if (!clean) {
        // a remainder is now the smallest entry of the cross; make it the pivot
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (R.D(i, t) != 0 && abs(R.D(i, t)) < abs(R.D(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t + 1; j < n; ++j)
          if (R.D(t, j) != 0 && abs(R.D(t, j)) < abs(R.D(bi, bj))) bi = t, bj = j;
        R.swap_rows(t, bi);
        R.swap_cols(t, bj);
        continue;
      }
      // divisibility: pull a non-multiple into the pivot row and repeat
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (R.D(i, j) % R.D(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      R.add_row(bad, t, 1);
    }
    if (R.D(t, t) < 0) R.negate_row(t);
  }
  SNFData s;
  s.rank = t;
  s.U = std::move(R.U);
  s.D = std::move(R.D);
  s.V = std::move(R.V);
  s.Uinv = std::move(R.Uinv);
  s.Vinv = std::move(R.Vinv);
  return s;
}

std::optional<std::vector<Int>> solve_integral(const SNFData& s, const std::vector<Int>& b) {
  if (b.size() != s.U.cols()) throw DimensionError("solve_integral: right-hand side has wrong length");
  const std::vector<Int> y = s.U * b;
  std::vector<Int> z(s.V.cols(), Int(0));
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < s.rank) {
      const Int& d = s.D(i, i);
      if (y[i] % d != 0) return std::nullopt;
      z[i] = y[i] / d;
    } else if (y[i] != 0) {
      return std::nullopt;
    }
  }
  return s.V * z;
}

}  // namespace hvol
