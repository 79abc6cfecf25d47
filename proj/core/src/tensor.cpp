#include "hvol/tensor.hpp"

namespace hvol {

bool Tensor2::is_zero() const {
  for (auto v : c)
    if (v) return false;
  return true;
}

Tensor2& Tensor2::operator+=(const Tensor2& o) {
  if (dim != o.dim) throw DimensionError("Tensor2 dimension mismatch");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o) {
  if (dim != o.dim) throw DimensionError("Tensor2 dimension mismatch");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
  return *this;
}

Tensor2 Tensor2::operator*(long long s) const {
  Tensor2 r = *this;
  for (auto& v : r.c) v *= s;
  return r;
}

Tensor3::Tensor3(const Curve& cv) : curve(cv) {
  const std::size_t N = cv->rank();
  c.assign(N * N * N, 0);
}

long long& Tensor3::at(int a, int b, int cc) {
  const int N = dim();
  return c[(static_cast<std::size_t>(a) * N + b) * N + cc];
}

long long Tensor3::at(int a, int b, int cc) const {
  const int N = dim();
  return c[(static_cast<std::size_t>(a) * N + b) * N + cc];
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
  if (c.size() != o.c.size()) throw DimensionError("Tensor3 dimension mismatch");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
  if (c.size() != o.c.size()) throw DimensionError("Tensor3 dimension mismatch");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
  return *this;
}

Tensor2 outer(const HClass& x, const HClass& y) {
  const int N = x.curve->rank();
  Tensor2 t(N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) t.at(a, b) = x.coords[a] * y.coords[b];
  return t;
}

Tensor3 outer(const HClass& x, const HClass& y, const HClass& z) {
  Tensor3 t(x.curve);
  const int N = t.dim();
  for (int a = 0; a < N; ++a) {
    if (!x.coords[a]) continue;
    for (int b = 0; b < N; ++b) {
      if (!y.coords[b]) continue;
      for (int cc = 0; cc < N; ++cc) t.at(a, b, cc) = x.coords[a] * y.coords[b] * z.coords[cc];
    }
  }
  return t;
}

Tensor3 ell_tensor(const Curve& c, long long i, long long j, long long k) {
  return outer(ell(c, i), ell(c, j), ell(c, k));
}

Tensor2 ell_tensor(const Curve& c, long long i, long long j) { return outer(ell(c, i), ell(c, j)); }

Tensor2 act(const ZMatrix& m, const Tensor2& t) {
  const int N = t.dim;
  Tensor2 r(N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      long long v = t.at(a, b);
      if (!v) continue;
      for (int p = 0; p < N; ++p) {
        if (!m[p][a]) continue;
        for (int q = 0; q < N; ++q)
          if (m[q][b]) r.at(p, q) += v * m[p][a] * m[q][b];
      }
    }
  return r;
}

Tensor3 act(const ZMatrix& m, const Tensor3& t) {
  const int N = t.dim();
  Tensor3 r(t.curve);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int cc = 0; cc < N; ++cc) {
        long long v = t.at(a, b, cc);
        if (!v) continue;
        for (int p = 0; p < N; ++p) {
          if (!m[p][a]) continue;
          for (int q = 0; q < N; ++q) {
            if (!m[q][b]) continue;
            for (int s = 0; s < N; ++s)
              if (m[s][cc]) r.at(p, q, s) += v * m[p][a] * m[q][b] * m[s][cc];
          }
        }
      }
  return r;
}

}  // namespace hvol
