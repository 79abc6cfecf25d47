// Integral tensors over the reduced basis L_0..L_{2g-1}.
#pragma once

#include "hvol/homology.hpp"

#include <vector>

namespace hvol {

struct Tensor2 {
  int dim = 0;
  std::vector<long long> c;  // index a*dim + b

  Tensor2() = default;
  explicit Tensor2(int d) : dim(d), c(static_cast<std::size_t>(d) * d, 0) {}

  long long& at(int a, int b) { return c[static_cast<std::size_t>(a) * dim + b]; }
  long long at(int a, int b) const { return c[static_cast<std::size_t>(a) * dim + b]; }
  bool is_zero() const;

  Tensor2& operator+=(const Tensor2& o);
  Tensor2& operator-=(const Tensor2& o);
  Tensor2 operator+(const Tensor2& o) const { Tensor2 r = *this; return r += o; }
  Tensor2 operator-(const Tensor2& o) const { Tensor2 r = *this; return r -= o; }
  Tensor2 operator*(long long s) const;
  bool operator==(const Tensor2& o) const { return dim == o.dim && c == o.c; }
};

struct Tensor3 {
  Curve curve;
  std::vector<long long> c;  // index (a*N + b)*N + c

  Tensor3() = default;
  explicit Tensor3(const Curve& cv);

  int dim() const { return curve->rank(); }
  long long& at(int a, int b, int cc);
  long long at(int a, int b, int cc) const;

  Tensor3& operator+=(const Tensor3& o);
  Tensor3& operator-=(const Tensor3& o);
  Tensor3 operator+(const Tensor3& o) const { Tensor3 r = *this; return r += o; }
  Tensor3 operator-(const Tensor3& o) const { Tensor3 r = *this; return r -= o; }
  bool operator==(const Tensor3& o) const { return c == o.c; }
};

Tensor2 outer(const HClass& x, const HClass& y);
Tensor3 outer(const HClass& x, const HClass& y, const HClass& z);
// l_i (x) l_j (x) l_k with raw indices read mod n.
Tensor3 ell_tensor(const Curve& c, long long i, long long j, long long k);
Tensor2 ell_tensor(const Curve& c, long long i, long long j);

// Diagonal action of a matrix on H (x) H.
Tensor2 act(const ZMatrix& m, const Tensor2& t);
Tensor3 act(const ZMatrix& m, const Tensor3& t);

}  // namespace hvol
