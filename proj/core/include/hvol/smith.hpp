// Arbitrary-precision integer matrices and Smith normal form.
#pragma once

#include "hvol/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hvol {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows, std::vector<Int>(cols, Int(0))) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Int& operator()(std::size_t i, std::size_t j) { return a_[i][j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return a_[i][j]; }
  std::vector<Int>& row(std::size_t i) { return a_[i]; }
  const std::vector<Int>& row(std::size_t i) const { return a_[i]; }

  IntMatrix operator*(const IntMatrix& o) const;
  std::vector<Int> operator*(const std::vector<Int>& v) const;
  IntMatrix transpose() const;
  bool operator==(const IntMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  std::string to_string() const;

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<std::vector<Int>> a_;
};

// Fraction-free (Bareiss) determinant of a square matrix.
Int determinant(const IntMatrix& m);

struct SNFData {
  IntMatrix U, D, V;   // U * A * V = D
  IntMatrix Uinv, Vinv;
  std::size_t rank = 0;

  std::vector<Int> diagonal() const;
};

SNFData smith_normal_form(const IntMatrix& a);

// Integral x with A x = b, from the decomposition of A; nullopt if none exists.
std::optional<std::vector<Int>> solve_integral(const SNFData& s, const std::vector<Int>& b);

}  // namespace hvol
