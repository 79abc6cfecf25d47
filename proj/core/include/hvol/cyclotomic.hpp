// Exact arithmetic in Q(zeta_n) = Q[z]/(Phi_n).
#pragma once

#include "hvol/numeric.hpp"

#include <memory>
#include <vector>

namespace hvol {

// Integer polynomial, coefficient of z^i at index i.
using IntPoly = std::vector<Int>;

IntPoly cyclotomic_poly(int n);

namespace detail {
struct CycField;
}

class CycNum {
 public:
  // Zero of Q(zeta_n).
  explicit CycNum(int n);
  static CycNum rational(int n, const Rat& value);
  // Reduces an arbitrary-length power-basis vector modulo Phi_n.
  static CycNum from_powers(int n, const std::vector<Rat>& powers);

  int order() const;
  int degree() const;
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rat to_rational() const;

  CycNum operator+(const CycNum& o) const;
  CycNum operator-(const CycNum& o) const;
  CycNum operator*(const CycNum& o) const;
  CycNum operator-() const;
  CycNum operator*(const Rat& s) const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);

  CycNum inv() const;
  CycNum pow(long long e) const;
  // Galois automorphism zeta -> zeta^k, gcd(k, n) = 1. k = -1 is complex conjugation.
  CycNum galois(long long k) const;

  bool operator==(const CycNum& o) const;
  bool operator!=(const CycNum& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  CycNum(std::shared_ptr<const detail::CycField> f, std::vector<Rat> c);
  void check_same(const CycNum& o) const;

  std::shared_ptr<const detail::CycField> f_;
  std::vector<Rat> c_;
};

CycNum zeta_pow(int n, long long e);

}  // namespace hvol
