// Exact integers and rationals shared by every module.
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace hvol {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// Base class for errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct IncompatibleOrder : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };

// "p/q" with gcd(p,q) = 1 and q > 0. Integers keep the "/1" suffix.
std::string format_rational(const Rat& x);
std::string format_integer(const Int& x);

Int floor_of(const Rat& x);

// x - floor(x), always in [0, 1).
Rat mod_one(const Rat& x);

inline bool is_integral(const Rat& x) { return boost::multiprecision::denominator(x) == 1; }

// Non-negative residue of a mod m, m > 0.
inline long long pmod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace hvol
