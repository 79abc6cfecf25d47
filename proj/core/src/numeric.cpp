#include "hvol/numeric.hpp"

namespace hvol {

std::string format_rational(const Rat& x) {
  return boost::multiprecision::numerator(x).str() + "/" + boost::multiprecision::denominator(x).str();
}

std::string format_integer(const Int& x) { return x.str(); }

Int floor_of(const Rat& x) {
  Int num = boost::multiprecision::numerator(x);
  Int den = boost::multiprecision::denominator(x);
  Int q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

Rat mod_one(const Rat& x) { return x - Rat(floor_of(x)); }

}  // namespace hvol
