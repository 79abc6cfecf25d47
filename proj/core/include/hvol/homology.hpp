// Homological model of the pointed curve w^2 = z^n - 1.
#pragma once

#include "hvol/cyclotomic.hpp"

#include <memory>
#include <string>
#include <vector>

namespace hvol {

enum class Parity { Odd, Even };

std::string to_string(Parity p);
Parity parse_parity(const std::string& s);

using ZMatrix = std::vector<std::vector<long long>>;

struct CurveModel {
  int g = 0;
  Parity parity = Parity::Odd;
  int n = 0;
  ZMatrix relation_matrix;  // rows over the raw generators L_0..L_{n-1}

  int rank() const { return 2 * g; }
};

using Curve = std::shared_ptr<const CurveModel>;

Curve build_curve(int g, Parity parity);

struct HClass {
  Curve curve;
  std::vector<long long> coords;  // reduced basis L_0..L_{2g-1}

  HClass operator+(const HClass& o) const;
  HClass operator-(const HClass& o) const;
  HClass operator-() const;
  HClass operator*(long long s) const;
  bool operator==(const HClass& o) const;
};

HClass zero_class(const Curve& c);
HClass reduce(const Curve& c, const std::vector<long long>& raw);
// Class of the loop l_k, k read mod n.
HClass ell(const Curve& c, long long k);
// Raw coordinates of a reduced class (eliminated generators carry zero).
std::vector<long long> raw_coords(const HClass& x);

// (l_i, l_j) on raw generators, read cyclically.
int raw_intersection(int n, long long i, long long j);
long long intersection(const HClass& x, const HClass& y);
// Gram matrix of the intersection pairing on the reduced basis.
ZMatrix gram_matrix(const Curve& c);
ZMatrix gram_matrix(const std::vector<HClass>& xs);

HClass phi_action(const HClass& x, long long power);
// Column c holds phi^power(L_c).
ZMatrix phi_matrix(const Curve& c, long long power);

struct ChiVector {
  int j = 0;
  std::vector<CycNum> coords;  // coefficient of l_k, k = 0..n-1
};

ChiVector chi(const Curve& c, int j);
// Coefficients (1/n) zeta^{-ij} on chi_1..chi_{n-1}.
std::vector<CycNum> ell_in_chi(const Curve& c, int i);
// Raw index shift l_k -> l_{k+power} applied to the coefficients.
ChiVector shift_raw(const ChiVector& v, long long power);
// (chi_j, l_k), extending the pairing over Q(zeta_n).
CycNum chi_pairing(const Curve& c, const ChiVector& v, long long k);

struct PoincareDual {
  CycNum lambda;
  ChiVector chi;
};

PoincareDual poincare_dual(const Curve& c, int i);

// OddLoops: a_i = l_{2i-1}, b_i = -(l_0 + l_2 + .. + l_{2i-2}), even n only. Word: classes of the free generators.
enum class BasisScheme { OddLoops, Word };

// (a_1, b_1, ..., a_g, b_g).
std::vector<HClass> symplectic_basis(const Curve& c, BasisScheme scheme);
ZMatrix standard_symplectic(int g);

}  // namespace hvol
