// Periods, iterated integrals along l_k and the pointed harmonic volume.
#pragma once

#include "hvol/tensor.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hvol {

// n - 1 if n | u, else -1.
long long t_sum(int n, long long u);

// Integral of omega_i over l_k: zeta^{ik}(1 - zeta^i).
CycNum period(const Curve& c, int i, long long k);
// Length-two iterated integral of omega_i omega_j over l_k.
CycNum quadratic_period(const Curve& c, int i, int j, long long k);

// Integrals of (alpha, beta, alpha beta) along a formal path piece.
struct PathData {
  CycNum a, b, ab;
};

PathData compose(const PathData& c1, const PathData& c2);
PathData inverse(const PathData& c);
// The piece gamma_k for the pair (omega_i, omega_j); l_k = gamma_k gamma_{k+1}^{-1}.
PathData gamma_piece(const Curve& c, int i, int j, long long k);

// Closed form for the integral over l_k of l_i l_j; indices read mod n.
Rat iterated_closed(const Curve& c, long long i, long long j, long long k);
// Independent double sum over Q(zeta_n); throws if the sum is not rational.
Rat iterated_oracle(const Curve& c, long long i, long long j, long long k);

bool in_K(const Curve& c, const Tensor2& t);
bool in_K(const Tensor3& t);  // every third-leg slice lies in K
std::array<HClass, 3> projection_p(const Tensor3& t);
bool in_H3_prime(const Tensor3& t);

struct HVValue {
  Rat raw;
  Rat mod1;
};

HVValue pointed_harmonic_volume(const Tensor3& t);

struct TableRow {
  std::string block;      // tensor shape, e.g. "l_i*l_j*l_k"
  std::string condition;  // row label(s) that apply
  int i = 0, j = 0, k = 0;  // representative raw indices (i = 0)
  Tensor3 tensor;
  std::optional<Rat> predicted;
  HVValue computed;
  std::optional<bool> match;
};

// One row per (block, j - i, k - i) with i = 0.
std::vector<TableRow> theorem_table(const Curve& c);
// Same rows for an arbitrary base index i.
std::vector<TableRow> theorem_table(const Curve& c, int i);

}  // namespace hvol
