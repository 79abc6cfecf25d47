// K (x) H, the G-module M = Hom(K (x) H, Z) for G = <phi> of order n, the
// connecting map of the pointed harmonic volume and the cohomology class of tau_1.
#pragma once

#include "hvol/magnus.hpp"
#include "hvol/smith.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace hvol {

struct KHModule {
  Curve curve;
  int N = 0;
  // Integral basis of K inside H (x) H, vectors indexed a*N + b.
  std::vector<std::vector<Int>> k_basis;
  // Rows send an element of K to its coordinates in k_basis.
  IntMatrix k_coords;
  // K (x) H basis: index s*N + c is k_basis[s] (x) L_c.
  std::size_t rank_k = 0, rank_m = 0;
  // Column j holds the coordinates of phi^{-1} B_j.
  IntMatrix phi_inv_coords;

  // Dense N^3 vector of basis element j.
  std::vector<Int> basis_vector(std::size_t j) const;
};

KHModule kernel_K(const Curve& c);

// Coordinates of an element of K (x) H; throws if it is not in K (x) H.
std::vector<Int> kh_coords(const KHModule& kh, const Tensor3& t);

// phi^power acting on M, (phi f)(x) = f(phi^{-1} x).
std::vector<Rat> act_on_M(const KHModule& kh, const std::vector<Rat>& f, long long power = 1);
std::vector<Int> act_on_M(const KHModule& kh, const std::vector<Int>& f, long long power = 1);

struct Cocycle {
  std::vector<Rat> values;  // c(phi) on the K (x) H basis
  int n = 0;

  bool integral() const;
  std::vector<Int> integers() const;  // requires integral()
};

// Lift of I on the K (x) H basis from the raw values of the closed form.
std::vector<Rat> lift_I(const KHModule& kh);
// delta I(phi) = I - phi I, the coboundary convention du(phi) = u - phi u.
Cocycle delta_I(const KHModule& kh, const std::vector<Rat>& lift);
// The opposite convention phi I - I, for comparison.
Cocycle delta_I_opposite(const KHModule& kh, const std::vector<Rat>& lift);
Cocycle tau1_in_M(const KHModule& kh, const Tau1Map& tau);

// sum_{k=0}^{n-1} phi^k c.
std::vector<Rat> norm(const KHModule& kh, const Cocycle& c);
bool norm_vanishes(const KHModule& kh, const Cocycle& c);

// Solver for (phi - 1) u = c on M.
class CoboundarySolver {
 public:
  explicit CoboundarySolver(const KHModule& kh);

  const IntMatrix& matrix() const { return q_; }
  const SNFData& snf() const { return snf_; }
  // Nontrivial invariant factors of coker(phi - 1), i.e. of H^1(G; M).
  std::vector<Int> torsion() const;
  // A cocycle representing a nonzero class, if H^1 is nonzero.
  std::optional<std::vector<Int>> nonvanishing_cocycle() const;

 private:
  IntMatrix q_;
  SNFData snf_;
};

struct Vanishing {
  bool vanishes = false;
  std::optional<std::vector<Int>> witness;  // (phi - 1) witness = c
};

std::vector<Int> coboundary(const KHModule& kh, const std::vector<Int>& u);  // (phi - 1) u
Vanishing class_vanishes(const CoboundarySolver& s, const std::vector<Int>& c);
Vanishing class_vanishes(const KHModule& kh, const CoboundarySolver& s, const Cocycle& c);

struct MainTheoremReport {
  int g = 0, n = 0;
  Parity parity = Parity::Odd;
  std::size_t rank_k = 0, rank_m = 0;
  bool delta_integral = false;
  bool delta_norm_zero = false;
  bool tau_norm_zero = false;
  bool vanishes = false;  // class of delta I + tau_1 is zero
  bool witness_ok = false;
  std::vector<Int> witness;
  std::vector<Int> torsion;  // invariant factors of H^1(G; M)
  // Signed identities at class level, for both coboundary conventions.
  bool plus_tau_vanishes = false;              // (I - phi I) + tau
  bool minus_tau_vanishes = false;             // (I - phi I) - tau
  bool opposite_plus_tau_vanishes = false;     // (phi I - I) + tau
  bool lift_independent = false;               // perturbed lift changes delta by a coboundary
  double seconds = 0;

  bool passed() const {
    return delta_integral && delta_norm_zero && tau_norm_zero && vanishes && witness_ok && lift_independent;
  }
};

MainTheoremReport verify_main_theorem(int g, Parity parity);

}  // namespace hvol
