// Magnus expansions of free groups, theta_2, the Johnson maps and the
// hyperelliptic tau_1 computation.
#pragma once

#include "hvol/tensor.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace hvol {

struct Letter {
  int gen = 0;
  int exp = 1;  // +1 or -1
  bool operator==(const Letter& o) const { return gen == o.gen && exp == o.exp; }
};

// Freely reduced word in a free group.
class Word {
 public:
  Word() = default;
  explicit Word(const std::vector<Letter>& letters);
  Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}
  static Word generator(int gen, int exp = 1) { return Word({Letter{gen, exp}}); }

  const std::vector<Letter>& letters() const { return l_; }
  std::size_t length() const { return l_.size(); }
  bool empty() const { return l_.empty(); }

  Word operator*(const Word& o) const;
  Word inverse() const;
  bool operator==(const Word& o) const { return l_ == o.l_; }

  // Abelianization in Z^rank.
  std::vector<long long> abelianize(int rank) const;
  std::string to_string() const;

 private:
  std::vector<Letter> l_;
};

// Element of the tensor algebra on Q^rank truncated above degree D.
class TruncSeries {
 public:
  TruncSeries(int rank, int D);
  static TruncSeries one(int rank, int D);
  // 1 + X_gen
  static TruncSeries unit_plus_generator(int rank, int D, int gen);

  int rank() const { return rank_; }
  int bound() const { return D_; }
  std::vector<Rat>& part(int d) { return c_.at(d); }
  const std::vector<Rat>& part(int d) const { return c_.at(d); }

  TruncSeries operator*(const TruncSeries& o) const;
  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries scaled(const Rat& s) const;
  bool operator==(const TruncSeries& o) const;

 private:
  int rank_, D_;
  std::vector<std::vector<Rat>> c_;
};

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_inv(const TruncSeries& a);

struct Expansion {
  int rank = 0;
  int D = 0;
  std::vector<TruncSeries> images;
  std::vector<TruncSeries> inverse_images;
};

Expansion standard_expansion(int rank, int D = 3);
// Generic expansion from generator images; each must be 1 + X_i + (degree >= 2).
Expansion make_expansion(const std::vector<TruncSeries>& images);

TruncSeries evaluate(const Expansion& e, const Word& w);
std::vector<Rat> theta2(const Expansion& e, const Word& w);  // rank x rank, row-major

// Endomorphism of a free group given by generator images.
struct FreeAut {
  int rank = 0;
  std::vector<Word> images;
};

FreeAut identity_aut(int rank);
Word apply(const FreeAut& f, const Word& w);
FreeAut compose(const FreeAut& f, const FreeAut& g);  // f after g
ZMatrix homology_matrix(const FreeAut& f);            // column i = [f(x_i)]

// tau_1 evaluated at gamma = f(w): theta2(f(w)) - |f| theta2(w).
std::vector<Rat> tau1_at_image(const Expansion& e, const FreeAut& f, const Word& w);
// theta2(gamma) - |f| theta2(f^{-1}(gamma)) with f^{-1} supplied as words.
std::vector<Rat> tau1(const Expansion& e, const FreeAut& f, const FreeAut& f_inv, const Word& gamma);
// Crossed-homomorphism identity tau(fg)[fg(w)] = tau(f)[fg(w)] + |f| tau(g)[g(w)] on samples.
bool tau1_cocycle_check(const Expansion& e, const FreeAut& f, const FreeAut& g, const std::vector<Word>& samples);

// Degree-(k+1) part of T^theta(f) composed with |f|^{-1}, on each basis vector X_m of H.
std::vector<std::vector<Rat>> tau_k(const Expansion& e, const FreeAut& f, int k);

// ---- hyperelliptic curve data ----

// Generator order a_1, b_1, ..., a_g, b_g (index 2(i-1) and 2(i-1)+1).
std::vector<Word> ell_words(const Curve& c);
// Column x = homology class of generator x in the reduced basis.
ZMatrix generator_classes(const Curve& c);
// Rational generator-basis tensor mapped to the reduced L-basis; must be integral.
Tensor2 to_ell_basis(const Curve& c, const std::vector<Rat>& t);

// std_2 of the word for l_k, in the L-basis.
Tensor2 std2_ell_words(const Curve& c, long long k, int D = 2);
// Reference closed forms; unstated cases (odd n, k = 2g-1) follow the generic odd-k pattern.
Tensor2 std2_ell_closed(const Curve& c, long long k);
// Same, with the odd-n k = 2g form that words actually reach.
Tensor2 std2_ell_closed_corrected(const Curve& c, long long k);
// Reference closed forms for tau_1^std[l_k].
Tensor2 tau1_closed(const Curve& c, long long k);

enum class Std2Source { Words, Closed, ClosedCorrected };
std::vector<Tensor2> std2_table(const Curve& c, Std2Source src, int D = 2);

struct Tau1Map {
  Curve curve;
  long long power = 1;
  std::vector<Tensor2> on_loop;  // tau_1(phi^power)[l_k], k = 0..n-1

  // Linear extension over the reduced basis.
  Tensor2 on_class(const HClass& x) const;
};

// tau_1(phi^a)[l_k] = std2(l_k) - |phi^a| std2(l_{k-a}).
Tau1Map tau1_hyperelliptic(const Curve& c, long long power, const std::vector<Tensor2>& std2);
Tau1Map tau1_hyperelliptic(const Curve& c, long long power = 1);
// Reference forms as a map.
Tau1Map tau1_closed_map(const Curve& c);

// tau(phi^{a+b}) = tau(phi^a) + |phi^a| tau(phi^b) on every reduced-basis class.
bool tau1_cyclic_cocycle_check(const Curve& c, long long a, long long b, const std::vector<Tensor2>& std2);

// <a (x) b, tau(c)> with <x (x) y, u (x) v> = (x,u)(y,v); index (a*N + b)*N + c.
std::vector<long long> hom_identify(const Curve& c, const Tau1Map& tau);
std::vector<long long> hom_identify(const Curve& c, const std::vector<Tensor2>& basis_images);

using Triple = std::array<int, 3>;
// Reference nonzero values of the g = 2 table.
std::map<Triple, long long> reference_s_values(Parity p);

}  // namespace hvol
