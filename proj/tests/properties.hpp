// Randomised structural checks shared by the unit tests and the acceptance run.
#pragma once

#include "hvol/hvol.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace hvol::props {

struct Outcome {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return cases > 0 && failures == 0; }
};

inline constexpr int kCases = 200;
inline constexpr std::uint64_t kSeed = 20261015;

inline Outcome run(const std::string& name, int cases, std::uint64_t seed,
                   const std::function<bool(std::mt19937_64&, std::string&)>& body) {
  Outcome o{name, 0, 0, {}};
  std::mt19937_64 rng(seed);
  for (int t = 0; t < cases; ++t) {
    std::string note;
    bool good = false;
    try {
      good = body(rng, note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    ++o.cases;
    if (!good) {
      if (o.failures == 0) o.first_failure = "case " + std::to_string(t) + " " + note;
      ++o.failures;
    }
  }
  return o;
}

inline int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Word random_word(std::mt19937_64& rng, int rank, int max_len) {
  std::vector<Letter> l;
  const int len = uniform(rng, 0, max_len);
  for (int i = 0; i < len; ++i) l.push_back(Letter{uniform(rng, 0, rank - 1), uniform(rng, 0, 1) ? 1 : -1});
  return Word(l);
}

inline Rat random_rat(std::mt19937_64& rng) { return Rat(uniform(rng, -9, 9)) / Rat(uniform(rng, 1, 6)); }

inline Curve random_curve(std::mt19937_64& rng, int gmax) {
  return build_curve(uniform(rng, 2, gmax), uniform(rng, 0, 1) ? Parity::Even : Parity::Odd);
}

inline Outcome magnus_homomorphism(int cases = kCases) {
  return run("magnus homomorphism", cases, kSeed + 1, [](std::mt19937_64& rng, std::string&) {
    const int rank = uniform(rng, 2, 4), D = uniform(rng, 2, 4);
    std::vector<TruncSeries> images;
    for (int i = 0; i < rank; ++i) {
      TruncSeries s = TruncSeries::unit_plus_generator(rank, D, i);
      for (int d = 2; d <= D; ++d)
        for (auto& x : s.part(d))
          if (uniform(rng, 0, 3) == 0) x = random_rat(rng);
      images.push_back(s);
    }
    const Expansion e = make_expansion(images);
    const Word a = random_word(rng, rank, 8), b = random_word(rng, rank, 8);
    return evaluate(e, a * b) == evaluate(e, a) * evaluate(e, b) &&
           evaluate(e, a * a.inverse()) == TruncSeries::one(rank, D);
  });
}

inline Outcome theta2_additivity(int cases = kCases) {
  return run("theta2 additivity", cases, kSeed + 2, [](std::mt19937_64& rng, std::string&) {
    const int rank = uniform(rng, 2, 5);
    const Expansion e = standard_expansion(rank, 2);
    const Word a = random_word(rng, rank, 10), b = random_word(rng, rank, 10);
    const auto ha = a.abelianize(rank), hb = b.abelianize(rank);
    std::vector<Rat> rhs = theta2(e, a);
    const auto tb = theta2(e, b);
    for (int x = 0; x < rank; ++x)
      for (int y = 0; y < rank; ++y) rhs[x * rank + y] += tb[x * rank + y] + Rat(ha[x] * hb[y]);
    return theta2(e, a * b) == rhs;
  });
}

inline Outcome series_inverse(int cases = kCases) {
  return run("series inverse", cases, kSeed + 3, [](std::mt19937_64& rng, std::string&) {
    const int rank = uniform(rng, 1, 3), D = uniform(rng, 1, 4);
    TruncSeries a = TruncSeries::one(rank, D);
    for (int d = 1; d <= D; ++d)
      for (auto& x : a.part(d)) x = random_rat(rng);
    const TruncSeries inv = series_inv(a), one = TruncSeries::one(rank, D);
    return a * inv == one && inv * a == one;
  });
}

inline Outcome snf_identity(int cases = kCases) {
  return run("smith normal form", cases, kSeed + 4, [](std::mt19937_64& rng, std::string& note) {
    const int r = uniform(rng, 1, 6), c = uniform(rng, 1, 6);
    std::vector<std::vector<long long>> rows(r, std::vector<long long>(c));
    const int spread = uniform(rng, 1, 30);
    for (auto& row : rows)
      for (auto& x : row) x = uniform(rng, 0, 2) == 0 ? 0 : uniform(rng, -spread, spread);
    const IntMatrix A = IntMatrix::from_rows(rows);
    const SNFData s = smith_normal_form(A);
    note = A.to_string();
    if (!(s.U * A * s.V == s.D)) return false;
    const Int du = determinant(s.U), dv = determinant(s.V);
    if (abs(du) != 1 || abs(dv) != 1) return false;
    if (!(s.U * s.Uinv == IntMatrix::identity(r)) || !(s.V * s.Vinv == IntMatrix::identity(c))) return false;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (i != j && s.D(i, j) != 0) return false;
    const auto d = s.diagonal();
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] < 0) return false;
      if ((i < s.rank) != (d[i] != 0)) return false;
      if (i + 1 < s.rank && d[i + 1] % d[i] != 0) return false;
    }
    return true;
  });
}

inline Outcome intersection_structure(int cases = kCases) {
  return run("intersection antisymmetry and relations", cases, kSeed + 5, [](std::mt19937_64& rng, std::string&) {
    const Curve c = random_curve(rng, 6);
    std::vector<long long> rx(c->n), ry(c->n);
    for (auto& v : rx) v = uniform(rng, -4, 4);
    for (auto& v : ry) v = uniform(rng, -4, 4);
    const HClass x = reduce(c, rx), y = reduce(c, ry);
    if (intersection(x, y) != -intersection(y, x)) return false;
    if (intersection(x, x) != 0) return false;
    long long raw = 0;
    for (int a = 0; a < c->n; ++a)
      for (int b = 0; b < c->n; ++b) raw += rx[a] * ry[b] * raw_intersection(c->n, a, b);
    if (raw != intersection(x, y)) return false;
    for (const auto& rel : c->relation_matrix) {
      long long s = 0;
      for (int a = 0; a < c->n; ++a)
        for (int b = 0; b < c->n; ++b) s += rel[a] * ry[b] * raw_intersection(c->n, a, b);
      if (s != 0) return false;
      if (!(reduce(c, rel) == zero_class(c))) return false;
    }
    return true;
  });
}

inline Outcome shift_invariance(int cases = kCases) {
  return run("shift invariance of the closed form", cases, kSeed + 6, [](std::mt19937_64& rng, std::string&) {
    const Curve c = random_curve(rng, 5);
    const int n = c->n;
    const long long i = uniform(rng, 0, n - 1), j = uniform(rng, 0, n - 1), k = uniform(rng, 0, n - 1);
    const long long s = uniform(rng, -3 * n, 3 * n);
    return iterated_closed(c, i + s, j + s, k + s) == iterated_closed(c, i, j, k);
  });
}

inline Outcome symplectic_gram(int cases = kCases) {
  return run("symplectic Gram matrices", cases, kSeed + 7, [](std::mt19937_64& rng, std::string&) {
    const Curve c = random_curve(rng, 7);
    const ZMatrix j = standard_symplectic(c->g);
    if (gram_matrix(symplectic_basis(c, BasisScheme::Word)) != j) return false;
    if (c->parity == Parity::Even && gram_matrix(symplectic_basis(c, BasisScheme::OddLoops)) != j) return false;
    return true;
  });
}

inline std::vector<Outcome> all() {
  return {magnus_homomorphism(), theta2_additivity(), series_inverse(), snf_identity(),
          intersection_structure(), shift_invariance(), symplectic_gram()};
}

}  // namespace hvol::props
