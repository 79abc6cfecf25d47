// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include "hvol/hvol.hpp"
#include "properties.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace hvol;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

Verdict theorem_table_rows() {
  std::ostringstream os;
  std::size_t predicted = 0, matched = 0;
  for (int n = 5; n <= 12; ++n) {
    const Curve c = build_curve((n - 1) / 2, n % 2 ? Parity::Odd : Parity::Even);
    std::size_t bad = 0;
    for (int i = 0; i < n; ++i)
      for (const auto& r : theorem_table(c, i)) {
        if (!r.predicted) continue;
        ++predicted;
        if (*r.match) ++matched;
        else ++bad;
      }
    if (bad) os << " n=" << n << ":" << bad;
  }
  return {matched == predicted,
          std::to_string(matched) + "/" + std::to_string(predicted) + " rows match" +
              (matched == predicted ? "" : "; mismatches" + os.str())};
}

Verdict oracle_equivalence() {
  std::size_t total = 0, agree = 0;
  for (int n = 5; n <= 10; ++n) {
    const Curve c = build_curve((n - 1) / 2, n % 2 ? Parity::Odd : Parity::Even);
    const std::size_t m = static_cast<std::size_t>(n) * n * n;
    std::vector<char> ok(m, 0);
    parallel_for(m, [&](std::size_t t) {
      const long long i = t / (n * n), j = (t / n) % n, k = t % n;
      ok[t] = iterated_closed(c, i, j, k) == iterated_oracle(c, i, j, k);
    });
    total += m;
    agree += static_cast<std::size_t>(std::count(ok.begin(), ok.end(), 1));
  }
  return {agree == total, std::to_string(agree) + "/" + std::to_string(total) + " triples agree"};
}

Verdict s_sets() {
  std::ostringstream os;
  bool all = true;
  for (Parity p : {Parity::Even, Parity::Odd}) {
    const Curve c = build_curve(2, p);
    const auto h = hom_identify(c, tau1_hyperelliptic(c, 1));
    const auto ref = reference_s_values(p);
    int bad = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int k = 0; k < 4; ++k) {
          auto it = ref.find(Triple{a, b, k});
          if ((it == ref.end() ? 0 : it->second) != h[(a * 4 + b) * 4 + k]) ++bad;
        }
    os << " n=" << c->n << ":" << (bad ? std::to_string(bad) + " triples differ" : "exact");
    all = all && bad == 0;
  }
  return {all, os.str().substr(1)};
}

Verdict std2_words_vs_closed() {
  std::ostringstream os;
  bool all = true;
  for (int g = 2; g <= 3; ++g)
    for (Parity p : {Parity::Odd, Parity::Even}) {
      const Curve c = build_curve(g, p);
      for (int k = 0; k < c->n; ++k)
        if (!(std2_ell_words(c, k) == std2_ell_closed(c, k))) {
          all = false;
          os << " (g=" << g << "," << to_string(p) << ",k=" << k << ")";
        }
    }
  return {all, all ? "every loop matches" : "mismatch at" + os.str()};
}

Verdict crossed_homomorphism() {
  std::size_t pairs = 0, good = 0;
  for (Parity p : {Parity::Odd, Parity::Even}) {
    const Curve c = build_curve(2, p);
    const auto std2 = std2_table(c, Std2Source::Words);
    for (int a = 0; a < c->n; ++a)
      for (int b = 0; b < c->n; ++b) {
        ++pairs;
        if (tau1_cyclic_cocycle_check(c, a, b, std2)) ++good;
      }
  }
  return {good == pairs, std::to_string(good) + "/" + std::to_string(pairs) + " pairs"};
}

Verdict main_theorem() {
  std::ostringstream os;
  bool all = true;
  for (int g = 2; g <= 3; ++g)
    for (Parity p : {Parity::Odd, Parity::Even}) {
      const auto r = verify_main_theorem(g, p);
      os << " (" << g << "," << to_string(p) << "):" << (r.passed() ? "ok" : "FAIL") << " rankM=" << r.rank_m;
      all = all && r.passed();
    }
  return {all, os.str().substr(1)};
}

Verdict structural() {
  std::ostringstream os;
  bool all = true;
  for (const auto& o : props::all()) {
    if (!o.ok()) {
      all = false;
      os << " " << o.name << " failed " << o.failures << "/" << o.cases << " (" << o.first_failure << ");";
    }
  }
  return {all, all ? "7 suites x " + std::to_string(props::kCases) + " cases" : os.str().substr(1)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget;
    std::function<Verdict()> fn;
  };
  const std::vector<Criterion> criteria = {
      {1, "theorem table reproduction", 10, theorem_table_rows},
      {2, "oracle equivalence", 60, oracle_equivalence},
      {3, "S-set reproduction", 5, s_sets},
      {4, "std2 words vs closed form", 5, std2_words_vs_closed},
      {5, "crossed-homomorphism suite", 10, crossed_homomorphism},
      {6, "main theorem", 120, main_theorem},
      {7, "structural property suites", 30, structural},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.fn();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = v.pass && s <= c.budget;
    if (v.pass && !pass) v.detail += "; over time budget";
    failed += !pass;
    std::printf("criterion %d %-30s %s  %.2fs (budget %.0fs)  %s\n", c.id, c.name, pass ? "PASS" : "FAIL", s, c.budget,
                v.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
