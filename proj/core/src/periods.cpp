#include "hvol/periods.hpp"

namespace hvol {

long long t_sum(int n, long long u) {
  if (n < 2) throw DomainError("t_sum: n must be at least 2");
  return pmod(u, n) == 0 ? n - 1 : -1;
}

namespace {

void check_form_index(const Curve& c, int i) {
  if (i < 1 || i > c->n - 1) throw DomainError("form index out of range 1..n-1");
}

void check_loop_index(const Curve& c, long long k) {
  if (k < 0 || k > c->n - 1) throw DomainError("loop index out of range 0..n-1");
}

}  // namespace

CycNum period(const Curve& c, int i, long long k) {
  check_form_index(c, i);
  check_loop_index(c, k);
  const int n = c->n;
  return zeta_pow(n, i * k) * (CycNum::rational(n, 1) - zeta_pow(n, i));
}

CycNum quadratic_period(const Curve& c, int i, int j, long long k) {
  check_form_index(c, i);
  check_form_index(c, j);
  check_loop_index(c, k);
  const int n = c->n;
  CycNum inner = CycNum::rational(n, 1) - zeta_pow(n, j) * Rat(2) + zeta_pow(n, i + j);
  return zeta_pow(n, (i + j) * k) * inner * Rat(1, 2);
}

PathData compose(const PathData& c1, const PathData& c2) {
  return PathData{c1.a + c2.a, c1.b + c2.b, c1.ab + c2.ab + c1.a * c2.b};
}

PathData inverse(const PathData& c) { return PathData{-c.a, -c.b, c.a * c.b - c.ab}; }

PathData gamma_piece(const Curve& c, int i, int j, long long k) {
  const int n = c->n;
  return PathData{zeta_pow(n, i * k), zeta_pow(n, j * k), zeta_pow(n, (i + j) * k) * Rat(1, 2)};
}

Rat iterated_closed(const Curve& c, long long i, long long j, long long k) {
  const int n = c->n;
  auto s = [&](long long a, long long b) {
    return t_sum(n, k - i + a) * t_sum(n, k - j + b) + t_sum(n, k - i - b) * t_sum(n, k - j - a);
  };
  long long num = s(1, 0) + s(1, 1) - s(0, 1) - s(-1, 1);
  return Rat(num, 2LL * n * n);
}

Rat iterated_oracle(const Curve& c, long long i, long long j, long long k) {
  const int n = c->n;
  // Accumulate the double sum in Z[Z/n] (exponent counts), then map into Q(zeta_n).
  std::vector<long long> cnt(n, 0);
  auto add = [&](long long e, long long v) { cnt[pmod(e, n)] += v; };
  for (long long p = 1; p < n; ++p)
    for (long long q = 1; q < n; ++q) {
      const long long base = -i * p - j * q + (p + q) * k;
      // (1 + z^{-p})(1 + z^{-q})(1 - 2 z^q + z^{p+q})
      const long long f1[2] = {0, -p};
      const long long f2[2] = {0, -q};
      const long long f3e[3] = {0, q, p + q};
      const long long f3c[3] = {1, -2, 1};
      for (long long e1 : f1)
        for (long long e2 : f2)
          for (int t = 0; t < 3; ++t) add(base + e1 + e2 + f3e[t], f3c[t]);
    }
  std::vector<Rat> powers(n);
  for (int e = 0; e < n; ++e) powers[e] = Rat(cnt[e]);
  CycNum total = CycNum::from_powers(n, powers);
  if (!total.is_rational())
    throw Error("iterated_oracle: cyclotomic sum is not rational at (" + std::to_string(i) + "," +
                std::to_string(j) + "," + std::to_string(k) + ")");
  return total.to_rational() / Rat(2LL * n * n);
}

bool in_K(const Curve& c, const Tensor2& t) {
  const int N = c->rank();
  long long s = 0;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      if (t.at(a, b)) s += t.at(a, b) * raw_intersection(c->n, a, b);
  return s == 0;
}

bool in_K(const Tensor3& t) {
  const int N = t.dim();
  for (int cc = 0; cc < N; ++cc) {
    Tensor2 slice(N);
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) slice.at(a, b) = t.at(a, b, cc);
    if (!in_K(t.curve, slice)) return false;
  }
  return true;
}

std::array<HClass, 3> projection_p(const Tensor3& t) {
  const int N = t.dim();
  const int n = t.curve->n;
  std::array<HClass, 3> out{zero_class(t.curve), zero_class(t.curve), zero_class(t.curve)};
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int cc = 0; cc < N; ++cc) {
        long long v = t.at(a, b, cc);
        if (!v) continue;
        out[0].coords[cc] += v * raw_intersection(n, a, b);
        out[1].coords[a] += v * raw_intersection(n, b, cc);
        out[2].coords[b] += v * raw_intersection(n, cc, a);
      }
  return out;
}

bool in_H3_prime(const Tensor3& t) {
  auto p = projection_p(t);
  for (const auto& x : p)
    for (auto v : x.coords)
      if (v) return false;
  return true;
}

HVValue pointed_harmonic_volume(const Tensor3& t) {
  if (!in_K(t)) throw DomainError("pointed_harmonic_volume: tensor is not in K (x) H");
  const int N = t.dim();
  Rat raw = 0;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int cc = 0; cc < N; ++cc) {
        long long v = t.at(a, b, cc);
        if (v) raw += Rat(v) * iterated_closed(t.curve, a, b, cc);
      }
  return HVValue{raw, mod_one(raw)};
}

namespace {

struct RowRule {
  std::string label;
  bool applies;
  Rat value;
};

// Equality rules win over range rules; overlapping equality rules must agree.
void resolve(TableRow& row, const std::vector<RowRule>& eq, const std::vector<RowRule>& range) {
  std::vector<const RowRule*> hit;
  for (const auto& r : eq)
    if (r.applies) hit.push_back(&r);
  if (hit.empty())
    for (const auto& r : range)
      if (r.applies) hit.push_back(&r);
  for (const auto* r : hit) row.condition += (row.condition.empty() ? "" : " | ") + r->label;
  bool agree = !hit.empty();
  for (const auto* r : hit) agree = agree && r->value == hit.front()->value;
  if (agree) {
    row.predicted = hit.front()->value;
    row.match = *row.predicted == row.computed.mod1;
  }
}

}  // namespace

std::vector<TableRow> theorem_table(const Curve& c, int i) {
  const int n = c->n;
  std::vector<TableRow> rows;
  const Rat zero = 0, half(1, 2), inv_n(1, n), last(n - 1, n);

  for (int d = 2; d <= n - 2; ++d)
    for (int r = 0; r < n; ++r) {
      TableRow row;
      row.block = "l_i*l_j*l_k";
      row.i = i;
      row.j = (i + d) % n;
      row.k = (i + r) % n;
      row.tensor = ell_tensor(c, row.i, row.j, row.k);
      row.computed = pointed_harmonic_volume(row.tensor);
      resolve(row,
              {{"k=i-1", r == n - 1, last},
               {"k=i", r == 0, zero},
               {"i+1=j-1=k", d == 2 && r == 1, inv_n},
               {"j-i>=3, k=i+1", d >= 3 && r == 1, inv_n},
               {"j-i>=3, k=j-1", d >= 3 && r == d - 1, inv_n},
               {"k=j", r == d, zero},
               {"k=j+1", r == d + 1, last}},
              {{"k<=i-2", r >= d + 2 && r <= n - 2, zero}, {"i+2<=k<=j-2", r >= 2 && r <= d - 2, zero}});
      rows.push_back(std::move(row));
    }

  for (int r = 0; r < n; ++r) {
    TableRow row;
    row.block = "l_i*l_i*l_k";
    row.i = row.j = i;
    row.k = (i + r) % n;
    row.tensor = ell_tensor(c, i, i, row.k);
    row.computed = pointed_harmonic_volume(row.tensor);
    resolve(row, {{"k=i+-1", r == 1 || r == n - 1, half}}, {{"otherwise", true, zero}});
    rows.push_back(std::move(row));
  }

  for (int r = 0; r < n; ++r) {
    TableRow row;
    row.block = "(l_i*l_{i+1}+l_{i+1}*l_i)*l_k";
    row.i = i;
    row.j = (i + 1) % n;
    row.k = (i + r) % n;
    row.tensor = ell_tensor(c, i, i + 1, row.k) + ell_tensor(c, i + 1, i, row.k);
    row.computed = pointed_harmonic_volume(row.tensor);
    resolve(row, {}, {{"all k", true, zero}});
    rows.push_back(std::move(row));
  }

  for (int r = 0; r < n; ++r) {
    TableRow row;
    row.block = "(l_i*l_{i+1}-l_{i+1}*l_{i+2})*l_k";
    row.i = i;
    row.j = (i + 1) % n;
    row.k = (i + r) % n;
    row.tensor = ell_tensor(c, i, i + 1, row.k) - ell_tensor(c, i + 1, i + 2, row.k);
    row.computed = pointed_harmonic_volume(row.tensor);
    resolve(row,
            {{"k=i-1", r == n - 1, last},
             {"k=i", r == 0, Rat(n + 4, 2 * n)},
             {"k=i+1", r == 1, zero},
             {"k=i+2", r == 2, Rat(n - 4, 2 * n)},
             {"k=i+3", r == 3, Rat(1, 2 * n)}},
            {{"k<=i-2", r >= 4 && r <= n - 2, zero}, {"k>=i+4", r >= 4 && r <= n - 2, zero}});
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<TableRow> theorem_table(const Curve& c) { return theorem_table(c, 0); }

}  // namespace hvol
