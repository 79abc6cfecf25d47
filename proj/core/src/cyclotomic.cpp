#include "hvol/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace hvol {

namespace {

using RatPoly = std::vector<Rat>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials; the divisor is monic.
IntPoly divide_exact(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  IntPoly q(a.size() - db, 0);
  for (std::size_t t = a.size(); t-- > db;) {
    Int c = a[t];
    q[t - db] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) a[t - db + i] -= c * b[i];
  }
  trim(a);
  if (!a.empty()) throw Error("cyclotomic_poly: inexact division");
  return q;
}

// q, r with a = q*b + r over Q.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {RatPoly{}, a};
  const std::size_t db = b.size() - 1;
  RatPoly q(a.size() - db, Rat(0));
  for (std::size_t t = a.size(); t-- > db;) {
    if (a[t] == 0) continue;
    Rat c = a[t] / b.back();
    q[t - db] = c;
    for (std::size_t i = 0; i <= db; ++i) a[t - db + i] -= c * b[i];
  }
  trim(a);
  trim(q);
  return {q, a};
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly r(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

RatPoly sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rat(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

IntPoly cyclotomic_poly(int n) {
  if (n < 1) throw DomainError("cyclotomic_poly: n must be positive");
  static std::mutex mu;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  IntPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divide_exact(p, cyclotomic_poly(d));
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(n, p);
  return p;
}

namespace detail {

struct CycField {
  int n;
  int deg;
  RatPoly phi;                     // monic, length deg + 1
  std::vector<std::vector<Rat>> zeta;  // zeta^e in the power basis, e = 0..n-1

  explicit CycField(int order) : n(order) {
    IntPoly p = cyclotomic_poly(n);
    deg = static_cast<int>(p.size()) - 1;
    for (const auto& c : p) phi.emplace_back(c);
    zeta.resize(n);
    for (int e = 0; e < n; ++e) {
      RatPoly m(e + 1, Rat(0));
      m[e] = 1;
      zeta[e] = reduce(std::move(m));
    }
  }

  std::vector<Rat> reduce(RatPoly a) const {
    for (std::size_t t = a.size(); t-- > static_cast<std::size_t>(deg);) {
      if (a[t] == 0) continue;
      Rat c = a[t];
      for (int i = 0; i <= deg; ++i) a[t - deg + i] -= c * phi[i];
    }
    a.resize(deg, Rat(0));
    return a;
  }
};

}  // namespace detail

namespace {

std::shared_ptr<const detail::CycField> field(int n) {
  if (n < 1) throw DomainError("cyclotomic field order must be positive");
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const detail::CycField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<const detail::CycField>(n);
  cache.emplace(n, f);
  return f;
}

}  // namespace

CycNum::CycNum(int n) : f_(field(n)), c_(f_->deg, Rat(0)) {}

CycNum::CycNum(std::shared_ptr<const detail::CycField> f, std::vector<Rat> c)
    : f_(std::move(f)), c_(std::move(c)) {}

CycNum CycNum::rational(int n, const Rat& value) {
  CycNum x(n);
  x.c_[0] = value;
  return x;
}

CycNum CycNum::from_powers(int n, const std::vector<Rat>& powers) {
  auto f = field(n);
  return CycNum(f, f->reduce(powers));
}

int CycNum::order() const { return f_->n; }
int CycNum::degree() const { return f_->deg; }

bool CycNum::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat CycNum::to_rational() const {
  if (!is_rational()) throw DomainError("CycNum::to_rational: value is not rational");
  return c_[0];
}

void CycNum::check_same(const CycNum& o) const {
  if (f_->n != o.f_->n)
    throw IncompatibleOrder("cyclotomic operands of orders " + std::to_string(f_->n) + " and " +
                            std::to_string(o.f_->n));
}

CycNum CycNum::operator+(const CycNum& o) const {
  CycNum r = *this;
  r += o;
  return r;
}

CycNum CycNum::operator-(const CycNum& o) const {
  CycNum r = *this;
  r -= o;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycNum CycNum::operator*(const CycNum& o) const {
  check_same(o);
  RatPoly r(2 * c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      if (o.c_[j] != 0) r[i + j] += c_[i] * o.c_[j];
  }
  return CycNum(f_, f_->reduce(std::move(r)));
}

CycNum& CycNum::operator*=(const CycNum& o) {
  *this = *this * o;
  return *this;
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycNum CycNum::operator*(const Rat& s) const {
  CycNum r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

CycNum CycNum::inv() const {
  if (is_zero()) throw DivisionByZero("CycNum::inv of zero");
  RatPoly r0 = f_->phi, r1 = c_;
  trim(r1);
  RatPoly s0, s1{Rat(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPoly s2 = sub(s0, mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since Phi_n is irreducible.
  if (r0.size() != 1) throw Error("CycNum::inv: non-unit gcd");
  for (auto& x : s0) x /= r0[0];
  return CycNum(f_, f_->reduce(std::move(s0)));
}

CycNum CycNum::pow(long long e) const {
  CycNum base = e < 0 ? inv() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1 : static_cast<unsigned long long>(e);
  CycNum acc = rational(f_->n, 1);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

CycNum CycNum::galois(long long k) const {
  if (std::gcd(pmod(k, f_->n), static_cast<long long>(f_->n)) != 1 && f_->n > 1)
    throw DomainError("CycNum::galois: exponent not coprime to n");
  CycNum r(f_->n);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const auto& z = f_->zeta[pmod(static_cast<long long>(i) * k, f_->n)];
    for (std::size_t t = 0; t < z.size(); ++t) r.c_[t] += c_[i] * z[t];
  }
  return r;
}

bool CycNum::operator==(const CycNum& o) const {
  check_same(o);
  return c_ == o.c_;
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << format_rational(c_[i]) << ")";
    if (i > 0) os << "*z^" << i;
  }
  if (first) os << "0";
  return os.str();
}

CycNum zeta_pow(int n, long long e) {
  auto f = field(n);
  std::vector<Rat> c = f->zeta[pmod(e, n)];
  return CycNum::from_powers(n, c);
}

}  // namespace hvol
