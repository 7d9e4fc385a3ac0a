#include "ahl/ring/cyclotomic.hpp"

#include "ahl/error.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace ahl {

namespace {

using RPoly = std::vector<Rational>;

void trim(RPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RPoly mul(const RPoly& a, const RPoly& b) {
  if (a.empty() || b.empty()) return {};
  RPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

RPoly sub(RPoly a, const RPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Polynomial division a = q*b + r over Q.
void divmod(RPoly a, const RPoly& b, RPoly& q, RPoly& r) {
  trim(a);
  q.clear();
  if (a.size() < b.size()) {
    r = a;
    return;
  }
  q.assign(a.size() - b.size() + 1, Rational(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    const Rational c = a[k + b.size() - 1] / b.back();
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  a.resize(b.size() - 1);
  trim(a);
  r = a;
  trim(q);
}

RPoly to_rpoly(const std::vector<BigInt>& p) {
  RPoly out;
  for (const auto& c : p) out.emplace_back(c);
  return out;
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<BigInt>& cyclotomic_polynomial(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<BigInt>> cache;
  if (n < 1) throw Error("cyclotomic conductor must be positive");
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  RPoly num(static_cast<std::size_t>(n) + 1);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    RPoly q, r;
    divmod(num, to_rpoly(cyclotomic_polynomial(d)), q, r);
    num = q;
  }
  std::vector<BigInt> coeffs;
  for (const auto& c : num) coeffs.push_back(boost::multiprecision::numerator(c));
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(coeffs)).first->second;
}

CyclotomicValue::CyclotomicValue(int conductor) : n_(conductor) {
  if (conductor < 1) throw Error("cyclotomic conductor must be positive");
}

CyclotomicValue CyclotomicValue::rational(const Rational& r, int conductor) {
  CyclotomicValue v(conductor);
  v.reduce({r});
  return v;
}

CyclotomicValue CyclotomicValue::root_of_unity(int n, int k) {
  CyclotomicValue v(n);
  const int e = ((k % n) + n) % n;
  RPoly raw(static_cast<std::size_t>(e) + 1);
  raw[static_cast<std::size_t>(e)] = 1;
  v.reduce(std::move(raw));
  return v;
}

void CyclotomicValue::reduce(std::vector<Rational> raw) {
  trim(raw);
  const RPoly phi = to_rpoly(cyclotomic_polynomial(n_));
  RPoly q, r;
  divmod(std::move(raw), phi, q, r);
  c_ = std::move(r);
}

bool CyclotomicValue::is_zero() const { return c_.empty(); }

bool CyclotomicValue::is_rational() const { return c_.size() <= 1; }

Rational CyclotomicValue::rational_value() const {
  if (!is_rational()) throw Error("cyclotomic value is not rational: " + to_string());
  return c_.empty() ? Rational(0) : c_[0];
}

bool CyclotomicValue::is_integer() const {
  return is_rational() && boost::multiprecision::denominator(rational_value()) == 1;
}

CyclotomicValue CyclotomicValue::promote(int m) const {
  if (m % n_ != 0) throw Error("cannot promote conductor " + std::to_string(n_) + " to " + std::to_string(m));
  if (m == n_) return *this;
  const std::size_t step = static_cast<std::size_t>(m / n_);
  RPoly raw(c_.empty() ? 0 : (c_.size() - 1) * step + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) raw[i * step] = c_[i];
  CyclotomicValue v(m);
  v.reduce(std::move(raw));
  return v;
}

CyclotomicValue CyclotomicValue::galois(int k) const {
  if (std::gcd(k, n_) != 1) throw Error("Galois exponent must be coprime to the conductor");
  const int kk = ((k % n_) + n_) % n_;
  RPoly raw(static_cast<std::size_t>(n_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    raw[(i * static_cast<std::size_t>(kk)) % static_cast<std::size_t>(n_)] += c_[i];
  }
  CyclotomicValue v(n_);
  v.reduce(std::move(raw));
  return v;
}

CyclotomicValue CyclotomicValue::inverse() const {
  if (is_zero()) throw Error("division by zero");
  // Extended Euclid: find s with s*a = 1 mod Phi_n.
  RPoly r0 = to_rpoly(cyclotomic_polynomial(n_));
  RPoly r1 = c_;
  RPoly s0, s1{Rational(1)};
  while (!(r1.size() == 1)) {
    RPoly q, r;
    divmod(r0, r1, q, r);
    RPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    if (r1.empty()) throw Error("non-invertible cyclotomic value");
  }
  for (auto& c : s1) c /= r1[0];
  CyclotomicValue v(n_);
  v.reduce(std::move(s1));
  return v;
}

CyclotomicValue CyclotomicValue::pow(long long e) const {
  CyclotomicValue base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  CyclotomicValue result = rational(1, n_);
  while (k > 0) {
    if (k & 1ULL) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

CyclotomicValue& CyclotomicValue::operator+=(const CyclotomicValue& o) {
  const int m = std::lcm(n_, o.n_);
  CyclotomicValue a = promote(m);
  const CyclotomicValue b = o.promote(m);
  RPoly raw = a.c_;
  if (raw.size() < b.c_.size()) raw.resize(b.c_.size());
  for (std::size_t i = 0; i < b.c_.size(); ++i) raw[i] += b.c_[i];
  trim(raw);
  n_ = m;
  c_ = std::move(raw);
  return *this;
}

CyclotomicValue& CyclotomicValue::operator-=(const CyclotomicValue& o) { return *this += -o; }

CyclotomicValue& CyclotomicValue::operator*=(const CyclotomicValue& o) {
  const int m = std::lcm(n_, o.n_);
  const CyclotomicValue a = promote(m);
  const CyclotomicValue b = o.promote(m);
  n_ = m;
  reduce(mul(a.c_, b.c_));
  return *this;
}

CyclotomicValue CyclotomicValue::operator-() const {
  CyclotomicValue v = *this;
  for (auto& c : v.c_) c = -c;
  return v;
}

bool operator==(const CyclotomicValue& a, const CyclotomicValue& b) {
  const int m = std::lcm(a.n_, b.n_);
  return a.promote(m).c_ == b.promote(m).c_;
}

std::string CyclotomicValue::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (i == 0) {
      out << ahl::to_string(c_[i]);
      continue;
    }
    if (c_[i] != 1) out << ahl::to_string(c_[i]) << "*";
    out << "z" << n_;
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

}  // namespace ahl
