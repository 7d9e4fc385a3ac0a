#pragma once

#include "ahl/ring/bigint.hpp"

#include <string>
#include <vector>

namespace ahl {

// Element of the cyclotomic field Q(zeta_n), stored in the power basis
// 1, zeta, ..., zeta^{phi(n)-1} after reduction modulo the n-th
// cyclotomic polynomial, so equality is coefficientwise.
class CyclotomicValue {
 public:
  CyclotomicValue() : CyclotomicValue(1) {}
  explicit CyclotomicValue(int conductor);
  static CyclotomicValue rational(const Rational& r, int conductor = 1);
  // zeta_n^k
  static CyclotomicValue root_of_unity(int n, int k);

  int conductor() const { return n_; }
  const std::vector<Rational>& coefficients() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  // Throws unless is_rational().
  Rational rational_value() const;
  bool is_integer() const;

  // Same element, expressed over Q(zeta_m); m must be a multiple of n.
  CyclotomicValue promote(int m) const;
  // Galois automorphism zeta -> zeta^k, gcd(k, n) = 1.
  CyclotomicValue galois(int k) const;
  CyclotomicValue conj() const { return galois(-1); }
  // Throws Error("division by zero") for zero.
  CyclotomicValue inverse() const;
  CyclotomicValue pow(long long e) const;

  CyclotomicValue& operator+=(const CyclotomicValue& o);
  CyclotomicValue& operator-=(const CyclotomicValue& o);
  CyclotomicValue& operator*=(const CyclotomicValue& o);
  CyclotomicValue& operator/=(const CyclotomicValue& o) { return *this *= o.inverse(); }
  friend CyclotomicValue operator+(CyclotomicValue a, const CyclotomicValue& b) { return a += b; }
  friend CyclotomicValue operator-(CyclotomicValue a, const CyclotomicValue& b) { return a -= b; }
  friend CyclotomicValue operator*(CyclotomicValue a, const CyclotomicValue& b) { return a *= b; }
  friend CyclotomicValue operator/(CyclotomicValue a, const CyclotomicValue& b) { return a /= b; }
  CyclotomicValue operator-() const;
  friend bool operator==(const CyclotomicValue& a, const CyclotomicValue& b);

  std::string to_string() const;

 private:
  void reduce(std::vector<Rational> raw);
  int n_;
  std::vector<Rational> c_;
};

// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<BigInt>& cyclotomic_polynomial(int n);
int euler_phi(int n);

}  // namespace ahl
