#pragma once

#include "ahl/ring/bigint.hpp"

#include <map>
#include <string>
#include <vector>

namespace ahl {

// Laurent polynomial in one variable v with exact integer coefficients.
// Stored densely from the lowest nonzero exponent; zero has no terms.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const BigInt& c);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const BigInt& c, int exponent);
  static LaurentPoly from_terms(const std::map<int, BigInt>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  // Only meaningful for nonzero values.
  int min_exponent() const { return low_; }
  int max_exponent() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::size_t term_count() const;

  BigInt coeff(int exponent) const;
  std::map<int, BigInt> terms() const;

  LaurentPoly bar() const;
  LaurentPoly shifted(int k) const;
  bool is_bar_invariant() const { return *this == bar(); }

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  // Adds c * v^k * other without building a temporary.
  void add_scaled(const LaurentPoly& other, const BigInt& c, int k);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  std::string to_string(const std::string& var = "v") const;

 private:
  void normalize();
  int low_ = 0;
  std::vector<BigInt> coeffs_;
};

// Exact quotient a / b; throws Error("inexact division") if b does not divide a.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

inline LaurentPoly bar(const LaurentPoly& a) { return a.bar(); }

// v + v^{-1}
LaurentPoly quantum_two();

}  // namespace ahl
