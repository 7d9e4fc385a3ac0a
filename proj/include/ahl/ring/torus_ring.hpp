#pragma once

#include "ahl/ring/bigint.hpp"
#include "ahl/ring/cyclotomic.hpp"

#include <map>
#include <string>
#include <vector>

namespace ahl {

using Exponent = std::vector<int>;
using IntMatrix = std::vector<std::vector<int>>;

// Element of the representation ring Z[X] of a torus with character
// lattice X = Z^rank, i.e. a Laurent polynomial in rank variables.
class TorusRingElt {
 public:
  explicit TorusRingElt(int rank = 0) : rank_(rank) {}
  static TorusRingElt constant(int rank, const BigInt& c);
  static TorusRingElt character(const Exponent& e, const BigInt& c = 1);

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, BigInt>& terms() const { return terms_; }
  BigInt coeff(const Exponent& e) const;

  void add_term(const Exponent& e, const BigInt& c);

  TorusRingElt& operator+=(const TorusRingElt& other);
  TorusRingElt& operator-=(const TorusRingElt& other);
  friend TorusRingElt operator+(TorusRingElt a, const TorusRingElt& b) { return a += b; }
  friend TorusRingElt operator-(TorusRingElt a, const TorusRingElt& b) { return a -= b; }
  friend TorusRingElt operator*(const TorusRingElt& a, const TorusRingElt& b);
  TorusRingElt& operator*=(const TorusRingElt& other) { return *this = *this * other; }
  TorusRingElt operator-() const;
  friend bool operator==(const TorusRingElt& a, const TorusRingElt& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

  // Value at the identity of the torus (sum of coefficients).
  BigInt augmentation() const;
  // Apply a lattice automorphism to every exponent: e -> m * e.
  TorusRingElt transform(const IntMatrix& m) const;
  // Dual representation: e -> -e.
  TorusRingElt dual() const;

  std::string to_string() const;

 private:
  void check_rank(const TorusRingElt& other) const;
  int rank_;
  std::map<Exponent, BigInt> terms_;
};

// Exact quotient; throws Error("inexact division") when b does not divide a.
TorusRingElt exact_divide(const TorusRingElt& a, const TorusRingElt& b);
// Is a divisible by b in the Laurent polynomial ring?
bool divides(const TorusRingElt& b, const TorusRingElt& a);

// Evaluate at a torus point given by one cyclotomic coordinate per variable.
// Throws Error("singular evaluation point") for a zero coordinate.
CyclotomicValue evaluate(const TorusRingElt& x, const std::vector<CyclotomicValue>& point);

}  // namespace ahl
