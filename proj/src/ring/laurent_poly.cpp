#include "ahl/ring/laurent_poly.hpp"

#include "ahl/error.hpp"

#include <algorithm>
#include <sstream>

namespace ahl {

LaurentPoly::LaurentPoly(long long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

LaurentPoly::LaurentPoly(const BigInt& c) {
  if (c != 0) coeffs_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const BigInt& c, int exponent) {
  LaurentPoly p(c);
  if (!p.is_zero()) p.low_ = exponent;
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<int, BigInt>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p += monomial(c, e);
  return p;
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(),
                                                [](const BigInt& c) { return c != 0; }));
}

BigInt LaurentPoly::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > max_exponent()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::map<int, BigInt> LaurentPoly::terms() const {
  std::map<int, BigInt> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out.emplace(low_ + static_cast<int>(i), coeffs_[i]);
  }
  return out;
}

void LaurentPoly::normalize() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = coeffs_.size();
  while (coeffs_[last - 1] == 0) --last;
  if (first > 0 || last < coeffs_.size()) {
    coeffs_ = std::vector<BigInt>(coeffs_.begin() + static_cast<std::ptrdiff_t>(first),
                                  coeffs_.begin() + static_cast<std::ptrdiff_t>(last));
    low_ += static_cast<int>(first);
  }
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  if (is_zero()) return p;
  p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  p.low_ = -max_exponent();
  return p;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

void LaurentPoly::add_scaled(const LaurentPoly& other, const BigInt& c, int k) {
  if (other.is_zero() || c == 0) return;
  const int olow = other.low_ + k;
  const int ohigh = other.max_exponent() + k;
  if (is_zero()) {
    low_ = olow;
    coeffs_.assign(other.coeffs_.size(), BigInt(0));
  } else {
    const int high = std::max(max_exponent(), ohigh);
    const int low = std::min(low_, olow);
    if (low < low_) coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - low), BigInt(0));
    low_ = low;
    coeffs_.resize(static_cast<std::size_t>(high - low + 1));
  }
  const auto offset = static_cast<std::size_t>(olow - low_);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    if (c == 1) {
      coeffs_[offset + i] += other.coeffs_[i];
    } else {
      coeffs_[offset + i] += c * other.coeffs_[i];
    }
  }
  normalize();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  add_scaled(other, 1, 0);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  add_scaled(other, -1, 0);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  if (a.is_zero() || b.is_zero()) return p;
  p.low_ = a.low_ + b.low_;
  p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  p.normalize();
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const int e = low_ + static_cast<int>(i);
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << "*";
    out << var;
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw Error("inexact division");
  if (a.is_zero()) return {};
  // Work with ordinary polynomials A, B having nonzero constant terms.
  std::vector<BigInt> rem;
  for (int e = a.min_exponent(); e <= a.max_exponent(); ++e) rem.push_back(a.coeff(e));
  std::vector<BigInt> div;
  for (int e = b.min_exponent(); e <= b.max_exponent(); ++e) div.push_back(b.coeff(e));
  if (rem.size() < div.size()) throw Error("inexact division");
  const std::size_t qsize = rem.size() - div.size() + 1;
  std::vector<BigInt> quot(qsize);
  const BigInt& lead = div.back();
  for (std::size_t k = qsize; k-- > 0;) {
    const BigInt& top = rem[k + div.size() - 1];
    if (top == 0) continue;
    if (top % lead != 0) throw Error("inexact division");
    const BigInt q = top / lead;
    quot[k] = q;
    for (std::size_t j = 0; j < div.size(); ++j) rem[k + j] -= q * div[j];
  }
  for (const auto& r : rem) {
    if (r != 0) throw Error("inexact division");
  }
  std::map<int, BigInt> terms;
  const int shift = a.min_exponent() - b.min_exponent();
  for (std::size_t k = 0; k < qsize; ++k) {
    if (quot[k] != 0) terms.emplace(shift + static_cast<int>(k), quot[k]);
  }
  return LaurentPoly::from_terms(terms);
}

LaurentPoly quantum_two() { return LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(1, -1); }

}  // namespace ahl
