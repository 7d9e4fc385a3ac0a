#include "ahl/ring/torus_ring.hpp"

#include "ahl/error.hpp"

#include <algorithm>
#include <sstream>

namespace ahl {

TorusRingElt TorusRingElt::constant(int rank, const BigInt& c) {
  TorusRingElt x(rank);
  x.add_term(Exponent(static_cast<std::size_t>(rank), 0), c);
  return x;
}

TorusRingElt TorusRingElt::character(const Exponent& e, const BigInt& c) {
  TorusRingElt x(static_cast<int>(e.size()));
  x.add_term(e, c);
  return x;
}

BigInt TorusRingElt::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void TorusRingElt::add_term(const Exponent& e, const BigInt& c) {
  if (static_cast<int>(e.size()) != rank_) throw Error("torus exponent has wrong rank");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void TorusRingElt::check_rank(const TorusRingElt& other) const {
  if (rank_ != other.rank_) throw Error("torus rank mismatch");
}

TorusRingElt& TorusRingElt::operator+=(const TorusRingElt& other) {
  check_rank(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

TorusRingElt& TorusRingElt::operator-=(const TorusRingElt& other) {
  check_rank(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

TorusRingElt operator*(const TorusRingElt& a, const TorusRingElt& b) {
  a.check_rank(b);
  TorusRingElt out(a.rank_);
  Exponent e(static_cast<std::size_t>(a.rank_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

TorusRingElt TorusRingElt::operator-() const {
  TorusRingElt out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

BigInt TorusRingElt::augmentation() const {
  BigInt s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

TorusRingElt TorusRingElt::transform(const IntMatrix& m) const {
  TorusRingElt out(rank_);
  for (const auto& [e, c] : terms_) {
    Exponent f(static_cast<std::size_t>(rank_), 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = 0; j < e.size(); ++j) f[i] += m[i][j] * e[j];
    }
    out.add_term(f, c);
  }
  return out;
}

TorusRingElt TorusRingElt::dual() const {
  TorusRingElt out(rank_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (auto& x : f) x = -x;
    out.add_term(f, c);
  }
  return out;
}

std::string TorusRingElt::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c;
    bool trivial = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    if (trivial) continue;
    out << "*e^(";
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? "," : "") << e[i];
    out << ")";
  }
  return out.str();
}

namespace {

Exponent coordinate_min(const TorusRingElt& x) {
  Exponent m = x.terms().begin()->first;
  for (const auto& [e, c] : x.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
  }
  return m;
}

Exponent coordinate_max(const TorusRingElt& x) {
  Exponent m = x.terms().begin()->first;
  for (const auto& [e, c] : x.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::max(m[i], e[i]);
  }
  return m;
}

bool try_divide(const TorusRingElt& a, const TorusRingElt& b, TorusRingElt& quotient) {
  if (b.is_zero()) return false;
  quotient = TorusRingElt(a.rank());
  if (a.is_zero()) return true;
  // Every quotient exponent lies in the box [min a - min b, max a - max b]
  // coordinatewise, and quotient terms are produced in decreasing lex order,
  // so the loop terminates.
  const Exponent amin = coordinate_min(a), amax = coordinate_max(a);
  const Exponent bmin = coordinate_min(b), bmax = coordinate_max(b);
  Exponent lo(amin.size()), hi(amin.size());
  for (std::size_t i = 0; i < lo.size(); ++i) {
    lo[i] = amin[i] - bmin[i];
    hi[i] = amax[i] - bmax[i];
    if (lo[i] > hi[i]) return false;
  }
  const auto& [blead, bcoeff] = *b.terms().rbegin();
  TorusRingElt rem = a;
  while (!rem.is_zero()) {
    const auto& [rlead, rcoeff] = *rem.terms().rbegin();
    if (rcoeff % bcoeff != 0) return false;
    Exponent m(rlead.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      m[i] = rlead[i] - blead[i];
      if (m[i] < lo[i] || m[i] > hi[i]) return false;
    }
    const TorusRingElt step = TorusRingElt::character(m, rcoeff / bcoeff);
    quotient += step;
    rem -= step * b;
  }
  return true;
}

}  // namespace

TorusRingElt exact_divide(const TorusRingElt& a, const TorusRingElt& b) {
  if (a.rank() != b.rank()) throw Error("torus rank mismatch");
  TorusRingElt q(a.rank());
  if (!try_divide(a, b, q)) throw Error("inexact division");
  return q;
}

bool divides(const TorusRingElt& b, const TorusRingElt& a) {
  if (a.rank() != b.rank()) throw Error("torus rank mismatch");
  TorusRingElt q(a.rank());
  return try_divide(a, b, q);
}

CyclotomicValue evaluate(const TorusRingElt& x, const std::vector<CyclotomicValue>& point) {
  if (static_cast<int>(point.size()) != x.rank()) throw Error("evaluation point has wrong rank");
  for (const auto& c : point) {
    if (c.is_zero()) throw Error("singular evaluation point");
  }
  CyclotomicValue total;
  for (const auto& [e, c] : x.terms()) {
    CyclotomicValue term = CyclotomicValue::rational(Rational(c));
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term *= point[i].pow(e[i]);
    }
    total += term;
  }
  return total;
}

}  // namespace ahl
