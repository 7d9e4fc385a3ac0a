#pragma once

#include "ahl/hecke/kl_table.hpp"

#include <map>
#include <vector>

namespace ahl::oracle {

// Bruhat order by the subword property: x <= y iff x has the same length-zero
// part as y and x is a product of a subword of a reduced word of y.
inline bool subword_leq(const WeylGroup& g, const WeylElt& x, const WeylElt& y) {
  if (g.omega_index(x) != g.omega_index(y)) return false;
  const auto word = g.reduced_word(y);
  const WeylElt target = g.multiply(x, g.inverse(g.omega(g.omega_index(x))));
  const std::size_t n = word.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    WeylElt p = g.identity();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) p = g.multiply(p, g.simple_reflection(word[i]));
    }
    if (p == target) return true;
  }
  return false;
}

// Polynomials in q as coefficient maps.
using QPoly = std::map<int, BigInt>;

inline void add_into(QPoly& a, const QPoly& b, const BigInt& c = 1, int shift = 0) {
  for (const auto& [e, x] : b) {
    a[e + shift] += c * x;
    if (a[e + shift] == 0) a.erase(e + shift);
  }
}

inline QPoly mul(const QPoly& a, const QPoly& b) {
  QPoly out;
  for (const auto& [e, x] : a) add_into(out, b, x, e);
  return out;
}

// KL polynomials from R-polynomials and the bar-invariance equation
// q^{l(w)-l(x)} P_{x,w}(q^{-1}) - P_{x,w}(q) = sum_{x<z<=w} R_{x,z} P_{z,w},
// solved degree by degree using deg P_{x,w} <= (l(w)-l(x)-1)/2.
class KLOracle {
 public:
  KLOracle(const WeylGroup& g, int radius) : g_(g), elems_(g.ball(radius)) {
    for (int i = 0; i < static_cast<int>(elems_.size()); ++i) index_[elems_[static_cast<std::size_t>(i)]] = i;
    const int n = static_cast<int>(elems_.size());
    r_.assign(static_cast<std::size_t>(n), std::vector<QPoly>(static_cast<std::size_t>(n)));
    done_.assign(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  }

  int size() const { return static_cast<int>(elems_.size()); }
  const WeylElt& element(int i) const { return elems_[static_cast<std::size_t>(i)]; }

  const QPoly& R(int x, int y) {
    auto& slot = r_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
    if (done_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) return slot;
    done_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = 1;
    const WeylElt& xe = element(x);
    const WeylElt& ye = element(y);
    const int lx = g_.length(xe), ly = g_.length(ye);
    if (lx > ly) return slot;
    if (ly == 0) {
      if (x == y) slot[0] = 1;
      return slot;
    }
    const int s = g_.first_descent(ye, Side::Left);
    const WeylElt sy = g_.multiply(g_.simple_reflection(s), ye);
    const WeylElt sx = g_.multiply(g_.simple_reflection(s), xe);
    const int isy = index_.at(sy);
    const auto isx = index_.find(sx);
    QPoly out;
    if (g_.length(sx) < lx) {
      out = R(isx->second, isy);
    } else {
      QPoly qm1{{1, 1}, {0, -1}};
      out = mul(qm1, R(x, isy));
      if (isx != index_.end()) add_into(out, R(isx->second, isy), 1, 1);
    }
    slot = out;
    return slot;
  }

  QPoly P(int x, int w) {
    const auto key = std::make_pair(x, w);
    if (auto it = p_.find(key); it != p_.end()) return it->second;
    QPoly out;
    if (x == w) {
      out[0] = 1;
    } else {
      const int d = g_.length(element(w)) - g_.length(element(x));
      if (d > 0) {
        QPoly rhs;
        for (int z = 0; z < size(); ++z) {
          if (z == x) continue;
          const int lz = g_.length(element(z));
          if (lz <= g_.length(element(x)) || lz > g_.length(element(w))) continue;
          const QPoly& rxz = R(x, z);
          if (rxz.empty()) continue;
          const QPoly pzw = P(z, w);
          if (pzw.empty()) continue;
          add_into(rhs, mul(rxz, pzw));
        }
        for (const auto& [e, c] : rhs) {
          if (2 * e <= d - 1) out[e] = -c;
        }
      }
    }
    p_[key] = out;
    return out;
  }

 private:
  const WeylGroup& g_;
  std::vector<WeylElt> elems_;
  std::map<WeylElt, int> index_;
  std::vector<std::vector<QPoly>> r_;
  std::vector<std::vector<char>> done_;
  std::map<std::pair<int, int>, QPoly> p_;
};

inline LaurentPoly to_v(const QPoly& p) {
  std::map<int, BigInt> t;
  for (const auto& [e, c] : p) t[2 * e] = c;
  return LaurentPoly::from_terms(t);
}

}  // namespace ahl::oracle
