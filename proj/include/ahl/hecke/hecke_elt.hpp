#pragma once

#include "ahl/ring/laurent_poly.hpp"
#include "ahl/weyl/weyl_group.hpp"

#include <map>
#include <string>

namespace ahl {

enum class Basis { T, C };

// Finite Z[v, v^{-1}]-combination of T_w or C_w.
class HeckeElt {
 public:
  explicit HeckeElt(Basis basis = Basis::T) : basis_(basis) {}
  static HeckeElt basis_element(Basis basis, const WeylElt& w, const LaurentPoly& c = 1);

  Basis basis() const { return basis_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<WeylElt, LaurentPoly>& terms() const { return terms_; }
  LaurentPoly coeff(const WeylElt& w) const;

  void add(const WeylElt& w, const LaurentPoly& c);
  // this += c * other
  void add_scaled(const HeckeElt& other, const LaurentPoly& c);

  HeckeElt& operator+=(const HeckeElt& other);
  HeckeElt& operator-=(const HeckeElt& other);
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  friend HeckeElt operator*(const LaurentPoly& c, const HeckeElt& a);
  friend bool operator==(const HeckeElt& a, const HeckeElt& b) {
    return a.basis_ == b.basis_ && a.terms_ == b.terms_;
  }

  std::string to_string(const WeylGroup& group) const;

 private:
  void check_basis(const HeckeElt& other) const;
  Basis basis_;
  std::map<WeylElt, LaurentPoly> terms_;
};

}  // namespace ahl
