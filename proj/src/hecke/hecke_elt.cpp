#include "ahl/hecke/hecke_elt.hpp"

#include "ahl/error.hpp"

namespace ahl {

HeckeElt HeckeElt::basis_element(Basis basis, const WeylElt& w, const LaurentPoly& c) {
  HeckeElt h(basis);
  h.add(w, c);
  return h;
}

LaurentPoly HeckeElt::coeff(const WeylElt& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void HeckeElt::add(const WeylElt& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void HeckeElt::check_basis(const HeckeElt& other) const {
  if (basis_ != other.basis_) throw Error("Hecke elements in different bases");
}

void HeckeElt::add_scaled(const HeckeElt& other, const LaurentPoly& c) {
  check_basis(other);
  for (const auto& [w, a] : other.terms_) add(w, c * a);
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& other) {
  check_basis(other);
  for (const auto& [w, a] : other.terms_) add(w, a);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& other) {
  check_basis(other);
  for (const auto& [w, a] : other.terms_) add(w, -a);
  return *this;
}

HeckeElt operator*(const LaurentPoly& c, const HeckeElt& a) {
  HeckeElt out(a.basis_);
  for (const auto& [w, x] : a.terms_) out.add(w, c * x);
  return out;
}

std::string HeckeElt::to_string(const WeylGroup& group) const {
  if (terms_.empty()) return "0";
  std::string s;
  const char* sym = basis_ == Basis::T ? "T" : "C";
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")" + sym + "[" + group.to_string(w) + "]";
  }
  return s;
}

}  // namespace ahl
