#include "ahl/hecke/hecke_algebra.hpp"

#include "ahl/error.hpp"

namespace ahl {

namespace {

const LaurentPoly& v2() {
  static const LaurentPoly p = LaurentPoly::monomial(1, 2);
  return p;
}
const LaurentPoly& v2_minus_1() {
  static const LaurentPoly p = LaurentPoly::monomial(1, 2) - 1;
  return p;
}

}  // namespace

HeckeAlgebra::HeckeAlgebra(std::shared_ptr<const KLTable> table) : table_(std::move(table)) {}

HeckeElt HeckeAlgebra::t_times_simple(const HeckeElt& a, int i) const {
  if (a.basis() != Basis::T) throw Error("expected a T-basis element");
  const WeylGroup& g = group();
  const WeylElt s = g.simple_reflection(i);
  HeckeElt out(Basis::T);
  for (const auto& [w, c] : a.terms()) {
    const WeylElt ws = g.multiply(w, s);
    if (g.length(ws) > g.length(w)) {
      out.add(ws, c);
    } else {
      out.add(w, v2_minus_1() * c);
      out.add(ws, v2() * c);
    }
  }
  return out;
}

HeckeElt HeckeAlgebra::simple_times_t(int i, const HeckeElt& a) const {
  if (a.basis() != Basis::T) throw Error("expected a T-basis element");
  const WeylGroup& g = group();
  const WeylElt s = g.simple_reflection(i);
  HeckeElt out(Basis::T);
  for (const auto& [w, c] : a.terms()) {
    const WeylElt sw = g.multiply(s, w);
    if (g.length(sw) > g.length(w)) {
      out.add(sw, c);
    } else {
      out.add(w, v2_minus_1() * c);
      out.add(sw, v2() * c);
    }
  }
  return out;
}

HeckeElt HeckeAlgebra::t_multiply(const HeckeElt& a, const HeckeElt& b) const {
  if (a.basis() != Basis::T || b.basis() != Basis::T) throw Error("expected T-basis elements");
  const WeylGroup& g = group();
  HeckeElt out(Basis::T);
  for (const auto& [y, c] : b.terms()) {
    g.check_member(y);
    HeckeElt prod = a;
    for (int i : g.reduced_word(y)) prod = t_times_simple(prod, i);
    const WeylElt& om = g.omega(g.omega_index(y));
    HeckeElt shifted(Basis::T);
    for (const auto& [w, d] : prod.terms()) shifted.add(g.multiply(w, om), d);
    out.add_scaled(shifted, c);
  }
  return out;
}

HeckeElt HeckeAlgebra::bar(const HeckeElt& a) const {
  if (a.basis() != Basis::T) throw Error("expected a T-basis element");
  const WeylGroup& g = group();
  // T_s^{-1} = v^{-2} T_s + (v^{-2} - 1)
  const LaurentPoly vm2 = LaurentPoly::monomial(1, -2);
  const LaurentPoly vm2_minus_1 = vm2 - 1;
  HeckeElt out(Basis::T);
  for (const auto& [w, c] : a.terms()) {
    HeckeElt prod = HeckeElt::basis_element(Basis::T, g.identity());
    for (int i : g.reduced_word(w)) {
      HeckeElt next = vm2 * t_times_simple(prod, i);
      next.add_scaled(prod, vm2_minus_1);
      prod = std::move(next);
    }
    const WeylElt& om = g.omega(g.omega_index(w));
    HeckeElt shifted(Basis::T);
    for (const auto& [u, d] : prod.terms()) shifted.add(g.multiply(u, om), d);
    out.add_scaled(shifted, c.bar());
  }
  return out;
}

HeckeElt HeckeAlgebra::c_basis(const WeylElt& w) const {
  const int wi = table_->require_index(w);
  const int lw = table_->length(wi);
  HeckeElt out(Basis::T);
  for (const auto& e : table_->row(wi)) out.add(table_->element(e.x), e.p.shifted(-lw));
  return out;
}

HeckeElt HeckeAlgebra::to_c_basis(const HeckeElt& a) const {
  if (a.basis() == Basis::C) return a;
  HeckeElt rest = a;
  HeckeElt out(Basis::C);
  const WeylGroup& g = group();
  while (!rest.is_zero()) {
    // Peel off a term of maximal length: its coefficient determines that of C_z.
    const WeylElt* top = nullptr;
    int best = -1;
    for (const auto& [w, c] : rest.terms()) {
      const int l = g.length(w);
      if (l > best) {
        best = l;
        top = &w;
      }
    }
    const WeylElt z = *top;
    const LaurentPoly coef = rest.coeff(z).shifted(best);
    out.add(z, coef);
    rest.add_scaled(c_basis(z), -coef);
  }
  return out;
}

HeckeElt HeckeAlgebra::to_t_basis(const HeckeElt& a) const {
  if (a.basis() == Basis::T) return a;
  HeckeElt out(Basis::T);
  for (const auto& [w, c] : a.terms()) out.add_scaled(c_basis(w), c);
  return out;
}

bool HeckeAlgebra::product_certified(const WeylElt& x, const WeylElt& y) const {
  return group().length(x) + group().length(y) <= radius();
}

HeckeElt HeckeAlgebra::c_simple_times(int i, const HeckeElt& a) const {
  if (a.basis() != Basis::C) throw Error("expected a C-basis element");
  const KLTable& t = *table_;
  const LaurentPoly q2 = quantum_two();
  HeckeElt out(Basis::C);
  for (const auto& [w, c] : a.terms()) {
    const int wi = t.require_index(w);
    if (t.left_descents(wi) & (1u << i)) {
      out.add(w, q2 * c);
      continue;
    }
    const int swi = t.left_mult(wi, i);
    if (swi < 0) {
      throw CertificationError("truncation not certified: C_s * C_" + group().to_string(w) + " leaves radius " +
                               std::to_string(radius()));
    }
    out.add(t.element(swi), c);
    for (const auto& m : t.mu_below(wi)) {
      if (t.left_descents(m.z) & (1u << i)) out.add(t.element(m.z), LaurentPoly(m.mu) * c);
    }
  }
  return out;
}

const HeckeElt& HeckeAlgebra::c_product_index(int x, int y) const {
  {
    std::lock_guard lock(memo_mutex_);
    auto it = memo_.find({x, y});
    if (it != memo_.end()) return *it->second;
  }
  const KLTable& t = *table_;
  HeckeElt result(Basis::C);
  if (t.length(x) == 0) {
    const WeylElt xy = group().multiply(t.element(x), t.element(y));
    result.add(xy, 1);
  } else {
    int s = 0;
    while (!(t.left_descents(x) & (1u << s))) ++s;
    const int xp = t.left_mult(x, s);
    // C_x = C_s C_{x'} - sum_{z < x', sz < z} mu(z, x') C_z
    result = c_simple_times(s, c_product_index(xp, y));
    for (const auto& m : t.mu_below(xp)) {
      if (t.left_descents(m.z) & (1u << s)) result.add_scaled(c_product_index(m.z, y), LaurentPoly(-m.mu));
    }
  }
  std::lock_guard lock(memo_mutex_);
  auto [it, inserted] = memo_.emplace(std::make_pair(x, y), nullptr);
  if (inserted) it->second = std::make_unique<HeckeElt>(std::move(result));
  return *it->second;
}

const HeckeElt& HeckeAlgebra::c_product(const WeylElt& x, const WeylElt& y) const {
  if (!product_certified(x, y)) {
    throw CertificationError("truncation not certified: l(" + group().to_string(x) + ") + l(" +
                             group().to_string(y) + ") > " + std::to_string(radius()));
  }
  return c_product_index(table_->require_index(x), table_->require_index(y));
}

HeckeElt HeckeAlgebra::c_multiply(const HeckeElt& a, const HeckeElt& b) const {
  if (a.basis() != Basis::C || b.basis() != Basis::C) throw Error("expected C-basis elements");
  HeckeElt out(Basis::C);
  for (const auto& [x, cx] : a.terms()) {
    for (const auto& [y, cy] : b.terms()) out.add_scaled(c_product(x, y), cx * cy);
  }
  return out;
}

LaurentPoly HeckeAlgebra::h(const WeylElt& x, const WeylElt& y, const WeylElt& z) const {
  return c_product(x, y).coeff(z);
}

}  // namespace ahl
