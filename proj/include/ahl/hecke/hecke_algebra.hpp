#pragma once

#include "ahl/hecke/hecke_elt.hpp"
#include "ahl/hecke/kl_table.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace ahl {

// The Hecke algebra of an extended affine Weyl group over Z[v, v^{-1}] with
// (T_s - v^2)(T_s + 1) = 0 and C_w = v^{-l(w)} sum_y P_{y,w}(v^2) T_y.
class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(std::shared_ptr<const KLTable> table);

  const KLTable& table() const { return *table_; }
  std::shared_ptr<const KLTable> table_ptr() const { return table_; }
  const WeylGroup& group() const { return table_->group(); }
  int radius() const { return table_->radius(); }

  // T-basis arithmetic (needs no KL data).
  HeckeElt t_multiply(const HeckeElt& a, const HeckeElt& b) const;
  HeckeElt t_times_simple(const HeckeElt& a, int i) const;
  HeckeElt simple_times_t(int i, const HeckeElt& a) const;
  // bar(sum c_w T_w) = sum bar(c_w) T_{w^{-1}}^{-1}
  HeckeElt bar(const HeckeElt& a) const;

  // C_w expanded in the T-basis.
  HeckeElt c_basis(const WeylElt& w) const;
  HeckeElt to_c_basis(const HeckeElt& a) const;
  HeckeElt to_t_basis(const HeckeElt& a) const;

  bool product_certified(const WeylElt& x, const WeylElt& y) const;
  // C_x C_y in the C-basis; throws CertificationError("truncation not certified")
  // unless l(x) + l(y) <= radius.
  const HeckeElt& c_product(const WeylElt& x, const WeylElt& y) const;
  HeckeElt c_multiply(const HeckeElt& a, const HeckeElt& b) const;
  // C_{s_i} * a for a in the C-basis.
  HeckeElt c_simple_times(int i, const HeckeElt& a) const;
  LaurentPoly h(const WeylElt& x, const WeylElt& y, const WeylElt& z) const;

 private:
  const HeckeElt& c_product_index(int x, int y) const;

  std::shared_ptr<const KLTable> table_;
  mutable std::mutex memo_mutex_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<HeckeElt>> memo_;
};

}  // namespace ahl
