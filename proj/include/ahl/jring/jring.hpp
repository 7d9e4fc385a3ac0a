#pragma once

#include "ahl/cells/cells.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace ahl {

// Element of J tensor Z[v, v^{-1}] in the basis t_w.
class JElt {
 public:
  JElt() = default;
  static JElt basis_element(const WeylElt& w, const LaurentPoly& c = 1);

  bool is_zero() const { return terms_.empty(); }
  const std::map<WeylElt, LaurentPoly>& terms() const { return terms_; }
  LaurentPoly coeff(const WeylElt& w) const;
  void add(const WeylElt& w, const LaurentPoly& c);
  void add_scaled(const JElt& other, const LaurentPoly& c);

  JElt& operator+=(const JElt& other);
  JElt& operator-=(const JElt& other);
  friend JElt operator+(JElt a, const JElt& b) { return a += b; }
  friend JElt operator-(JElt a, const JElt& b) { return a -= b; }
  friend JElt operator*(const LaurentPoly& c, const JElt& a);
  friend bool operator==(const JElt& a, const JElt& b) { return a.terms_ == b.terms_; }

  std::string to_string(const WeylGroup& group) const;

 private:
  std::map<WeylElt, LaurentPoly> terms_;
};

struct GammaEntry {
  WeylElt x, y, z;
  BigInt gamma;
};

struct IdentityReport {
  std::string identity;
  long long checked = 0;
  // Tuples skipped because some participating constant was not certified.
  long long skipped = 0;
  std::vector<std::string> failed;
  bool passed() const { return failed.empty() && checked > 0; }
};

class JRing {
 public:
  explicit JRing(std::shared_ptr<const CellStructure> cells);

  const CellStructure& cells() const { return *cells_; }
  const HeckeAlgebra& hecke() const { return cells_->hecke(); }
  const WeylGroup& group() const { return cells_->group(); }
  const KLTable& table() const { return cells_->table(); }

  // Coefficient of v^{-a(z)} in h_{x,y,z^{-1}}; throws CertificationError("uncertified γ ...").
  BigInt gamma(const WeylElt& x, const WeylElt& y, const WeylElt& z) const;
  // t_x t_y = sum_z gamma_{x,y,z} t_{z^{-1}}
  JElt t_product(const WeylElt& x, const WeylElt& y) const;
  JElt multiply(const JElt& a, const JElt& b) const;

  JElt unit_of_cell(int cell) const;
  JElt unit() const;

  // phi(C_w) = sum over d in D and z with a(z) = a(d) of h_{w,d,z} t_z.
  JElt phi(const WeylElt& w) const;
  JElt phi(const HeckeElt& a) const;
  // The cell-c component of phi.
  JElt phi_c(const WeylElt& w, int cell) const;

  static JElt psi(const HeckeElt& a);
  static HeckeElt psi_inv(const JElt& a);
  // Keeps the t_z terms with z in the two-sided cell.
  JElt restrict_to_cell(const JElt& a, int cell) const;

  // C_x . t_y = psi_c(ht_c(C_x C_y)) extended linearly in the J argument.
  JElt h_action(const WeylElt& x, const JElt& a, int cell) const;
  JElt h_action(const HeckeElt& h, const JElt& a, int cell) const;

  // Largest r with every gamma_{x,y,z}, l(x), l(y), l(z) <= r, certified; -1 if none.
  int certified_gamma_radius() const;
  std::vector<GammaEntry> gamma_table(int r) const;

 private:
  std::shared_ptr<const CellStructure> cells_;
};

// Registered identity checks over all certified tuples of the ball.
// Names: leading_term_product, phi_cell_from_d, phi_times_t, module, j_assoc, unit, phi_hom.
const std::vector<std::string>& identity_names();
IdentityReport verify_identity(const std::string& name, const JRing& j, int jobs = 1);

// Runs body(i) for i in [0, n) on up to `jobs` threads.
void parallel_for(int n, int jobs, const std::function<void(int)>& body);

}  // namespace ahl
