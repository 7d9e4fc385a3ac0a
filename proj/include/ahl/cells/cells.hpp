#pragma once

#include "ahl/hecke/hecke_algebra.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ahl {

enum class CellSide { Left, Right, TwoSided };
std::string to_string(CellSide side);

// Cells of the preorder generated by connected pairs with a descent drop,
// restricted to a length ball. Element and cell indices refer to the ball
// order of the underlying KL table.
class CellPartition {
 public:
  static CellPartition compute(std::shared_ptr<const KLTable> table, CellSide side);

  const KLTable& table() const { return *table_; }
  CellSide side() const { return side_; }
  int radius() const { return table_->radius(); }
  int num_cells() const { return static_cast<int>(members_.size()); }
  int cell_of_index(int idx) const { return cell_of_[static_cast<std::size_t>(idx)]; }
  // Throws CertificationError("uncached radius") outside the ball.
  int cell_of(const WeylElt& w) const;
  const std::vector<int>& members(int cell) const { return members_[static_cast<std::size_t>(cell)]; }
  bool certified_index(int idx) const { return certified_[static_cast<std::size_t>(idx)] != 0; }
  bool is_certified(const WeylElt& w) const;
  bool cell_certified(int cell) const;
  // c <= c' in the cell order (reachability in the preorder).
  bool leq(int c, int c2) const;
  std::vector<std::pair<int, int>> strict_order() const;

 private:
  friend class CellStructure;

  std::shared_ptr<const KLTable> table_;
  CellSide side_ = CellSide::TwoSided;
  std::vector<int> cell_of_;
  std::vector<std::vector<int>> members_;
  std::vector<char> certified_;
  std::vector<std::vector<char>> reach_;
};

// x, y comparable and deg_q P = (|l(x) - l(y)| - 1) / 2.
bool connected(const WeylElt& x, const WeylElt& y, const KLTable& table);

enum class ACertificate { Exact, Lookup, LowerBound };
std::string to_string(ACertificate c);

struct AValue {
  int value = 0;
  ACertificate certificate = ACertificate::LowerBound;
};

struct NilpotentLabel {
  std::string datum;
  std::string orbit;
  int dim_springer_fiber = 0;
  std::string z_e;
  std::string component_group;
};

// Registered cell-orbit dictionary, matched by a-value.
const std::vector<NilpotentLabel>& nilpotent_labels(std::string_view datum);

// Two-sided and one-sided partitions with a-values and distinguished involutions.
// Membership stays certified only in two-sided cells whose a-value is certified.
class CellStructure {
 public:
  static std::shared_ptr<const CellStructure> compute(std::shared_ptr<const HeckeAlgebra> hecke);

  const HeckeAlgebra& hecke() const { return *hecke_; }
  const KLTable& table() const { return hecke_->table(); }
  const WeylGroup& group() const { return hecke_->group(); }
  const CellPartition& two_sided() const { return lr_; }
  const CellPartition& left() const { return left_; }
  const CellPartition& right() const { return right_; }

  const AValue& cell_a(int cell) const { return cell_a_[static_cast<std::size_t>(cell)]; }
  const std::optional<NilpotentLabel>& cell_label(int cell) const {
    return labels_[static_cast<std::size_t>(cell)];
  }
  AValue a_value(const WeylElt& z) const;
  // a(z) when both the membership of z and its cell's a-value are certified.
  std::optional<int> certified_a(const WeylElt& z) const;
  int certified_a_or_throw(const WeylElt& z, const std::string& what) const;

  // d with l(d) - a(d) = 2 deg_q P_{e,d} among certified elements.
  const std::vector<WeylElt>& distinguished() const;
  bool is_distinguished(const WeylElt& w) const;
  // The two-sided cell containing the identity.
  int identity_cell() const;

 private:
  std::shared_ptr<const HeckeAlgebra> hecke_;
  CellPartition lr_, left_, right_;
  std::vector<AValue> cell_a_;
  std::vector<std::optional<NilpotentLabel>> labels_;
  std::vector<WeylElt> distinguished_;
  std::optional<std::string> distinguished_error_;
};

// Keeps the C_z terms of a with z in the given two-sided cell.
HeckeElt ht_c(const HeckeElt& a, int cell, const CellStructure& cells);

}  // namespace ahl
