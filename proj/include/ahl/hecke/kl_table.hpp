#pragma once

#include "ahl/ring/laurent_poly.hpp"
#include "ahl/weyl/weyl_group.hpp"

#include <memory>
#include <unordered_map>
#include <vector>

namespace ahl {

// Kazhdan-Lusztig polynomials P_{x,y} for all y in a length ball. Polynomials
// are stored as P(v^2), i.e. Laurent polynomials in v with even exponents.
class KLTable {
 public:
  struct Entry {
    int x;
    LaurentPoly p;
  };
  struct Mu {
    int z;
    BigInt mu;
  };
  struct RawEntry {
    WeylElt x;
    WeylElt y;
    LaurentPoly p;
  };

  // Layers of equal length are computed by up to `jobs` threads.
  static std::shared_ptr<const KLTable> compute(const WeylGroup& group, int radius, int jobs = 1);
  // Builds a table from stored entries; validates structure but not values.
  static std::shared_ptr<const KLTable> from_entries(const WeylGroup& group, int radius,
                                                     const std::vector<RawEntry>& entries);

  const WeylGroup& group() const { return *group_; }
  int radius() const { return radius_; }
  const std::vector<WeylElt>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  // -1 if the element lies outside the ball.
  int index_of(const WeylElt& w) const;
  // Throws CertificationError("uncached radius") if absent.
  int require_index(const WeylElt& w) const;
  const WeylElt& element(int idx) const { return elements_[static_cast<std::size_t>(idx)]; }
  int length(int idx) const { return lengths_[static_cast<std::size_t>(idx)]; }
  std::uint32_t left_descents(int idx) const { return ldesc_[static_cast<std::size_t>(idx)]; }
  std::uint32_t right_descents(int idx) const { return rdesc_[static_cast<std::size_t>(idx)]; }
  // Index of s_i * w (resp. w * s_i), or -1 outside the ball.
  int left_mult(int idx, int i) const;
  int right_mult(int idx, int i) const;
  int inverse_index(int idx) const { return inverse_[static_cast<std::size_t>(idx)]; }

  // Entries x <= y with P_{x,y} != 0, sorted by x index.
  const std::vector<Entry>& row(int y) const { return rows_[static_cast<std::size_t>(y)]; }
  // z < y with mu(z, y) != 0.
  const std::vector<Mu>& mu_below(int y) const { return mu_[static_cast<std::size_t>(y)]; }

  LaurentPoly p_index(int x, int y) const;
  LaurentPoly P(const WeylElt& x, const WeylElt& y) const;
  BigInt mu(const WeylElt& x, const WeylElt& y) const;

  std::size_t entry_count() const;
  // Largest q-degree among stored polynomials.
  int max_q_degree() const;

  // Compares every entry with y of length <= min(radius) against another table.
  bool agrees_with(const KLTable& other) const;

 private:
  KLTable(const WeylGroup& group, int radius);
  void compute_row(int y);
  void finish_row(int y);

  const WeylGroup* group_;
  int radius_;
  std::vector<WeylElt> elements_;
  std::unordered_map<WeylElt, int, WeylEltHash> index_;
  std::vector<int> lengths_;
  std::vector<std::uint32_t> ldesc_, rdesc_;
  std::vector<std::vector<int>> lmul_, rmul_;
  std::vector<int> inverse_;
  std::vector<std::vector<Entry>> rows_;
  std::vector<std::vector<Mu>> mu_;
};

}  // namespace ahl
