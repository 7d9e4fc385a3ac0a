#pragma once

#include "ahl/weyl/root_datum.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ahl {

inline constexpr int kMaxRank = 4;

// t_lambda * u in W = W_f x Lambda, acting on coweights by x -> u x + lambda.
struct WeylElt {
  std::uint8_t datum = 0;
  std::uint8_t u = 0;  // index into the finite Weyl group table
  std::array<int, kMaxRank> lambda{};

  friend auto operator<=>(const WeylElt&, const WeylElt&) = default;
};

struct WeylEltHash {
  std::size_t operator()(const WeylElt& w) const noexcept {
    std::size_t h = (static_cast<std::size_t>(w.datum) << 8) | w.u;
    for (int x : w.lambda) h = h * 1000003u ^ static_cast<std::size_t>(x + 0x9e37);
    return h;
  }
};

enum class Side { Left, Right };

class WeylGroup {
 public:
  static const WeylGroup& get(std::string_view label);
  static const WeylGroup& get(int datum_id);

  const AffineRootDatum& datum() const { return *datum_; }
  const std::string& label() const { return datum_->label; }
  // Number of affine simple reflections s_0, ..., s_r.
  int num_simple() const { return datum_->rank + 1; }
  int finite_order() const { return static_cast<int>(finite_.size()); }

  WeylElt identity() const;
  WeylElt simple_reflection(int i) const;
  WeylElt translation(const Exponent& lambda) const;
  WeylElt make(int u, const Exponent& lambda) const;
  Exponent lambda(const WeylElt& x) const;

  // Length-zero elements, indexed so that omega(k) conjugates s_0 to s_k.
  const std::vector<WeylElt>& omegas() const { return omegas_; }
  const WeylElt& omega(int k) const;
  bool has_omega_index(int k) const;
  // Index k with omega(k) * s_i * omega(k)^{-1} = s_{omega_perm(k)[i]}.
  const std::vector<int>& omega_perm(int k) const;

  WeylElt multiply(const WeylElt& x, const WeylElt& y) const;
  WeylElt inverse(const WeylElt& x) const;
  int length(const WeylElt& x) const;
  std::uint32_t descents(const WeylElt& x, Side side) const;
  bool is_descent(const WeylElt& x, int i, Side side) const;
  int first_descent(const WeylElt& x, Side side) const;  // -1 if none
  bool bruhat_leq(const WeylElt& x, const WeylElt& y) const;

  // Lexicographically smallest reduced word of x = s_{i1}...s_{ik} * omega.
  std::vector<int> reduced_word(const WeylElt& x) const;
  int omega_index(const WeylElt& x) const;
  WeylElt from_word(const std::vector<int>& word, int omega_index = 0) const;
  bool is_reduced(const std::vector<int>& word) const;

  // All elements of length <= radius in canonical order: by length, then
  // reduced word lexicographically, then Omega index.
  std::vector<WeylElt> ball(int radius) const;
  bool canonical_less(const WeylElt& x, const WeylElt& y) const;

  std::string to_string(const WeylElt& x) const;
  WeylElt parse(std::string_view text) const;

  void check_member(const WeylElt& x) const;

 private:
  explicit WeylGroup(const AffineRootDatum& datum);
  void build_finite();
  void build_omega();
  Exponent act(int u, const Exponent& mu) const;

  const AffineRootDatum* datum_;
  std::vector<IntMatrix> finite_;              // matrices on coweight coordinates
  std::vector<std::vector<int>> finite_mult_;  // finite_mult_[a][b] = index of ab
  std::vector<int> finite_inv_;
  std::vector<std::vector<char>> positive_after_;  // [u][root]: u^{-1} alpha > 0
  std::vector<int> simple_index_;                  // finite index of s_1..s_r (position i-1)
  WeylElt s0_;
  std::vector<WeylElt> omegas_;                    // by node image of s_0
  std::vector<std::vector<int>> omega_perms_;
};

}  // namespace ahl
