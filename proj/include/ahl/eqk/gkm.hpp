#pragma once

#include "ahl/ring/torus_ring.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ahl {

// A symmetry of a GKM space: permutation of fixed points together with the
// induced automorphism of the character lattice.
struct Symmetry {
  std::string name;
  std::vector<int> perm;  // point p goes to perm[p]
  IntMatrix matrix;       // acts on exponents
  // Root character when the symmetry is a reflection of the Weyl group.
  std::optional<Exponent> reflection_root;
  // Component in a central cyclic group acting trivially on X (Z/central_order).
  int central = 0;
  int central_order = 1;
};

struct GKMEdge {
  int p, q;
  Exponent alpha;  // tangent character at p; -alpha at q
};

struct GKMSpace {
  std::string name;
  int rank = 0;
  std::vector<std::string> points;
  std::vector<GKMEdge> edges;
  std::vector<std::vector<Exponent>> tangent;
  bool smooth = true;
  // Weyl group of the reductive symmetry (E3) or the finite component group.
  std::vector<Symmetry> symmetries;
  std::string component_group;
  // Fiber characters of the degree-one line bundle, when the space carries one.
  std::optional<std::vector<Exponent>> o1;
  // Free R(T)-basis of K_T(X), triangular in point order: basis[i] vanishes
  // at the points before i.
  std::vector<std::vector<TorusRingElt>> module_basis;

  int num_points() const { return static_cast<int>(points.size()); }
  int point_index(const std::string& label) const;
  // prod over tangent characters chi of (1 - e^{-chi})
  TorusRingElt lambda(int p) const;
  TorusRingElt one() const { return TorusRingElt::constant(rank, 1); }
};

// "sl2-regular", "pgl2-lowest", "sl3-subregular", "p1-warmup".
std::shared_ptr<const GKMSpace> register_example(const std::string& name);
const std::vector<std::string>& example_names();

// A K_T-class on X^factors as values at the fixed-point tuples, flattened
// with the first factor most significant.
struct EqKClass {
  std::shared_ptr<const GKMSpace> space;
  int factors = 1;
  std::vector<TorusRingElt> values;

  int size() const { return static_cast<int>(values.size()); }
  std::vector<int> tuple(int flat) const;
  int flat(const std::vector<int>& tuple) const;
  const TorusRingElt& at(const std::vector<int>& t) const { return values[static_cast<std::size_t>(flat(t))]; }
  friend bool operator==(const EqKClass& a, const EqKClass& b) {
    return a.space == b.space && a.factors == b.factors && a.values == b.values;
  }
};

EqKClass zero_class(std::shared_ptr<const GKMSpace> space, int factors);
EqKClass structure_sheaf(std::shared_ptr<const GKMSpace> space, int factors = 1);
EqKClass skyscraper(std::shared_ptr<const GKMSpace> space, int point);
// O(k) from the registered degree-one line bundle.
EqKClass line_bundle(std::shared_ptr<const GKMSpace> space, int k);
EqKClass diagonal(std::shared_ptr<const GKMSpace> space);
// O_Delta twisted by O(k).
EqKClass diagonal_twisted(std::shared_ptr<const GKMSpace> space, int k);

EqKClass operator+(const EqKClass& a, const EqKClass& b);
EqKClass operator-(const EqKClass& a, const EqKClass& b);
EqKClass scale(const EqKClass& a, const TorusRingElt& c);
EqKClass tensor(const EqKClass& a, const EqKClass& b);
EqKClass boxtimes(const EqKClass& a, const EqKClass& b);
// Pullback along X^n -> X^{|keep|}, t -> (t[keep[0]], t[keep[1]], ...).
EqKClass pullback(const EqKClass& a, int n, const std::vector<int>& keep);
// Pushforward along the projection keeping the listed factors.
// Throws Error("non-GKM class") when the localized sum is not a ring element.
EqKClass pushforward(const EqKClass& a, const std::vector<int>& keep);
TorusRingElt pushforward_point(const EqKClass& a);

// Q * R = p13_*(p12^* Q (x) p23^* R)
EqKClass convolve(const EqKClass& a, const EqKClass& b);
// (Q * R)(p, r) = sum_q Q(p, q) R(q, r) / lambda_q, as an independent route.
EqKClass convolve_direct(const EqKClass& a, const EqKClass& b);
// F acting on K_T(X): p1_*(F (x) p2^* m).
EqKClass act(const EqKClass& f, const EqKClass& m);

// Empty when the GKM divisibility condition holds on every edge of X^n.
std::optional<std::string> gkm_violation(const EqKClass& a);
void require_gkm(const EqKClass& a);

// g . F, with (g.F)(g t) = g(F(t)).
EqKClass apply_symmetry(const Symmetry& g, const EqKClass& a);
bool is_invariant(const EqKClass& a);
// Coordinates of a class on X in the registered module basis.
std::vector<TorusRingElt> basis_coordinates(const EqKClass& m);
EqKClass basis_class(std::shared_ptr<const GKMSpace> space, int i);

std::string to_string(const EqKClass& a);

}  // namespace ahl
