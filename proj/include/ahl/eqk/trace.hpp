#pragma once

#include "ahl/eqk/specialization.hpp"

#include <random>

namespace ahl {

struct TraceOfClass {
  TorusRingElt via_action;    // trace of F acting on K_T(X) in the module basis
  TorusRingElt via_diagonal;  // pushforward of F (x) O_Delta
  BigInt action_value;        // both evaluated at the identity of the torus
  BigInt diagonal_value;
  bool equal() const { return via_action == via_diagonal && action_value == diagonal_value; }
};

TraceOfClass trace_of_class(const EqKClass& f);

// c(F)(s, g^k): trace of g^k o F on K(X^s).
CyclotomicValue trace_at(const EqKClass& f, const Specialization& sp, int k);

struct TraceValue {
  std::string point;
  int gamma = 0;
  CyclotomicValue value;
};
std::vector<TraceValue> trace_map_c(const EqKClass& f, const std::vector<SemisimplePoint>& points);

// <chi_j, c(F)(s, .)> over Gamma^s.
CyclotomicValue character_pairing(const EqKClass& f, const Specialization& sp, int j);
// Trace of F on the chi_j-isotypic subspace of K(X^s), from an explicit basis of it.
CyclotomicValue isotypic_trace(const EqKClass& f, const Specialization& sp, int j);

struct Admissibility {
  bool admissible = true;
  std::vector<std::string> issues;
};
// Pairings with characters are integers and vanish off the characters occurring in K(X^s).
Admissibility check_admissible(const EqKClass& f, const Specialization& sp);

struct NamedClass {
  std::string name;
  EqKClass cls;
};

// Random R(T)-combination of the product basis of K_T(X x X).
EqKClass random_class(std::shared_ptr<const GKMSpace> space, std::mt19937_64& rng);
// Symmetrization of random_class over the registered symmetries.
EqKClass random_invariant_class(std::shared_ptr<const GKMSpace> space, std::mt19937_64& rng);
// Classes of honest equivariant sheaves on X x X (line bundles on factors and
// on the diagonal, twisted by representations), all symmetry-invariant. On a
// point these are multiples of the structure sheaf.
std::vector<NamedClass> effective_classes(std::shared_ptr<const GKMSpace> space);

}  // namespace ahl
