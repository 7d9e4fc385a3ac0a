#pragma once

#include "ahl/ring/torus_ring.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ahl {

// Finite root datum data for an affine Weyl group W_f x Lambda. Coweights are
// written in fundamental-coweight coordinates, so <lambda, alpha_i> = lambda_i;
// roots are written in simple-root coordinates.
struct AffineRootDatum {
  std::string label;
  int id = 0;
  int rank = 0;
  IntMatrix cartan;         // cartan[i][j] = <alpha_i^vee, alpha_j>
  bool adjoint = false;     // Lambda = coweight lattice (true) or coroot lattice (false)
  IntMatrix lattice_basis;  // basis of Lambda, one row per vector
  std::vector<Exponent> positive_roots;
  std::vector<Exponent> positive_coroots;  // matching positive_roots
  Exponent highest_root;
  Exponent highest_coroot;
  std::string group_name;       // G
  std::string dual_group_name;  // G^vee

  int pairing(const Exponent& coweight, const Exponent& root) const;
  bool in_lattice(const Exponent& coweight) const;
  // Simple coroot alpha_i^vee as a coweight.
  Exponent simple_coroot(int i) const { return cartan[static_cast<std::size_t>(i)]; }
};

// Registered labels: "A1~", "A1~ext", "A2~", "A2~ext".
const AffineRootDatum& registered_datum(std::string_view label);
const AffineRootDatum& registered_datum(int id);
std::vector<std::string> registered_datum_labels();

}  // namespace ahl
