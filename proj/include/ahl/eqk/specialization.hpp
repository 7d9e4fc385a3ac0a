#pragma once

#include "ahl/eqk/gkm.hpp"
#include "ahl/eqk/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ahl {

class CyclicGroup {
 public:
  explicit CyclicGroup(int order);
  int order() const { return n_; }
  // chi_j(g^k) = zeta_n^{jk}
  CyclotomicValue character(int j, int k) const;
  std::string label(int j) const;
  // N[i][j][k] = <chi_i chi_j, chi_k>, computed from the character table.
  std::vector<std::vector<std::vector<BigInt>>> character_ring_table() const;

 private:
  int n_;
};

struct SemisimplePoint {
  std::string name;
  std::vector<CyclotomicValue> coords;
  int conductor = 1;
};

// "1", "order2", "order3"; on the rank-0 example "1" and "order2" are the
// two elements of mu2.
SemisimplePoint registered_point(const GKMSpace& space, const std::string& name);
std::vector<std::string> registered_point_names(const GKMSpace& space);

// Component group Gamma^s = Stab_W(s) / <reflections s_alpha with alpha(s) = 1>,
// which is cyclic for every registered case, and the local ring
// R = C[eps]/(eps^m) of the torus at s over the Gamma-invariants.
struct Specialization {
  std::shared_ptr<const GKMSpace> space;
  SemisimplePoint point;
  CyclicGroup group{1};
  // powers[k] represents g^k for a generator g.
  std::vector<Symmetry> powers;
  int local_dim = 1;
  // Action of g^k on R in the basis 1, eps, ..., eps^{m-1}.
  std::vector<Matrix<Rational>> local_action;
  // X^s is a finite set: no invariant curve has alpha(s) = 1.
  bool discrete = true;

  int order() const { return group.order(); }
  int fixed_points(int k) const;
  Rational local_character(int k) const;
};

Specialization specialize(std::shared_ptr<const GKMSpace> space, const SemisimplePoint& s);

struct FiberResult {
  int dimension = 0;            // fiber formula with the local ring
  int dimension_projector = 0;  // rank of the Gamma-averaging projector on K(Y) (x) R
  std::vector<std::string> basis;
};

// Fiber at s of the convolution algebra K(X x X).
FiberResult fiber_at(std::shared_ptr<const GKMSpace> space, const SemisimplePoint& s);

struct IrreducibleModule {
  std::string rho;
  int character_index = 0;
  int dimension = 0;
};

// Nonzero isotypic pieces of K(X^s) under Gamma^s.
std::vector<IrreducibleModule> irreducibles_at(std::shared_ptr<const GKMSpace> space, const SemisimplePoint& s);

}  // namespace ahl
