#pragma once

#include "ahl/ring/bigint.hpp"

#include <string>
#include <vector>

namespace ahl {

// K-group of coherent sheaves on a connected chain of projective lines with a
// C*-action: a class is determined by its generic rank on each component and
// its Euler characteristic.
struct CurveClass {
  std::vector<BigInt> ranks;
  BigInt chi;
  friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

// Classes on X x X^{C*}, indexed by the fixed point in the second factor.
using CurveCorrespondence = std::vector<CurveClass>;
// Integer matrix on X^{C*} x X^{C*}: c[a][b].
using FixedMatrix = std::vector<std::vector<BigInt>>;

struct CurveModel {
  std::string name;
  std::vector<std::string> components;
  std::vector<std::string> fixed_points;
  // Fixed point attracting an open cell of each component.
  std::vector<int> attractor;
  // The fixed point whose attracting cell is a single point.
  int point_cell = 0;

  int num_fixed() const { return static_cast<int>(fixed_points.size()); }
  // Class of the closure of the attracting cell of a fixed point.
  CurveClass closure_class(int a) const;
  CurveClass skyscraper() const;
  CurveClass component_line_bundle(int component, int k) const;
  // F (x) L where L has degree k_i on component i.
  CurveClass twist(const CurveClass& f, const std::vector<int>& k) const;
  // Associated graded of the attractor filtration: values at fixed points.
  std::vector<BigInt> gr(const CurveClass& f) const;

  // Xi on K(X^{C*}): v -> sum_a v_a [O_{closure of cell a}]
  CurveClass xi(const std::vector<BigInt>& v) const;
  // Xi(c)_b = sum_a c[a][b] [O_{closure of cell a}]
  CurveCorrespondence apply_xi(const FixedMatrix& c) const;
  FixedMatrix xi_inverse(const CurveCorrespondence& f) const;
  // Xi(Delta_* O) = [O_Gamma]
  CurveCorrespondence o_gamma() const;
  // O_{P^1_i x {q_i}}(k_i) summed with the point-cell term.
  CurveCorrespondence twisted_gamma(const std::vector<int>& k) const;
  // phi of the lattice element: Xi^{-1}((O(lambda) boxtimes O) (x) O_Gamma).
  FixedMatrix phi_line_bundle(const std::vector<int>& k) const;
};

// "p1-warmup" and "sl3-subregular".
const CurveModel& curve_model(const std::string& name);

// Is [O_Gamma] equal to the twisted class with degrees (k1, k2)?
bool twist_mismatch_check(int k1, int k2);

struct WarningExample {
  CurveClass xi_of_restriction;  // Xi([O(1)|_0]) = Xi([C_0])
  CurveClass twist_of_xi;        // O(1) (x) Xi([C_0])
  bool differ() const { return !(xi_of_restriction == twist_of_xi); }
};
WarningExample p1_warning_example();

FixedMatrix identity_matrix_fixed(int n);
std::string to_string(const CurveModel& m, const CurveClass& c);

}  // namespace ahl
