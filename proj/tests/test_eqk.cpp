#include "ahl/eqk/curve_model.hpp"
#include "ahl/eqk/specialization.hpp"
#include "ahl/eqk/trace.hpp"
#include "ahl/error.hpp"

#include <doctest.h>

#include <random>

using namespace ahl;

namespace {

bool is_integer(const CyclotomicValue& v, long long n) { return v.is_rational() && v.rational_value() == Rational(n); }

bool same(const std::vector<TraceValue>& a, const std::vector<TraceValue>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].point != b[i].point || a[i].gamma != b[i].gamma || !(a[i].value - b[i].value).is_zero()) return false;
  }
  return true;
}

std::vector<SemisimplePoint> all_points(const GKMSpace& s) {
  std::vector<SemisimplePoint> out;
  for (const auto& n : registered_point_names(s)) out.push_back(registered_point(s, n));
  return out;
}

}  // namespace

TEST_CASE("Euler characteristics of line bundles on P1") {
  const auto x = register_example("pgl2-lowest");
  CHECK(pushforward_point(line_bundle(x, 1)) == TorusRingElt::constant(1, 1) + TorusRingElt::character({-1}));
  CHECK(pushforward_point(structure_sheaf(x)) == TorusRingElt::constant(1, 1));
  for (int k = -4; k <= 4; ++k) {
    // Riemann-Roch: chi(O(k)) = k + 1.
    CHECK(pushforward_point(line_bundle(x, k)).augmentation() == k + 1);
  }
  CHECK(pushforward_point(line_bundle(x, -1)).is_zero());
  CHECK(pushforward_point(skyscraper(x, 0)) == TorusRingElt::constant(1, 1));
}

TEST_CASE("GKM conditions are preserved") {
  const auto x = register_example("pgl2-lowest");
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10; ++i) {
    const EqKClass a = random_class(x, rng), b = random_class(x, rng);
    CHECK_FALSE(gkm_violation(a));
    CHECK_FALSE(gkm_violation(tensor(a, b)));
    CHECK_FALSE(gkm_violation(convolve(a, b)));
    CHECK_FALSE(gkm_violation(pushforward(a, {0})));
    CHECK_FALSE(gkm_violation(pullback(pushforward(a, {1}), 3, {2})));
  }
  EqKClass bad = zero_class(x, 1);
  bad.values[0] = TorusRingElt::constant(1, 1);
  CHECK(gkm_violation(bad).has_value());
  CHECK_THROWS_AS(pushforward(bad, {}), Error);
}

TEST_CASE("convolution algebra") {
  const auto x = register_example("pgl2-lowest");
  std::mt19937_64 rng(5);
  const EqKClass unit = diagonal(x);
  for (int i = 0; i < 8; ++i) {
    const EqKClass a = random_class(x, rng), b = random_class(x, rng), c = random_class(x, rng);
    CHECK(convolve(unit, a) == a);
    CHECK(convolve(a, unit) == a);
    CHECK(convolve(convolve(a, b), c) == convolve(a, convolve(b, c)));
    CHECK(convolve(a, b) == convolve_direct(a, b));
    const EqKClass m = basis_class(x, 1);
    CHECK(act(convolve(a, b), m) == act(a, act(b, m)));
  }
  for (int i = 0; i < 2; ++i) {
    const auto coords = basis_coordinates(basis_class(x, i));
    for (int j = 0; j < 2; ++j) CHECK(coords[static_cast<std::size_t>(j)] == TorusRingElt::constant(1, i == j ? 1 : 0));
  }
}

TEST_CASE("symmetries") {
  const auto x = register_example("pgl2-lowest");
  REQUIRE(x->symmetries.size() == 2);
  const Symmetry& s = x->symmetries[1];
  std::mt19937_64 rng(3);
  const EqKClass a = random_class(x, rng);
  CHECK(apply_symmetry(s, apply_symmetry(s, a)) == a);
  CHECK(is_invariant(diagonal(x)));
  CHECK(is_invariant(random_invariant_class(x, rng)));
  for (const auto& c : effective_classes(x)) CHECK(is_invariant(c.cls));
  CHECK(effective_classes(x).size() >= 10);
}

TEST_CASE("trace of a class by two routes") {
  const auto x = register_example("p1-warmup");
  const TraceOfClass unit = trace_of_class(diagonal(x));
  CHECK(unit.equal());
  CHECK(unit.action_value == 2);
  const EqKClass projector = boxtimes(structure_sheaf(x), skyscraper(x, 0));
  CHECK(convolve(projector, projector) == projector);
  CHECK(trace_of_class(projector).action_value == 1);
  CHECK(trace_of_class(projector).equal());
  const EqKClass nilpotent = boxtimes(skyscraper(x, 0), skyscraper(x, 1));
  CHECK(convolve(nilpotent, nilpotent) == zero_class(x, 2));
  CHECK(trace_of_class(nilpotent).action_value == 0);
  CHECK(trace_of_class(nilpotent).equal());
  std::mt19937_64 rng(99);
  for (int i = 0; i < 20; ++i) CHECK(trace_of_class(random_class(x, rng)).equal());
}

TEST_CASE("character tables") {
  const auto t2 = CyclicGroup(2).character_ring_table();
  CHECK(t2[0][0][0] == 1);
  CHECK(t2[0][1][1] == 1);
  CHECK(t2[1][1][0] == 1);
  CHECK(t2[1][1][1] == 0);
  CHECK(CyclicGroup(2).label(1) == "sign");
  const auto t3 = CyclicGroup(3).character_ring_table();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) CHECK(t3[i][j][k] == ((i + j) % 3 == k ? 1 : 0));
}

TEST_CASE("fibers of the lowest cell") {
  const auto x = register_example("pgl2-lowest");
  for (const auto& s : all_points(*x)) {
    const FiberResult f = fiber_at(x, s);
    CHECK(f.dimension == 4);
    CHECK(f.dimension_projector == 4);
  }
  const auto s = registered_point(*x, "order2");
  CHECK(specialize(x, s).order() == 2);
  const auto irr = irreducibles_at(x, s);
  REQUIRE(irr.size() == 2);
  CHECK(irr[0].dimension == 1);
  CHECK(irr[1].dimension == 1);
  CHECK(irreducibles_at(x, registered_point(*x, "1")).size() == 1);
  CHECK(irreducibles_at(x, registered_point(*x, "order3")).size() == 1);
}

TEST_CASE("fibers of the regular cell") {
  const auto x = register_example("sl2-regular");
  int total = 0;
  for (const auto& s : all_points(*x)) {
    const FiberResult f = fiber_at(x, s);
    CHECK(f.dimension == 1);
    CHECK(f.dimension_projector == f.dimension);
    CHECK(specialize(x, s).order() == 2);
    total += f.dimension;
  }
  CHECK(total == 2);
}

TEST_CASE("trace map c") {
  const auto x = register_example("pgl2-lowest");
  const auto points = all_points(*x);
  const auto unit = trace_map_c(diagonal(x), points);
  for (const auto& tv : unit) {
    const bool swap = tv.point == "order2" && tv.gamma == 1;
    CHECK(is_integer(tv.value, swap ? 0 : 2));
  }
  std::mt19937_64 rng(17);
  for (int i = 0; i < 20; ++i) {
    const EqKClass a = random_invariant_class(x, rng), b = random_invariant_class(x, rng);
    CHECK(same(trace_map_c(convolve(a, b), points), trace_map_c(convolve(b, a), points)));
    for (const auto& tv : trace_map_c(convolve(a, b) - convolve(b, a), points)) CHECK(tv.value.is_zero());
  }
}

TEST_CASE("admissibility of effective classes") {
  const auto x = register_example("pgl2-lowest");
  for (const auto& c : effective_classes(x)) {
    for (const auto& s : all_points(*x)) {
      const Specialization sp = specialize(x, s);
      INFO(c.name << " at " << s.name);
      CHECK(check_admissible(c.cls, sp).admissible);
      for (int j = 0; j < sp.order(); ++j) CHECK((character_pairing(c.cls, sp, j) - isotypic_trace(c.cls, sp, j)).is_zero());
    }
  }
  std::mt19937_64 rng(23);
  const Specialization sp = specialize(x, registered_point(*x, "order2"));
  EqKClass a = random_class(x, rng);
  while (is_invariant(a)) a = random_class(x, rng);
  CHECK_THROWS_AS(check_admissible(a, sp), Error);
}

TEST_CASE("subregular SL3 attractor splitting") {
  const CurveModel& m = curve_model("sl3-subregular");
  CHECK(m.apply_xi(identity_matrix_fixed(m.num_fixed())) == m.o_gamma());
  for (int k1 = -3; k1 <= 3; ++k1) {
    for (int k2 = -3; k2 <= 3; ++k2) CHECK(twist_mismatch_check(k1, k2) == (k1 == 0 && k2 == 0));
  }
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int i = 0; i < 20; ++i) {
    FixedMatrix c(3, std::vector<BigInt>(3));
    for (auto& row : c)
      for (auto& e : row) e = d(rng);
    CHECK(m.xi_inverse(m.apply_xi(c)) == c);
    std::vector<BigInt> v = {d(rng), d(rng), d(rng)};
    CHECK(m.gr(m.xi(v)) == v);
  }
  // phi restricted to the lattice is multiplicative.
  const auto mul = [](const FixedMatrix& a, const FixedMatrix& b) {
    FixedMatrix c(a.size(), std::vector<BigInt>(a.size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j)
        for (std::size_t k = 0; k < a.size(); ++k) c[i][k] += a[i][j] * b[j][k];
    return c;
  };
  CHECK(m.phi_line_bundle({0, 0}) == identity_matrix_fixed(3));
  CHECK(mul(m.phi_line_bundle({1, 2}), m.phi_line_bundle({-3, 1})) == m.phi_line_bundle({-2, 3}));
  CHECK_FALSE(m.phi_line_bundle({1, 2}) == identity_matrix_fixed(3));
}

TEST_CASE("restriction and twisting do not commute on P1") {
  const auto w = p1_warning_example();
  CHECK(w.differ());
  CHECK(w.xi_of_restriction.chi == 1);
  CHECK(w.twist_of_xi.chi == 2);
}
