#include "ahl/workbench.hpp"

#include <doctest.h>

using namespace ahl;

namespace {

const LaurentPoly v = LaurentPoly::monomial(1, 1);
const LaurentPoly vi = LaurentPoly::monomial(1, -1);

}  // namespace

TEST_CASE("phi on affine A1") {
  const auto wb = Workbench::build("A1~", 8);
  const WeylGroup& g = *wb.group;
  const JRing& j = *wb.jring;
  JElt expected;
  expected.add(g.parse("s1"), v + vi);
  expected.add(g.parse("s1s0"), 1);
  CHECK(j.phi(g.parse("s1")) == expected);
  CHECK(j.phi(g.parse("s1")).to_string(g) == "(v^-1 + v)t[s1] + t[s1s0]");
  JElt unit;
  for (const char* d : {"e", "s0", "s1"}) unit.add(g.parse(d), 1);
  CHECK(j.unit() == unit);
  CHECK(j.phi(g.identity()) == j.unit());
}

TEST_CASE("gamma constants on affine A1") {
  const auto wb = Workbench::build("A1~", 8);
  const WeylGroup& g = *wb.group;
  const JRing& j = *wb.jring;
  const WeylElt s0 = g.parse("s0"), s1 = g.parse("s1");
  CHECK(j.gamma(s1, s1, s1) == 1);
  CHECK(j.gamma(s0, s0, s0) == 1);
  CHECK(j.gamma(s1, s0, s1) == 0);
  CHECK(j.t_product(s1, s0).is_zero());
  CHECK(j.t_product(s1, s1) == JElt::basis_element(s1));
  CHECK(j.certified_gamma_radius() == 4);
  for (const auto& e : j.gamma_table(4)) {
    CHECK(e.gamma > 0);
    // gamma is invariant under cyclic rotation of (x, y, z).
    CHECK(j.gamma(e.y, e.z, e.x) == e.gamma);
  }
}

TEST_CASE("J multiplication properties") {
  const auto wb = Workbench::build("A2~", 8);
  const JRing& j = *wb.jring;
  const WeylGroup& g = *wb.group;
  std::vector<WeylElt> small;
  for (const auto& w : g.ball(2)) {
    if (wb.cells->certified_a(w)) small.push_back(w);
  }
  for (const auto& x : small) {
    const JElt one = j.unit_of_cell(wb.cells->two_sided().cell_of(x));
    const JElt tx = JElt::basis_element(x);
    CHECK(j.multiply(one, tx) == tx);
    CHECK(j.multiply(tx, one) == tx);
    for (const auto& y : small) {
      const JElt p = j.t_product(x, y);
      for (const auto& [z, c] : p.terms()) {
        // t_x t_y only lands in the common two-sided cell.
        CHECK(wb.cells->two_sided().cell_of(z) == wb.cells->two_sided().cell_of(x));
        CHECK(c.min_exponent() == 0);
        CHECK(c.max_exponent() == 0);
      }
    }
  }
}

TEST_CASE("identity suite on small balls") {
  for (const auto& [label, r] : std::vector<std::pair<std::string, int>>{{"A1~", 8}, {"A1~ext", 6}, {"A2~", 6}}) {
    const auto wb = Workbench::build(label, r);
    for (const auto& name : identity_names()) {
      const IdentityReport rep = verify_identity(name, *wb.jring, 2);
      INFO(label << " " << name);
      CHECK(rep.failed.empty());
      CHECK(rep.checked > 0);
    }
  }
}

TEST_CASE("h action restricted to a cell") {
  const auto wb = Workbench::build("A1~", 8);
  const WeylGroup& g = *wb.group;
  const JRing& j = *wb.jring;
  const int low = wb.cells->two_sided().cell_of(g.parse("s1"));
  const JElt t = JElt::basis_element(g.parse("s1"));
  const JElt once = j.h_action(g.parse("s0"), j.h_action(g.parse("s1"), t, low), low);
  const HeckeElt prod = wb.hecke->c_product(g.parse("s0"), g.parse("s1"));
  CHECK(once == j.h_action(prod, t, low));
  CHECK_THROWS_AS(j.h_action(g.parse("s0"), JElt::basis_element(g.identity()), low), Error);
}

TEST_CASE("uncertified gamma is refused") {
  const auto wb = Workbench::build("A1~", 6);
  const WeylGroup& g = *wb.group;
  const WeylElt far = g.parse("s0s1s0s1s0s1");
  CHECK_THROWS_AS(wb.jring->gamma(far, g.parse("s1"), g.parse("s1")), CertificationError);
  CHECK_THROWS_AS(wb.jring->phi(far), CertificationError);
}
