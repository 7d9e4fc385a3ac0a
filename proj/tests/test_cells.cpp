#include "ahl/workbench.hpp"

#include <doctest.h>

#include <set>

using namespace ahl;

namespace {

std::set<std::string> names(const WeylGroup& g, const std::vector<WeylElt>& ws) {
  std::set<std::string> out;
  for (const auto& w : ws) out.insert(g.to_string(w));
  return out;
}

// Every certified left cell holds exactly one distinguished involution.
void check_one_d_per_left_cell(const CellStructure& cs) {
  const CellPartition& left = cs.left();
  std::vector<int> count(static_cast<std::size_t>(left.num_cells()), 0);
  for (const auto& d : cs.distinguished()) count[static_cast<std::size_t>(left.cell_of(d))]++;
  for (int c = 0; c < left.num_cells(); ++c) {
    if (left.cell_certified(c)) CHECK(count[static_cast<std::size_t>(c)] == 1);
  }
}

}  // namespace

TEST_CASE("affine A1 cells") {
  const auto wb = Workbench::build("A1~", 8);
  const CellStructure& cs = *wb.cells;
  const WeylGroup& g = *wb.group;
  CHECK(cs.two_sided().num_cells() == 2);
  CHECK(cs.left().num_cells() == 3);
  CHECK(cs.right().num_cells() == 3);
  CHECK(cs.two_sided().members(cs.identity_cell()).size() == 1);
  CHECK(cs.a_value(g.identity()).value == 0);
  CHECK(cs.a_value(g.parse("s1s0s1")).value == 1);
  CHECK(cs.a_value(g.parse("s1s0s1")).certificate == ACertificate::Exact);
  CHECK(names(g, cs.distinguished()) == std::set<std::string>{"e", "s0", "s1"});
  check_one_d_per_left_cell(cs);
  // The lowest cell lies below the identity cell.
  const int low = cs.two_sided().cell_of(g.parse("s0"));
  CHECK(cs.two_sided().leq(low, cs.identity_cell()) != cs.two_sided().leq(cs.identity_cell(), low));
}

TEST_CASE("cell membership is certified only away from the boundary") {
  const auto wb = Workbench::build("A1~", 8);
  const CellStructure& cs = *wb.cells;
  for (int i = 0; i < static_cast<int>(cs.table().size()); ++i) {
    if (cs.table().length(i) <= 6) CHECK(cs.two_sided().certified_index(i));
    if (cs.table().length(i) > 6) CHECK_FALSE(cs.two_sided().certified_index(i));
  }
  CHECK_FALSE(cs.certified_a(wb.group->parse("s0s1s0s1s0s1s0")).has_value());
  CHECK_THROWS_AS(cs.certified_a_or_throw(wb.group->parse("s0s1s0s1s0s1s0"), "test"), CertificationError);
}

TEST_CASE("cells are unions of cells from a smaller ball") {
  const auto big = Workbench::build("A2~", 7);
  const auto small = Workbench::build("A2~", 5);
  const CellPartition& b = big.cells->two_sided();
  const CellPartition& s = small.cells->two_sided();
  for (int x = 0; x < static_cast<int>(small.cells->table().size()); ++x) {
    if (!s.certified_index(x)) continue;
    for (int y = 0; y < static_cast<int>(small.cells->table().size()); ++y) {
      if (!s.certified_index(y)) continue;
      const WeylElt& wx = small.cells->table().element(x);
      const WeylElt& wy = small.cells->table().element(y);
      CHECK((s.cell_of_index(x) == s.cell_of_index(y)) == (b.cell_of(wx) == b.cell_of(wy)));
    }
  }
}

TEST_CASE("affine A2 cells and a-values") {
  const auto wb = Workbench::build("A2~", 8);
  const CellStructure& cs = *wb.cells;
  CHECK(cs.two_sided().num_cells() == 3);
  std::set<int> avals;
  for (int c = 0; c < cs.two_sided().num_cells(); ++c) {
    avals.insert(cs.cell_a(c).value);
    CHECK(cs.cell_a(c).certificate == ACertificate::Exact);
  }
  CHECK(avals == std::set<int>{0, 1, 3});
  CHECK(cs.distinguished().size() == 10);
  check_one_d_per_left_cell(cs);
  for (const auto& d : cs.distinguished()) CHECK(wb.group->multiply(d, d) == wb.group->identity());
}

TEST_CASE("a vanishes exactly on length zero") {
  for (const char* label : {"A1~", "A1~ext", "A2~"}) {
    const auto wb = Workbench::build(label, 7);
    const CellStructure& cs = *wb.cells;
    for (const auto& w : cs.table().elements()) {
      const auto a = cs.certified_a(w);
      if (a) CHECK((*a == 0) == (wb.group->length(w) == 0));
    }
  }
}

TEST_CASE("length-zero elements of the extended group") {
  const auto wb = Workbench::build("A1~ext", 8);
  const CellStructure& cs = *wb.cells;
  const WeylGroup& g = *wb.group;
  const WeylElt w1 = g.omega(1);
  CHECK(cs.two_sided().cell_of(w1) == cs.identity_cell());
  CHECK(cs.two_sided().members(cs.identity_cell()).size() == 2);
  CHECK(cs.left().cell_of(w1) == cs.left().cell_of(g.identity()));
  CHECK_FALSE(cs.is_distinguished(w1));
  CHECK(names(g, cs.distinguished()) == std::set<std::string>{"e", "s0", "s1"});
  const auto& label = cs.cell_label(cs.identity_cell());
  REQUIRE(label.has_value());
  CHECK(label->component_group == "Z/2");
}

TEST_CASE("extended affine A2 lowest cell") {
  const auto wb = Workbench::build("A2~ext", 6);
  const CellStructure& cs = *wb.cells;
  const int low = cs.two_sided().cell_of(wb.group->parse("s0s1s0"));
  CHECK(cs.cell_a(low).value == 3);
}
