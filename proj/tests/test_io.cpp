#include "ahl/io/json_io.hpp"
#include "ahl/error.hpp"
#include "ahl/workbench.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace ahl;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("ahl_io_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("laurent json") {
  const LaurentPoly p = LaurentPoly::monomial(1, -1) + LaurentPoly::monomial(1, 1);
  CHECK(to_json(p).dump() == R"({"-1":"1","1":"1"})");
  CHECK(laurent_from_json(to_json(p)) == p);
  const LaurentPoly q = LaurentPoly(1) + LaurentPoly::monomial(3, 2);
  CHECK(q_poly_to_json(q).dump() == R"({"0":"1","1":"3"})");
  CHECK(q_poly_from_json(q_poly_to_json(q)) == q);
  CHECK_THROWS_AS(q_poly_to_json(LaurentPoly::monomial(1, 1)), Error);
  CHECK_THROWS_AS(laurent_from_json(Json::parse(R"({"x":"1"})")), Error);
}

TEST_CASE("element json") {
  const WeylGroup& g = WeylGroup::get("A1~ext");
  for (const auto& w : g.ball(4)) CHECK(element_from_json(g, element_to_json(g, w)) == w);
  CHECK(element_to_json(g, g.parse("s0w1")).dump() == R"({"word":[0],"omega":1})");
  CHECK_THROWS_AS(element_from_json(g, Json::parse(R"({"word":[1,1],"omega":0})")), Error);
  CHECK_THROWS_AS(element_from_json(g, Json::parse(R"({"word":[2],"omega":0})")), Error);
  CHECK_THROWS_AS(element_from_json(g, Json::parse(R"({"word":[],"omega":5})")), Error);
}

TEST_CASE("kl table round trip") {
  for (const char* label : {"A1~", "A2~ext"}) {
    const auto t = KLTable::compute(WeylGroup::get(label), 4);
    const Json j = kl_table_to_json(*t);
    CHECK(j["format"] == "kltable/v1");
    const auto back = kl_table_from_json(j);
    CHECK(back->agrees_with(*t));
    CHECK(back->radius() == t->radius());
    CHECK(dump(kl_table_to_json(*back)) == dump(j));
  }
}

TEST_CASE("corrupt tables are refused") {
  const auto t = KLTable::compute(WeylGroup::get("A1~"), 3);
  Json j = kl_table_to_json(*t);
  Json bad = j;
  bad["format"] = "kltable/v0";
  CHECK_THROWS_WITH_AS(kl_table_from_json(bad), doctest::Contains("corrupt cache"), Error);
  bad = j;
  bad["entries"][0]["P"] = Json::parse(R"({"0":"2"})");
  CHECK_THROWS_WITH_AS(kl_table_from_json(bad), doctest::Contains("corrupt cache"), Error);
  bad = j;
  bad["entries"].erase(bad["entries"].size() - 1);
  CHECK_THROWS_WITH_AS(kl_table_from_json(bad), doctest::Contains("corrupt cache"), Error);
  bad = j;
  bad["datum"] = "B7~";
  CHECK_THROWS_WITH_AS(kl_table_from_json(bad), doctest::Contains("corrupt cache"), Error);
}

TEST_CASE("cache files") {
  const fs::path dir = fresh_dir("cache");
  const WeylGroup& g = WeylGroup::get("A1~");
  const auto first = load_or_build_table(g, 5, dir, 1, true);
  CHECK_FALSE(first.loaded);
  REQUIRE(first.written);
  CHECK(first.written->filename() == "kl_A1~_r5.json");
  const auto second = load_or_build_table(g, 5, dir, 1, true);
  CHECK(second.loaded);
  CHECK(second.table->agrees_with(*first.table));
  const auto third = load_or_build_table(g, 7, dir, 1, true);
  CHECK(third.validated == std::vector<int>{5});

  std::ofstream(dir / "kl_A1~_r5.json") << "{\"format\":\"kltable/v1\"";
  CHECK_THROWS_WITH_AS(load_or_build_table(g, 5, dir, 1, true), doctest::Contains("refusing to rebuild"), Error);
  CHECK_THROWS_WITH_AS(load_or_build_table(g, 7, dir, 1, true), doctest::Contains("corrupt cache"), Error);
  fs::remove_all(dir);
}

TEST_CASE("cells and gamma json") {
  const auto wb = Workbench::build("A1~", 8);
  const Json c = cells_to_json(*wb.cells, CellSide::TwoSided);
  CHECK(c["side"] == "LR");
  REQUIRE(c["cells"].size() == 2);
  CHECK(c["cells"][0]["a"]["value"] == 0);
  CHECK(c["cells"][1]["a"]["value"] == 1);
  CHECK(c["cells"][1]["a"]["certificate"] == "exact");
  CHECK(c["order"].size() == 1);
  const Json l = cells_to_json(*wb.cells, CellSide::Left);
  CHECK(l["cells"].size() == 3);
  const Json r = report_to_json(verify_identity("unit", *wb.jring));
  CHECK(r["identity"] == "unit");
  CHECK(r["passed"] == true);
}
