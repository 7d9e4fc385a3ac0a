// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
#include "ahl/eqk/curve_model.hpp"
#include "ahl/eqk/specialization.hpp"
#include "ahl/eqk/trace.hpp"
#include "ahl/workbench.hpp"
#include "commands.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace ahl;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void run(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && s > limit_s) {
    o.pass = false;
    o.detail += " (over time limit)";
  }
  if (!o.pass) ++failures;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " [" << buf << "] " << o.detail
            << std::endl;
}

Outcome kl_engine() {
  const WeylGroup& g = WeylGroup::get("A1~");
  const auto t = KLTable::compute(g, 12);
  oracle::KLOracle o(g, 12);
  long long compared = 0, comparable = 0;
  for (int x = 0; x < o.size(); ++x) {
    for (int y = 0; y < o.size(); ++y) {
      const LaurentPoly p = t->P(o.element(x), o.element(y));
      if (p != oracle::to_v(o.P(x, y))) return {false, "mismatch at " + g.to_string(o.element(x)) + ", " + g.to_string(o.element(y))};
      if (oracle::subword_leq(g, o.element(x), o.element(y))) {
        ++comparable;
        if (p != LaurentPoly(1)) return {false, "P != 1 at " + g.to_string(o.element(x)) + ", " + g.to_string(o.element(y))};
      }
      ++compared;
    }
  }
  return {true, std::to_string(compared) + " pairs vs oracle, " + std::to_string(comparable) + " with x<=y all 1"};
}

Outcome bar_invariance() {
  long long n = 0;
  for (const char* label : {"A1~", "A1~ext"}) {
    HeckeAlgebra h(KLTable::compute(WeylGroup::get(label), 10));
    for (const auto& w : h.table().elements()) {
      if (!(h.bar(h.c_basis(w)) == h.c_basis(w))) return {false, std::string(label) + " " + h.group().to_string(w)};
      ++n;
    }
  }
  return {true, std::to_string(n) + " canonical basis elements"};
}

std::string report_line(const IdentityReport& r) {
  return r.identity + " " + std::to_string(r.checked) + "/" + std::to_string(r.skipped) + "/" + std::to_string(r.failed.size());
}

Outcome phi_hom() {
  const auto wb = Workbench::build("A1~", 10);
  const IdentityReport r = verify_identity("phi_hom", *wb.jring, 4);
  return {r.passed(), "checked/skipped/failed " + report_line(r)};
}

Outcome identity_suite() {
  std::ostringstream d;
  bool ok = true;
  for (const char* label : {"A1~", "A1~ext"}) {
    const auto wb = Workbench::build(label, 10);
    d << label << ":";
    for (const char* name : {"leading_term_product", "phi_cell_from_d", "phi_times_t", "module", "j_assoc", "unit"}) {
      const IdentityReport r = verify_identity(name, *wb.jring, 4);
      ok = ok && r.passed();
      d << " " << report_line(r);
    }
    d << "; ";
  }
  return {ok, d.str()};
}

Outcome theorem_a_regular() {
  const Json r = cli::suite_theorem_a_regular(6);
  const Json& m = r["checks"][1]["detail"]["matching"];
  return {r["passed"].get<bool>(), "cell " + r["cell"].dump() + " matching " + m.dump()};
}

Outcome lowest_cell_fiber() {
  const auto x = register_example("pgl2-lowest");
  const auto s = registered_point(*x, "order2");
  const FiberResult f = fiber_at(x, s);
  const auto irr = irreducibles_at(x, s);
  const bool ok = f.dimension == 4 && irr.size() == 2 && irr[0].dimension == 1 && irr[1].dimension == 1;
  std::string rhos;
  for (const auto& m : irr) rhos += " " + m.rho + ":" + std::to_string(m.dimension);
  return {ok, "fiber dim " + std::to_string(f.dimension) + ", irreducibles" + rhos};
}

Outcome subregular() {
  const CurveModel& m = curve_model("sl3-subregular");
  if (!(m.apply_xi(identity_matrix_fixed(m.num_fixed())) == m.o_gamma())) return {false, "Xi(Delta_* O) != O_Gamma"};
  int mismatched = 0;
  for (int k1 = -3; k1 <= 3; ++k1) {
    for (int k2 = -3; k2 <= 3; ++k2) {
      const bool agrees = twist_mismatch_check(k1, k2);
      if (agrees != (k1 == 0 && k2 == 0)) return {false, "twist check wrong at " + std::to_string(k1) + "," + std::to_string(k2)};
      mismatched += agrees ? 0 : 1;
    }
  }
  return {true, "Xi(Delta_* O) = O_Gamma; check false on " + std::to_string(mismatched) + "/49 twists"};
}

Outcome trace_suite() {
  const Json r = cli::suite_eqk_traces("pgl2-lowest", 20240601, 20);
  std::string d;
  for (const auto& c : r["checks"]) d += c["check"].get<std::string>() + (c["passed"].get<bool>() ? " ok; " : " FAILED; ");
  const auto effective = effective_classes(register_example("pgl2-lowest"));
  return {r["passed"].get<bool>() && effective.size() >= 10, d + std::to_string(effective.size()) + " effective classes"};
}

Outcome distinguished() {
  const auto wb = Workbench::build("A1~", 8);
  const CellStructure& cs = *wb.cells;
  std::set<std::string> names;
  for (const auto& d : cs.distinguished()) names.insert(wb.group->to_string(d));
  if (names != std::set<std::string>{"e", "s0", "s1"}) return {false, "unexpected D"};
  const CellPartition& left = cs.left();
  int certified = 0;
  for (int c = 0; c < left.num_cells(); ++c) {
    if (!left.cell_certified(c)) continue;
    ++certified;
    int count = 0;
    for (const auto& d : cs.distinguished()) count += left.cell_of(d) == c ? 1 : 0;
    if (count != 1) return {false, "left cell " + std::to_string(c) + " holds " + std::to_string(count)};
  }
  return {true, "D = {e, s0, s1}; " + std::to_string(certified) + " certified left cells, one each"};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism() {
  const fs::path dir = fs::temp_directory_path() / "ahl_acceptance_determinism";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"kl12", "kl --datum A1~ --radius 12"},
      {"kl0", "kl --datum A1~ --radius 0"},
      {"kl_a2", "kl --datum A2~ --radius 5"},
      {"cells", "cells --datum A1~ --radius 8"},
      {"cells_a2", "cells --datum A2~ --radius 6 --side LR"},
      {"gamma", "gamma --datum A1~ --radius 8"},
      {"phi", "phi --datum A1~ --w s1"},
      {"verify_j", "verify --suite j-identities --datum A1~ --radius 10 --jobs 4"},
      {"verify_eqk", "verify --suite eqk-traces --example pgl2-lowest"},
      {"verify_a", "verify --suite theorem-a-regular"},
      {"demo", "eqk demo --example pgl2-lowest --at order2"},
      {"demo_sl3", "eqk demo --example sl3-subregular"},
      {"trace", "trace --example pgl2-lowest"},
  };
  std::string detail;
  for (int round = 0; round < 2; ++round) {
    for (const auto& [name, args] : commands) {
      const fs::path out = dir / (name + "_" + std::to_string(round) + ".json");
      const std::string cmd = std::string(AHL_CLI_PATH) + " " + args + " --cache-dir " + (dir / "cache").string() +
                              " --out " + out.string() + " 2>/dev/null";
      if (std::system(cmd.c_str()) != 0) return {false, "command failed: " + args};
    }
    if (round == 0) {
      fs::copy_file(dir / "cache" / "kl_A1~_r12.json", dir / "cache_first_r12.json");
    }
  }
  for (const auto& [name, args] : commands) {
    if (slurp(dir / (name + "_0.json")) != slurp(dir / (name + "_1.json"))) return {false, "output differs: " + args};
  }
  // The cache file is rebuilt from scratch and compared too.
  fs::remove(dir / "cache" / "kl_A1~_r12.json");
  const std::string cmd = std::string(AHL_CLI_PATH) + " kl --datum A1~ --radius 12 --cache-dir " + (dir / "cache").string() +
                          " --out " + (dir / "again.json").string() + " 2>/dev/null";
  if (std::system(cmd.c_str()) != 0) return {false, "rebuild failed"};
  if (slurp(dir / "cache" / "kl_A1~_r12.json") != slurp(dir / "cache_first_r12.json")) return {false, "cache file differs"};
  fs::remove_all(dir);
  return {true, std::to_string(commands.size()) + " commands byte-identical on rerun; cache file identical on rebuild"};
}

}  // namespace

int main() {
  run(1, "KL engine, affine A1 radius 12, all P = 1 vs bar-invariance oracle", 10, kl_engine);
  run(2, "bar(C_w) = C_w, radius 10, A1~ and A1~ext", 30, bar_invariance);
  run(3, "phi(C_x C_y) = phi(C_x) phi(C_y), A1~ radius 10", 60, phi_hom);
  run(4, "identity suite at radius 10", 0, identity_suite);
  run(5, "J on the length-0 cell of PGL2 = R(mu2) table", 1, theorem_a_regular);
  run(6, "pgl2-lowest fiber at diag(1,-1): dim 4, two 1-dim irreducibles", 0, lowest_cell_fiber);
  run(7, "subregular SL3: Xi(Delta_* O) = O_Gamma, twist check on [-3,3]^2", 0, subregular);
  run(8, "trace suite: two oracles, cyclicity, commutators, admissibility", 60, trace_suite);
  run(9, "distinguished involutions of A1~ radius 8", 0, distinguished);
  run(10, "CLI determinism", 0, determinism);
  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}
