#include "commands.hpp"

#include "ahl/eqk/curve_model.hpp"
#include "ahl/eqk/specialization.hpp"
#include "ahl/eqk/trace.hpp"
#include "ahl/error.hpp"
#include "ahl/workbench.hpp"

#include <algorithm>
#include <iostream>
#include <numeric>
#include <random>

namespace ahl::cli {

namespace {

int radius_or(const RunConfig& cfg, int fallback) {
  if (cfg.radius < -1) throw Error("radius must be non-negative");
  return cfg.radius >= 0 ? cfg.radius : fallback;
}

Workbench bench(const RunConfig& cfg, int fallback_radius) {
  return Workbench::build(cfg.datum, radius_or(cfg, fallback_radius), cfg.cache_dir, cfg.jobs, false);
}

void add_check(Json& checks, const std::string& name, Json inputs, bool passed, Json detail = nullptr) {
  Json c = {{"check", name}, {"inputs", std::move(inputs)}, {"passed", passed}};
  if (!detail.is_null()) c["detail"] = std::move(detail);
  checks.push_back(std::move(c));
}

bool all_passed(const Json& checks) {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Json& c) { return c.at("passed").get<bool>(); });
}

CellSide parse_side(const std::string& s) {
  if (s == "L") return CellSide::Left;
  if (s == "R") return CellSide::Right;
  if (s == "LR") return CellSide::TwoSided;
  throw Error("unknown side '" + s + "' (expected L, R, LR or all)");
}

bool equals_integer(const CyclotomicValue& v, long long n) {
  return v.is_rational() && v.rational_value() == Rational(n);
}

std::vector<SemisimplePoint> points_of(const GKMSpace& space, const std::string& at) {
  std::vector<SemisimplePoint> out;
  for (const auto& name : registered_point_names(space)) {
    if (at.empty() || at == name) out.push_back(registered_point(space, name));
  }
  if (out.empty()) throw Error("unknown point '" + at + "' for " + space.name);
  return out;
}

Json trace_values_json(const std::vector<TraceValue>& values) {
  Json out = Json::array();
  for (const auto& tv : values) out.push_back({{"point", tv.point}, {"gamma", tv.gamma}, {"value", tv.value.to_string()}});
  return out;
}

bool same_values(const std::vector<TraceValue>& a, const std::vector<TraceValue>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].point != b[i].point || a[i].gamma != b[i].gamma || !(a[i].value - b[i].value).is_zero()) return false;
  }
  return true;
}

Json space_json(const GKMSpace& s) {
  Json edges = Json::array();
  for (const auto& e : s.edges) edges.push_back({{"p", s.points[static_cast<std::size_t>(e.p)]}, {"q", s.points[static_cast<std::size_t>(e.q)]}, {"alpha", e.alpha}});
  Json syms = Json::array();
  for (const auto& g : s.symmetries) syms.push_back(g.name);
  Json basis = Json::array();
  for (const auto& b : s.module_basis) {
    Json vals = Json::array();
    for (const auto& v : b) vals.push_back(v.to_string());
    basis.push_back(vals);
  }
  return {{"name", s.name}, {"rank", s.rank}, {"points", s.points}, {"edges", edges}, {"smooth", s.smooth},
          {"component_group", s.component_group}, {"symmetries", syms}, {"module_basis", basis}};
}

Json curve_checks(const std::string& name) {
  Json checks = Json::array();
  const CurveModel& m = curve_model(name);
  const int n = m.num_fixed();
  bool gr_ok = true;
  for (int a = 0; a < n; ++a) {
    std::vector<BigInt> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(a)] = 1;
    gr_ok = gr_ok && m.gr(m.xi(e)) == e;
  }
  add_check(checks, "gr_after_xi_is_identity", {{"model", name}}, gr_ok);
  const auto xi_delta = m.apply_xi(identity_matrix_fixed(n));
  Json shown = Json::array();
  for (const auto& c : xi_delta) shown.push_back(to_string(m, c));
  add_check(checks, "xi_of_diagonal_is_o_gamma", {{"model", name}}, xi_delta == m.o_gamma(), shown);
  if (name == "sl3-subregular") {
    Json bad = Json::array();
    for (int k1 = -3; k1 <= 3; ++k1) {
      for (int k2 = -3; k2 <= 3; ++k2) {
        if (twist_mismatch_check(k1, k2) != (k1 == 0 && k2 == 0)) bad.push_back({k1, k2});
      }
    }
    add_check(checks, "twist_mismatch", {{"k_range", {-3, 3}}}, bad.empty(), {{"violations", bad}});
  }
  if (name == "p1-warmup") {
    const auto w = p1_warning_example();
    add_check(checks, "restriction_does_not_commute_with_twist", {{"model", name}}, w.differ(),
              {{"xi_of_restriction", to_string(m, w.xi_of_restriction)}, {"twist_of_xi", to_string(m, w.twist_of_xi)}});
  }
  return checks;
}

}  // namespace

CommandResult cmd_kl(const RunConfig& cfg) {
  const WeylGroup& g = WeylGroup::get(cfg.datum);
  const int radius = radius_or(cfg, 8);
  const TableSource src = load_or_build_table(g, radius, cfg.cache_dir, cfg.jobs, true);
  std::cerr << (src.loaded ? "loaded cached table" : "computed table");
  for (int r : src.validated) std::cerr << "; agrees with cached radius " << r;
  std::cerr << "\n";
  const KLTable& t = *src.table;
  bool all_one = true;
  for (int y = 0; y < static_cast<int>(t.size()); ++y) {
    for (const auto& e : t.row(y)) all_one = all_one && e.p == LaurentPoly(1);
  }
  Json out = {{"command", "kl"}, {"datum", g.label()}, {"radius", radius}, {"layers", radius + 1},
              {"elements", t.size()}, {"entries", t.entry_count()}, {"max_q_degree", t.max_q_degree()},
              {"all_p_one", all_one}};
  if (cfg.cache_dir) {
    out["cache_file"] = (*cfg.cache_dir / cache_file_name(g.label(), radius)).string();
  } else {
    out["cache_file"] = nullptr;
  }
  return {out, 0};
}

CommandResult cmd_cells(const RunConfig& cfg) {
  const Workbench wb = bench(cfg, 8);
  const CellStructure& cs = *wb.cells;
  Json out = {{"command", "cells"}, {"datum", wb.group->label()}, {"radius", cs.table().radius()}};
  int code = 0;
  if (cfg.side == "all") {
    out["two_sided"] = cells_to_json(cs, CellSide::TwoSided);
    out["left"] = cells_to_json(cs, CellSide::Left);
    out["right"] = cells_to_json(cs, CellSide::Right);
    if (out["two_sided"].contains("distinguished_error")) code = 2;
  } else {
    out["cells"] = cells_to_json(cs, parse_side(cfg.side));
    if (out["cells"].contains("distinguished_error")) code = 2;
  }
  if (!cfg.w.empty()) {
    const WeylElt w = wb.group->parse(cfg.w);
    const int idx = cs.table().index_of(w);
    Json el = {{"name", wb.group->to_string(w)}, {"in_ball", idx >= 0}};
    if (idx >= 0) {
      el["two_sided_cell"] = cs.two_sided().cell_of_index(idx);
      el["left_cell"] = cs.left().cell_of_index(idx);
      el["right_cell"] = cs.right().cell_of_index(idx);
      el["certified"] = cs.two_sided().certified_index(idx);
      const auto a = cs.certified_a(w);
      el["a"] = a ? Json(*a) : Json(nullptr);
      if (!a) {
        el["certificate_gap"] = "membership or a-value of " + wb.group->to_string(w) + " not certified at radius " +
                                std::to_string(cs.table().radius());
        code = 2;
      }
    } else {
      el["certificate_gap"] = "uncached radius: length " + std::to_string(wb.group->length(w));
      code = 2;
    }
    out["element"] = el;
  }
  return {out, code};
}

CommandResult cmd_gamma(const RunConfig& cfg) {
  const Workbench wb = bench(cfg, 8);
  const JRing& j = *wb.jring;
  const int r = j.certified_gamma_radius();
  Json out = {{"command", "gamma"}, {"datum", wb.group->label()}, {"radius", j.table().radius()}, {"certified_radius", r}};
  if (r < 0) {
    out["certificate_gap"] = "no certified sub-ball";
    out["entries"] = Json::array();
    return {out, 2};
  }
  Json entries = Json::array();
  for (const auto& e : j.gamma_table(r)) {
    entries.push_back({{"x", wb.group->to_string(e.x)}, {"y", wb.group->to_string(e.y)}, {"z", wb.group->to_string(e.z)},
                       {"gamma", e.gamma.str()}});
  }
  out["entries"] = entries;
  return {out, 0};
}

CommandResult cmd_phi(const RunConfig& cfg) {
  if (cfg.w.empty()) throw Error("phi needs --w");
  const Workbench wb = bench(cfg, 8);
  const WeylElt w = wb.group->parse(cfg.w);
  Json out = {{"command", "phi"}, {"datum", wb.group->label()}, {"radius", wb.hecke->radius()}, {"w", wb.group->to_string(w)}};
  try {
    out["certified"] = true;
    out["phi"] = jelt_to_json(*wb.group, wb.jring->phi(w));
    return {out, 0};
  } catch (const CertificationError& e) {
    out["certified"] = false;
    out["certificate_gap"] = e.what();
    return {out, 2};
  }
}

Json suite_j_identities(const std::string& datum, int radius, int jobs, const std::optional<std::filesystem::path>& cache) {
  const Workbench wb = Workbench::build(datum, radius, cache, jobs, false);
  Json checks = Json::array();
  for (const auto& name : identity_names()) {
    const IdentityReport r = verify_identity(name, *wb.jring, jobs);
    Json c = report_to_json(r);
    c["check"] = name;
    c["inputs"] = {{"datum", datum}, {"radius", radius}};
    checks.push_back(c);
  }
  return {{"suite", "j-identities"}, {"datum", datum}, {"radius", radius}, {"checks", checks}, {"passed", all_passed(checks)}};
}

Json suite_eqk_traces(const std::string& example, unsigned long long seed, int samples) {
  const auto space = register_example(example);
  Json checks = Json::array();
  std::mt19937_64 rng(seed);
  const auto points = points_of(*space, "");

  const TraceOfClass unit = trace_of_class(diagonal(space));
  add_check(checks, "trace_of_diagonal_is_dim_K", {{"class", "O_Delta"}},
            unit.equal() && unit.action_value == BigInt(space->num_points()),
            {{"value", unit.action_value.str()}, {"dim_K", space->num_points()}});

  int agree = 0;
  for (int i = 0; i < samples; ++i) agree += trace_of_class(random_class(space, rng)).equal() ? 1 : 0;
  add_check(checks, "trace_two_oracles", {{"random_classes", samples}, {"seed", seed}}, agree == samples, {{"agreeing", agree}});

  Json perm = Json::array();
  bool perm_ok = true;
  for (const auto& s : points) {
    const Specialization sp = specialize(space, s);
    for (int k = 0; k < sp.order(); ++k) {
      const CyclotomicValue v = trace_at(diagonal(space), sp, k);
      const bool ok = equals_integer(v, sp.fixed_points(k));
      perm_ok = perm_ok && ok;
      perm.push_back({{"point", s.name}, {"gamma", k}, {"value", v.to_string()}, {"fixed_points", sp.fixed_points(k)}});
    }
  }
  add_check(checks, "unit_class_gives_permutation_character", {{"class", "O_Delta"}}, perm_ok, perm);

  int cyclic = 0;
  int vanish = 0;
  for (int i = 0; i < samples; ++i) {
    const EqKClass a = random_invariant_class(space, rng);
    const EqKClass b = random_invariant_class(space, rng);
    const auto ab = trace_map_c(convolve(a, b), points);
    const auto ba = trace_map_c(convolve(b, a), points);
    if (same_values(ab, ba)) ++cyclic;
    const auto comm = trace_map_c(convolve(a, b) - convolve(b, a), points);
    if (std::all_of(comm.begin(), comm.end(), [](const TraceValue& t) { return t.value.is_zero(); })) ++vanish;
  }
  add_check(checks, "cyclicity", {{"random_pairs", samples}, {"seed", seed}}, cyclic == samples, {{"agreeing", cyclic}});
  add_check(checks, "random_commutators_vanish", {{"random_pairs", samples}}, vanish == samples, {{"vanishing", vanish}});

  const auto effective = effective_classes(space);
  Json explicit_pairs = Json::array();
  bool explicit_ok = true;
  for (std::size_t i = 0; i < effective.size(); ++i) {
    const std::size_t k = (i + 1) % effective.size();
    const auto& a = effective[i];
    const auto& b = effective[k];
    const auto comm = trace_map_c(convolve(a.cls, b.cls) - convolve(b.cls, a.cls), points);
    const bool ok = std::all_of(comm.begin(), comm.end(), [](const TraceValue& t) { return t.value.is_zero(); });
    explicit_ok = explicit_ok && ok;
    explicit_pairs.push_back({{"a", a.name}, {"b", b.name}, {"vanishes", ok}});
  }
  add_check(checks, "explicit_commutators_vanish", {{"pairs", explicit_pairs.size()}}, explicit_ok, explicit_pairs);

  Json adm = Json::array();
  bool adm_ok = true;
  for (const auto& f : effective) {
    for (const auto& s : points) {
      const Specialization sp = specialize(space, s);
      const Admissibility a = check_admissible(f.cls, sp);
      bool pair_ok = true;
      Json pairings = Json::array();
      for (int j = 0; j < sp.order(); ++j) {
        const CyclotomicValue p = character_pairing(f.cls, sp, j);
        pair_ok = pair_ok && (p - isotypic_trace(f.cls, sp, j)).is_zero();
        pairings.push_back(p.to_string());
      }
      adm_ok = adm_ok && a.admissible && pair_ok;
      adm.push_back({{"class", f.name}, {"point", s.name}, {"admissible", a.admissible}, {"pairings", pairings},
                     {"pairing_matches_isotypic_trace", pair_ok}, {"issues", a.issues}});
    }
  }
  add_check(checks, "admissibility", {{"effective_classes", effective.size()}}, adm_ok, adm);

  return {{"suite", "eqk-traces"}, {"example", example}, {"checks", checks}, {"passed", all_passed(checks)}};
}

Json suite_theorem_a_regular(int radius) {
  const std::string datum = "A1~ext";
  const Workbench wb = Workbench::build(datum, radius);
  const CellStructure& cs = *wb.cells;
  const WeylGroup& g = *wb.group;
  Json checks = Json::array();
  const int cell = cs.identity_cell();
  std::vector<WeylElt> members;
  for (int idx : cs.two_sided().members(cell)) members.push_back(cs.table().element(idx));
  Json names = Json::array();
  bool length_zero = true;
  for (const auto& m : members) {
    names.push_back(g.to_string(m));
    length_zero = length_zero && g.length(m) == 0;
  }
  add_check(checks, "cell_is_length_zero", {{"datum", datum}, {"radius", radius}},
            length_zero && cs.two_sided().cell_certified(cell), names);

  const int n = static_cast<int>(members.size());
  std::vector<std::vector<std::vector<BigInt>>> jt(static_cast<std::size_t>(n),
      std::vector<std::vector<BigInt>>(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n), 0)));
  Json jt_json = Json::array();
  bool integral = true;
  for (int a = 0; a < n; ++a) {
    Json row = Json::array();
    for (int b = 0; b < n; ++b) {
      const JElt prod = wb.jring->t_product(members[static_cast<std::size_t>(a)], members[static_cast<std::size_t>(b)]);
      Json col = Json::array();
      for (int c = 0; c < n; ++c) {
        const LaurentPoly coeff = prod.coeff(members[static_cast<std::size_t>(c)]);
        integral = integral && (coeff.is_zero() || (coeff.min_exponent() == 0 && coeff.max_exponent() == 0));
        jt[a][b][c] = coeff.coeff(0);
        col.push_back(coeff.coeff(0).str());
      }
      row.push_back(col);
    }
    jt_json.push_back(row);
  }

  const CyclicGroup mu2(2);
  const auto rt = mu2.character_ring_table();
  Json rt_json = Json::array();
  for (const auto& plane : rt) {
    Json row = Json::array();
    for (const auto& col : plane) {
      Json c = Json::array();
      for (const auto& x : col) c.push_back(x.str());
      row.push_back(c);
    }
    rt_json.push_back(row);
  }

  Json matching = nullptr;
  if (n == mu2.order() && integral) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool eq = true;
      for (int a = 0; a < n && eq; ++a)
        for (int b = 0; b < n && eq; ++b)
          for (int c = 0; c < n && eq; ++c) eq = jt[a][b][c] == rt[perm[a]][perm[b]][perm[c]];
      if (eq) {
        matching = Json::object();
        for (int a = 0; a < n; ++a) matching[g.to_string(members[static_cast<std::size_t>(a)])] = mu2.label(perm[a]);
        break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  add_check(checks, "j_table_equals_character_ring_table", {{"datum", datum}, {"group", "mu2"}}, !matching.is_null(),
            {{"j_table", jt_json}, {"character_table", rt_json}, {"matching", matching}});

  const auto space = register_example("sl2-regular");
  int total = 0;
  Json fibers = Json::array();
  for (const auto& name : registered_point_names(*space)) {
    const FiberResult f = fiber_at(space, registered_point(*space, name));
    total += f.dimension;
    fibers.push_back({{"point", name}, {"dimension", f.dimension}});
  }
  add_check(checks, "fiber_dimensions_sum_to_cell_size", {{"example", "sl2-regular"}}, total == n, fibers);

  Json out = {{"suite", "theorem-a-regular"}, {"datum", datum}, {"radius", radius}, {"cell", names}};
  if (const auto& label = cs.cell_label(cell)) out["orbit"] = label->orbit;
  out["checks"] = checks;
  out["passed"] = all_passed(checks);
  return out;
}

CommandResult cmd_verify(const RunConfig& cfg) {
  Json report;
  if (cfg.suite == "j-identities") {
    report = suite_j_identities(cfg.datum, radius_or(cfg, 10), cfg.jobs, cfg.cache_dir);
  } else if (cfg.suite == "eqk-traces") {
    report = suite_eqk_traces(cfg.example, cfg.seed, cfg.samples);
  } else if (cfg.suite == "theorem-a-regular") {
    report = suite_theorem_a_regular(radius_or(cfg, 6));
  } else {
    throw Error("unknown suite '" + cfg.suite + "' (expected j-identities, eqk-traces or theorem-a-regular)");
  }
  const bool ok = report.at("passed").get<bool>();
  return {report, ok ? 0 : 1};
}

CommandResult cmd_eqk_demo(const RunConfig& cfg) {
  const auto space = register_example(cfg.example);
  Json out = {{"command", "eqk demo"}, {"example", space->name}, {"space", space_json(*space)}};
  Json checks = Json::array();
  if (!space->module_basis.empty()) {
    Json pts = Json::array();
    for (const auto& s : points_of(*space, cfg.at)) {
      const Specialization sp = specialize(space, s);
      const FiberResult f = fiber_at(space, s);
      Json irr = Json::array();
      for (const auto& m : irreducibles_at(space, s)) irr.push_back({{"rho", m.rho}, {"dimension", m.dimension}});
      pts.push_back({{"point", s.name}, {"component_group_order", sp.order()}, {"local_ring_dim", sp.local_dim},
                     {"discrete_fixed_locus", sp.discrete},
                     {"fiber", {{"dimension", f.dimension}, {"dimension_projector", f.dimension_projector}, {"basis", f.basis}}},
                     {"irreducibles", irr}});
      add_check(checks, "fiber_formula_matches_projector_rank", {{"point", s.name}}, f.dimension == f.dimension_projector,
                {{"dimension", f.dimension}, {"dimension_projector", f.dimension_projector}});
    }
    out["points"] = pts;
    const Json suite = suite_eqk_traces(space->name, cfg.seed, cfg.samples);
    for (const auto& c : suite.at("checks")) checks.push_back(c);
  }
  for (const auto& name : {std::string("p1-warmup"), std::string("sl3-subregular")}) {
    if (space->name == name) {
      for (const auto& c : curve_checks(name)) checks.push_back(c);
    }
  }
  out["checks"] = checks;
  out["passed"] = all_passed(checks);
  return {out, out["passed"].get<bool>() ? 0 : 1};
}

CommandResult cmd_trace(const RunConfig& cfg) {
  const auto space = register_example(cfg.example);
  if (space->module_basis.empty()) throw Error("no trace data for " + space->name);
  const auto points = points_of(*space, cfg.at);
  Json classes = Json::array();
  bool ok = true;
  bool found = false;
  for (const auto& f : effective_classes(space)) {
    if (!cfg.class_name.empty() && f.name != cfg.class_name) continue;
    found = true;
    const TraceOfClass t = trace_of_class(f.cls);
    Json adm = Json::array();
    for (const auto& s : points) {
      const Admissibility a = check_admissible(f.cls, specialize(space, s));
      ok = ok && a.admissible;
      adm.push_back({{"point", s.name}, {"admissible", a.admissible}, {"issues", a.issues}});
    }
    ok = ok && t.equal();
    classes.push_back({{"class", f.name},
                       {"trace", {{"via_action", t.via_action.to_string()}, {"via_diagonal", t.via_diagonal.to_string()},
                                  {"value", t.action_value.str()}, {"equal", t.equal()}}},
                       {"c", trace_values_json(trace_map_c(f.cls, points))},
                       {"admissibility", adm}});
  }
  if (!found) throw Error("unknown class '" + cfg.class_name + "'");
  Json out = {{"command", "trace"}, {"example", space->name}, {"classes", classes}, {"passed", ok}};
  return {out, ok ? 0 : 1};
}

}  // namespace ahl::cli
