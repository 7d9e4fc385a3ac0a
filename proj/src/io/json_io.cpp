#include "ahl/io/json_io.hpp"

#include "ahl/error.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

namespace ahl {

Json to_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c.str();
  return j;
}

namespace {

int parse_exponent(const std::string& s) {
  std::size_t pos = 0;
  int e = 0;
  try {
    e = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw Error("bad exponent '" + s + "'");
  }
  if (pos != s.size()) throw Error("bad exponent '" + s + "'");
  return e;
}

}  // namespace

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_object()) throw Error("Laurent polynomial must be a JSON object");
  std::map<int, BigInt> terms;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_string()) throw Error("coefficient must be a decimal string");
    terms[parse_exponent(k)] = parse_bigint(v.get<std::string>());
  }
  return LaurentPoly::from_terms(terms);
}

Json q_poly_to_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (const auto& [e, c] : p.terms()) {
    if (e % 2 != 0) throw Error("odd v-exponent in a polynomial in q");
    j[std::to_string(e / 2)] = c.str();
  }
  return j;
}

LaurentPoly q_poly_from_json(const Json& j) {
  std::map<int, BigInt> terms;
  for (const auto& [e, c] : laurent_from_json(j).terms()) terms[2 * e] = c;
  return LaurentPoly::from_terms(terms);
}

Json to_json(const TorusRingElt& x) {
  Json j = Json::array();
  for (const auto& [e, c] : x.terms()) j.push_back({{"exp", e}, {"c", c.str()}});
  return j;
}

TorusRingElt torus_from_json(const Json& j, int rank) {
  if (!j.is_array()) throw Error("torus ring element must be a JSON array");
  TorusRingElt x(rank);
  for (const auto& t : j) {
    const auto e = t.at("exp").get<Exponent>();
    if (static_cast<int>(e.size()) != rank) throw Error("exponent of wrong rank");
    x.add_term(e, parse_bigint(t.at("c").get<std::string>()));
  }
  return x;
}

Json to_json(const CyclotomicValue& x) {
  Json c = Json::array();
  for (const auto& r : x.coefficients()) c.push_back(to_string(r));
  return {{"conductor", x.conductor()}, {"coeffs", c}, {"text", x.to_string()}};
}

Json element_to_json(const WeylGroup& g, const WeylElt& w) {
  return {{"word", g.reduced_word(w)}, {"omega", g.omega_index(w)}};
}

WeylElt element_from_json(const WeylGroup& g, const Json& j) {
  if (!j.is_object() || !j.contains("word") || !j.contains("omega")) throw Error("element needs word and omega");
  const auto word = j.at("word").get<std::vector<int>>();
  const int omega = j.at("omega").get<int>();
  for (int i : word) {
    if (i < 0 || i > g.datum().rank) throw Error("reflection index out of range");
  }
  if (!g.has_omega_index(omega)) throw Error("unknown omega index " + std::to_string(omega));
  if (!g.is_reduced(word)) throw Error("word is not reduced");
  return g.from_word(word, omega);
}

Json kl_table_to_json(const KLTable& t) {
  const WeylGroup& g = t.group();
  Json entries = Json::array();
  // Ball order is (length, canonical word), which is the required entry order.
  for (int y = 0; y < static_cast<int>(t.size()); ++y) {
    for (const auto& e : t.row(y)) {
      entries.push_back({{"x", element_to_json(g, t.element(e.x))},
                         {"y", element_to_json(g, t.element(y))},
                         {"P", q_poly_to_json(e.p)}});
    }
  }
  return {{"format", "kltable/v1"}, {"datum", g.label()}, {"radius", t.radius()}, {"entries", entries}};
}

std::shared_ptr<const KLTable> kl_table_from_json(const Json& j) {
  try {
    if (!j.is_object() || j.value("format", "") != "kltable/v1") throw Error("missing kltable/v1 format tag");
    const WeylGroup& g = WeylGroup::get(j.at("datum").get<std::string>());
    const int radius = j.at("radius").get<int>();
    if (radius < 0) throw Error("negative radius");
    std::vector<KLTable::RawEntry> raw;
    for (const auto& e : j.at("entries")) {
      raw.push_back({element_from_json(g, e.at("x")), element_from_json(g, e.at("y")), q_poly_from_json(e.at("P"))});
    }
    return KLTable::from_entries(g, radius, raw);
  } catch (const CertificationError& e) {
    throw Error(std::string("corrupt cache: ") + e.what());
  } catch (const Error& e) {
    throw Error(std::string("corrupt cache: ") + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("corrupt cache: ") + e.what());
  }
}

std::string cache_file_name(const std::string& datum, int radius) {
  return "kl_" + datum + "_r" + std::to_string(radius) + ".json";
}

std::string dump(const Json& j) { return j.dump(1) + "\n"; }

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error("corrupt cache: " + path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << text;
  }
  std::filesystem::rename(tmp, path);
}

TableSource load_or_build_table(const WeylGroup& g, int radius,
                                const std::optional<std::filesystem::path>& cache_dir, int jobs, bool write) {
  if (radius < 0) throw Error("radius must be non-negative");
  TableSource src;
  if (cache_dir) {
    const auto path = *cache_dir / cache_file_name(g.label(), radius);
    if (std::filesystem::exists(path)) {
      try {
        src.table = kl_table_from_json(read_json_file(path));
      } catch (const Error& e) {
        throw Error(std::string(e.what()) + " (" + path.string() + "); refusing to rebuild");
      }
      if (&src.table->group() != &g) throw Error("corrupt cache: datum mismatch in " + path.string());
      src.loaded = true;
    }
  }
  if (!src.table) src.table = KLTable::compute(g, radius, jobs);
  if (cache_dir && std::filesystem::exists(*cache_dir)) {
    const std::regex pattern("kl_(.+)_r([0-9]+)\\.json");
    std::vector<std::pair<int, std::filesystem::path>> others;
    for (const auto& entry : std::filesystem::directory_iterator(*cache_dir)) {
      std::smatch m;
      const std::string fname = entry.path().filename().string();
      if (!std::regex_match(fname, m, pattern) || m[1] != g.label()) continue;
      const int r = std::stoi(m[2]);
      if (r != radius) others.emplace_back(r, entry.path());
    }
    std::sort(others.begin(), others.end());
    for (const auto& [r, path] : others) {
      std::shared_ptr<const KLTable> other;
      try {
        other = kl_table_from_json(read_json_file(path));
      } catch (const Error& e) {
        throw Error(std::string(e.what()) + " (" + path.string() + ")");
      }
      if (!src.table->agrees_with(*other)) {
        throw Error("cached table " + path.string() + " disagrees with radius " + std::to_string(radius));
      }
      src.validated.push_back(r);
    }
  }
  if (write && cache_dir && !src.loaded) {
    const auto path = *cache_dir / cache_file_name(g.label(), radius);
    write_text_file(path, dump(kl_table_to_json(*src.table)));
    src.written = path;
  }
  return src;
}

Json jelt_to_json(const WeylGroup& g, const JElt& a) {
  std::vector<std::pair<WeylElt, LaurentPoly>> sorted(a.terms().begin(), a.terms().end());
  std::sort(sorted.begin(), sorted.end(), [&](const auto& x, const auto& y) { return g.canonical_less(x.first, y.first); });
  Json terms = Json::array();
  for (const auto& [w, c] : sorted) {
    terms.push_back({{"t", element_to_json(g, w)}, {"name", g.to_string(w)}, {"coeff", to_json(c)}});
  }
  return {{"text", a.to_string(g)}, {"terms", terms}};
}

Json cells_to_json(const CellStructure& cs, CellSide side) {
  const CellPartition& part =
      side == CellSide::Left ? cs.left() : side == CellSide::Right ? cs.right() : cs.two_sided();
  const KLTable& t = cs.table();
  const WeylGroup& g = cs.group();
  std::optional<std::string> d_error;
  std::vector<WeylElt> dist;
  try {
    dist = cs.distinguished();
  } catch (const CertificationError& e) {
    d_error = e.what();
  }
  Json cells = Json::array();
  for (int c = 0; c < part.num_cells(); ++c) {
    const int lr = cs.two_sided().cell_of_index(part.members(c).front());
    const AValue& a = cs.cell_a(lr);
    Json members = Json::array(), uncertified = Json::array(), dcell = Json::array();
    for (int m : part.members(c)) {
      members.push_back(g.to_string(t.element(m)));
      if (!part.certified_index(m)) uncertified.push_back(g.to_string(t.element(m)));
    }
    for (const auto& d : dist) {
      if (part.cell_of(d) == c) dcell.push_back(g.to_string(d));
    }
    Json cell = {{"id", c},
                 {"certified", part.cell_certified(c)},
                 {"a", {{"value", a.value}, {"certificate", to_string(a.certificate)}}}};
    if (const auto& label = cs.cell_label(lr)) {
      cell["orbit"] = {{"name", label->orbit},
                       {"dim_springer_fiber", label->dim_springer_fiber},
                       {"z_e", label->z_e},
                       {"component_group", label->component_group}};
    }
    cell["members"] = members;
    cell["uncertified_members"] = uncertified;
    cell["distinguished"] = dcell;
    cells.push_back(cell);
  }
  Json order = Json::array();
  for (const auto& [a, b] : part.strict_order()) order.push_back({a, b});
  Json out = {{"datum", g.label()}, {"radius", t.radius()}, {"side", to_string(side)}, {"cells", cells}, {"order", order}};
  if (d_error) out["distinguished_error"] = *d_error;
  return out;
}

Json report_to_json(const IdentityReport& r) {
  return {{"identity", r.identity}, {"checked", r.checked}, {"skipped", r.skipped}, {"failed", r.failed}, {"passed", r.passed()}};
}

Json to_json(const EqKClass& c) {
  Json values = Json::array();
  for (int i = 0; i < c.size(); ++i) {
    Json pts = Json::array();
    for (int p : c.tuple(i)) pts.push_back(c.space->points[static_cast<std::size_t>(p)]);
    values.push_back({{"point", pts}, {"value", to_json(c.values[static_cast<std::size_t>(i)])}});
  }
  return {{"space", c.space->name}, {"factors", c.factors}, {"values", values}};
}

}  // namespace ahl
