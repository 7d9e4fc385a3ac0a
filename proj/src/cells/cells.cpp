#include "ahl/cells/cells.hpp"

#include "ahl/error.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>

namespace ahl {

std::string to_string(CellSide side) {
  switch (side) {
    case CellSide::Left: return "L";
    case CellSide::Right: return "R";
    case CellSide::TwoSided: return "LR";
  }
  return "?";
}

std::string to_string(ACertificate c) {
  switch (c) {
    case ACertificate::Exact: return "exact";
    case ACertificate::Lookup: return "lookup";
    case ACertificate::LowerBound: return "lower-bound";
  }
  return "?";
}

bool connected(const WeylElt& x, const WeylElt& y, const KLTable& table) {
  const int xi = table.require_index(x);
  const int yi = table.require_index(y);
  int lo = xi, hi = yi;
  if (table.length(lo) > table.length(hi)) std::swap(lo, hi);
  if (table.length(lo) == table.length(hi)) return false;
  for (const auto& m : table.mu_below(hi)) {
    if (m.z == lo) return true;
  }
  return false;
}

namespace {

using Graph = std::vector<std::vector<int>>;

Graph build_graph(const KLTable& t, CellSide side) {
  const int n = static_cast<int>(t.size());
  Graph g(static_cast<std::size_t>(n));
  auto drop = [&](int a, int b) {
    const bool left = (t.left_descents(a) & ~t.left_descents(b)) != 0;
    const bool right = (t.right_descents(a) & ~t.right_descents(b)) != 0;
    switch (side) {
      case CellSide::Left: return left;
      case CellSide::Right: return right;
      case CellSide::TwoSided: return left || right;
    }
    return false;
  };
  for (int y = 0; y < n; ++y) {
    for (const auto& m : t.mu_below(y)) {
      if (drop(m.z, y)) g[static_cast<std::size_t>(m.z)].push_back(y);
      if (drop(y, m.z)) g[static_cast<std::size_t>(y)].push_back(m.z);
    }
  }
  // Length-zero twists: C_{omega x} = T_omega C_x and C_{x omega} = C_x T_omega.
  const WeylGroup& grp = t.group();
  for (int x = 0; x < n; ++x) {
    for (const auto& om : grp.omegas()) {
      if (side != CellSide::Right) {
        const int y = t.index_of(grp.multiply(om, t.element(x)));
        if (y >= 0 && y != x) g[static_cast<std::size_t>(x)].push_back(y);
      }
      if (side != CellSide::Left) {
        const int y = t.index_of(grp.multiply(t.element(x), om));
        if (y >= 0 && y != x) g[static_cast<std::size_t>(x)].push_back(y);
      }
    }
  }
  for (auto& adj : g) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
  return g;
}

// Tarjan SCC on the subgraph of nodes with active[node]; returns a component
// label per node (-1 for inactive nodes).
std::vector<int> strongly_connected(const Graph& g, const std::vector<char>& active) {
  const int n = static_cast<int>(g.size());
  std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0),
      comp(static_cast<std::size_t>(n), -1);
  std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  int counter = 0, ncomp = 0;
  std::function<void(int)> visit = [&](int v) {
    const auto vv = static_cast<std::size_t>(v);
    index[vv] = low[vv] = counter++;
    stack.push_back(v);
    on_stack[vv] = 1;
    for (int w : g[vv]) {
      const auto ww = static_cast<std::size_t>(w);
      if (!active[ww]) continue;
      if (index[ww] < 0) {
        visit(w);
        low[vv] = std::min(low[vv], low[ww]);
      } else if (on_stack[ww]) {
        low[vv] = std::min(low[vv], index[ww]);
      }
    }
    if (low[vv] == index[vv]) {
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[static_cast<std::size_t>(w)] = 0;
        comp[static_cast<std::size_t>(w)] = ncomp;
      } while (w != v);
      ++ncomp;
    }
  };
  for (int v = 0; v < n; ++v) {
    if (active[static_cast<std::size_t>(v)] && index[static_cast<std::size_t>(v)] < 0) visit(v);
  }
  return comp;
}

}  // namespace

CellPartition CellPartition::compute(std::shared_ptr<const KLTable> table, CellSide side) {
  CellPartition p;
  p.table_ = table;
  p.side_ = side;
  const KLTable& t = *table;
  const int n = static_cast<int>(t.size());
  const Graph g = build_graph(t, side);
  const std::vector<int> comp = strongly_connected(g, std::vector<char>(static_cast<std::size_t>(n), 1));
  // Number cells by their first member in ball order.
  std::map<int, int> relabel;
  p.cell_of_.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    auto [it, inserted] = relabel.emplace(comp[static_cast<std::size_t>(v)], static_cast<int>(relabel.size()));
    p.cell_of_[static_cast<std::size_t>(v)] = it->second;
    if (inserted) p.members_.emplace_back();
    p.members_[static_cast<std::size_t>(it->second)].push_back(v);
  }
  const int nc = p.num_cells();
  p.reach_.assign(static_cast<std::size_t>(nc), std::vector<char>(static_cast<std::size_t>(nc), 0));
  std::vector<std::vector<int>> dag(static_cast<std::size_t>(nc));
  for (int v = 0; v < n; ++v) {
    for (int w : g[static_cast<std::size_t>(v)]) {
      const int a = p.cell_of_[static_cast<std::size_t>(v)], b = p.cell_of_[static_cast<std::size_t>(w)];
      if (a != b) dag[static_cast<std::size_t>(a)].push_back(b);
    }
  }
  for (int c = 0; c < nc; ++c) {
    std::vector<int> todo{c};
    p.reach_[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)] = 1;
    while (!todo.empty()) {
      const int a = todo.back();
      todo.pop_back();
      for (int b : dag[static_cast<std::size_t>(a)]) {
        if (!p.reach_[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)]) {
          p.reach_[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)] = 1;
          todo.push_back(b);
        }
      }
    }
  }
  // An element is certified when it lies two layers inside the ball and its
  // cell, cut down to the smaller ball, agrees with the cell computed there.
  p.certified_.assign(static_cast<std::size_t>(n), 0);
  const int inner = t.radius() - 2;
  if (inner >= 0) {
    std::vector<char> active(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) active[static_cast<std::size_t>(v)] = t.length(v) <= inner;
    const std::vector<int> small = strongly_connected(g, active);
    for (int v = 0; v < n; ++v) {
      if (!active[static_cast<std::size_t>(v)]) continue;
      bool same = true;
      for (int w = 0; w < n && same; ++w) {
        if (!active[static_cast<std::size_t>(w)]) continue;
        const bool in_big = p.cell_of_[static_cast<std::size_t>(w)] == p.cell_of_[static_cast<std::size_t>(v)];
        const bool in_small = small[static_cast<std::size_t>(w)] == small[static_cast<std::size_t>(v)];
        same = in_big == in_small;
      }
      p.certified_[static_cast<std::size_t>(v)] = same;
    }
  }
  return p;
}

int CellPartition::cell_of(const WeylElt& w) const { return cell_of_index(table_->require_index(w)); }

bool CellPartition::is_certified(const WeylElt& w) const {
  const int idx = table_->index_of(w);
  return idx >= 0 && certified_index(idx);
}

bool CellPartition::cell_certified(int cell) const {
  for (int v : members(cell)) {
    if (certified_index(v)) return true;
  }
  return false;
}

bool CellPartition::leq(int c, int c2) const {
  return reach_[static_cast<std::size_t>(c)][static_cast<std::size_t>(c2)] != 0;
}

std::vector<std::pair<int, int>> CellPartition::strict_order() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < num_cells(); ++a)
    for (int b = 0; b < num_cells(); ++b)
      if (a != b && leq(a, b)) out.emplace_back(a, b);
  return out;
}

const std::vector<NilpotentLabel>& nilpotent_labels(std::string_view datum) {
  static const std::map<std::string, std::vector<NilpotentLabel>, std::less<>> table = {
      {"A1~",
       {{"A1~", "regular", 0, "trivial (center of PGL2)", "trivial"},
        {"A1~", "zero", 1, "PGL2", "trivial"}}},
      {"A1~ext",
       {{"A1~ext", "regular", 0, "mu2 (center of SL2)", "Z/2"},
        {"A1~ext", "zero", 1, "SL2", "trivial"}}},
      {"A2~",
       {{"A2~", "regular", 0, "trivial (center of PGL3)", "trivial"},
        {"A2~", "subregular", 1, "C* (reductive centralizer in PGL3)", "trivial"},
        {"A2~", "zero", 3, "PGL3", "trivial"}}},
      {"A2~ext",
       {{"A2~ext", "regular", 0, "mu3 (center of SL3)", "Z/3"},
        {"A2~ext", "subregular", 1, "C* (reductive centralizer in SL3)", "trivial"},
        {"A2~ext", "zero", 3, "SL3", "trivial"}}},
  };
  auto it = table.find(datum);
  if (it == table.end()) throw Error("no nilpotent labels registered for '" + std::string(datum) + "'");
  return it->second;
}

std::shared_ptr<const CellStructure> CellStructure::compute(std::shared_ptr<const HeckeAlgebra> hecke) {
  auto cs = std::make_shared<CellStructure>();
  cs->hecke_ = hecke;
  const KLTable& t = hecke->table();
  auto table = hecke->table_ptr();
  cs->lr_ = CellPartition::compute(table, CellSide::TwoSided);
  cs->left_ = CellPartition::compute(table, CellSide::Left);
  cs->right_ = CellPartition::compute(table, CellSide::Right);
  const int L = t.radius();
  const int n = static_cast<int>(t.size());
  std::vector<int> lb(static_cast<std::size_t>(n), INT_MIN), lb_prev(static_cast<std::size_t>(n), INT_MIN);
  const CellPartition& lr = cs->lr_;
  for (int c = 0; c < lr.num_cells(); ++c) {
    const auto& mem = lr.members(c);
    for (int x : mem) {
      for (int y : mem) {
        const int total = t.length(x) + t.length(y);
        if (total > L) continue;
        const HeckeElt& prod = hecke->c_product(t.element(x), t.element(y));
        for (const auto& [z, coef] : prod.terms()) {
          const int zi = t.index_of(z);
          if (zi < 0 || lr.cell_of_index(zi) != c) continue;
          const int deg = -coef.min_exponent();
          lb[static_cast<std::size_t>(zi)] = std::max(lb[static_cast<std::size_t>(zi)], deg);
          if (total <= L - 1) {
            lb_prev[static_cast<std::size_t>(zi)] = std::max(lb_prev[static_cast<std::size_t>(zi)], deg);
          }
        }
      }
    }
  }
  const auto& labels = nilpotent_labels(t.group().label());
  for (int c = 0; c < lr.num_cells(); ++c) {
    const bool certified = lr.cell_certified(c);
    int value = INT_MIN, prev = INT_MIN;
    for (int v : lr.members(c)) {
      if (certified && !lr.certified_index(v)) continue;
      value = std::max(value, lb[static_cast<std::size_t>(v)]);
      prev = std::max(prev, lb_prev[static_cast<std::size_t>(v)]);
    }
    AValue a;
    a.value = value == INT_MIN ? 0 : value;
    std::optional<NilpotentLabel> label;
    if (certified && value != INT_MIN) {
      for (const auto& l : labels) {
        if (l.dim_springer_fiber == value) label = l;
      }
    }
    if (label) a.certificate = prev == value ? ACertificate::Exact : ACertificate::Lookup;
    cs->cell_a_.push_back(a);
    cs->labels_.push_back(label);
  }
  for (int i = 0; i < n; ++i) {
    if (cs->cell_a_[static_cast<std::size_t>(lr.cell_of_index(i))].certificate != ACertificate::LowerBound) continue;
    cs->lr_.certified_[static_cast<std::size_t>(i)] = 0;
    cs->left_.certified_[static_cast<std::size_t>(i)] = 0;
    cs->right_.certified_[static_cast<std::size_t>(i)] = 0;
  }
  // Distinguished involutions among certified elements.
  const int e = t.index_of(t.group().identity());
  for (int d = 0; d < n; ++d) {
    if (!lr.certified_index(d)) continue;
    const AValue& a = cs->cell_a_[static_cast<std::size_t>(lr.cell_of_index(d))];
    if (a.certificate == ACertificate::LowerBound) {
      if (!cs->distinguished_error_) {
        cs->distinguished_error_ = "uncertified a-value for " + t.group().to_string(t.element(d));
      }
      continue;
    }
    const LaurentPoly ped = t.p_index(e, d);
    if (ped.is_zero()) continue;
    if (t.length(d) - a.value != ped.max_exponent()) continue;
    const WeylElt& w = t.element(d);
    if (!(t.group().multiply(w, w) == t.group().identity())) {
      throw Error("distinguished element " + t.group().to_string(w) + " is not an involution");
    }
    cs->distinguished_.push_back(w);
  }
  return cs;
}

AValue CellStructure::a_value(const WeylElt& z) const { return cell_a(lr_.cell_of(z)); }

std::optional<int> CellStructure::certified_a(const WeylElt& z) const {
  const int idx = table().index_of(z);
  if (idx < 0 || !lr_.certified_index(idx)) return std::nullopt;
  const AValue& a = cell_a(lr_.cell_of_index(idx));
  if (a.certificate == ACertificate::LowerBound) return std::nullopt;
  return a.value;
}

int CellStructure::certified_a_or_throw(const WeylElt& z, const std::string& what) const {
  const auto a = certified_a(z);
  if (!a) throw CertificationError(what + ": a(" + group().to_string(z) + ") is not certified");
  return *a;
}

const std::vector<WeylElt>& CellStructure::distinguished() const {
  if (distinguished_error_) throw CertificationError(*distinguished_error_);
  return distinguished_;
}

bool CellStructure::is_distinguished(const WeylElt& w) const {
  const auto& d = distinguished();
  return std::find(d.begin(), d.end(), w) != d.end();
}

int CellStructure::identity_cell() const { return lr_.cell_of(group().identity()); }

HeckeElt ht_c(const HeckeElt& a, int cell, const CellStructure& cells) {
  if (a.basis() != Basis::C) throw Error("ht_c expects a C-basis element");
  const CellPartition& lr = cells.two_sided();
  HeckeElt out(Basis::C);
  for (const auto& [z, c] : a.terms()) {
    const int idx = cells.table().index_of(z);
    if (idx < 0 || !lr.certified_index(idx)) {
      throw CertificationError("uncertified cell membership: " + cells.group().to_string(z));
    }
    if (lr.cell_of_index(idx) == cell) out.add(z, c);
  }
  return out;
}

}  // namespace ahl
