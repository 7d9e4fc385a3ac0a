#include "ahl/eqk/gkm.hpp"

#include "ahl/error.hpp"

#include <map>

namespace ahl {

int GKMSpace::point_index(const std::string& label) const {
  for (int i = 0; i < num_points(); ++i) {
    if (points[static_cast<std::size_t>(i)] == label) return i;
  }
  throw Error("unknown fixed point '" + label + "' in " + name);
}

TorusRingElt GKMSpace::lambda(int p) const {
  TorusRingElt out = one();
  for (const auto& chi : tangent[static_cast<std::size_t>(p)]) {
    Exponent neg(chi);
    for (auto& x : neg) x = -x;
    out *= one() - TorusRingElt::character(neg);
  }
  return out;
}

namespace {

std::shared_ptr<GKMSpace> projective_line(const std::string& name) {
  auto x = std::make_shared<GKMSpace>();
  x->name = name;
  x->rank = 1;
  x->points = {"0", "inf"};
  x->edges = {{0, 1, {1}}};
  x->tangent = {{{1}}, {{-1}}};
  x->symmetries = {{"e", {0, 1}, {{1}}, std::nullopt}};
  x->component_group = "trivial";
  x->o1 = std::vector<Exponent>{{0}, {-1}};
  const TorusRingElt one = x->one();
  x->module_basis = {{one, one}, {TorusRingElt(1), one - TorusRingElt::character({1})}};
  return x;
}

}  // namespace

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names = {"sl2-regular", "pgl2-lowest", "sl3-subregular", "p1-warmup"};
  return names;
}

std::shared_ptr<const GKMSpace> register_example(const std::string& name) {
  static const std::map<std::string, std::shared_ptr<const GKMSpace>> registry = [] {
    std::map<std::string, std::shared_ptr<const GKMSpace>> r;
    {
      auto x = std::make_shared<GKMSpace>();
      x->name = "sl2-regular";
      x->rank = 0;
      x->points = {"pt"};
      x->tangent = {{}};
      x->symmetries = {{"e", {0}, {}, std::nullopt}, {"-1", {0}, {}, std::nullopt, 1, 2}};
      x->component_group = "mu2";
      x->module_basis = {{x->one()}};
      r[x->name] = x;
    }
    {
      auto x = projective_line("pgl2-lowest");
      x->symmetries.push_back({"s", {1, 0}, {{-1}}, Exponent{1}});
      x->component_group = "Z/2 (Weyl group of PGL2)";
      r[x->name] = x;
    }
    r["p1-warmup"] = projective_line("p1-warmup");
    {
      auto x = std::make_shared<GKMSpace>();
      x->name = "sl3-subregular";
      x->rank = 1;
      x->points = {"p", "q1", "q2"};
      x->edges = {{1, 0, {1}}, {2, 0, {1}}};
      x->tangent = {{{-1}, {-1}}, {{1}}, {{1}}};
      x->smooth = false;
      x->symmetries = {{"e", {0, 1, 2}, {{1}}, std::nullopt}};
      x->component_group = "trivial";
      r[x->name] = x;
    }
    return r;
  }();
  auto it = registry.find(name);
  if (it == registry.end()) throw Error("unknown example '" + name + "'");
  return it->second;
}

std::vector<int> EqKClass::tuple(int flat_index) const {
  const int n = space->num_points();
  std::vector<int> t(static_cast<std::size_t>(factors));
  for (int i = factors - 1; i >= 0; --i) {
    t[static_cast<std::size_t>(i)] = flat_index % n;
    flat_index /= n;
  }
  return t;
}

int EqKClass::flat(const std::vector<int>& t) const {
  int f = 0;
  for (int x : t) f = f * space->num_points() + x;
  return f;
}

EqKClass zero_class(std::shared_ptr<const GKMSpace> space, int factors) {
  EqKClass c;
  c.factors = factors;
  int size = 1;
  for (int i = 0; i < factors; ++i) size *= space->num_points();
  c.values.assign(static_cast<std::size_t>(size), TorusRingElt(space->rank));
  c.space = std::move(space);
  return c;
}

EqKClass structure_sheaf(std::shared_ptr<const GKMSpace> space, int factors) {
  EqKClass c = zero_class(space, factors);
  for (auto& v : c.values) v = space->one();
  return c;
}

EqKClass skyscraper(std::shared_ptr<const GKMSpace> space, int point) {
  EqKClass c = zero_class(space, 1);
  c.values[static_cast<std::size_t>(point)] = space->lambda(point);
  return c;
}

EqKClass line_bundle(std::shared_ptr<const GKMSpace> space, int k) {
  if (!space->o1) throw Error("no line bundle registered on " + space->name);
  EqKClass c = zero_class(space, 1);
  for (int p = 0; p < space->num_points(); ++p) {
    Exponent e = (*space->o1)[static_cast<std::size_t>(p)];
    for (auto& x : e) x *= k;
    c.values[static_cast<std::size_t>(p)] = TorusRingElt::character(e);
  }
  return c;
}

EqKClass diagonal(std::shared_ptr<const GKMSpace> space) { return diagonal_twisted(std::move(space), 0); }

EqKClass diagonal_twisted(std::shared_ptr<const GKMSpace> space, int k) {
  EqKClass c = zero_class(space, 2);
  const EqKClass l = k == 0 ? structure_sheaf(space) : line_bundle(space, k);
  for (int p = 0; p < space->num_points(); ++p) {
    c.values[static_cast<std::size_t>(c.flat({p, p}))] = space->lambda(p) * l.values[static_cast<std::size_t>(p)];
  }
  return c;
}

namespace {

void check_same(const EqKClass& a, const EqKClass& b) {
  if (a.space != b.space || a.factors != b.factors) throw Error("classes on different spaces");
}

// prod_{q != p} lambda_q, and the product of all lambdas.
std::pair<std::vector<TorusRingElt>, TorusRingElt> cofactors(const GKMSpace& x) {
  std::vector<TorusRingElt> cof;
  TorusRingElt all = x.one();
  for (int p = 0; p < x.num_points(); ++p) all *= x.lambda(p);
  for (int p = 0; p < x.num_points(); ++p) {
    TorusRingElt c = x.one();
    for (int q = 0; q < x.num_points(); ++q) {
      if (q != p) c *= x.lambda(q);
    }
    cof.push_back(c);
  }
  return {cof, all};
}

TorusRingElt divide_or_fail(const TorusRingElt& num, const TorusRingElt& den) {
  try {
    return exact_divide(num, den);
  } catch (const Error&) {
    throw Error("non-GKM class");
  }
}

}  // namespace

EqKClass operator+(const EqKClass& a, const EqKClass& b) {
  check_same(a, b);
  EqKClass c = a;
  for (std::size_t i = 0; i < c.values.size(); ++i) c.values[i] += b.values[i];
  return c;
}

EqKClass operator-(const EqKClass& a, const EqKClass& b) {
  check_same(a, b);
  EqKClass c = a;
  for (std::size_t i = 0; i < c.values.size(); ++i) c.values[i] -= b.values[i];
  return c;
}

EqKClass scale(const EqKClass& a, const TorusRingElt& s) {
  EqKClass c = a;
  for (auto& v : c.values) v = v * s;
  return c;
}

EqKClass tensor(const EqKClass& a, const EqKClass& b) {
  check_same(a, b);
  EqKClass c = a;
  for (std::size_t i = 0; i < c.values.size(); ++i) c.values[i] = a.values[i] * b.values[i];
  return c;
}

EqKClass boxtimes(const EqKClass& a, const EqKClass& b) {
  if (a.space != b.space) throw Error("classes on different spaces");
  EqKClass c = zero_class(a.space, a.factors + b.factors);
  for (int i = 0; i < c.size(); ++i) {
    const auto t = c.tuple(i);
    const std::vector<int> ta(t.begin(), t.begin() + a.factors), tb(t.begin() + a.factors, t.end());
    c.values[static_cast<std::size_t>(i)] = a.at(ta) * b.at(tb);
  }
  return c;
}

EqKClass pullback(const EqKClass& a, int n, const std::vector<int>& keep) {
  if (static_cast<int>(keep.size()) != a.factors) throw Error("pullback: factor count mismatch");
  EqKClass c = zero_class(a.space, n);
  for (int i = 0; i < c.size(); ++i) {
    const auto t = c.tuple(i);
    std::vector<int> u;
    for (int k : keep) u.push_back(t[static_cast<std::size_t>(k)]);
    c.values[static_cast<std::size_t>(i)] = a.at(u);
  }
  return c;
}

EqKClass pushforward(const EqKClass& a, const std::vector<int>& keep) {
  const GKMSpace& x = *a.space;
  if (!x.smooth) throw Error("pushforward requires a smooth space (" + x.name + ")");
  const auto [cof, all] = cofactors(x);
  EqKClass c = zero_class(a.space, static_cast<int>(keep.size()));
  std::vector<char> kept(static_cast<std::size_t>(a.factors), 0);
  for (int k : keep) kept[static_cast<std::size_t>(k)] = 1;
  TorusRingElt den = x.one();
  for (int i = 0; i < a.factors; ++i) {
    if (!kept[static_cast<std::size_t>(i)]) den *= all;
  }
  for (int i = 0; i < a.size(); ++i) {
    const auto t = a.tuple(i);
    TorusRingElt term = a.values[static_cast<std::size_t>(i)];
    if (term.is_zero()) continue;
    std::vector<int> u;
    for (int k : keep) u.push_back(t[static_cast<std::size_t>(k)]);
    for (int j = 0; j < a.factors; ++j) {
      if (!kept[static_cast<std::size_t>(j)]) term *= cof[static_cast<std::size_t>(t[static_cast<std::size_t>(j)])];
    }
    c.values[static_cast<std::size_t>(c.flat(u))] += term;
  }
  for (auto& v : c.values) v = divide_or_fail(v, den);
  return c;
}

TorusRingElt pushforward_point(const EqKClass& a) { return pushforward(a, {}).values.at(0); }

EqKClass convolve(const EqKClass& a, const EqKClass& b) {
  check_same(a, b);
  if (a.factors != 2) throw Error("convolution needs classes on X x X");
  return pushforward(tensor(pullback(a, 3, {0, 1}), pullback(b, 3, {1, 2})), {0, 2});
}

EqKClass convolve_direct(const EqKClass& a, const EqKClass& b) {
  check_same(a, b);
  if (a.factors != 2) throw Error("convolution needs classes on X x X");
  const GKMSpace& x = *a.space;
  const auto [cof, all] = cofactors(x);
  const int n = x.num_points();
  EqKClass c = zero_class(a.space, 2);
  for (int p = 0; p < n; ++p) {
    for (int r = 0; r < n; ++r) {
      TorusRingElt num(x.rank);
      for (int q = 0; q < n; ++q) num += a.at({p, q}) * b.at({q, r}) * cof[static_cast<std::size_t>(q)];
      c.values[static_cast<std::size_t>(c.flat({p, r}))] = divide_or_fail(num, all);
    }
  }
  return c;
}

EqKClass act(const EqKClass& f, const EqKClass& m) {
  if (f.factors != 2 || m.factors != 1) throw Error("act: expects a class on X x X and one on X");
  return pushforward(tensor(f, pullback(m, 2, {1})), {0});
}

std::optional<std::string> gkm_violation(const EqKClass& a) {
  const GKMSpace& x = *a.space;
  for (int i = 0; i < a.size(); ++i) {
    const auto t = a.tuple(i);
    for (int k = 0; k < a.factors; ++k) {
      for (const auto& e : x.edges) {
        if (t[static_cast<std::size_t>(k)] != e.p) continue;
        auto t2 = t;
        t2[static_cast<std::size_t>(k)] = e.q;
        const TorusRingElt diff = a.values[static_cast<std::size_t>(i)] - a.at(t2);
        const TorusRingElt d = x.one() - TorusRingElt::character(e.alpha);
        if (!divides(d, diff)) {
          return "GKM condition fails on edge " + x.points[static_cast<std::size_t>(e.p)] + "-" +
                 x.points[static_cast<std::size_t>(e.q)] + " in factor " + std::to_string(k + 1);
        }
      }
    }
  }
  return std::nullopt;
}

void require_gkm(const EqKClass& a) {
  if (auto v = gkm_violation(a)) throw Error("non-GKM class: " + *v);
}

EqKClass apply_symmetry(const Symmetry& g, const EqKClass& a) {
  EqKClass c = zero_class(a.space, a.factors);
  for (int i = 0; i < a.size(); ++i) {
    auto t = a.tuple(i);
    for (auto& p : t) p = g.perm[static_cast<std::size_t>(p)];
    c.values[static_cast<std::size_t>(c.flat(t))] =
        a.space->rank == 0 ? a.values[static_cast<std::size_t>(i)] : a.values[static_cast<std::size_t>(i)].transform(g.matrix);
  }
  return c;
}

bool is_invariant(const EqKClass& a) {
  for (const auto& g : a.space->symmetries) {
    if (!(apply_symmetry(g, a) == a)) return false;
  }
  return true;
}

std::vector<TorusRingElt> basis_coordinates(const EqKClass& m) {
  const GKMSpace& x = *m.space;
  if (m.factors != 1) throw Error("basis coordinates need a class on X");
  if (x.module_basis.empty()) throw Error("no module basis registered on " + x.name);
  std::vector<TorusRingElt> residual = m.values, coords;
  for (std::size_t i = 0; i < x.module_basis.size(); ++i) {
    const auto& b = x.module_basis[i];
    const TorusRingElt c = exact_divide(residual[i], b[i]);
    for (std::size_t p = 0; p < residual.size(); ++p) residual[p] -= c * b[p];
    coords.push_back(c);
  }
  for (const auto& r : residual) {
    if (!r.is_zero()) throw Error("class is not in the span of the module basis");
  }
  return coords;
}

EqKClass basis_class(std::shared_ptr<const GKMSpace> space, int i) {
  EqKClass c = zero_class(space, 1);
  c.values = space->module_basis.at(static_cast<std::size_t>(i));
  return c;
}

std::string to_string(const EqKClass& a) {
  std::string s = "{";
  for (int i = 0; i < a.size(); ++i) {
    if (i) s += ", ";
    s += "(";
    const auto t = a.tuple(i);
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (k) s += ",";
      s += a.space->points[static_cast<std::size_t>(t[k])];
    }
    s += "): " + a.values[static_cast<std::size_t>(i)].to_string();
  }
  return s + "}";
}

}  // namespace ahl
