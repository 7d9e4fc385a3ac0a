#include "ahl/eqk/curve_model.hpp"

#include "ahl/error.hpp"

#include <map>

namespace ahl {

CurveClass CurveModel::closure_class(int a) const {
  if (a == point_cell) return skyscraper();
  for (std::size_t i = 0; i < attractor.size(); ++i) {
    if (attractor[i] == a) return component_line_bundle(static_cast<int>(i), 0);
  }
  throw Error("fixed point without an attracting cell");
}

CurveClass CurveModel::skyscraper() const {
  return {std::vector<BigInt>(components.size(), 0), 1};
}

CurveClass CurveModel::component_line_bundle(int component, int k) const {
  CurveClass c{std::vector<BigInt>(components.size(), 0), 1 + k};
  c.ranks[static_cast<std::size_t>(component)] = 1;
  return c;
}

CurveClass CurveModel::twist(const CurveClass& f, const std::vector<int>& k) const {
  if (k.size() != components.size()) throw Error("one degree per component expected");
  CurveClass out = f;
  for (std::size_t i = 0; i < k.size(); ++i) out.chi += f.ranks[i] * k[i];
  return out;
}

std::vector<BigInt> CurveModel::gr(const CurveClass& f) const {
  std::vector<BigInt> out(fixed_points.size(), 0);
  BigInt rest = f.chi;
  for (std::size_t i = 0; i < attractor.size(); ++i) {
    out[static_cast<std::size_t>(attractor[i])] = f.ranks[i];
    rest -= f.ranks[i];
  }
  out[static_cast<std::size_t>(point_cell)] = rest;
  return out;
}

CurveClass CurveModel::xi(const std::vector<BigInt>& v) const {
  CurveClass out{std::vector<BigInt>(components.size(), 0), 0};
  for (int a = 0; a < num_fixed(); ++a) {
    const BigInt& m = v.at(static_cast<std::size_t>(a));
    if (m == 0) continue;
    const CurveClass cl = closure_class(a);
    for (std::size_t i = 0; i < cl.ranks.size(); ++i) out.ranks[i] += m * cl.ranks[i];
    out.chi += m * cl.chi;
  }
  return out;
}

CurveCorrespondence CurveModel::apply_xi(const FixedMatrix& c) const {
  const int n = num_fixed();
  CurveCorrespondence out;
  for (int b = 0; b < n; ++b) {
    std::vector<BigInt> column;
    for (int a = 0; a < n; ++a) column.push_back(c[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
    out.push_back(xi(column));
  }
  return out;
}

FixedMatrix CurveModel::xi_inverse(const CurveCorrespondence& f) const {
  const int n = num_fixed();
  FixedMatrix out(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n), 0));
  for (int b = 0; b < n; ++b) {
    const auto g = gr(f[static_cast<std::size_t>(b)]);
    for (int a = 0; a < n; ++a) out[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = g[static_cast<std::size_t>(a)];
  }
  return out;
}

CurveCorrespondence CurveModel::o_gamma() const { return apply_xi(identity_matrix_fixed(num_fixed())); }

CurveCorrespondence CurveModel::twisted_gamma(const std::vector<int>& k) const {
  if (k.size() != components.size()) throw Error("one degree per component expected");
  CurveCorrespondence out(fixed_points.size());
  for (std::size_t i = 0; i < attractor.size(); ++i) {
    out[static_cast<std::size_t>(attractor[i])] = component_line_bundle(static_cast<int>(i), k[i]);
  }
  out[static_cast<std::size_t>(point_cell)] = skyscraper();
  return out;
}

FixedMatrix CurveModel::phi_line_bundle(const std::vector<int>& k) const {
  CurveCorrespondence g = o_gamma();
  for (auto& c : g) c = twist(c, k);
  return xi_inverse(g);
}

const CurveModel& curve_model(const std::string& name) {
  static const std::map<std::string, CurveModel> models = {
      {"p1-warmup", {"p1-warmup", {"P1"}, {"0", "inf"}, {0}, 1}},
      {"sl3-subregular", {"sl3-subregular", {"P1_1", "P1_2"}, {"p", "q1", "q2"}, {1, 2}, 0}},
  };
  auto it = models.find(name);
  if (it == models.end()) throw Error("no attractor splitting registered for '" + name + "'");
  return it->second;
}

bool twist_mismatch_check(int k1, int k2) {
  const CurveModel& m = curve_model("sl3-subregular");
  return m.o_gamma() == m.twisted_gamma({k1, k2});
}

WarningExample p1_warning_example() {
  const CurveModel& m = curve_model("p1-warmup");
  // O(1) restricted to the fixed point 0 is the skyscraper there.
  const std::vector<BigInt> c0 = {1, 0};
  WarningExample w;
  w.xi_of_restriction = m.xi(c0);
  w.twist_of_xi = m.twist(m.xi(c0), {1});
  return w;
}

FixedMatrix identity_matrix_fixed(int n) {
  FixedMatrix id(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return id;
}

std::string to_string(const CurveModel& m, const CurveClass& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.ranks.size(); ++i) s += "rk_" + m.components[i] + "=" + c.ranks[i].str() + ", ";
  return s + "chi=" + c.chi.str() + ")";
}

}  // namespace ahl
