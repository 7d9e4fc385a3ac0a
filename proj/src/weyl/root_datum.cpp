#include "ahl/weyl/root_datum.hpp"

#include "ahl/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace ahl {

namespace {

Exponent reflect_root(const IntMatrix& cartan, int j, Exponent alpha) {
  int pairing = 0;
  for (std::size_t k = 0; k < alpha.size(); ++k) pairing += cartan[static_cast<std::size_t>(j)][k] * alpha[k];
  alpha[static_cast<std::size_t>(j)] -= pairing;
  return alpha;
}

Exponent reflect_coweight(const IntMatrix& cartan, int j, Exponent mu) {
  const int mj = mu[static_cast<std::size_t>(j)];
  for (std::size_t k = 0; k < mu.size(); ++k) mu[k] -= mj * cartan[static_cast<std::size_t>(j)][k];
  return mu;
}

AffineRootDatum make_datum(std::string label, int id, IntMatrix cartan, bool adjoint, std::string group,
                           std::string dual) {
  AffineRootDatum d;
  d.label = std::move(label);
  d.id = id;
  d.rank = static_cast<int>(cartan.size());
  d.cartan = std::move(cartan);
  d.adjoint = adjoint;
  d.group_name = std::move(group);
  d.dual_group_name = std::move(dual);
  const auto r = static_cast<std::size_t>(d.rank);
  if (adjoint) {
    d.lattice_basis.assign(r, Exponent(r, 0));
    for (std::size_t i = 0; i < r; ++i) d.lattice_basis[i][i] = 1;
  } else {
    d.lattice_basis = d.cartan;
  }
  // Orbit of the simple roots together with their coroots.
  std::map<Exponent, Exponent> roots;
  std::vector<std::pair<Exponent, Exponent>> frontier;
  for (std::size_t i = 0; i < r; ++i) {
    Exponent alpha(r, 0);
    alpha[i] = 1;
    frontier.emplace_back(alpha, d.cartan[i]);
    roots.emplace(alpha, d.cartan[i]);
  }
  while (!frontier.empty()) {
    auto [alpha, coroot] = frontier.back();
    frontier.pop_back();
    for (int j = 0; j < d.rank; ++j) {
      Exponent a = reflect_root(d.cartan, j, alpha);
      Exponent c = reflect_coweight(d.cartan, j, coroot);
      if (roots.emplace(a, c).second) frontier.emplace_back(a, c);
    }
  }
  int best_height = -1;
  for (const auto& [alpha, coroot] : roots) {
    if (std::any_of(alpha.begin(), alpha.end(), [](int x) { return x < 0; })) continue;
    d.positive_roots.push_back(alpha);
    d.positive_coroots.push_back(coroot);
    const int height = std::accumulate(alpha.begin(), alpha.end(), 0);
    if (height > best_height) {
      best_height = height;
      d.highest_root = alpha;
      d.highest_coroot = coroot;
    }
  }
  return d;
}

const std::vector<AffineRootDatum>& registry() {
  static const std::vector<AffineRootDatum> data = [] {
    std::vector<AffineRootDatum> v;
    v.push_back(make_datum("A1~", 0, {{2}}, false, "SL2", "PGL2"));
    v.push_back(make_datum("A1~ext", 1, {{2}}, true, "PGL2", "SL2"));
    v.push_back(make_datum("A2~", 2, {{2, -1}, {-1, 2}}, false, "SL3", "PGL3"));
    v.push_back(make_datum("A2~ext", 3, {{2, -1}, {-1, 2}}, true, "PGL3", "SL3"));
    return v;
  }();
  return data;
}

}  // namespace

int AffineRootDatum::pairing(const Exponent& coweight, const Exponent& root) const {
  int s = 0;
  for (std::size_t i = 0; i < root.size(); ++i) s += coweight[i] * root[i];
  return s;
}

bool AffineRootDatum::in_lattice(const Exponent& coweight) const {
  if (adjoint) return true;
  // Solve m * lattice_basis = coweight over Q and test integrality.
  const auto r = static_cast<std::size_t>(rank);
  std::vector<std::vector<Rational>> a(r, std::vector<Rational>(r + 1));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) a[i][j] = lattice_basis[j][i];
    a[i][r] = coweight[i];
  }
  for (std::size_t col = 0; col < r; ++col) {
    std::size_t piv = col;
    while (piv < r && a[piv][col] == 0) ++piv;
    std::swap(a[col], a[piv]);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const Rational f = a[i][col] / a[col][col];
      for (std::size_t j = col; j <= r; ++j) a[i][j] -= f * a[col][j];
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (boost::multiprecision::denominator(Rational(a[i][r] / a[i][i])) != 1) return false;
  }
  return true;
}

const AffineRootDatum& registered_datum(std::string_view label) {
  for (const auto& d : registry()) {
    if (d.label == label) return d;
  }
  throw Error("unregistered root datum '" + std::string(label) + "'");
}

const AffineRootDatum& registered_datum(int id) {
  const auto& r = registry();
  if (id < 0 || id >= static_cast<int>(r.size())) throw Error("unregistered root datum id");
  return r[static_cast<std::size_t>(id)];
}

std::vector<std::string> registered_datum_labels() {
  std::vector<std::string> out;
  for (const auto& d : registry()) out.push_back(d.label);
  return out;
}

}  // namespace ahl
