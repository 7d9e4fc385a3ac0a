#include "ahl/eqk/specialization.hpp"

#include "ahl/error.hpp"

#include <algorithm>
#include <numeric>

namespace ahl {

CyclicGroup::CyclicGroup(int order) : n_(order) {
  if (order < 1) throw Error("cyclic group order must be positive");
}

CyclotomicValue CyclicGroup::character(int j, int k) const {
  return CyclotomicValue::root_of_unity(n_, ((j * k) % n_ + n_) % n_);
}

std::string CyclicGroup::label(int j) const {
  if (j == 0) return "trivial";
  if (n_ == 2) return "sign";
  return "chi" + std::to_string(j);
}

std::vector<std::vector<std::vector<BigInt>>> CyclicGroup::character_ring_table() const {
  std::vector<std::vector<std::vector<BigInt>>> table(
      static_cast<std::size_t>(n_),
      std::vector<std::vector<BigInt>>(static_cast<std::size_t>(n_), std::vector<BigInt>(static_cast<std::size_t>(n_))));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k) {
        CyclotomicValue sum = CyclotomicValue::rational(0);
        for (int g = 0; g < n_; ++g) sum += character(i, g) * character(j, g) * character(k, g).conj();
        sum = sum * CyclotomicValue::rational(Rational(1, n_));
        if (!sum.is_integer()) throw Error("character pairing is not an integer");
        table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
            numerator(sum.rational_value());
      }
  return table;
}

std::vector<std::string> registered_point_names(const GKMSpace& space) {
  if (space.rank == 0) return {"1", "order2"};
  return {"1", "order2", "order3"};
}

SemisimplePoint registered_point(const GKMSpace& space, const std::string& name) {
  SemisimplePoint s;
  s.name = name;
  if (space.rank > 1) throw Error("semisimple points are registered for rank <= 1 only");
  if (name == "1") {
    s.conductor = 1;
    if (space.rank == 1) s.coords = {CyclotomicValue::rational(1)};
  } else if (name == "order2") {
    s.conductor = 2;
    if (space.rank == 1) s.coords = {CyclotomicValue::rational(-1)};
  } else if (name == "order3" && space.rank == 1) {
    s.conductor = 3;
    s.coords = {CyclotomicValue::root_of_unity(3, 1)};
  } else {
    throw Error("unsupported semisimple point '" + name + "' on " + space.name);
  }
  return s;
}

namespace {

IntMatrix identity_matrix(int r) {
  IntMatrix m(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(r), 0));
  for (int i = 0; i < r; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return m;
}

Symmetry compose(const Symmetry& g, const Symmetry& h) {
  Symmetry c;
  c.name = g.name + "*" + h.name;
  c.central_order = std::max(g.central_order, h.central_order);
  c.central = (g.central + h.central) % c.central_order;
  c.perm.resize(g.perm.size());
  for (std::size_t p = 0; p < g.perm.size(); ++p) c.perm[p] = g.perm[static_cast<std::size_t>(h.perm[p])];
  const std::size_t r = g.matrix.size();
  c.matrix.assign(r, std::vector<int>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) c.matrix[i][j] += g.matrix[i][k] * h.matrix[k][j];
  return c;
}

bool same_action(const Symmetry& a, const Symmetry& b) { return a.perm == b.perm && a.matrix == b.matrix && a.central == b.central; }

bool contains(const std::vector<Symmetry>& set, const Symmetry& g) {
  for (const auto& h : set) {
    if (same_action(h, g)) return true;
  }
  return false;
}

std::vector<Symmetry> closure(std::vector<Symmetry> gens, const Symmetry& id) {
  std::vector<Symmetry> out{id};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& g : gens) {
      Symmetry c = compose(g, out[i]);
      if (!contains(out, c)) out.push_back(c);
    }
  }
  return out;
}

bool fixes(const Symmetry& g, const SemisimplePoint& s) {
  for (std::size_t i = 0; i < s.coords.size(); ++i) {
    Exponent e(s.coords.size(), 0);
    e[i] = 1;
    if (!(evaluate(TorusRingElt::character(e).transform(g.matrix), s.coords) == s.coords[i])) return false;
  }
  return true;
}

using Series = std::vector<Rational>;

Series mul(const Series& a, const Series& b) {
  Series c(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// (1 + eps)^a - 1, truncated.
Series shifted_power(int a, std::size_t len) {
  Series s(len, Rational(0));
  Rational c = 1;
  for (std::size_t j = 0; j < len; ++j) {
    if (j > 0) c = c * Rational(a - static_cast<int>(j) + 1) / Rational(static_cast<int>(j));
    s[j] = c;
  }
  s[0] -= 1;
  return s;
}

}  // namespace

int Specialization::fixed_points(int k) const {
  const auto& perm = powers[static_cast<std::size_t>(k)].perm;
  int n = 0;
  for (std::size_t p = 0; p < perm.size(); ++p) n += perm[p] == static_cast<int>(p);
  return n;
}

Rational Specialization::local_character(int k) const {
  Rational t = 0;
  const auto& m = local_action[static_cast<std::size_t>(k)];
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

Specialization specialize(std::shared_ptr<const GKMSpace> space, const SemisimplePoint& s) {
  const GKMSpace& x = *space;
  if (static_cast<int>(s.coords.size()) != x.rank) throw Error("point dimension does not match the torus rank");
  Specialization sp;
  sp.space = space;
  sp.point = s;
  Symmetry id{"e", {}, identity_matrix(x.rank), std::nullopt};
  id.perm.resize(static_cast<std::size_t>(x.num_points()));
  std::iota(id.perm.begin(), id.perm.end(), 0);

  std::vector<Symmetry> stab_gens, refl_gens;
  for (const auto& g : x.symmetries) {
    if (!fixes(g, s)) continue;
    stab_gens.push_back(g);
    if (g.reflection_root && evaluate(TorusRingElt::character(*g.reflection_root), s.coords) == CyclotomicValue::rational(1)) {
      refl_gens.push_back(g);
    }
  }
  const auto stab = closure(stab_gens, id);
  const auto refl = closure(refl_gens, id);
  if (stab.size() % refl.size() != 0) throw Error("reflection subgroup does not divide the stabilizer");
  const int n = static_cast<int>(stab.size() / refl.size());
  // The coset order of g is the least k with g^k in the reflection subgroup.
  std::optional<Symmetry> gen;
  for (const auto& g : stab) {
    Symmetry p = g;
    int k = 1;
    while (!contains(refl, p)) {
      p = compose(g, p);
      ++k;
    }
    if (k == n) {
      gen = g;
      break;
    }
  }
  if (!gen) throw Error("non-cyclic component group is not supported");
  sp.group = CyclicGroup(n);
  sp.powers.push_back(id);
  for (int k = 1; k < n; ++k) sp.powers.push_back(compose(*gen, sp.powers.back()));

  for (const auto& e : x.edges) {
    if (evaluate(TorusRingElt::character(e.alpha), s.coords) == CyclotomicValue::rational(1)) sp.discrete = false;
  }

  if (x.rank == 0) {
    sp.local_dim = 1;
    sp.local_action.assign(static_cast<std::size_t>(n), Matrix<Rational>{{Rational(1)}});
    return sp;
  }
  if (x.rank != 1) throw Error("local rings are implemented for rank <= 1");
  const std::size_t len = 8;
  int m = static_cast<int>(len);
  for (int power = 1; power <= 3; ++power) {
    Series sum(len, Rational(0));
    for (const auto& g : sp.powers) {
      const Series t = shifted_power(g.matrix[0][0] * power, len);
      for (std::size_t i = 0; i < len; ++i) sum[i] += t[i];
    }
    for (std::size_t i = 0; i < len; ++i) {
      if (sum[i] != 0) {
        m = std::min(m, static_cast<int>(i));
        break;
      }
    }
  }
  if (m >= static_cast<int>(len)) throw Error("local ring is not finite-dimensional at " + s.name);
  sp.local_dim = m;
  for (const auto& g : sp.powers) {
    const Series u = shifted_power(g.matrix[0][0], static_cast<std::size_t>(m));
    Matrix<Rational> a(static_cast<std::size_t>(m), std::vector<Rational>(static_cast<std::size_t>(m), Rational(0)));
    Series col(static_cast<std::size_t>(m), Rational(0));
    col[0] = 1;
    for (int j = 0; j < m; ++j) {
      for (int i = 0; i < m; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col[static_cast<std::size_t>(i)];
      col = mul(col, u);
    }
    sp.local_action.push_back(a);
  }
  return sp;
}

FiberResult fiber_at(std::shared_ptr<const GKMSpace> space, const SemisimplePoint& s) {
  const Specialization sp = specialize(space, s);
  const int n = sp.order(), np = space->num_points(), m = sp.local_dim;
  FiberResult out;
  Rational total = 0;
  for (int k = 0; k < n; ++k) {
    const int f = sp.fixed_points(k);
    total += Rational(f * f) * sp.local_character(k);
  }
  total /= n;
  if (denominator(total) != 1) throw Error("fiber formula produced a non-integer");
  out.dimension = static_cast<int>(numerator(total));

  const int dim = np * np * m;
  Matrix<Rational> proj(static_cast<std::size_t>(dim), std::vector<Rational>(static_cast<std::size_t>(dim), Rational(0)));
  for (int k = 0; k < n; ++k) {
    const auto& perm = sp.powers[static_cast<std::size_t>(k)].perm;
    const auto& a = sp.local_action[static_cast<std::size_t>(k)];
    for (int p = 0; p < np; ++p)
      for (int q = 0; q < np; ++q)
        for (int j = 0; j < m; ++j)
          for (int i = 0; i < m; ++i) {
            const int col = (p * np + q) * m + j;
            const int row = (perm[static_cast<std::size_t>(p)] * np + perm[static_cast<std::size_t>(q)]) * m + i;
            proj[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] +=
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] / n;
          }
  }
  const Matrix<Rational> image = column_space(proj);
  out.dimension_projector = image.empty() ? 0 : static_cast<int>(image[0].size());
  for (int c = 0; c < out.dimension_projector; ++c) {
    std::string term;
    for (int r = 0; r < dim; ++r) {
      const Rational& v = image[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (v == 0) continue;
      const int j = r % m, pair = r / m;
      if (!term.empty()) term += " + ";
      if (v != 1) term += to_string(v) + "*";
      term += "[(" + space->points[static_cast<std::size_t>(pair / np)] + "," +
              space->points[static_cast<std::size_t>(pair % np)] + ")]";
      if (j > 0) term += "*eps^" + std::to_string(j);
    }
    out.basis.push_back(term);
  }
  return out;
}

std::vector<IrreducibleModule> irreducibles_at(std::shared_ptr<const GKMSpace> space, const SemisimplePoint& s) {
  const Specialization sp = specialize(space, s);
  const int n = sp.order();
  std::vector<IrreducibleModule> out;
  for (int j = 0; j < n; ++j) {
    CyclotomicValue mult = CyclotomicValue::rational(0);
    for (int k = 0; k < n; ++k) {
      mult += sp.group.character(j, k).conj() * CyclotomicValue::rational(sp.fixed_points(k));
    }
    mult = mult * CyclotomicValue::rational(Rational(1, n));
    if (!mult.is_integer()) throw Error("isotypic multiplicity is not an integer");
    const BigInt d = numerator(mult.rational_value());
    if (d != 0) out.push_back({sp.group.label(j), j, static_cast<int>(d)});
  }
  return out;
}

}  // namespace ahl
