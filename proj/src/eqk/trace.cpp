#include "ahl/eqk/trace.hpp"

#include "ahl/error.hpp"

namespace ahl {

TraceOfClass trace_of_class(const EqKClass& f) {
  if (f.factors != 2) throw Error("trace_of_class expects a class on X x X");
  const auto& space = f.space;
  TraceOfClass t;
  t.via_action = TorusRingElt(space->rank);
  for (std::size_t j = 0; j < space->module_basis.size(); ++j) {
    const auto coords = basis_coordinates(act(f, basis_class(space, static_cast<int>(j))));
    t.via_action += coords[j];
  }
  t.via_diagonal = pushforward_point(tensor(f, diagonal(space)));
  t.action_value = t.via_action.augmentation();
  t.diagonal_value = t.via_diagonal.augmentation();
  return t;
}

CyclotomicValue trace_at(const EqKClass& f, const Specialization& sp, int k) {
  if (f.space != sp.space || f.factors != 2) throw Error("trace_at: class and specialization disagree");
  if (k == 0) return evaluate(pushforward_point(tensor(f, diagonal(f.space))), sp.point.coords);
  if (!sp.discrete) throw Error("trace at a nontrivial component needs a discrete fixed locus");
  if (!is_invariant(f)) throw Error("trace at a nontrivial component needs an invariant class");
  const auto& perm = sp.powers[static_cast<std::size_t>(k)].perm;
  CyclotomicValue sum = CyclotomicValue::rational(0);
  for (int p = 0; p < f.space->num_points(); ++p) {
    const CyclotomicValue lam = evaluate(f.space->lambda(p), sp.point.coords);
    sum += evaluate(f.at({perm[static_cast<std::size_t>(p)], p}), sp.point.coords) / lam;
  }
  return sum;
}

std::vector<TraceValue> trace_map_c(const EqKClass& f, const std::vector<SemisimplePoint>& points) {
  std::vector<TraceValue> out;
  for (const auto& s : points) {
    const Specialization sp = specialize(f.space, s);
    for (int k = 0; k < sp.order(); ++k) out.push_back({s.name, k, trace_at(f, sp, k)});
  }
  return out;
}

CyclotomicValue character_pairing(const EqKClass& f, const Specialization& sp, int j) {
  const int n = sp.order();
  CyclotomicValue sum = CyclotomicValue::rational(0);
  for (int k = 0; k < n; ++k) sum += sp.group.character(j, k).conj() * trace_at(f, sp, k);
  return sum * CyclotomicValue::rational(Rational(1, n));
}

CyclotomicValue isotypic_trace(const EqKClass& f, const Specialization& sp, int j) {
  const GKMSpace& x = *f.space;
  const int n = sp.order(), np = x.num_points();
  if (!sp.discrete) {
    if (n != 1) throw Error("isotypic trace needs a discrete fixed locus");
    return CyclotomicValue::rational(Rational(trace_of_class(f).action_value));
  }
  using C = CyclotomicValue;
  Matrix<C> act_m(static_cast<std::size_t>(np), std::vector<C>(static_cast<std::size_t>(np), C::rational(0)));
  for (int p = 0; p < np; ++p)
    for (int q = 0; q < np; ++q)
      act_m[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] =
          evaluate(f.at({p, q}), sp.point.coords) / evaluate(x.lambda(q), sp.point.coords);
  Matrix<C> proj(static_cast<std::size_t>(np), std::vector<C>(static_cast<std::size_t>(np), C::rational(0)));
  for (int k = 0; k < n; ++k) {
    const C w = sp.group.character(j, k).conj() * C::rational(Rational(1, n));
    const auto& perm = sp.powers[static_cast<std::size_t>(k)].perm;
    for (int p = 0; p < np; ++p) {
      auto& e = proj[static_cast<std::size_t>(p)][static_cast<std::size_t>(perm[static_cast<std::size_t>(p)])];
      e = e + w;
    }
  }
  const Matrix<C> basis = column_space(proj);
  if (basis.empty() || basis[0].empty()) return C::rational(0);
  const Matrix<C> restricted = solve(basis, multiply(act_m, basis));
  C tr = C::rational(0);
  for (std::size_t i = 0; i < restricted.size(); ++i) tr += restricted[i][i];
  return tr;
}

Admissibility check_admissible(const EqKClass& f, const Specialization& sp) {
  Admissibility out;
  const auto irr = irreducibles_at(f.space, sp.point);
  for (int j = 0; j < sp.order(); ++j) {
    const CyclotomicValue pair = character_pairing(f, sp, j);
    const std::string where = sp.point.name + "/" + sp.group.label(j);
    if (!pair.is_integer()) {
      out.admissible = false;
      out.issues.push_back(where + ": pairing " + pair.to_string() + " is not an integer");
      continue;
    }
    bool occurs = false;
    for (const auto& m : irr) occurs = occurs || m.character_index == j;
    if (!pair.is_zero() && !occurs) {
      out.admissible = false;
      out.issues.push_back(where + ": character does not occur in K(X^s)");
    }
  }
  return out;
}

namespace {

TorusRingElt random_coefficient(int rank, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> expo(-2, 2), coef(-2, 2), terms(0, 3);
  TorusRingElt c(rank);
  const int t = terms(rng);
  for (int i = 0; i < t; ++i) {
    Exponent e(static_cast<std::size_t>(rank));
    for (auto& x : e) x = expo(rng);
    c.add_term(e, coef(rng));
  }
  return c;
}

}  // namespace

EqKClass random_class(std::shared_ptr<const GKMSpace> space, std::mt19937_64& rng) {
  const int nb = static_cast<int>(space->module_basis.size());
  EqKClass out = zero_class(space, 2);
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) {
      out = out + scale(boxtimes(basis_class(space, i), basis_class(space, j)), random_coefficient(space->rank, rng));
    }
  return out;
}

EqKClass random_invariant_class(std::shared_ptr<const GKMSpace> space, std::mt19937_64& rng) {
  const EqKClass f = random_class(space, rng);
  EqKClass out = zero_class(space, 2);
  for (const auto& g : space->symmetries) out = out + apply_symmetry(g, f);
  return out;
}

std::vector<NamedClass> effective_classes(std::shared_ptr<const GKMSpace> space) {
  if (space->rank == 0) {
    return {{"O_XxX", structure_sheaf(space, 2)}, {"O_XxX^2", scale(structure_sheaf(space, 2), TorusRingElt::constant(0, 2))}};
  }
  if (!space->o1 || space->rank != 1) throw Error("effective classes are registered for the projective line");
  auto z = [](int k) { return TorusRingElt::character({k}); };
  const TorusRingElt adjoint = z(1) + z(0) + z(-1);
  auto box = [&](int a, int b) { return boxtimes(line_bundle(space, a), line_bundle(space, b)); };
  std::vector<NamedClass> out = {
      {"O_XxX", structure_sheaf(space, 2)},
      {"O_Delta", diagonal(space)},
      {"O_Delta(2)*z", scale(diagonal_twisted(space, 2), z(1))},
      {"O_Delta(-2)*z^-1", scale(diagonal_twisted(space, -2), z(-1))},
      {"O(1)xO(1)*z", scale(box(1, 1), z(1))},
      {"O(1)xO(-1)", box(1, -1)},
      {"O(2)xO*z", scale(box(2, 0), z(1))},
      {"O(-1)xO(-1)*z^-1", scale(box(-1, -1), z(-1))},
      {"O_XxX*V_adj", scale(structure_sheaf(space, 2), adjoint)},
      {"O(2)xO(2)*z^2", scale(box(2, 2), z(2))},
      {"O_Delta*V_adj", scale(diagonal(space), adjoint)},
  };
  for (const auto& c : out) {
    if (!is_invariant(c.cls)) throw Error("registered class " + c.name + " is not invariant");
    require_gkm(c.cls);
  }
  return out;
}

}  // namespace ahl
