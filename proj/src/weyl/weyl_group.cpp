#include "ahl/weyl/weyl_group.hpp"

#include "ahl/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <unordered_set>

namespace ahl {

namespace {

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

}  // namespace

const WeylGroup& WeylGroup::get(int datum_id) {
  static const std::vector<std::unique_ptr<WeylGroup>> groups = [] {
    std::vector<std::unique_ptr<WeylGroup>> v;
    for (const auto& label : registered_datum_labels()) {
      v.emplace_back(new WeylGroup(registered_datum(label)));
    }
    return v;
  }();
  if (datum_id < 0 || datum_id >= static_cast<int>(groups.size())) throw Error("unregistered root datum id");
  return *groups[static_cast<std::size_t>(datum_id)];
}

const WeylGroup& WeylGroup::get(std::string_view label) { return get(registered_datum(label).id); }

WeylGroup::WeylGroup(const AffineRootDatum& datum) : datum_(&datum) {
  if (datum.rank > kMaxRank) throw Error("root datum rank exceeds kMaxRank");
  build_finite();
  build_omega();
}

void WeylGroup::build_finite() {
  const auto r = static_cast<std::size_t>(datum_->rank);
  IntMatrix id(r, std::vector<int>(r, 0));
  for (std::size_t i = 0; i < r; ++i) id[i][i] = 1;
  // s_j acts on coweight coordinates by mu -> mu - mu_j * alpha_j^vee.
  std::vector<IntMatrix> gens;
  for (std::size_t j = 0; j < r; ++j) {
    IntMatrix m = id;
    for (std::size_t k = 0; k < r; ++k) m[k][j] -= datum_->cartan[j][k];
    gens.push_back(m);
  }
  std::map<IntMatrix, int> index;
  finite_.push_back(id);
  index.emplace(id, 0);
  for (std::size_t pos = 0; pos < finite_.size(); ++pos) {
    for (const auto& g : gens) {
      IntMatrix m = mat_mul(finite_[pos], g);
      if (index.emplace(m, static_cast<int>(finite_.size())).second) finite_.push_back(m);
    }
  }
  if (finite_.size() > 255) throw Error("finite Weyl group too large");
  const std::size_t n = finite_.size();
  finite_mult_.assign(n, std::vector<int>(n));
  finite_inv_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      finite_mult_[a][b] = index.at(mat_mul(finite_[a], finite_[b]));
      if (finite_mult_[a][b] == 0) finite_inv_[a] = static_cast<int>(b);
    }
  }
  for (const auto& g : gens) simple_index_.push_back(index.at(g));
  // u^{-1} alpha > 0 iff <u rho^vee, alpha> > 0, with rho^vee = (1, ..., 1).
  positive_after_.assign(n, std::vector<char>(datum_->positive_roots.size()));
  for (std::size_t u = 0; u < n; ++u) {
    Exponent rho(r, 1);
    Exponent urho = act(static_cast<int>(u), rho);
    for (std::size_t a = 0; a < datum_->positive_roots.size(); ++a) {
      positive_after_[u][a] = datum_->pairing(urho, datum_->positive_roots[a]) > 0;
    }
  }
  // s_0 = t_{theta^vee} s_theta
  IntMatrix stheta = id;
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < r; ++j) stheta[k][j] -= datum_->highest_coroot[k] * datum_->highest_root[j];
  s0_ = make(index.at(stheta), datum_->highest_coroot);
}

Exponent WeylGroup::act(int u, const Exponent& mu) const {
  const IntMatrix& m = finite_[static_cast<std::size_t>(u)];
  Exponent out(mu.size(), 0);
  for (std::size_t i = 0; i < mu.size(); ++i)
    for (std::size_t j = 0; j < mu.size(); ++j) out[i] += m[i][j] * mu[j];
  return out;
}

void WeylGroup::build_omega() {
  const int r = datum_->rank;
  std::vector<WeylElt> found;
  Exponent lam(static_cast<std::size_t>(r), -2);
  while (true) {
    if (datum_->in_lattice(lam)) {
      for (int u = 0; u < finite_order(); ++u) {
        WeylElt w = make(u, lam);
        if (length(w) == 0) found.push_back(w);
      }
    }
    int i = 0;
    while (i < r && lam[static_cast<std::size_t>(i)] == 2) lam[static_cast<std::size_t>(i++)] = -2;
    if (i == r) break;
    ++lam[static_cast<std::size_t>(i)];
  }
  std::map<int, std::pair<WeylElt, std::vector<int>>> by_image;
  for (const auto& w : found) {
    std::vector<int> perm(static_cast<std::size_t>(num_simple()), -1);
    const WeylElt winv = inverse(w);
    for (int i = 0; i < num_simple(); ++i) {
      const WeylElt c = multiply(multiply(w, simple_reflection(i)), winv);
      for (int j = 0; j < num_simple(); ++j) {
        if (c == simple_reflection(j)) perm[static_cast<std::size_t>(i)] = j;
      }
      if (perm[static_cast<std::size_t>(i)] < 0) throw Error("length-zero element does not normalize S");
    }
    if (!by_image.emplace(perm[0], std::make_pair(w, perm)).second) {
      throw Error("two length-zero elements with the same action on s_0");
    }
  }
  for (auto& [k, entry] : by_image) {
    omegas_.push_back(entry.first);
    omega_perms_.push_back(entry.second);
  }
  if (omegas_.empty() || !(omegas_[0] == identity())) throw Error("Omega enumeration failed");
}

WeylElt WeylGroup::identity() const {
  WeylElt e;
  e.datum = static_cast<std::uint8_t>(datum_->id);
  return e;
}

WeylElt WeylGroup::make(int u, const Exponent& lambda) const {
  if (u < 0 || u >= finite_order()) throw Error("finite Weyl group index out of range");
  if (static_cast<int>(lambda.size()) != datum_->rank) throw Error("coweight has wrong rank");
  WeylElt w = identity();
  w.u = static_cast<std::uint8_t>(u);
  for (std::size_t i = 0; i < lambda.size(); ++i) w.lambda[i] = lambda[i];
  return w;
}

WeylElt WeylGroup::translation(const Exponent& lambda) const {
  if (!datum_->in_lattice(lambda)) throw Error("translation not in the coweight lattice");
  return make(0, lambda);
}

Exponent WeylGroup::lambda(const WeylElt& x) const {
  return Exponent(x.lambda.begin(), x.lambda.begin() + datum_->rank);
}

WeylElt WeylGroup::simple_reflection(int i) const {
  if (i < 0 || i > datum_->rank) throw Error("simple reflection index out of range");
  if (i == 0) return s0_;
  return make(simple_index_[static_cast<std::size_t>(i - 1)], Exponent(static_cast<std::size_t>(datum_->rank), 0));
}

bool WeylGroup::has_omega_index(int k) const {
  for (const auto& p : omega_perms_) {
    if (p[0] == k) return true;
  }
  return false;
}

const WeylElt& WeylGroup::omega(int k) const {
  for (std::size_t i = 0; i < omegas_.size(); ++i) {
    if (omega_perms_[i][0] == k) return omegas_[i];
  }
  throw Error("no length-zero element with index " + std::to_string(k) + " in " + label());
}

const std::vector<int>& WeylGroup::omega_perm(int k) const {
  for (const auto& p : omega_perms_) {
    if (p[0] == k) return p;
  }
  throw Error("no length-zero element with index " + std::to_string(k) + " in " + label());
}

void WeylGroup::check_member(const WeylElt& x) const {
  if (x.datum != datum_->id) throw Error("datum mismatch");
}

WeylElt WeylGroup::multiply(const WeylElt& x, const WeylElt& y) const {
  if (x.datum != datum_->id || y.datum != datum_->id) throw Error("datum mismatch");
  WeylElt z = identity();
  z.u = static_cast<std::uint8_t>(finite_mult_[x.u][y.u]);
  const IntMatrix& m = finite_[x.u];
  for (int i = 0; i < datum_->rank; ++i) {
    int s = x.lambda[static_cast<std::size_t>(i)];
    for (int j = 0; j < datum_->rank; ++j) s += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * y.lambda[static_cast<std::size_t>(j)];
    z.lambda[static_cast<std::size_t>(i)] = s;
  }
  return z;
}

WeylElt WeylGroup::inverse(const WeylElt& x) const {
  check_member(x);
  const int uinv = finite_inv_[x.u];
  Exponent mu = act(uinv, lambda(x));
  for (auto& c : mu) c = -c;
  return make(uinv, mu);
}

int WeylGroup::length(const WeylElt& x) const {
  check_member(x);
  const Exponent lam = lambda(x);
  int total = 0;
  const auto& roots = datum_->positive_roots;
  for (std::size_t a = 0; a < roots.size(); ++a) {
    const int p = datum_->pairing(lam, roots[a]);
    total += positive_after_[x.u][a] ? std::abs(p) : std::abs(p - 1);
  }
  return total;
}

bool WeylGroup::is_descent(const WeylElt& x, int i, Side side) const {
  const WeylElt s = simple_reflection(i);
  const WeylElt y = side == Side::Left ? multiply(s, x) : multiply(x, s);
  return length(y) < length(x);
}

std::uint32_t WeylGroup::descents(const WeylElt& x, Side side) const {
  std::uint32_t mask = 0;
  const int lx = length(x);
  for (int i = 0; i < num_simple(); ++i) {
    const WeylElt s = simple_reflection(i);
    const WeylElt y = side == Side::Left ? multiply(s, x) : multiply(x, s);
    if (length(y) < lx) mask |= 1u << i;
  }
  return mask;
}

int WeylGroup::first_descent(const WeylElt& x, Side side) const {
  const std::uint32_t mask = descents(x, side);
  for (int i = 0; i < num_simple(); ++i) {
    if (mask & (1u << i)) return i;
  }
  return -1;
}

std::vector<int> WeylGroup::reduced_word(const WeylElt& x) const {
  std::vector<int> word;
  WeylElt w = x;
  for (int i = first_descent(w, Side::Left); i >= 0; i = first_descent(w, Side::Left)) {
    word.push_back(i);
    w = multiply(simple_reflection(i), w);
  }
  return word;
}

int WeylGroup::omega_index(const WeylElt& x) const {
  WeylElt w = x;
  for (int i = first_descent(w, Side::Left); i >= 0; i = first_descent(w, Side::Left)) {
    w = multiply(simple_reflection(i), w);
  }
  for (std::size_t k = 0; k < omegas_.size(); ++k) {
    if (omegas_[k] == w) return omega_perms_[k][0];
  }
  throw Error("descent stripping did not reach a length-zero element");
}

WeylElt WeylGroup::from_word(const std::vector<int>& word, int omega_index) const {
  WeylElt w = identity();
  for (int i : word) w = multiply(w, simple_reflection(i));
  return multiply(w, omega(omega_index));
}

bool WeylGroup::is_reduced(const std::vector<int>& word) const {
  for (int i : word) {
    if (i < 0 || i >= num_simple()) return false;
  }
  return length(from_word(word, 0)) == static_cast<int>(word.size());
}

bool WeylGroup::bruhat_leq(const WeylElt& x, const WeylElt& y) const {
  // If s y < y: x <= y iff sx <= sy (when sx < x) or x <= sy (when sx > x).
  WeylElt a = x, b = y;
  while (true) {
    const int la = length(a), lb = length(b);
    if (la > lb) return false;
    if (lb == 0) return a == b;
    if (la == 0 && omega_index(a) != omega_index(b)) return false;
    const int i = first_descent(b, Side::Left);
    const WeylElt s = simple_reflection(i);
    const WeylElt sa = multiply(s, a);
    if (length(sa) < la) a = sa;
    b = multiply(s, b);
  }
}

bool WeylGroup::canonical_less(const WeylElt& x, const WeylElt& y) const {
  const int lx = length(x), ly = length(y);
  if (lx != ly) return lx < ly;
  const auto wx = reduced_word(x), wy = reduced_word(y);
  if (wx != wy) return wx < wy;
  return omega_index(x) < omega_index(y);
}

std::vector<WeylElt> WeylGroup::ball(int radius) const {
  if (radius < 0) throw Error("radius must be non-negative");
  std::vector<WeylElt> all(omegas_.begin(), omegas_.end());
  std::vector<WeylElt> layer = all;
  std::unordered_set<WeylElt, WeylEltHash> seen(all.begin(), all.end());
  for (int k = 0; k < radius; ++k) {
    std::vector<WeylElt> next;
    for (const auto& w : layer) {
      for (int i = 0; i < num_simple(); ++i) {
        const WeylElt sw = multiply(simple_reflection(i), w);
        if (length(sw) == k + 1 && seen.insert(sw).second) next.push_back(sw);
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  struct Key {
    int length;
    std::vector<int> word;
    int omega;
    WeylElt w;
  };
  std::vector<Key> keys;
  keys.reserve(all.size());
  for (const auto& w : all) keys.push_back({length(w), reduced_word(w), omega_index(w), w});
  std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    return std::tie(a.length, a.word, a.omega) < std::tie(b.length, b.word, b.omega);
  });
  std::vector<WeylElt> out;
  out.reserve(keys.size());
  for (auto& k : keys) out.push_back(k.w);
  return out;
}

std::string WeylGroup::to_string(const WeylElt& x) const {
  const auto word = reduced_word(x);
  const int k = omega_index(x);
  std::string s;
  for (int i : word) s += "s" + std::to_string(i);
  if (k != 0) s += "w" + std::to_string(k);
  return s.empty() ? "e" : s;
}

WeylElt WeylGroup::parse(std::string_view text) const {
  std::vector<int> word;
  int omega_idx = 0;
  std::size_t i = 0;
  auto fail = [&] { return Error("cannot parse Weyl group element '" + std::string(text) + "'"); };
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '*' || c == '.' || c == ',') {
      ++i;
      continue;
    }
    if (c == 'e' && text.size() == 1) break;
    if (c != 's' && c != 'w') throw fail();
    std::size_t j = i + 1;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i + 1) throw fail();
    const int idx = std::stoi(std::string(text.substr(i + 1, j - i - 1)));
    if (c == 's') {
      if (idx < 0 || idx >= num_simple() || omega_idx != 0) throw fail();
      word.push_back(idx);
    } else {
      if (!has_omega_index(idx)) throw fail();
      omega_idx = idx;
    }
    i = j;
  }
  return from_word(word, omega_idx);
}

}  // namespace ahl
