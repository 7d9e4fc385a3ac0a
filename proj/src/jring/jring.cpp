#include "ahl/jring/jring.hpp"

#include "ahl/error.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace ahl {

JElt JElt::basis_element(const WeylElt& w, const LaurentPoly& c) {
  JElt j;
  j.add(w, c);
  return j;
}

LaurentPoly JElt::coeff(const WeylElt& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void JElt::add(const WeylElt& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void JElt::add_scaled(const JElt& other, const LaurentPoly& c) {
  for (const auto& [w, a] : other.terms_) add(w, c * a);
}

JElt& JElt::operator+=(const JElt& other) {
  for (const auto& [w, a] : other.terms_) add(w, a);
  return *this;
}

JElt& JElt::operator-=(const JElt& other) {
  for (const auto& [w, a] : other.terms_) add(w, -a);
  return *this;
}

JElt operator*(const LaurentPoly& c, const JElt& a) {
  JElt out;
  out.add_scaled(a, c);
  return out;
}

std::string JElt::to_string(const WeylGroup& group) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<WeylElt, LaurentPoly>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(),
            [&](const auto& a, const auto& b) { return group.canonical_less(a.first, b.first); });
  std::string s;
  for (const auto& [w, c] : sorted) {
    if (!s.empty()) s += " + ";
    const std::string t = "t[" + group.to_string(w) + "]";
    s += c == LaurentPoly(1) ? t : "(" + c.to_string() + ")" + t;
  }
  return s;
}

JRing::JRing(std::shared_ptr<const CellStructure> cells) : cells_(std::move(cells)) {}

namespace {

void require_product(const HeckeAlgebra& h, const WeylElt& x, const WeylElt& y, const char* what) {
  if (!h.product_certified(x, y)) {
    throw CertificationError(std::string(what) + ": truncation not certified for C[" + h.group().to_string(x) +
                             "]C[" + h.group().to_string(y) + "]");
  }
}

}  // namespace

BigInt JRing::gamma(const WeylElt& x, const WeylElt& y, const WeylElt& z) const {
  require_product(hecke(), x, y, "uncertified γ");
  const WeylElt zinv = group().inverse(z);
  const auto a = cells_->certified_a(z);
  if (!a) throw CertificationError("uncertified γ: a(" + group().to_string(z) + ")");
  return hecke().c_product(x, y).coeff(zinv).coeff(-*a);
}

JElt JRing::t_product(const WeylElt& x, const WeylElt& y) const {
  require_product(hecke(), x, y, "uncertified γ");
  JElt out;
  for (const auto& [w, h] : hecke().c_product(x, y).terms()) {
    const WeylElt z = group().inverse(w);
    const auto a = cells_->certified_a(z);
    if (!a) throw CertificationError("uncertified γ: a(" + group().to_string(z) + ")");
    out.add(w, LaurentPoly(h.coeff(-*a)));
  }
  return out;
}

JElt JRing::multiply(const JElt& a, const JElt& b) const {
  JElt out;
  for (const auto& [x, cx] : a.terms()) {
    for (const auto& [y, cy] : b.terms()) out.add_scaled(t_product(x, y), cx * cy);
  }
  return out;
}

JElt JRing::unit_of_cell(int cell) const {
  const CellPartition& lr = cells_->two_sided();
  if (!lr.cell_certified(cell)) {
    throw CertificationError("unit of uncertified cell " + std::to_string(cell));
  }
  JElt out;
  for (const auto& d : cells_->distinguished()) {
    if (lr.cell_of(d) == cell) out.add(d, 1);
  }
  return out;
}

JElt JRing::unit() const {
  JElt out;
  for (const auto& d : cells_->distinguished()) out.add(d, 1);
  return out;
}

JElt JRing::phi(const WeylElt& w) const {
  JElt out;
  for (const auto& d : cells_->distinguished()) {
    require_product(hecke(), w, d, "phi");
    const int ad = cells_->certified_a_or_throw(d, "phi");
    for (const auto& [z, h] : hecke().c_product(w, d).terms()) {
      const int az = cells_->certified_a_or_throw(z, "phi");
      if (az == ad) out.add(z, h);
    }
  }
  return out;
}

JElt JRing::phi(const HeckeElt& a) const {
  if (a.basis() != Basis::C) throw Error("phi expects a C-basis element");
  JElt out;
  for (const auto& [w, c] : a.terms()) out.add_scaled(phi(w), c);
  return out;
}

JElt JRing::phi_c(const WeylElt& w, int cell) const { return restrict_to_cell(phi(w), cell); }

JElt JRing::psi(const HeckeElt& a) {
  if (a.basis() != Basis::C) throw Error("psi expects a C-basis element");
  JElt out;
  for (const auto& [w, c] : a.terms()) out.add(w, c);
  return out;
}

HeckeElt JRing::psi_inv(const JElt& a) {
  HeckeElt out(Basis::C);
  for (const auto& [w, c] : a.terms()) out.add(w, c);
  return out;
}

JElt JRing::restrict_to_cell(const JElt& a, int cell) const {
  return psi(ht_c(psi_inv(a), cell, *cells_));
}

JElt JRing::h_action(const WeylElt& x, const JElt& a, int cell) const {
  const CellPartition& lr = cells_->two_sided();
  JElt out;
  for (const auto& [y, c] : a.terms()) {
    const int idx = table().index_of(y);
    if (idx < 0 || !lr.certified_index(idx)) {
      throw CertificationError("h_action: uncertified cell membership of " + group().to_string(y));
    }
    if (lr.cell_of_index(idx) != cell) throw Error("h_action: t[" + group().to_string(y) + "] outside the cell");
    require_product(hecke(), x, y, "h_action");
    out.add_scaled(psi(ht_c(hecke().c_product(x, y), cell, *cells_)), c);
  }
  return out;
}

JElt JRing::h_action(const HeckeElt& h, const JElt& a, int cell) const {
  if (h.basis() != Basis::C) throw Error("h_action expects a C-basis element");
  JElt out;
  for (const auto& [w, c] : h.terms()) out.add_scaled(h_action(w, a, cell), c);
  return out;
}

int JRing::certified_gamma_radius() const {
  const KLTable& t = table();
  for (int r = t.radius() / 2; r >= 0; --r) {
    bool ok = true;
    for (int i = 0; i < static_cast<int>(t.size()) && ok; ++i) {
      if (t.length(i) <= r) ok = cells_->certified_a(t.element(i)).has_value();
    }
    if (ok) return r;
  }
  return -1;
}

std::vector<GammaEntry> JRing::gamma_table(int r) const {
  const KLTable& t = table();
  std::vector<std::tuple<int, int, int, BigInt>> rows;
  for (int x = 0; x < static_cast<int>(t.size()); ++x) {
    if (t.length(x) > r) continue;
    for (int y = 0; y < static_cast<int>(t.size()); ++y) {
      if (t.length(y) > r) continue;
      for (const auto& [w, h] : hecke().c_product(t.element(x), t.element(y)).terms()) {
        const int wi = t.index_of(w);
        if (t.length(wi) > r) continue;
        const int zi = t.inverse_index(wi);
        const BigInt g = gamma(t.element(x), t.element(y), t.element(zi));
        if (g != 0) rows.emplace_back(x, y, zi, g);
      }
    }
  }
  std::sort(rows.begin(), rows.end());
  std::vector<GammaEntry> out;
  for (const auto& [x, y, z, g] : rows) out.push_back({t.element(x), t.element(y), t.element(z), g});
  return out;
}

void parallel_for(int n, int jobs, const std::function<void(int)>& body) {
  jobs = std::max(1, std::min(jobs, n));
  if (jobs == 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (int k = 0; k < jobs; ++k) {
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = {"leading_term_product", "phi_cell_from_d", "phi_times_t", "module",
                                                 "j_assoc", "unit", "phi_hom"};
  return names;
}

namespace {

struct Outcome {
  enum Kind { Skip, Pass, Fail } kind = Skip;
  std::string witness;
};

using Check = std::function<Outcome()>;

Outcome compare(const JElt& lhs, const JElt& rhs, const WeylGroup& g, const std::string& inputs) {
  if (lhs == rhs) return {Outcome::Pass, {}};
  return {Outcome::Fail, inputs + ": " + lhs.to_string(g) + " != " + rhs.to_string(g)};
}

}  // namespace

IdentityReport verify_identity(const std::string& name, const JRing& j, int jobs) {
  const KLTable& t = j.table();
  const WeylGroup& g = j.group();
  const CellStructure& cs = j.cells();
  const CellPartition& lr = cs.two_sided();
  const int n = static_cast<int>(t.size());
  auto str = [&](int i) { return g.to_string(t.element(i)); };
  auto tj = [&](int i) { return JElt::basis_element(t.element(i)); };

  std::vector<int> certified;
  for (int i = 0; i < n; ++i) {
    if (lr.certified_index(i) && lr.cell_certified(lr.cell_of_index(i))) certified.push_back(i);
  }
  std::vector<Check> checks;
  if (name == "leading_term_product") {
    for (int x2 : certified) {
      const int c = lr.cell_of_index(x2);
      for (int x3 : certified) {
        if (lr.cell_of_index(x3) != c) continue;
        for (int x1 = 0; x1 < n; ++x1) {
          checks.push_back([&, x1, x2, x3, c] {
            const JElt lhs = j.multiply(JRing::psi(ht_c(j.hecke().c_product(t.element(x1), t.element(x2)), c, cs)), tj(x3));
            const JElt rhs = j.h_action(t.element(x1), j.multiply(tj(x2), tj(x3)), c);
            return compare(lhs, rhs, g, "(" + str(x1) + "," + str(x2) + "," + str(x3) + ")");
          });
        }
      }
    }
  } else if (name == "phi_cell_from_d") {
    for (int c = 0; c < lr.num_cells(); ++c) {
      if (!lr.cell_certified(c)) continue;
      for (int w = 0; w < n; ++w) {
        checks.push_back([&, w, c] {
          const JElt lhs = j.phi_c(t.element(w), c);
          JElt rhs;
          for (const auto& d : cs.distinguished()) {
            if (lr.cell_of(d) != c) continue;
            if (!j.hecke().product_certified(t.element(w), d)) {
              throw CertificationError("truncation not certified");
            }
            rhs += JRing::psi(ht_c(j.hecke().c_product(t.element(w), d), c, cs));
          }
          return compare(lhs, rhs, g, "w=" + str(w) + " cell=" + std::to_string(c));
        });
      }
    }
  } else if (name == "phi_times_t") {
    for (int y : certified) {
      const int c = lr.cell_of_index(y);
      for (int x = 0; x < n; ++x) {
        checks.push_back([&, x, y, c] {
          const JElt lhs = JRing::psi(ht_c(j.hecke().c_product(t.element(x), t.element(y)), c, cs));
          const JElt rhs = j.multiply(j.phi_c(t.element(x), c), tj(y));
          return compare(lhs, rhs, g, "(" + str(x) + "," + str(y) + ")");
        });
      }
    }
  } else if (name == "module") {
    for (int z : certified) {
      const int c = lr.cell_of_index(z);
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          checks.push_back([&, x, y, z, c] {
            const JElt lhs = j.h_action(t.element(x), j.h_action(t.element(y), tj(z), c), c);
            const JElt rhs = j.h_action(j.hecke().c_product(t.element(x), t.element(y)), tj(z), c);
            return compare(lhs, rhs, g, "(" + str(x) + "," + str(y) + "," + str(z) + ")");
          });
        }
      }
    }
  } else if (name == "j_assoc") {
    for (int x : certified)
      for (int y : certified)
        for (int z : certified) {
          checks.push_back([&, x, y, z] {
            const JElt lhs = j.multiply(j.t_product(t.element(x), t.element(y)), tj(z));
            const JElt rhs = j.multiply(tj(x), j.t_product(t.element(y), t.element(z)));
            return compare(lhs, rhs, g, "(" + str(x) + "," + str(y) + "," + str(z) + ")");
          });
        }
  } else if (name == "unit") {
    for (int x : certified) {
      checks.push_back([&, x] {
        const JElt one = j.unit();
        const JElt one_c = j.unit_of_cell(lr.cell_of_index(x));
        const std::string in = "x=" + str(x);
        for (const JElt& e : {j.multiply(one, tj(x)), j.multiply(tj(x), one), j.multiply(one_c, tj(x)),
                              j.multiply(tj(x), one_c)}) {
          Outcome o = compare(e, tj(x), g, in);
          if (o.kind == Outcome::Fail) return o;
        }
        return Outcome{Outcome::Pass, {}};
      });
    }
  } else if (name == "phi_hom") {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        checks.push_back([&, x, y] {
          if (!j.hecke().product_certified(t.element(x), t.element(y))) {
            throw CertificationError("truncation not certified");
          }
          const JElt lhs = j.phi(j.hecke().c_product(t.element(x), t.element(y)));
          const JElt rhs = j.multiply(j.phi(t.element(x)), j.phi(t.element(y)));
          return compare(lhs, rhs, g, "(" + str(x) + "," + str(y) + ")");
        });
      }
  } else {
    throw Error("unknown identity '" + name + "'");
  }

  std::vector<Outcome> outcomes(checks.size());
  parallel_for(static_cast<int>(checks.size()), jobs, [&](int i) {
    try {
      outcomes[static_cast<std::size_t>(i)] = checks[static_cast<std::size_t>(i)]();
    } catch (const CertificationError&) {
      outcomes[static_cast<std::size_t>(i)] = Outcome{};
    }
  });
  IdentityReport report;
  report.identity = name;
  for (const auto& o : outcomes) {
    if (o.kind == Outcome::Skip) {
      ++report.skipped;
      continue;
    }
    ++report.checked;
    if (o.kind == Outcome::Fail) report.failed.push_back(o.witness);
  }
  return report;
}

}  // namespace ahl
