#include "ahl/hecke/kl_table.hpp"

#include "ahl/error.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace ahl {

namespace {

const LaurentPoly kZero;

const LaurentPoly& lookup(const std::vector<KLTable::Entry>& row, int x) {
  auto it = std::lower_bound(row.begin(), row.end(), x,
                             [](const KLTable::Entry& e, int v) { return e.x < v; });
  if (it == row.end() || it->x != x) return kZero;
  return it->p;
}

}  // namespace

KLTable::KLTable(const WeylGroup& group, int radius) : group_(&group), radius_(radius) {
  elements_ = group.ball(radius);
  const std::size_t n = elements_.size();
  for (std::size_t i = 0; i < n; ++i) index_.emplace(elements_[i], static_cast<int>(i));
  lengths_.resize(n);
  ldesc_.resize(n);
  rdesc_.resize(n);
  inverse_.resize(n);
  lmul_.assign(n, std::vector<int>(static_cast<std::size_t>(group.num_simple()), -1));
  rmul_ = lmul_;
  for (std::size_t i = 0; i < n; ++i) {
    const WeylElt& w = elements_[i];
    lengths_[i] = group.length(w);
    ldesc_[i] = group.descents(w, Side::Left);
    rdesc_[i] = group.descents(w, Side::Right);
    inverse_[i] = index_of(group.inverse(w));
    for (int s = 0; s < group.num_simple(); ++s) {
      lmul_[i][static_cast<std::size_t>(s)] = index_of(group.multiply(group.simple_reflection(s), w));
      rmul_[i][static_cast<std::size_t>(s)] = index_of(group.multiply(w, group.simple_reflection(s)));
    }
  }
  rows_.resize(n);
  mu_.resize(n);
}

int KLTable::index_of(const WeylElt& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? -1 : it->second;
}

int KLTable::require_index(const WeylElt& w) const {
  const int idx = index_of(w);
  if (idx < 0) {
    group_->check_member(w);
    throw CertificationError("uncached radius: " + group_->to_string(w) + " has length " +
                             std::to_string(group_->length(w)) + " > " + std::to_string(radius_));
  }
  return idx;
}

int KLTable::left_mult(int idx, int i) const {
  return lmul_[static_cast<std::size_t>(idx)][static_cast<std::size_t>(i)];
}

int KLTable::right_mult(int idx, int i) const {
  return rmul_[static_cast<std::size_t>(idx)][static_cast<std::size_t>(i)];
}

void KLTable::compute_row(int y) {
  const auto yy = static_cast<std::size_t>(y);
  if (lengths_[yy] == 0) {
    rows_[yy] = {Entry{y, LaurentPoly(1)}};
    finish_row(y);
    return;
  }
  int s = 0;
  while (!(ldesc_[yy] & (1u << s))) ++s;
  const int yp = left_mult(y, s);  // y = s * yp, yp < y
  const auto& prow = rows_[static_cast<std::size_t>(yp)];
  std::vector<int> candidates;
  for (const auto& e : prow) {
    candidates.push_back(e.x);
    candidates.push_back(left_mult(e.x, s));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<Mu> corrections;
  for (const auto& m : mu_[static_cast<std::size_t>(yp)]) {
    if (ldesc_[static_cast<std::size_t>(m.z)] & (1u << s)) corrections.push_back(m);
  }
  const int ly = lengths_[yy];
  std::vector<Entry> row;
  for (int x : candidates) {
    if (x < 0) throw Error("KL recursion left the ball");
    const int sx = left_mult(x, s);
    const bool c = (ldesc_[static_cast<std::size_t>(x)] & (1u << s)) != 0;
    LaurentPoly p;
    if (sx >= 0) p.add_scaled(lookup(prow, sx), 1, c ? 0 : 2);
    p.add_scaled(lookup(prow, x), 1, c ? 2 : 0);
    for (const auto& m : corrections) {
      const LaurentPoly& pxz = lookup(rows_[static_cast<std::size_t>(m.z)], x);
      if (!pxz.is_zero()) p.add_scaled(pxz, -m.mu, ly - lengths_[static_cast<std::size_t>(m.z)]);
    }
    if (!p.is_zero()) row.push_back(Entry{x, std::move(p)});
  }
  rows_[yy] = std::move(row);
  finish_row(y);
}

void KLTable::finish_row(int y) {
  const auto yy = static_cast<std::size_t>(y);
  std::vector<Mu> mus;
  for (const auto& e : rows_[yy]) {
    const int d = lengths_[yy] - lengths_[static_cast<std::size_t>(e.x)];
    if (d <= 0) {
      if (e.x != y || !(e.p == LaurentPoly(1))) throw Error("KL table: P_{y,y} != 1");
      continue;
    }
    if (e.p.max_exponent() > d - 1) throw Error("KL table: degree bound violated");
    if (d % 2 == 1) {
      const BigInt m = e.p.coeff(d - 1);
      if (m != 0) mus.push_back(Mu{e.x, m});
    }
  }
  mu_[yy] = std::move(mus);
}

std::shared_ptr<const KLTable> KLTable::compute(const WeylGroup& group, int radius, int jobs) {
  std::shared_ptr<KLTable> t(new KLTable(group, radius));
  const int n = static_cast<int>(t->elements_.size());
  int start = 0;
  while (start < n) {
    int end = start;
    while (end < n && t->lengths_[static_cast<std::size_t>(end)] == t->lengths_[static_cast<std::size_t>(start)]) ++end;
    const int workers = std::max(1, std::min(jobs, end - start));
    if (workers == 1) {
      for (int y = start; y < end; ++y) t->compute_row(y);
    } else {
      std::atomic<int> next{start};
      std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (int y = next++; y < end; y = next++) t->compute_row(y);
          } catch (...) {
            errors[static_cast<std::size_t>(w)] = std::current_exception();
          }
        });
      }
      for (auto& th : pool) th.join();
      for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
    }
    start = end;
  }
  return t;
}

std::shared_ptr<const KLTable> KLTable::from_entries(const WeylGroup& group, int radius,
                                                     const std::vector<RawEntry>& entries) {
  std::shared_ptr<KLTable> t(new KLTable(group, radius));
  for (const auto& e : entries) {
    const int x = t->index_of(e.x);
    const int y = t->index_of(e.y);
    if (x < 0 || y < 0) throw Error("KL table entry outside the ball of radius " + std::to_string(radius));
    if (e.p.is_zero()) throw Error("KL table entry with zero polynomial");
    if (!group.bruhat_leq(e.x, e.y)) throw Error("KL table entry with x not below y");
    if (!e.p.is_zero() && e.p.min_exponent() < 0) throw Error("KL table entry with negative degree");
    for (const auto& [k, c] : e.p.terms()) {
      if (k % 2 != 0) throw Error("KL table entry with odd v-exponent");
    }
    t->rows_[static_cast<std::size_t>(y)].push_back(Entry{x, e.p});
  }
  for (std::size_t y = 0; y < t->rows_.size(); ++y) {
    auto& row = t->rows_[y];
    std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.x < b.x; });
    for (std::size_t i = 1; i < row.size(); ++i) {
      if (row[i].x == row[i - 1].x) throw Error("duplicate KL table entry");
    }
    if (lookup(row, static_cast<int>(y)).is_zero()) throw Error("KL table is missing P_{y,y}");
    t->finish_row(static_cast<int>(y));
  }
  return t;
}

LaurentPoly KLTable::p_index(int x, int y) const { return lookup(rows_[static_cast<std::size_t>(y)], x); }

LaurentPoly KLTable::P(const WeylElt& x, const WeylElt& y) const {
  const int yi = require_index(y);
  const int xi = index_of(x);
  if (xi < 0) return {};
  return p_index(xi, yi);
}

BigInt KLTable::mu(const WeylElt& x, const WeylElt& y) const {
  const int yi = require_index(y);
  const int xi = index_of(x);
  if (xi < 0) return 0;
  for (const auto& m : mu_[static_cast<std::size_t>(yi)]) {
    if (m.z == xi) return m.mu;
  }
  // mu is symmetric in the sense used for W-graphs.
  if (lengths_[static_cast<std::size_t>(xi)] > lengths_[static_cast<std::size_t>(yi)]) {
    for (const auto& m : mu_[static_cast<std::size_t>(xi)]) {
      if (m.z == yi) return m.mu;
    }
  }
  return 0;
}

std::size_t KLTable::entry_count() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

int KLTable::max_q_degree() const {
  int d = 0;
  for (const auto& r : rows_)
    for (const auto& e : r) d = std::max(d, e.p.max_exponent() / 2);
  return d;
}

bool KLTable::agrees_with(const KLTable& other) const {
  if (group_ != other.group_) return false;
  const KLTable& small = radius_ <= other.radius_ ? *this : other;
  const KLTable& large = radius_ <= other.radius_ ? other : *this;
  for (std::size_t y = 0; y < small.elements_.size(); ++y) {
    const int ly = large.index_of(small.elements_[y]);
    if (ly < 0) return false;
    const auto& srow = small.rows_[y];
    const auto& lrow = large.rows_[static_cast<std::size_t>(ly)];
    if (srow.size() != lrow.size()) return false;
    for (const auto& e : srow) {
      const int lx = large.index_of(small.elements_[static_cast<std::size_t>(e.x)]);
      if (lx < 0 || !(lookup(lrow, lx) == e.p)) return false;
    }
  }
  return true;
}

}  // namespace ahl
