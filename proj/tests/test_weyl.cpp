#include "ahl/weyl/weyl_group.hpp"
#include "ahl/error.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <map>
#include <queue>

using namespace ahl;

namespace {

// Word length by breadth-first search on the Cayley graph, starting from Omega.
std::map<WeylElt, int> bfs_lengths(const WeylGroup& g, int radius) {
  std::map<WeylElt, int> dist;
  std::queue<WeylElt> q;
  for (const auto& w : g.omegas()) {
    dist[w] = 0;
    q.push(w);
  }
  while (!q.empty()) {
    const WeylElt x = q.front();
    q.pop();
    if (dist[x] == radius) continue;
    for (int i = 0; i < g.num_simple(); ++i) {
      const WeylElt y = g.multiply(g.simple_reflection(i), x);
      if (!dist.count(y)) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
  }
  return dist;
}

}  // namespace

TEST_CASE("registered data and ball sizes") {
  CHECK(WeylGroup::get("A1~").ball(12).size() == 25);
  CHECK(WeylGroup::get("A1~ext").ball(5).size() == 22);
  CHECK(WeylGroup::get("A1~ext").omegas().size() == 2);
  CHECK(WeylGroup::get("A2~ext").omegas().size() == 3);
  CHECK(WeylGroup::get("A2~").finite_order() == 6);
  // Poincare series of affine A2: 1 + 3q + 6q^2 + 9q^3 + ...
  const auto ball = WeylGroup::get("A2~").ball(4);
  std::map<int, int> count;
  for (const auto& w : ball) count[WeylGroup::get("A2~").length(w)]++;
  CHECK(count == std::map<int, int>{{0, 1}, {1, 3}, {2, 6}, {3, 9}, {4, 12}});
  CHECK_THROWS_AS(WeylGroup::get("E8~"), Error);
  CHECK_THROWS_AS(WeylGroup::get("A1~").ball(-1), Error);
}

TEST_CASE("length agrees with breadth-first search") {
  for (const char* label : {"A1~", "A1~ext", "A2~", "A2~ext"}) {
    const WeylGroup& g = WeylGroup::get(label);
    const int r = g.datum().rank == 1 ? 8 : 5;
    const auto dist = bfs_lengths(g, r);
    const auto ball = g.ball(r);
    CHECK(ball.size() == dist.size());
    for (const auto& w : ball) {
      REQUIRE(dist.count(w));
      CHECK(g.length(w) == dist.at(w));
      const auto word = g.reduced_word(w);
      CHECK(static_cast<int>(word.size()) == g.length(w));
      CHECK(g.is_reduced(word));
      CHECK(g.from_word(word, g.omega_index(w)) == w);
      CHECK(g.parse(g.to_string(w)) == w);
      CHECK(g.length(g.inverse(w)) == g.length(w));
    }
  }
}

TEST_CASE("group axioms and descents") {
  const WeylGroup& g = WeylGroup::get("A2~ext");
  const auto ball = g.ball(3);
  for (const auto& x : ball) {
    CHECK(g.multiply(x, g.inverse(x)) == g.identity());
    for (int i = 0; i < g.num_simple(); ++i) {
      const WeylElt s = g.simple_reflection(i);
      CHECK(g.multiply(s, s) == g.identity());
      const int l = g.length(g.multiply(s, x));
      CHECK(std::abs(l - g.length(x)) == 1);
      CHECK(g.is_descent(x, i, Side::Left) == (l < g.length(x)));
      CHECK(g.is_descent(x, i, Side::Right) == (g.length(g.multiply(x, s)) < g.length(x)));
    }
    for (const auto& y : ball) {
      CHECK(g.multiply(g.multiply(x, y), g.inverse(y)) == x);
      CHECK(g.length(g.multiply(x, y)) <= g.length(x) + g.length(y));
    }
  }
  for (int k = 0; k < static_cast<int>(g.omegas().size()); ++k) {
    const WeylElt& w = g.omega(k);
    CHECK(g.length(w) == 0);
    for (int i = 0; i < g.num_simple(); ++i) {
      const WeylElt conj = g.multiply(g.multiply(w, g.simple_reflection(i)), g.inverse(w));
      CHECK(conj == g.simple_reflection(g.omega_perm(k)[static_cast<std::size_t>(i)]));
    }
  }
}

TEST_CASE("s0 is the affine reflection") {
  const WeylGroup& g = WeylGroup::get("A1~");
  const WeylElt s0 = g.simple_reflection(0);
  CHECK(g.lambda(s0) == Exponent{2});
  CHECK(g.length(g.translation({2})) == 2);
  CHECK(g.to_string(g.translation({2})) == "s0s1");
  const WeylGroup& ge = WeylGroup::get("A1~ext");
  CHECK(ge.length(ge.translation({1})) == 1);
  CHECK(ge.to_string(ge.translation({1})) == "s0w1");
}

TEST_CASE("bruhat order matches the subword oracle") {
  for (const char* label : {"A1~", "A1~ext", "A2~", "A2~ext"}) {
    const WeylGroup& g = WeylGroup::get(label);
    const auto ball = g.ball(g.datum().rank == 1 ? 6 : 4);
    for (const auto& x : ball) {
      for (const auto& y : ball) CHECK(g.bruhat_leq(x, y) == oracle::subword_leq(g, x, y));
    }
  }
}

TEST_CASE("parsing rejects malformed words") {
  const WeylGroup& g = WeylGroup::get("A1~");
  CHECK_THROWS_AS(g.parse("s2"), Error);
  CHECK_THROWS_AS(g.parse("x1"), Error);
  CHECK_THROWS_AS(g.parse("w1"), Error);
  CHECK(g.parse("e") == g.identity());
  CHECK(g.parse("s1s1") == g.identity());
  CHECK_FALSE(g.is_reduced({1, 1}));
}
