#include <doctest.h>

#include <random>
#include <set>

#include "genrank/error.hpp"
#include "genrank/poset.hpp"
#include "testkit.hpp"

using namespace genrank;

namespace {

Poset star() { return Poset::build({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "b"}, {"d", "b"}}); }

Subposet from_mask(std::size_t n, unsigned mask) {
  std::vector<Index> m;
  for (Index i = 0; i < n; ++i)
    if (mask >> i & 1u) m.push_back(i);
  return Subposet(m);
}

// Convexity plus comparability-graph connectivity, checked directly on the order relation.
bool brute_interval(const Poset& p, const Subposet& s) {
  if (s.empty()) return false;
  for (Index a : s.members())
    for (Index b : s.members())
      for (Index c = 0; c < p.size(); ++c)
        if (p.leq(a, c) && p.leq(c, b) && !s.contains(c)) return false;
  std::set<Index> seen{s.members().front()};
  std::vector<Index> stack{s.members().front()};
  while (!stack.empty()) {
    Index x = stack.back();
    stack.pop_back();
    for (Index y : s.members())
      if (p.comparable(x, y) && seen.insert(y).second) stack.push_back(y);
  }
  return seen.size() == s.size();
}

}  // namespace

TEST_SUITE_BEGIN("poset");

TEST_CASE("build closes relations and reduces covers") {
  Poset p = Poset::build({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}, {"x", "z"}});
  CHECK(p.covers().size() == 2);
  CHECK(p.leq(p.index_of("x"), p.index_of("z")));
  CHECK_FALSE(p.leq(p.index_of("z"), p.index_of("x")));
  CHECK(p.cover_id(p.index_of("x"), p.index_of("z")) == std::nullopt);
  CHECK(p.topological_order().front() == p.index_of("x"));
}

TEST_CASE("build rejects malformed input") {
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::Parse;
  };
  CHECK(code([] { Poset::build({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }) == Errc::CycleDetected);
  CHECK_NOTHROW(Poset::build({"a"}, {{"a", "a"}}));  // reflexive pairs are harmless
  CHECK(code([] { Poset::build({"a", "a"}, {}); }) == Errc::DuplicateElement);
  CHECK(code([] { Poset::build({"a"}, {{"a", "q"}}); }) == Errc::UnknownElement);
}

TEST_CASE("connected subposets of the star") {
  Poset p = star();
  auto con = enumerate_connected_subposets(p, 0);
  CHECK(con.size() == 11);
  // a, c, d are pairwise incomparable and only meet through b
  CHECK_FALSE(is_connected_subposet(p, subposet_of(p, {"a", "c"})));
  CHECK(is_connected_subposet(p, subposet_of(p, {"a", "b", "c"})));
  CHECK(std::is_sorted(con.begin(), con.end()));
  CHECK(enumerate_connected_subposets(p, 2).size() == 7);
  CHECK(neighborhood(p, subposet_of(p, {"b"})).size() == 3);
  CHECK(perimeter(p, subposet_of(p, {"a"})) == 1);
  CHECK(entourage(p, subposet_of(p, {"b"}), 2).size() == 3);
  CHECK(connected_supersets(p, subposet_of(p, {"a"})).size() == 5);
  CHECK_THROWS_AS(check_subposet(p, Subposet{7}), Error);
  CHECK_THROWS_AS(check_subposet(p, Subposet{}), Error);
}

TEST_CASE("induced covers skip missing middles") {
  Poset chain = Poset::build({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}});
  auto cov = induced_covers(chain, Subposet{0, 2});
  REQUIRE(cov.size() == 1);
  CHECK(cov.front() == std::pair<Index, Index>{0, 2});
  // {0,2} is not Hasse-connected but is comparability-connected; it is not convex.
  CHECK_FALSE(is_connected_subposet(chain, Subposet{0, 2}));
  CHECK_FALSE(is_interval(chain, Subposet{0, 2}));
  CHECK(is_interval(chain, Subposet{0, 1, 2}));
}

TEST_CASE("random posets: enumeration, connectivity and intervals against brute force") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + trial % 7;
    Poset p = testkit::random_poset(rng, n, 0.4);
    std::set<Subposet> con, ivs;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      Subposet s = from_mask(n, mask);
      bool c = testkit::brute_connected(p, s);
      CHECK(is_connected_subposet(p, s) == c);
      if (c) con.insert(s);
      bool in = brute_interval(p, s);
      CHECK(is_interval(p, s) == in);
      if (in) ivs.insert(s);
    }
    auto got = enumerate_connected_subposets(p, 0);
    CHECK(std::set<Subposet>(got.begin(), got.end()) == con);
    CHECK(got.size() == con.size());
    auto got_iv = enumerate_intervals(p, 0);
    CHECK(std::set<Subposet>(got_iv.begin(), got_iv.end()) == ivs);
  }
}

TEST_CASE("Moebius function of Con^op matches the closed form") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + trial % 5;
    Poset p = trial % 2 ? testkit::random_poset(rng, n, 0.5) : testkit::random_tree_poset(rng, n);
    ConOpMobius mu(p);
    auto con = enumerate_connected_subposets(p, 0);
    for (const auto& i : con)
      for (const auto& j : con)
        if (j.includes(i)) CHECK(mu(j, i) == testkit::mobius_closed_form(p, j, i));
  }
  Poset p = star();
  CHECK(mobius_conop(p, whole(p), subposet_of(p, {"b"})) == -1);
  CHECK(mobius_conop(p, subposet_of(p, {"a", "b", "c"}), subposet_of(p, {"b"})) == 1);
  CHECK_THROWS_AS(mobius_conop(p, subposet_of(p, {"a"}), subposet_of(p, {"b"})), Error);
  CHECK_THROWS_AS(mobius_conop(p, subposet_of(p, {"a", "c"}), subposet_of(p, {"a"})), Error);
}

TEST_CASE("entourage sum equals Moebius sum for arbitrary rank functions") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    Poset p = testkit::random_poset(rng, 2 + trial % 5, 0.45);
    std::map<Subposet, std::int64_t> table;
    std::uniform_int_distribution<int> val(-3, 3);
    for (const auto& s : enumerate_connected_subposets(p, 0)) table[s] = val(rng);
    RankFn rk = [&](const Subposet& s) { return table.count(s) ? table.at(s) : 0; };
    ConOpMobius mu(p);
    for (const auto& [s, _] : table) CHECK(entourage_sum(p, s, rk) == mobius_sum(p, s, rk, &mu));
  }
}

TEST_SUITE_END();
