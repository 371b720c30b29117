// Tests for the infinite-antichain family generators and the finite
// incomparability / forbidden-pattern verifiers built on top of them.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <optional>
#include <vector>

#include "test_util.hpp"
#include "wqoim/antichains.hpp"
#include "wqoim/containment.hpp"
#include "wqoim/graph.hpp"

using namespace wqoim;

namespace {

// Definition-level validity of an induced-minor model: branch sets are
// nonempty, pairwise disjoint, connected in the host, and joined by a
// host edge exactly when the pattern vertices are adjacent.  Written
// from scratch so a bug in find_model cannot vouch for itself.
bool valid_induced_minor_model(const Graph& pat, const Graph& host,
                               const ContainmentModel& model) {
  if (static_cast<int>(model.branch_sets.size()) != pat.n()) return false;
  std::uint64_t seen = 0;
  for (std::uint64_t b : model.branch_sets) {
    if (b == 0 || (b & seen)) return false;
    if (!mask_connected(host, b)) return false;
    seen |= b;
  }
  for (int p = 0; p < pat.n(); ++p)
    for (int q = p + 1; q < pat.n(); ++q) {
      bool joined = false;
      for (int v = 0; v < host.n() && !joined; ++v)
        if (model.branch_sets[static_cast<std::size_t>(p)] >> v & 1)
          if (host.adj_mask(v) & model.branch_sets[static_cast<std::size_t>(q)]) joined = true;
      if (joined != pat.has_edge(p, q)) return false;
    }
  return true;
}

// Chordality via simplicial elimination: repeatedly delete a vertex
// whose remaining neighbourhood is a clique.
bool peo_chordal(const Graph& g) {
  std::uint64_t alive = g.n() == 64 ? ~0ULL : (1ULL << g.n()) - 1;
  for (int round = 0; round < g.n(); ++round) {
    bool removed = false;
    for (int v = 0; v < g.n() && !removed; ++v) {
      if (!(alive >> v & 1)) continue;
      const std::uint64_t nb = g.adj_mask(v) & alive;
      bool clique = true;
      for (int u = 0; u < g.n() && clique; ++u)
        if (nb >> u & 1)
          if ((nb & ~g.adj_mask(u)) != (1ULL << u)) clique = false;
      if (clique) {
        alive &= ~(1ULL << v);
        removed = true;
      }
    }
    if (!removed) return false;
  }
  return true;
}

bool same_pairs(const IncomparabilityReport& a, const IncomparabilityReport& b) {
  if (a.pairs.size() != b.pairs.size()) return false;
  for (std::size_t i = 0; i < a.pairs.size(); ++i) {
    if (a.pairs[i].index_a != b.pairs[i].index_a) return false;
    if (a.pairs[i].index_b != b.pairs[i].index_b) return false;
    if (a.pairs[i].outcome != b.pairs[i].outcome) return false;
    if (a.pairs[i].nodes != b.pairs[i].nodes) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("family generators produce the documented shapes") {
  for (int k = 2; k <= 6; ++k) {
    const Graph g = gen(Family::DoubleWheel, k);
    CHECK(g.n() == 2 * k + 2);
    CHECK(g.m() == 4 * k);
    CHECK(g.is_connected());
    const int hub_even = 2 * k;
    const int hub_odd = 2 * k + 1;
    CHECK_FALSE(g.has_edge(hub_even, hub_odd));
    CHECK(g.degree(hub_even) == k);
    CHECK(g.degree(hub_odd) == k);
    for (int i = 0; i < 2 * k; ++i) {
      CHECK(g.has_edge(i, (i + 1) % (2 * k)));
      CHECK(g.has_edge(i, i % 2 == 0 ? hub_even : hub_odd));
      CHECK(g.degree(i) == 3);
    }
  }
  const Graph w2 = gen(Family::DoubleWheel, 2);
  CHECK(w2.is_isomorphic(Graph::from_edges(
      6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 2}, {5, 1}, {5, 3}})));

  for (int n = 6; n <= 9; ++n) {
    const Graph g = gen(Family::Antihole, n);
    CHECK(g.n() == n);
    CHECK(g.m() == n * (n - 3) / 2);
    for (int v = 0; v < n; ++v) CHECK(g.degree(v) == n - 3);
    CHECK(g.complement().is_isomorphic(cycle(n)));
  }
  CHECK(gen(Family::Antihole, 6).is_isomorphic(prism()));

  for (int k = 1; k <= 3; ++k) {
    const Graph g = gen(Family::MatousekChain, k);
    CHECK(g.n() == 3 * k + 10);
    CHECK(g.m() == 7 * k + 19);
    // the spine ends each hub a 5-wheel and sit on the rim of the next
    // wheel, so their degree is five spokes plus two rim edges
    CHECK(g.degree(0) == 7);
    CHECK(g.degree(k + 1) == 7);
    CHECK(g.is_k_connected(2));
  }

  for (int m = 1; m <= 3; ++m) {
    const Graph g = gen(Family::NestedLozenge, m);
    CHECK(g.n() == 2 * m + 6);
    CHECK(g.m() == 4 * m + 4);
    CHECK(g.is_connected());
    int pendants = 0;
    for (int v = 0; v < g.n(); ++v) pendants += g.degree(v) == 1;
    CHECK(pendants == 4);
  }
  const Graph nl1 = gen(Family::NestedLozenge, 1);
  CHECK(nl1.is_isomorphic(Graph::from_edges(
      8, {{0, 2}, {2, 1}, {1, 3}, {3, 0}, {2, 4}, {3, 5}, {0, 6}, {1, 7}})));
}

TEST_CASE("the interval family is reproduced exactly") {
  const std::vector<Interval> t3 = ding_intervals(3);
  const std::vector<Interval> want = {
      {-6, -6}, {-5, -5}, {-4, -4}, {-3, -3}, {-2, -2}, {-1, -1},
      {1, 1},   {2, 2},   {3, 3},   {4, 4},   {5, 5},   {6, 6},
      {-2, 2},  {-4, 1},  {-5, 6},  {-5, 5},  {-1, 3},  {-6, 4}};
  REQUIRE(t3.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    CHECK(t3[i].lo == want[i].lo);
    CHECK(t3[i].hi == want[i].hi);
  }

  const std::vector<Interval> t4 = ding_intervals(4);
  CHECK(t4.size() == 24);
  auto has = [&t4](long lo, long hi) {
    for (const Interval& iv : t4)
      if (iv.lo == lo && iv.hi == hi) return true;
    return false;
  };
  CHECK(has(-7, 8));
  CHECK(has(-7, 7));
  CHECK(has(-1, 3));
  CHECK(has(-3, 5));
  CHECK(has(-6, 4));
  CHECK(has(-8, 6));

  CHECK(interval_intersection_graph({{0, 1}, {1, 2}}).has_edge(0, 1));
  CHECK(interval_intersection_graph({{0, 1}, {2, 3}}).m() == 0);
  CHECK_THROWS_AS(interval_intersection_graph({{2, 1}}), std::invalid_argument);

  const Graph d3 = gen(Family::DingInterval, 3);
  CHECK(d3.n() == 18);
  CHECK(d3.m() == 59);
  CHECK(d3.is_connected());
  const Graph d4 = gen(Family::DingInterval, 4);
  CHECK(d4.n() == 24);
  CHECK(d4.m() == 102);
  CHECK(d4.is_connected());
  // intersection graphs of intervals admit a simplicial elimination
  // ordering, which is what makes the no-long-induced-cycle claim work
  CHECK(peo_chordal(d3));
  CHECK(peo_chordal(d4));
}

TEST_CASE("index ranges are enforced") {
  CHECK(family_min_index(Family::DoubleWheel) == 2);
  CHECK(family_min_index(Family::MatousekChain) == 1);
  CHECK(family_min_index(Family::DingInterval) == 3);
  CHECK(family_min_index(Family::Antihole) == 6);
  CHECK(family_min_index(Family::NestedLozenge) == 1);

  CHECK_THROWS_AS(gen(Family::DoubleWheel, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen(Family::MatousekChain, 0), std::invalid_argument);
  CHECK_THROWS_AS(gen(Family::DingInterval, 2), std::invalid_argument);
  CHECK_THROWS_AS(gen(Family::Antihole, 5), std::invalid_argument);
  CHECK_THROWS_AS(gen(Family::NestedLozenge, 0), std::invalid_argument);

  CHECK_THROWS_AS(gen(Family::DoubleWheel, 32), std::invalid_argument);
  CHECK_THROWS_AS(gen(Family::MatousekChain, 19), std::invalid_argument);
  CHECK_THROWS_AS(gen(Family::DingInterval, 11), std::invalid_argument);
  CHECK_THROWS_AS(gen(Family::Antihole, 65), std::invalid_argument);
  CHECK_THROWS_AS(gen(Family::NestedLozenge, 30), std::invalid_argument);
  CHECK_NOTHROW(gen(Family::DoubleWheel, 31));
  CHECK_NOTHROW(gen(Family::Antihole, 64));

  for (Family f : {Family::DoubleWheel, Family::MatousekChain, Family::DingInterval,
                   Family::Antihole, Family::NestedLozenge}) {
    const std::optional<Family> back = family_from_name(family_name(f));
    REQUIRE(back.has_value());
    CHECK(*back == f);
  }
  CHECK(family_name(Family::DoubleWheel) == "double-wheel");
  CHECK(family_name(Family::MatousekChain) == "matousek-chain");
  CHECK_FALSE(family_from_name("no-such-family").has_value());
}

TEST_CASE("forbidden patterns stay absent within budget") {
  for (int k = 2; k <= 4; ++k)
    CHECK(check_family_invariant(Family::DoubleWheel, k, default_budget()) ==
          InvariantOutcome::Holds);

  CHECK(check_family_invariant(Family::MatousekChain, 1, default_budget()) ==
        InvariantOutcome::Holds);
  // the second member needs a little over twice the default search
  // budget before absence is proved
  CHECK(check_family_invariant(Family::MatousekChain, 2, default_budget()) ==
        InvariantOutcome::Unknown);
  CHECK(check_family_invariant(Family::MatousekChain, 2, 200'000'000) ==
        InvariantOutcome::Holds);

  CHECK(check_family_invariant(Family::DingInterval, 3, default_budget()) ==
        InvariantOutcome::Holds);
  CHECK(check_family_invariant(Family::DingInterval, 4, default_budget()) ==
        InvariantOutcome::Unknown);

  for (int n = 6; n <= 9; ++n)
    CHECK(check_family_invariant(Family::Antihole, n, default_budget()) ==
          InvariantOutcome::Holds);
  for (int m = 1; m <= 3; ++m)
    CHECK(check_family_invariant(Family::NestedLozenge, m, default_budget()) ==
          InvariantOutcome::Holds);

  // a starved search must answer Unknown, never Violated
  CHECK(check_family_invariant(Family::DoubleWheel, 2, 10) == InvariantOutcome::Unknown);
}

TEST_CASE("the c4 invariant matches chordality on every small graph") {
  const Graph c4 = cycle(4);
  for (int n = 4; n <= 6; ++n)
    for (const testutil::LG& lg : testutil::graphs_up_to_iso(n)) {
      const Graph g = testutil::to_graph(lg);
      const SearchResult r = find_model(c4, g, Relation::induced_minor(), default_budget());
      REQUIRE(r.outcome != SearchOutcome::Unknown);
      CHECK((r.outcome == SearchOutcome::Found) == !peo_chordal(g));
    }
}

TEST_CASE("antiholes of order six through nine are pairwise incomparable") {
  const IncomparabilityReport report =
      verify_pairwise_incomparable(Family::Antihole, 4, default_budget());
  CHECK(report.family == Family::Antihole);
  CHECK(report.count == 4);
  CHECK(report.budget == default_budget());
  REQUIRE(report.pairs.size() == 6);
  const int want[6][2] = {{6, 7}, {6, 8}, {6, 9}, {7, 8}, {7, 9}, {8, 9}};
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(report.pairs[i].index_a == want[i][0]);
    CHECK(report.pairs[i].index_b == want[i][1]);
    CHECK(report.pairs[i].outcome == PairOutcome::Incomparable);
    CHECK(report.pairs[i].nodes > 0);
    CHECK_FALSE(report.pairs[i].model.has_value());
  }
  CHECK(report.all_incomparable());
  CHECK_FALSE(report.any_unknown());

  // the search is deterministic, so a rerun reproduces the report
  CHECK(same_pairs(report, verify_pairwise_incomparable(Family::Antihole, 4, default_budget())));
}

TEST_CASE("a double wheel embeds in the next-but-one double wheel") {
  // Consecutive members are incomparable, but the first and third are
  // not: contracting three rim vertices of the larger wheel together
  // with the hub over the opposite colour class leaves a valid model of
  // the smaller wheel.  The verifier must report that honestly.
  const IncomparabilityReport report =
      verify_pairwise_incomparable(Family::DoubleWheel, 3, default_budget());
  REQUIRE(report.pairs.size() == 3);

  CHECK(report.pairs[0].index_a == 2);
  CHECK(report.pairs[0].index_b == 3);
  CHECK(report.pairs[0].outcome == PairOutcome::Incomparable);

  CHECK(report.pairs[1].index_a == 2);
  CHECK(report.pairs[1].index_b == 4);
  CHECK(report.pairs[1].outcome == PairOutcome::Comparable);
  REQUIRE(report.pairs[1].model.has_value());
  CHECK(valid_induced_minor_model(gen(Family::DoubleWheel, 2), gen(Family::DoubleWheel, 4),
                                  *report.pairs[1].model));

  CHECK(report.pairs[2].index_a == 3);
  CHECK(report.pairs[2].index_b == 4);
  CHECK(report.pairs[2].outcome == PairOutcome::Incomparable);

  CHECK_FALSE(report.all_incomparable());
  CHECK_FALSE(report.any_unknown());

  const SearchResult direct = find_model(gen(Family::DoubleWheel, 2), gen(Family::DoubleWheel, 4),
                                         Relation::induced_minor(), default_budget());
  CHECK(direct.outcome == SearchOutcome::Found);
}

TEST_CASE("matousek members are mutually incomparable at the first two indices") {
  const SearchResult r = find_model(gen(Family::MatousekChain, 1), gen(Family::MatousekChain, 2),
                                    Relation::induced_minor(), default_budget());
  CHECK(r.outcome == SearchOutcome::Absent);
}

TEST_CASE("budget exhaustion is reported as unknown") {
  const IncomparabilityReport report =
      verify_pairwise_incomparable(Family::DoubleWheel, 2, 100);
  REQUIRE(report.pairs.size() == 1);
  CHECK(report.pairs[0].index_a == 2);
  CHECK(report.pairs[0].index_b == 3);
  CHECK(report.pairs[0].outcome == PairOutcome::Unknown);
  CHECK_FALSE(report.pairs[0].model.has_value());
  CHECK(report.any_unknown());
  CHECK_FALSE(report.all_incomparable());

  CHECK_THROWS_AS(verify_pairwise_incomparable(Family::Antihole, 1, default_budget()),
                  std::invalid_argument);
}
