#include "wqoim/antichains.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace wqoim {

namespace {

Graph double_wheel(int k) {
  if (k < 2) throw std::invalid_argument("double-wheel: index must be at least 2");
  const int rim = 2 * k;
  if (rim + 2 > Graph::max_vertices) throw std::invalid_argument("double-wheel: too large");
  Graph g(rim + 2);
  for (int i = 0; i < rim; ++i) g.add_edge(i, (i + 1) % rim);
  for (int i = 0; i < rim; i += 2) g.add_edge(rim, i);
  for (int i = 1; i < rim; i += 2) g.add_edge(rim + 1, i);
  return g;
}

// A 5-wheel, k interlocking 4-wheels and a final 5-wheel along the spine
// a_0..a_{k+1} (vertices 0..k+1).  a_0 hubs the first 5-wheel, whose rim
// holds a_1; each a_i (1 <= i <= k) hubs a 4-wheel whose rim is the
// 4-cycle a_{i-1}, q_i, a_{i+1}, q'_i; a_{k+1} hubs the last 5-wheel,
// whose rim holds a_k.
Graph matousek_chain(int k) {
  if (k < 1) throw std::invalid_argument("matousek-chain: index must be at least 1");
  const int n = 3 * k + 10;
  if (n > Graph::max_vertices) throw std::invalid_argument("matousek-chain: too large");
  Graph g(n);
  const int p = k + 2;           // first 5-wheel rim, 4 vertices p..p+3
  const int q = k + 6;           // 4-wheel rim pairs, 2k vertices
  const int r = 3 * k + 6;       // last 5-wheel rim, 4 vertices r..r+3

  auto five_wheel = [&g](int hub, int spine_rim, int first) {
    const int rim[5] = {spine_rim, first, first + 1, first + 2, first + 3};
    for (int i = 0; i < 5; ++i) {
      g.add_edge(rim[i], rim[(i + 1) % 5]);
      g.add_edge(hub, rim[i]);
    }
  };
  five_wheel(0, 1, p);
  five_wheel(k + 1, k, r);
  for (int i = 1; i <= k; ++i) {
    const int qa = q + 2 * (i - 1);
    const int qb = qa + 1;
    const int rim[4] = {i - 1, qa, i + 1, qb};
    for (int j = 0; j < 4; ++j) {
      g.add_edge(rim[j], rim[(j + 1) % 4]);
      g.add_edge(i, rim[j]);
    }
  }
  return g;
}

Graph antihole(int n) {
  if (n < 6) throw std::invalid_argument("antihole: index must be at least 6");
  if (n > Graph::max_vertices) throw std::invalid_argument("antihole: too large");
  return cycle(n).complement();
}

// m+1 nested 4-cycles: corners W=0 and E=1 for the outermost, then pairs
// x_j = 2j, y_j = 2j+1; pendant tips on the innermost pair and on W, E.
Graph nested_lozenge(int m) {
  if (m < 1) throw std::invalid_argument("nested-lozenge: index must be at least 1");
  const int n = 2 * m + 6;
  if (n > Graph::max_vertices) throw std::invalid_argument("nested-lozenge: too large");
  Graph g(n);
  for (int j = 1; j <= m; ++j) {
    const int xp = j == 1 ? 0 : 2 * (j - 1);
    const int yp = j == 1 ? 1 : 2 * (j - 1) + 1;
    const int x = 2 * j;
    const int y = 2 * j + 1;
    g.add_edge(xp, x);
    g.add_edge(x, yp);
    g.add_edge(yp, y);
    g.add_edge(y, xp);
  }
  g.add_edge(2 * m, 2 * m + 2);      // tip on x_m
  g.add_edge(2 * m + 1, 2 * m + 3);  // tip on y_m
  g.add_edge(0, 2 * m + 4);          // tip on W
  g.add_edge(1, 2 * m + 5);          // tip on E
  return g;
}

Graph k5_minus_edge() {
  Graph g(5);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v)
      if (!(u == 3 && v == 4)) g.add_edge(u, v);
  return g;
}

}  // namespace

int family_min_index(Family f) {
  switch (f) {
    case Family::DoubleWheel: return 2;
    case Family::MatousekChain: return 1;
    case Family::DingInterval: return 3;
    case Family::Antihole: return 6;
    case Family::NestedLozenge: return 1;
  }
  throw std::invalid_argument("family_min_index: bad family");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::DoubleWheel: return "double-wheel";
    case Family::MatousekChain: return "matousek-chain";
    case Family::DingInterval: return "ding-interval";
    case Family::Antihole: return "antihole";
    case Family::NestedLozenge: return "nested-lozenge";
  }
  throw std::invalid_argument("family_name: bad family");
}

std::optional<Family> family_from_name(std::string_view name) {
  if (name == "double-wheel") return Family::DoubleWheel;
  if (name == "matousek-chain") return Family::MatousekChain;
  if (name == "ding-interval") return Family::DingInterval;
  if (name == "antihole") return Family::Antihole;
  if (name == "nested-lozenge") return Family::NestedLozenge;
  return std::nullopt;
}

Graph gen(Family f, int index) {
  switch (f) {
    case Family::DoubleWheel: return double_wheel(index);
    case Family::MatousekChain: return matousek_chain(index);
    case Family::DingInterval: return interval_intersection_graph(ding_intervals(index));
    case Family::Antihole: return antihole(index);
    case Family::NestedLozenge: return nested_lozenge(index);
  }
  throw std::invalid_argument("gen: bad family");
}

std::vector<Interval> ding_intervals(int n) {
  if (n <= 2) throw std::invalid_argument("ding-interval: index must be at least 3");
  if (6 * n > Graph::max_vertices) throw std::invalid_argument("ding-interval: too large");
  std::vector<Interval> out;
  for (long i = -2 * n; i <= -1; ++i) out.push_back({i, i});
  for (long i = 1; i <= 2 * n; ++i) out.push_back({i, i});
  out.push_back({-2, 2});
  out.push_back({-4, 1});
  out.push_back({-2L * n + 1, 2L * n});
  out.push_back({-2L * n + 1, 2L * n - 1});
  for (long i = 1; i <= n - 2; ++i) out.push_back({-2 * i + 1, 2 * i + 1});
  for (long i = 3; i <= n; ++i) out.push_back({-2 * i, 2 * i - 2});
  return out;
}

Graph interval_intersection_graph(const std::vector<Interval>& intervals) {
  for (const auto& iv : intervals)
    if (iv.lo > iv.hi) throw std::invalid_argument("interval graph: empty interval");
  Graph g(static_cast<int>(intervals.size()));
  for (std::size_t a = 0; a < intervals.size(); ++a)
    for (std::size_t b = a + 1; b < intervals.size(); ++b)
      if (intervals[a].lo <= intervals[b].hi && intervals[b].lo <= intervals[a].hi)
        g.add_edge(static_cast<int>(a), static_cast<int>(b));
  return g;
}

bool IncomparabilityReport::all_incomparable() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const PairReport& p) {
    return p.outcome == PairOutcome::Incomparable;
  });
}

bool IncomparabilityReport::any_unknown() const {
  return std::any_of(pairs.begin(), pairs.end(), [](const PairReport& p) {
    return p.outcome == PairOutcome::Unknown;
  });
}

IncomparabilityReport verify_pairwise_incomparable(Family f, int count, std::uint64_t budget) {
  if (count < 2) throw std::invalid_argument("verify_pairwise_incomparable: need two members");
  IncomparabilityReport report;
  report.family = f;
  report.count = count;
  report.budget = budget;
  const int lo = family_min_index(f);
  std::vector<Graph> members;
  for (int i = 0; i < count; ++i) members.push_back(gen(f, lo + i));
  for (int a = 0; a < count; ++a)
    for (int b = a + 1; b < count; ++b) {
      // Members grow strictly with the index, so only the smaller member
      // can embed into the larger one.
      const SearchResult result =
          find_model(members[static_cast<std::size_t>(a)], members[static_cast<std::size_t>(b)],
                     Relation::induced_minor(), budget);
      PairReport pair;
      pair.index_a = lo + a;
      pair.index_b = lo + b;
      pair.nodes = result.nodes;
      switch (result.outcome) {
        case SearchOutcome::Found:
          pair.outcome = PairOutcome::Comparable;
          pair.model = result.model;
          break;
        case SearchOutcome::Absent: pair.outcome = PairOutcome::Incomparable; break;
        case SearchOutcome::Unknown: pair.outcome = PairOutcome::Unknown; break;
      }
      report.pairs.push_back(pair);
    }
  return report;
}

InvariantOutcome check_family_invariant(Family f, int index, std::uint64_t budget) {
  const Graph member = gen(f, index);
  switch (f) {
    case Family::DoubleWheel:
    case Family::MatousekChain:
    case Family::DingInterval: {
      const Graph pattern =
          f == Family::DoubleWheel ? complete(5)
          : f == Family::MatousekChain ? k5_minus_edge()
                                       : cycle(4);
      const SearchResult result = find_model(pattern, member, Relation::induced_minor(), budget);
      switch (result.outcome) {
        case SearchOutcome::Found: return InvariantOutcome::Violated;
        case SearchOutcome::Absent: return InvariantOutcome::Holds;
        case SearchOutcome::Unknown: return InvariantOutcome::Unknown;
      }
      return InvariantOutcome::Unknown;
    }
    case Family::Antihole:
      return member.complement().is_isomorphic(cycle(index))
                 ? InvariantOutcome::Holds
                 : InvariantOutcome::Violated;
    case Family::NestedLozenge: {
      const int m = index;
      int pendants = 0;
      for (int v = 0; v < member.n(); ++v)
        if (member.degree(v) == 1) ++pendants;
      const bool ok =
          member.n() == 2 * m + 6 && member.m() == 4 * m + 4 && pendants == 4;
      return ok ? InvariantOutcome::Holds : InvariantOutcome::Violated;
    }
  }
  throw std::invalid_argument("check_family_invariant: bad family");
}

std::uint64_t default_budget() { return 50'000'000; }

}  // namespace wqoim
