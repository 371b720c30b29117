// Generators for five infinite families that are pairwise incomparable
// under the induced-minor order, plus checkers for incomparability and
// for each family's characteristic invariant.
//
//   DoubleWheel(k>=2)    : even cycle C_{2k} plus two nonadjacent hubs,
//                          one over each color class.  K5-free.
//   MatousekChain(k>=1)  : a 5-wheel, k interlocking 4-wheels, and a
//                          final 5-wheel chained along a spine; each
//                          wheel's hub is a rim vertex of its neighbors.
//                          (K5 minus an edge)-free.
//   DingInterval(n>2)    : intersection graph of 6n intervals; interval,
//                          hence chordal, hence C4-free.
//   Antihole(n>=6)       : complement of C_n.
//   NestedLozenge(m>=1)  : m+1 nested 4-cycles sharing opposite corners,
//                          with two pendant tips inside and two outside.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wqoim/containment.hpp"
#include "wqoim/graph.hpp"

namespace wqoim {

enum class Family { DoubleWheel, MatousekChain, DingInterval, Antihole, NestedLozenge };

/// Least valid index for the family (2, 1, 3, 6, 1 respectively).
int family_min_index(Family f);

/// Kebab-case name ("double-wheel", "matousek-chain", "ding-interval",
/// "antihole", "nested-lozenge") and its inverse.
std::string family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

/// The index-th member.  Throws std::invalid_argument below the least
/// index or when the member would exceed Graph::max_vertices.
Graph gen(Family f, int index);

struct Interval {
  long lo = 0, hi = 0;
};

/// The 6n closed intervals whose intersection graph is DingInterval(n).
std::vector<Interval> ding_intervals(int n);

/// Vertices = intervals, edges = pairs that overlap.
Graph interval_intersection_graph(const std::vector<Interval>& intervals);

enum class PairOutcome { Incomparable, Comparable, Unknown };

struct PairReport {
  int index_a = 0, index_b = 0;  // family indices, index_a < index_b
  PairOutcome outcome = PairOutcome::Incomparable;
  std::optional<ContainmentModel> model;  // present when Comparable
  std::uint64_t nodes = 0;
};

struct IncomparabilityReport {
  Family family = Family::Antihole;
  int count = 0;
  std::uint64_t budget = 0;
  std::vector<PairReport> pairs;
  bool all_incomparable() const;
  bool any_unknown() const;
};

/// Checks the first `count` members pairwise.  Since member sizes grow
/// strictly with the index, only the smaller-into-larger direction needs
/// a search; the reverse is impossible outright.  Budget exhaustion on a
/// pair is reported as Unknown, never as a verdict.
IncomparabilityReport verify_pairwise_incomparable(Family f, int count,
                                                   std::uint64_t budget);

enum class InvariantOutcome { Holds, Violated, Unknown };

/// The family's characteristic invariant on one member.  DoubleWheel,
/// MatousekChain and DingInterval exclude a fixed pattern (K5, K5 minus
/// an edge, C4) as an induced minor, checked by search under the budget.
/// Antihole and NestedLozenge carry no excluded-pattern claim; for them
/// this checks the defining shape (complement is the n-cycle; vertex and
/// edge counts with exactly four pendant vertices) and ignores the
/// budget.
InvariantOutcome check_family_invariant(Family f, int index, std::uint64_t budget);

/// Node budget used by the command-line tool when none is given.
std::uint64_t default_budget();

}  // namespace wqoim
