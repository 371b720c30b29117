// Containment relations between graphs: induced subgraph, contraction,
// induced minor, and the rooted induced-minor variant where a
// distinguished edge must land on a distinguished edge.
//
// The workhorse is find_model: an exact backtracking search for a model
// of the pattern inside the host.  A model assigns each pattern vertex a
// nonempty branch set; branch sets are pairwise disjoint, each induces a
// connected subgraph, and two branch sets are joined by a host edge
// exactly when the pattern vertices are adjacent.  Induced subgraph
// restricts branch sets to singletons, contraction requires them to
// cover every host vertex.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wqoim/graph.hpp"

namespace wqoim {

enum class RelationKind {
  InducedMinor,
  InducedSubgraph,
  Contraction,
  RootedInducedMinor,
};

struct Relation {
  RelationKind kind = RelationKind::InducedMinor;
  // Distinguished edges, used only by RootedInducedMinor: {pu,pv} must be
  // an edge of the pattern and {hu,hv} an edge of the host.  A model
  // matches if the host edge has one endpoint in the branch set of pu and
  // the other in the branch set of pv, in either orientation.
  int pu = -1, pv = -1, hu = -1, hv = -1;

  static Relation induced_minor() { return {RelationKind::InducedMinor}; }
  static Relation induced_subgraph() { return {RelationKind::InducedSubgraph}; }
  static Relation contraction() { return {RelationKind::Contraction}; }
  static Relation rooted(int pu, int pv, int hu, int hv) {
    return {RelationKind::RootedInducedMinor, pu, pv, hu, hv};
  }
};

struct ContainmentModel {
  // branch_sets[p] = host vertices assigned to pattern vertex p.
  std::vector<std::uint64_t> branch_sets;
};

enum class SearchOutcome { Found, Absent, Unknown };

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::Absent;
  std::optional<ContainmentModel> model;
  std::uint64_t nodes = 0;  // search nodes expanded
};

/// Exhaustive, deterministic model search.  Ties are broken by least
/// vertex id, so the returned model is reproducible.  Throws
/// std::invalid_argument if the pattern is empty or the relation's roots
/// are not edges of their graphs.
std::optional<ContainmentModel> find_model(const Graph& pattern, const Graph& host,
                                           const Relation& rel);

/// Same search with a node budget.  Exceeding the budget yields
/// SearchOutcome::Unknown, never a false negative.
SearchResult find_model(const Graph& pattern, const Graph& host, const Relation& rel,
                        std::uint64_t budget);

/// Checks every model condition from scratch (disjointness,
/// connectivity, exact adjacency, relation-specific constraints).
bool verify_model(const Graph& pattern, const Graph& host, const Relation& rel,
                  const ContainmentModel& model);

/// Breadth-first closure over explicit operation sequences (vertex
/// deletions and/or edge contractions, as the relation allows), with
/// isomorphism-pruned frontier.  Decides pattern <= host exactly.
/// Refuses hosts with more than 8 vertices and rooted relations; throws
/// std::invalid_argument for both.
bool oracle_leq(const Graph& pattern, const Graph& host, const Relation& rel);

/// True iff some subgraph of g is a subdivision of K4 (4 branch vertices
/// joined by six internally disjoint paths).  Independent of find_model.
bool contains_k4_subdivision(const Graph& g);

/// A K4 subdivision is proper when it avoids at least one vertex of g.
/// Returns the least vertex v with g minus v still containing a K4
/// subdivision, or absent when none exists.
std::optional<int> has_proper_k4_subdivision(const Graph& g);

}  // namespace wqoim
