// Structural probes used by the decomposition engines: small cuts,
// subdivision recognition, minimum wheels, rooted diamonds and
// domination.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wqoim/graph.hpp"

namespace wqoim {

enum class TwoCutKind { K2Cut, K2BarCut };  // cut pair adjacent / nonadjacent

struct TwoCut {
  int u = -1, v = -1;
  TwoCutKind kind = TwoCutKind::K2Cut;
  // Components of g minus {u,v}, ordered by least vertex.
  std::vector<std::uint64_t> side_components;
};

/// Lexicographically least pair {u,v} whose removal disconnects g, with
/// its kind determined by whether uv is an edge.  Absent iff g is
/// 3-connected or complete.  Meant for 2-connected inputs; on anything
/// else the answer is still deterministic but not meaningful.
std::optional<TwoCut> find_two_cut(const Graph& g);

/// True iff g is a subdivision of base (base itself counts).  Supports
/// bases in which every vertex has degree >= 3 (smoothing plus
/// isomorphism) and bases with maximum degree <= 2 (path/cycle component
/// matching).  Mixed bases throw std::invalid_argument.
bool is_subdivision_of(const Graph& g, const Graph& base);

/// As above, and additionally returns the branch map base vertex -> g
/// vertex for min-degree-3 bases (empty for degree-<=2 bases).
std::optional<std::vector<int>> subdivision_branch_map(const Graph& g, const Graph& base);

struct WheelWitness {
  int center = -1;
  std::vector<int> cycle;   // cyclic order, least vertex first
  std::vector<int> spokes;  // cycle vertices adjacent to the center, ascending
};

/// Smallest wheel subgraph with at least 3 spokes: a cycle C avoiding a
/// vertex r with |N(r) on C| >= 3, minimizing |C|+1, then the center,
/// then the cycle lexicographically.  The cycle may have chords.
std::optional<WheelWitness> find_min_3wheel(const Graph& g);

/// Rooted induced-minor test for the diamond whose distinguished edge
/// joins a degree-3 vertex to a degree-2 vertex, with {root_u, root_v}
/// as the host's distinguished edge.  Throws std::invalid_argument if
/// that pair is not an edge of g.
bool contains_rooted_diamond(const Graph& g, int root_u, int root_v);

/// Vertices outside the mask adjacent to every vertex inside it.
std::uint64_t dominating_vertices(const Graph& g, std::uint64_t mask);

}  // namespace wqoim
