// Core graph value type and the local operations everything else is
// built from: vertex deletion, edge contraction, complement.
//
// Graphs are simple, undirected and loop-free, with vertices labeled
// 0..n-1.  Adjacency is stored as one 64-bit mask per vertex, which caps
// the library at 64 vertices; every generator and search in this project
// stays far below that.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wqoim {

class Graph {
 public:
  static constexpr int max_vertices = 64;

  Graph() = default;
  /// Edgeless graph on n vertices.  Throws std::invalid_argument unless
  /// 0 <= n <= max_vertices.
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  int m() const;

  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);

  /// Neighbors of v as a bit mask.
  std::uint64_t adj_mask(int v) const;
  int degree(int v) const;
  std::vector<int> neighbors(int v) const;

  /// Mask with one bit per vertex.
  std::uint64_t full_mask() const;

  // Local operations.  Each returns a new graph whose vertices are
  // renumbered to stay dense: the survivors keep their relative order,
  // and a contracted pair is replaced by a single vertex at the position
  // of the smaller endpoint.
  Graph delete_vertex(int v) const;
  Graph contract_edge(int u, int v) const;
  Graph complement() const;

  /// Subgraph induced by the vertices in mask, renumbered by relative
  /// order.  vertex_of(i) on the result is recoverable from the mask.
  Graph induced(std::uint64_t mask) const;

  /// Connected components as vertex masks, ordered by least vertex.
  std::vector<std::uint64_t> components() const;
  bool is_connected() const;

  /// Vertex connectivity at least k, for k in {1,2,3}.  A complete graph
  /// on m vertices counts as (m-1)-connected.
  bool is_k_connected(int k) const;

  /// Canonical byte string; equal strings iff isomorphic graphs.
  std::string canonical_form() const;
  bool is_isomorphic(const Graph& other) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

// Named constructors for the graphs the rest of the library talks about.
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph complete_multipartite(const std::vector<int>& part_sizes);

/// Cycle of length cycle_len (vertices 0..cycle_len-1) plus a hub
/// (vertex cycle_len) joined to the first k rim vertices.  Requires
/// cycle_len >= 3 and 1 <= k <= cycle_len.
Graph wheel(int cycle_len, int k);

Graph prism();  // two triangles joined by a perfect matching
Graph k33();

/// P4 on vertices 1-2-3-4 plus vertex 0 adjacent to all of them.
Graph gem();

/// K4 on vertices 0..3 plus vertex 4 adjacent to vertices 2 and 3.
Graph k4hat();

Graph diamond();  // K4 minus an edge
Graph paw();      // triangle plus a pendant vertex

Graph disjoint_union(const Graph& a, const Graph& b);

// Mask utilities shared by the searches: all work on vertex bit masks of
// the given graph without renumbering anything.

/// Union of the neighborhoods of the vertices in s (may intersect s).
std::uint64_t mask_neighborhood(const Graph& g, std::uint64_t s);

/// s is nonempty and induces a connected subgraph.
bool mask_connected(const Graph& g, std::uint64_t s);

/// Connected components of the subgraph induced by s, by least vertex.
std::vector<std::uint64_t> mask_components(const Graph& g, std::uint64_t s);

}  // namespace wqoim
