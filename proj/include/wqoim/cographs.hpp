// Cograph recognition, canonical cotrees, and the "basic piece" test
// used by the gem-side decomposition: a piece is either a cograph or an
// induced path whose interior vertices have degree 2 in the ambient
// graph.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wqoim/graph.hpp"

namespace wqoim {

struct Cotree {
  enum class Tag { Union, Join, Leaf };
  struct Node {
    Tag tag = Tag::Leaf;
    int leaf_vertex = -1;        // valid for leaves
    std::vector<int> children;   // valid for internal nodes
  };
  std::vector<Node> nodes;
  int root = -1;

  /// Shape-only encoding (leaf ids ignored); equal encodings iff the
  /// represented cographs are isomorphic.
  std::string canonical_encoding() const;
};

bool is_cograph(const Graph& g);

/// Canonical cotree of g, absent when g is not a cograph.  Internal
/// nodes alternate Union/Join, have at least two children, and children
/// are sorted by their canonical encoding.
std::optional<Cotree> cotree(const Graph& g);

/// Rebuilds the graph a cotree represents, respecting leaf vertex ids
/// (which must be exactly 0..n-1).  Throws std::invalid_argument on a
/// malformed tree.
Graph cotree_to_graph(const Cotree& t);

enum class BasicTag { Cograph, Degree2Path };

/// Classifies the piece induced by comp inside g.  The piece must be
/// nonempty and connected (std::invalid_argument otherwise).  Cograph is
/// preferred when both tags apply, so paths on up to three vertices come
/// back as Cograph.  Absent when the piece is neither.
std::optional<BasicTag> is_basic_in(const Graph& g, std::uint64_t comp);

}  // namespace wqoim
