// Finite posets, sequence/set embedding orders, and the contraction
// order on rooted labeled paths.
#pragma once

#include <utility>
#include <vector>

#include "wqoim/graph.hpp"

namespace wqoim {

/// Explicit finite partial order on elements 0..size-1.
class FinitePoset {
 public:
  /// Builds the reflexive-transitive closure of the given pairs (a <= b).
  /// Throws std::invalid_argument if the closure is not antisymmetric.
  FinitePoset(int size, const std::vector<std::pair<int, int>>& below);

  int size() const { return size_; }
  bool leq(int a, int b) const;

  /// n pairwise-incomparable elements.
  static FinitePoset antichain(int n);

  /// All subsets of an n-element antichain ordered by inclusion;
  /// element i is the subset with bit mask i.
  static FinitePoset subsets_of_antichain(int n);

  friend bool operator==(const FinitePoset&, const FinitePoset&) = default;

 private:
  int size_ = 0;
  std::vector<std::vector<bool>> leq_;
};

/// Sequence embedding: an increasing injection of r into s with every
/// element dominated.  Decided greedily left to right, which is exact
/// for this order.  Throws std::invalid_argument on out-of-range
/// elements.
bool seq_embeds(const std::vector<int>& r, const std::vector<int>& s,
                const FinitePoset& p);

/// Set embedding: an injection (multiset-aware) of b into c with every
/// element dominated, decided by maximum bipartite matching.
bool set_embeds(const std::vector<int>& b, const std::vector<int>& c,
                const FinitePoset& p);

/// A path v0 - v1 - ... - v_{k-1} with v0 and v_{k-1} as roots, each
/// vertex labeled by a finite set of poset elements (sorted, no
/// repeats).
struct LabeledPath {
  FinitePoset poset;
  std::vector<std::vector<int>> labels;  // one set per vertex, front root first
};

/// Contraction order on rooted labeled paths: p is below q when q turns
/// into p by contracting edges (labels united) and lowering labels to
/// dominated sets, keeping the roots at the ends.  Decided through the
/// label-word sequence embedding, which matches the operational order
/// exactly when every label has at most one element: a contracted
/// stretch can then deliver just one surviving dominated element, i.e.
/// one embedding witness per target vertex.  Labels with two or more
/// elements fall outside that equivalence and are rejected with
/// std::invalid_argument, as are mismatched posets.
bool path_contraction_leq(const LabeledPath& p, const LabeledPath& q);

}  // namespace wqoim
