// The classification this project exists for: excluding H as an induced
// minor leaves a well-quasi-ordered class exactly when H embeds as an
// induced minor into the gem or into k4hat.  classify decides that by
// direct model search and returns the witness embedding; when neither
// embedding exists it explains which complement-side filter rules fail
// and which antichain family witnesses each failure.
#pragma once

#include <string>
#include <vector>

#include "wqoim/containment.hpp"
#include "wqoim/graph.hpp"

namespace wqoim {

enum class WqoWitness { Gem, K4Hat };

struct WqoVerdict {
  bool wqo = false;
  WqoWitness witness = WqoWitness::Gem;  // valid when wqo
  ContainmentModel model;                // embedding of h into the witness
  std::vector<std::string> reasons;      // populated when not wqo
};

/// Decides whether excluding h yields a well-quasi-ordered class.
/// Throws std::invalid_argument on the empty graph.
WqoVerdict classify(const Graph& h);

/// Necessary conditions read off the complement of h.  Every rule must
/// hold for h to stand a chance; each failure names an antichain family
/// that survives inside the class excluding h.
struct FilterReport {
  bool linear_forest = false;  // complement is a disjoint union of paths
  bool r1 = false;             // at most 4 complement components
  bool r2 = false;             // at most 1 non-singleton complement component
  bool r3 = false;             // largest complement component has <= 4 vertices
  bool r4 = false;             // n <= 7 and complement = (c-1) points + one path
  bool r5 = false;             // 3 complement components force n <= 5
  bool r6 = false;             // 4 complement components force n <= 4
  bool passes_all() const;
};

FilterReport complement_filter(const Graph& h);

/// The twelve graphs (up to isomorphism) whose exclusion is
/// well-quasi-ordered, by vertex count: K1; 2K1, K2; K2+K1, P3, K3; P4,
/// paw, diamond, K4; gem, k4hat.
std::vector<Graph> wqo_table();

}  // namespace wqoim
