// Decomposition engines and their independent verifiers.
//
// decompose_k4hat: a 2-connected graph with no k4hat induced minor is
// K4-free, or a subdivision of K4, K3,3 or the prism, or splits into an
// induced chordless cycle plus a complete multipartite rest whose
// vertices all see the same cycle vertices.  A few inputs fit none of
// the three cases (the smallest live on six vertices); those raise
// std::logic_error instead of getting a bad certificate.
//
// decompose_gem: a 2-connected graph with no gem induced minor has a set
// X of at most 6 vertices whose removal leaves only basic pieces
// (cographs, or induced paths with interior degree 2 in the whole
// graph).
//
// Both engines re-check their own certificate before returning and
// throw std::logic_error if the input defeats the expected structure;
// they never hand back an unverified answer.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wqoim/cographs.hpp"
#include "wqoim/containment.hpp"
#include "wqoim/graph.hpp"

namespace wqoim {

/// Raised when an engine's precondition fails: the input is not
/// 2-connected, or it contains the excluded pattern.  Carries the
/// witness so callers can report it.
class precondition_error : public std::invalid_argument {
 public:
  explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
  std::optional<ContainmentModel> witness_model;  // excluded pattern found
  std::optional<int> cut_vertex;                  // connectivity failure, when one vertex explains it
};

enum class K4HatCase { K4Free, SubdivisionOf, CycleMultipartite };
enum class SubdivisionBase { K4, K33, Prism };

struct K4HatCertificate {
  K4HatCase kind = K4HatCase::K4Free;

  // SubdivisionOf: which base, and base vertex -> graph vertex.
  SubdivisionBase base = SubdivisionBase::K4;
  std::vector<int> branch_map;

  // CycleMultipartite: the cycle in cyclic order, the remaining
  // vertices, and their multipartite parts.
  std::vector<int> cycle;
  std::uint64_t rest = 0;
  std::vector<std::uint64_t> parts;
};

struct GemCertificate {
  std::vector<int> x;  // deletion set, ascending, |x| <= 6
  struct Piece {
    std::uint64_t vertices = 0;
    BasicTag tag = BasicTag::Cograph;
  };
  std::vector<Piece> pieces;  // components of g minus x, by least vertex
};

/// Requires g 2-connected with no k4hat induced minor
/// (precondition_error otherwise, carrying the witness).  Emits the
/// first case that applies: K4Free, then the three subdivision bases,
/// then the shortest (then lexicographically least) cycle giving a
/// cycle-plus-multipartite split.  Throws std::logic_error for the rare
/// inputs where no case holds.
K4HatCertificate decompose_k4hat(const Graph& g);

/// True iff the certificate's case actually holds of g, re-checked from
/// scratch: K4Free through a fresh containment search, SubdivisionOf
/// through is_subdivision_of, CycleMultipartite through its three
/// defining conditions (partition; induced chordless cycle; complete
/// multipartite rest with every rest vertex seeing the same cycle
/// vertices).
bool verify_k4hat(const Graph& g, const K4HatCertificate& cert);

/// Requires g 2-connected with no gem induced minor.
GemCertificate decompose_gem(const Graph& g);

/// True iff |x| <= 6, the pieces are exactly the components of g minus
/// x, and each piece satisfies its claimed tag.
bool verify_gem(const Graph& g, const GemCertificate& cert);

/// For 3-connected g (std::invalid_argument otherwise): the
/// lexicographically least induced P4 whose deletion leaves only
/// cograph components, as (v1,v2,v3,v4) with v1 < v4.  Absent when g is
/// a cograph (no P4 at all) or no skeleton works.
std::optional<std::array<int, 4>> find_p4_skeleton(const Graph& g);

/// Reference searches that try every certificate shape directly (every
/// induced cycle split, every deletion set ascending by size then by
/// mask) and return the first one the matching verifier accepts, or
/// nothing when no certificate exists at all.  Exponential; meant for
/// cross-checking the engines on small graphs, not for production use.
std::optional<K4HatCertificate> exhaustive_k4hat_certificate(const Graph& g);
std::optional<GemCertificate> exhaustive_gem_certificate(const Graph& g);

}  // namespace wqoim
