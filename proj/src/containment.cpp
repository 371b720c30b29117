#include "wqoim/containment.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>

namespace wqoim {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Backtracking search for a branch-set model (induced subgraph, induced
// minor, rooted induced minor).  Pattern vertices are assigned in
// descending-degree order; branch sets are enumerated as connected
// subsets rooted at their least vertex, so the first model found is a
// deterministic function of the input.
struct ModelSearch {
  const Graph& h;
  const Graph& g;
  RelationKind kind;
  bool limited = false;
  std::uint64_t budget = 0;
  std::uint64_t nodes = 0;
  bool exhausted = false;

  std::vector<int> order;    // position -> pattern vertex
  std::vector<int> forced;   // pattern vertex -> required host vertex or -1
  std::vector<std::uint64_t> sets;   // pattern vertex -> branch set
  std::vector<std::uint64_t> touch;  // pattern vertex -> outside neighborhood
  std::uint64_t used = 0;
  std::optional<ContainmentModel> found;

  ModelSearch(const Graph& h_, const Graph& g_, RelationKind kind_)
      : h(h_), g(g_), kind(kind_), forced(h_.n(), -1), sets(h_.n(), 0), touch(h_.n(), 0) {
    order.resize(h.n());
    for (int v = 0; v < h.n(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (h.degree(a) != h.degree(b)) return h.degree(a) > h.degree(b);
      return a < b;
    });
  }

  bool tick() {
    if (exhausted) return false;
    if (limited && nodes >= budget) {
      exhausted = true;
      return false;
    }
    ++nodes;
    return true;
  }

  int future_neighbors(int t) const {
    int count = 0;
    for (std::size_t s = t + 1; s < order.size(); ++s)
      if (h.has_edge(order[t], order[s])) ++count;
    return count;
  }

  // In an inclusion-minimal model every vertex of a branch set earns its
  // place: dropping it breaks connectivity, a settled adjacency, or the
  // root.  A vertex only kept for a still-unassigned neighbor is the
  // sole contact towards that neighbor's future branch set, so at most
  // one droppable-so-far vertex per future neighbor can survive
  // minimization.  Sets looser than that cannot be part of any minimal
  // model and are skipped.
  bool tight_enough(int p, std::uint64_t s, const std::vector<std::uint64_t>& required,
                    int future) const {
    int removable = 0;
    std::uint64_t scan = s;
    while (scan) {
      const int v = std::countr_zero(scan);
      scan &= scan - 1;
      if (v == forced[p]) continue;
      const std::uint64_t rest = s & ~bit(v);
      if (!rest || !mask_connected(g, rest)) continue;
      bool needed = false;
      for (std::uint64_t req : required)
        if (!(rest & req)) {
          needed = true;
          break;
        }
      if (!needed && ++removable > future) return false;
    }
    return true;
  }

  bool assign(int t) {
    if (!tick()) return false;
    if (t == static_cast<int>(order.size())) {
      found = ContainmentModel{sets};
      return true;
    }
    if (std::popcount(g.full_mask() & ~used) < static_cast<int>(order.size()) - t)
      return false;
    const int p = order[t];
    std::uint64_t allowed = g.full_mask() & ~used;
    std::vector<std::uint64_t> required;
    for (int s = 0; s < t; ++s) {
      const int q = order[s];
      if (h.has_edge(p, q)) required.push_back(touch[q]);
      else allowed &= ~touch[q];
    }

    if (kind == RelationKind::InducedSubgraph) {
      std::uint64_t candidates = allowed;
      while (candidates) {
        const int v = std::countr_zero(candidates);
        candidates &= candidates - 1;
        bool ok = true;
        for (std::uint64_t req : required)
          if (!(req & bit(v))) {
            ok = false;
            break;
          }
        if (!ok) continue;
        if (place(t, p, bit(v))) return true;
        if (exhausted) return false;
      }
      return false;
    }

    const int future = future_neighbors(t);

    // Last branch set: any connected piece of the allowed region that
    // reaches every settled neighbor works, so scan whole components
    // instead of enumerating subsets.
    if (t + 1 == static_cast<int>(order.size()) && forced[p] < 0) {
      for (std::uint64_t comp : mask_components(g, allowed)) {
        bool ok = true;
        for (std::uint64_t req : required)
          if (!(comp & req)) {
            ok = false;
            break;
          }
        if (!ok) continue;
        if (place(t, p, comp)) return true;
        if (exhausted) return false;
      }
      return false;
    }

    if (forced[p] >= 0) {
      if (!(allowed & bit(forced[p]))) return false;
      return grow(t, p, allowed, required, future, bit(forced[p]), 0, true);
    }
    std::uint64_t roots = allowed;
    while (roots) {
      const int r = std::countr_zero(roots);
      roots &= roots - 1;
      // Each connected set is enumerated from its least vertex only.
      const std::uint64_t region = allowed & ~(bit(r) - 1);
      if (grow(t, p, region, required, future, bit(r), 0, true)) return true;
      if (exhausted) return false;
    }
    return false;
  }

  // Connected-subset enumeration by include/exclude on the least
  // frontier vertex.  Completion is attempted only when the set just
  // grew, which yields every connected subset of the region exactly
  // once.
  bool grow(int t, int p, std::uint64_t region, const std::vector<std::uint64_t>& required,
            int future, std::uint64_t s, std::uint64_t excluded, bool fresh) {
    if (!tick()) return false;
    if (fresh) {
      bool complete = true;
      for (std::uint64_t req : required)
        if (!(s & req)) {
          complete = false;
          break;
        }
      if (complete && tight_enough(p, s, required, future)) {
        if (place(t, p, s)) return true;
        if (exhausted) return false;
      }
    }
    const std::uint64_t frontier = mask_neighborhood(g, s) & region & ~s & ~excluded;
    if (!frontier) return false;
    const int x = std::countr_zero(frontier);
    if (grow(t, p, region, required, future, s | bit(x), excluded, true)) return true;
    if (exhausted) return false;
    return grow(t, p, region, required, future, s, excluded | bit(x), false);
  }

  bool place(int t, int p, std::uint64_t s) {
    sets[p] = s;
    touch[p] = mask_neighborhood(g, s) & ~s;
    used |= s;
    const bool done = assign(t + 1);
    used &= ~s;
    if (!done) sets[p] = touch[p] = 0;
    return done;
  }
};

// Contractions must cover the host, so the search is over partitions:
// host vertices are handed to pattern classes one by one, rejecting any
// contact between classes that are not pattern-adjacent.
struct ContractionSearch {
  const Graph& h;
  const Graph& g;
  bool limited = false;
  std::uint64_t budget = 0;
  std::uint64_t nodes = 0;
  bool exhausted = false;

  std::vector<std::uint64_t> classes;
  std::vector<int> class_of;
  std::optional<ContainmentModel> found;

  ContractionSearch(const Graph& h_, const Graph& g_)
      : h(h_), g(g_), classes(h_.n(), 0), class_of(g_.n(), -1) {}

  bool tick() {
    if (exhausted) return false;
    if (limited && nodes >= budget) {
      exhausted = true;
      return false;
    }
    ++nodes;
    return true;
  }

  bool rec(int v) {
    if (!tick()) return false;
    if (v == g.n()) return finish();
    int empty = 0;
    for (std::uint64_t c : classes)
      if (!c) ++empty;
    if (g.n() - v < empty) return false;
    for (int p = 0; p < h.n(); ++p) {
      bool ok = true;
      std::uint64_t nb = g.adj_mask(v);
      while (ok && nb) {
        const int u = std::countr_zero(nb);
        nb &= nb - 1;
        const int q = u < v ? class_of[u] : -1;
        if (q >= 0 && q != p && !h.has_edge(p, q)) ok = false;
      }
      if (!ok) continue;
      classes[p] |= bit(v);
      class_of[v] = p;
      if (rec(v + 1)) return true;
      classes[p] &= ~bit(v);
      class_of[v] = -1;
      if (exhausted) return false;
    }
    return false;
  }

  bool finish() {
    for (int p = 0; p < h.n(); ++p)
      if (!classes[p] || !mask_connected(g, classes[p])) return false;
    for (int p = 0; p < h.n(); ++p)
      for (int q = p + 1; q < h.n(); ++q) {
        const bool touching = mask_neighborhood(g, classes[p]) & classes[q];
        if (touching != h.has_edge(p, q)) return false;
      }
    found = ContainmentModel{classes};
    return true;
  }
};

void validate_relation(const Graph& pattern, const Graph& host, const Relation& rel) {
  if (pattern.n() == 0) throw std::invalid_argument("find_model: empty pattern");
  if (rel.kind == RelationKind::RootedInducedMinor) {
    if (!pattern.has_edge(rel.pu, rel.pv))
      throw std::invalid_argument("find_model: pattern root is not an edge");
    if (!host.has_edge(rel.hu, rel.hv))
      throw std::invalid_argument("find_model: host root is not an edge");
  }
}

SearchResult run_search(const Graph& pattern, const Graph& host, const Relation& rel,
                        bool limited, std::uint64_t budget) {
  validate_relation(pattern, host, rel);
  SearchResult result;
  if (rel.kind == RelationKind::Contraction) {
    ContractionSearch search(pattern, host);
    search.limited = limited;
    search.budget = budget;
    search.rec(0);
    result.nodes = search.nodes;
    if (search.found) {
      result.outcome = SearchOutcome::Found;
      result.model = std::move(search.found);
    } else {
      result.outcome = search.exhausted ? SearchOutcome::Unknown : SearchOutcome::Absent;
    }
    return result;
  }
  // A rooted search tries the host edge in both orientations.
  std::vector<std::array<int, 2>> orientations{{-1, -1}};
  if (rel.kind == RelationKind::RootedInducedMinor)
    orientations = {{rel.hu, rel.hv}, {rel.hv, rel.hu}};
  for (const auto& o : orientations) {
    ModelSearch search(pattern, host,
                       rel.kind == RelationKind::RootedInducedMinor
                           ? RelationKind::InducedMinor
                           : rel.kind);
    if (o[0] >= 0) {
      search.forced[rel.pu] = o[0];
      search.forced[rel.pv] = o[1];
    }
    search.limited = limited;
    search.budget = limited ? budget - result.nodes : 0;
    search.assign(0);
    result.nodes += search.nodes;
    if (search.found) {
      result.outcome = SearchOutcome::Found;
      result.model = std::move(search.found);
      return result;
    }
    if (search.exhausted) {
      result.outcome = SearchOutcome::Unknown;
      return result;
    }
  }
  result.outcome = SearchOutcome::Absent;
  return result;
}

}  // namespace

std::optional<ContainmentModel> find_model(const Graph& pattern, const Graph& host,
                                           const Relation& rel) {
  SearchResult r = run_search(pattern, host, rel, false, 0);
  return r.model;
}

SearchResult find_model(const Graph& pattern, const Graph& host, const Relation& rel,
                        std::uint64_t budget) {
  return run_search(pattern, host, rel, true, budget);
}

bool verify_model(const Graph& pattern, const Graph& host, const Relation& rel,
                  const ContainmentModel& model) {
  validate_relation(pattern, host, rel);
  if (static_cast<int>(model.branch_sets.size()) != pattern.n()) return false;
  std::uint64_t seen = 0;
  for (std::uint64_t s : model.branch_sets) {
    if (!s || (s & ~host.full_mask()) || (s & seen)) return false;
    if (!mask_connected(host, s)) return false;
    seen |= s;
  }
  for (int p = 0; p < pattern.n(); ++p)
    for (int q = p + 1; q < pattern.n(); ++q) {
      const bool touching =
          mask_neighborhood(host, model.branch_sets[p]) & model.branch_sets[q];
      if (touching != pattern.has_edge(p, q)) return false;
    }
  switch (rel.kind) {
    case RelationKind::InducedSubgraph:
      for (std::uint64_t s : model.branch_sets)
        if (std::popcount(s) != 1) return false;
      break;
    case RelationKind::Contraction:
      if (seen != host.full_mask()) return false;
      break;
    case RelationKind::RootedInducedMinor: {
      const std::uint64_t su = model.branch_sets[rel.pu];
      const std::uint64_t sv = model.branch_sets[rel.pv];
      const bool straight = (su & bit(rel.hu)) && (sv & bit(rel.hv));
      const bool flipped = (su & bit(rel.hv)) && (sv & bit(rel.hu));
      if (!straight && !flipped) return false;
      break;
    }
    case RelationKind::InducedMinor:
      break;
  }
  return true;
}

bool oracle_leq(const Graph& pattern, const Graph& host, const Relation& rel) {
  if (rel.kind == RelationKind::RootedInducedMinor)
    throw std::invalid_argument("oracle_leq: rooted relations not supported");
  if (pattern.n() == 0) throw std::invalid_argument("oracle_leq: empty pattern");
  if (host.n() > 8) throw std::invalid_argument("oracle_leq: host larger than 8 vertices");
  const bool may_delete = rel.kind != RelationKind::Contraction;
  const bool may_contract = rel.kind != RelationKind::InducedSubgraph;
  const std::string target = pattern.canonical_form();

  std::set<std::string> seen;
  std::vector<Graph> queue{host};
  seen.insert(host.canonical_form());
  while (!queue.empty()) {
    Graph g = std::move(queue.back());
    queue.pop_back();
    if (g.n() == pattern.n() && g.canonical_form() == target) return true;
    if (g.n() <= pattern.n()) continue;
    std::vector<Graph> next;
    if (may_delete)
      for (int v = 0; v < g.n(); ++v) next.push_back(g.delete_vertex(v));
    if (may_contract)
      for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
          if (g.has_edge(u, v)) next.push_back(g.contract_edge(u, v));
    for (Graph& c : next)
      if (seen.insert(c.canonical_form()).second) queue.push_back(std::move(c));
  }
  return false;
}

namespace {

// Six internally disjoint paths between four fixed branch vertices.
struct K4SubdivisionSearch {
  const Graph& g;
  std::array<int, 4> branch;
  std::uint64_t branch_mask = 0;
  std::uint64_t used = 0;  // interior vertices of settled paths
  static constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

  bool connect(int idx) {
    if (idx == 6) return true;
    return walk(branch[kPairs[idx][0]], branch[kPairs[idx][1]], idx, 0);
  }

  bool walk(int at, int to, int idx, std::uint64_t interior) {
    if (g.has_edge(at, to)) {
      used |= interior;
      if (connect(idx + 1)) return true;
      used &= ~interior;
    }
    std::uint64_t options = g.adj_mask(at) & ~branch_mask & ~used & ~interior;
    while (options) {
      const int u = std::countr_zero(options);
      options &= options - 1;
      if (walk(u, to, idx, interior | bit(u))) return true;
    }
    return false;
  }
};

}  // namespace

bool contains_k4_subdivision(const Graph& g) {
  const int n = g.n();
  if (n < 4) return false;
  std::vector<int> eligible;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) >= 3) eligible.push_back(v);
  const int k = static_cast<int>(eligible.size());
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      for (int c = b + 1; c < k; ++c)
        for (int d = c + 1; d < k; ++d) {
          K4SubdivisionSearch search{g, {eligible[a], eligible[b], eligible[c], eligible[d]}};
          for (int v : search.branch) search.branch_mask |= bit(v);
          if (search.connect(0)) return true;
        }
  return false;
}

std::optional<int> has_proper_k4_subdivision(const Graph& g) {
  for (int v = 0; v < g.n(); ++v)
    if (contains_k4_subdivision(g.delete_vertex(v))) return v;
  return std::nullopt;
}

}  // namespace wqoim
