#include "wqoim/structure.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "wqoim/containment.hpp"

namespace wqoim {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Components of g minus {u, v}, or empty when the rest stays connected
// (or has fewer than two vertices).
std::vector<std::uint64_t> cut_components(const Graph& g, int u, int v) {
  const std::uint64_t rest = g.full_mask() & ~bit(u) & ~bit(v);
  if (rest == 0) return {};
  auto comps = mask_components(g, rest);
  if (comps.size() < 2) return {};
  return comps;
}

// Maps base vertices onto the vertices of target so that adjacency is
// preserved exactly; both graphs are small here.
std::optional<std::vector<int>> find_isomorphism(const Graph& base, const Graph& target) {
  if (base.n() != target.n() || base.m() != target.m()) return std::nullopt;
  std::vector<int> map(static_cast<std::size_t>(base.n()), -1);
  std::vector<bool> used(static_cast<std::size_t>(target.n()), false);
  auto extend = [&](auto&& self, int p) -> bool {
    if (p == base.n()) return true;
    for (int w = 0; w < target.n(); ++w) {
      if (used[static_cast<std::size_t>(w)]) continue;
      if (base.degree(p) != target.degree(w)) continue;
      bool ok = true;
      for (int q = 0; q < p && ok; ++q)
        ok = base.has_edge(p, q) == target.has_edge(w, map[static_cast<std::size_t>(q)]);
      if (!ok) continue;
      map[static_cast<std::size_t>(p)] = w;
      used[static_cast<std::size_t>(w)] = true;
      if (self(self, p + 1)) return true;
      used[static_cast<std::size_t>(w)] = false;
      map[static_cast<std::size_t>(p)] = -1;
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return map;
}

// Branch map for bases of minimum degree 3: suppress the degree-2
// vertices of g and match the result against base.
std::optional<std::vector<int>> smooth_and_match(const Graph& g, const Graph& base) {
  std::vector<int> branch;
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) <= 1) return std::nullopt;
    if (g.degree(v) >= 3) branch.push_back(v);
  }
  if (static_cast<int>(branch.size()) != base.n()) return std::nullopt;

  std::vector<int> branch_index(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < branch.size(); ++i)
    branch_index[static_cast<std::size_t>(branch[i])] = static_cast<int>(i);

  // Walk every chain leaving a branch vertex; each chain is seen once
  // from either end, so halving the tally gives edge multiplicities.
  std::vector<std::vector<int>> multiplicity(branch.size(), std::vector<int>(branch.size(), 0));
  std::uint64_t visited_interior = 0;
  for (int b : branch) {
    for (int w : g.neighbors(b)) {
      int prev = b;
      int cur = w;
      while (g.degree(cur) == 2) {
        visited_interior |= bit(cur);
        const std::uint64_t next_mask = g.adj_mask(cur) & ~bit(prev);
        prev = cur;
        cur = std::countr_zero(next_mask);
      }
      if (g.degree(cur) < 3) return std::nullopt;
      if (cur == b) return std::nullopt;  // chain loops back: not simple
      const int bi = branch_index[static_cast<std::size_t>(b)];
      const int ci = branch_index[static_cast<std::size_t>(cur)];
      multiplicity[static_cast<std::size_t>(bi)][static_cast<std::size_t>(ci)] += 1;
    }
  }
  Graph smoothed(static_cast<int>(branch.size()));
  for (std::size_t i = 0; i < branch.size(); ++i)
    for (std::size_t j = i + 1; j < branch.size(); ++j) {
      if (multiplicity[i][j] != multiplicity[j][i]) return std::nullopt;
      if (multiplicity[i][j] > 1) return std::nullopt;  // doubled edge: not simple
      if (multiplicity[i][j] == 1) smoothed.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  // Degree-2 vertices not on any chain would form stray cycles.
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == 2 && !(visited_interior & bit(v))) return std::nullopt;

  auto iso = find_isomorphism(base, smoothed);
  if (!iso) return std::nullopt;
  std::vector<int> out(static_cast<std::size_t>(base.n()), -1);
  for (int p = 0; p < base.n(); ++p)
    out[static_cast<std::size_t>(p)] = branch[static_cast<std::size_t>((*iso)[static_cast<std::size_t>(p)])];
  return out;
}

struct ComponentShape {
  bool is_cycle = false;
  int size = 0;
};

// Classifies every component as a path or a cycle; nullopt when some
// component is neither.
std::optional<std::vector<ComponentShape>> path_cycle_shapes(const Graph& g) {
  std::vector<ComponentShape> shapes;
  for (std::uint64_t comp : g.components()) {
    const int size = std::popcount(comp);
    int deg_one = 0;
    int deg_two = 0;
    for (std::uint64_t rest = comp; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const int d = std::popcount(g.adj_mask(v) & comp);
      if (d == 1) ++deg_one;
      else if (d == 2) ++deg_two;
      else if (d != 0) return std::nullopt;
    }
    ComponentShape shape;
    shape.size = size;
    if (size == 1) {
      shape.is_cycle = false;
    } else if (deg_one == 2 && deg_two == size - 2) {
      shape.is_cycle = false;
    } else if (deg_two == size) {
      shape.is_cycle = true;
    } else {
      return std::nullopt;
    }
    shapes.push_back(shape);
  }
  return shapes;
}

// Subdivision test for bases of maximum degree 2: components must match
// up path-to-path and cycle-to-cycle, never shrinking, and isolated
// vertices exactly (an edgeless component cannot grow).
bool matches_degree_two_base(const Graph& g, const Graph& base) {
  auto g_shapes = path_cycle_shapes(g);
  auto b_shapes = path_cycle_shapes(base);
  if (!g_shapes || !b_shapes) return false;
  auto sizes = [](const std::vector<ComponentShape>& shapes, bool cycle, bool growable) {
    std::vector<int> out;
    for (const auto& s : shapes)
      if (s.is_cycle == cycle && (cycle || (s.size >= 2) == growable)) out.push_back(s.size);
    std::sort(out.begin(), out.end());
    return out;
  };
  if (sizes(*g_shapes, false, false).size() != sizes(*b_shapes, false, false).size()) return false;
  const auto g_paths = sizes(*g_shapes, false, true);
  const auto b_paths = sizes(*b_shapes, false, true);
  const auto g_cycles = sizes(*g_shapes, true, true);
  const auto b_cycles = sizes(*b_shapes, true, true);
  if (g_paths.size() != b_paths.size() || g_cycles.size() != b_cycles.size()) return false;
  for (std::size_t i = 0; i < g_paths.size(); ++i)
    if (g_paths[i] < b_paths[i]) return false;
  for (std::size_t i = 0; i < g_cycles.size(); ++i)
    if (g_cycles[i] < b_cycles[i]) return false;
  return true;
}

}  // namespace

std::optional<TwoCut> find_two_cut(const Graph& g) {
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) {
      auto comps = cut_components(g, u, v);
      if (comps.empty()) continue;
      TwoCut cut;
      cut.u = u;
      cut.v = v;
      cut.kind = g.has_edge(u, v) ? TwoCutKind::K2Cut : TwoCutKind::K2BarCut;
      cut.side_components = std::move(comps);
      return cut;
    }
  return std::nullopt;
}

std::optional<std::vector<int>> subdivision_branch_map(const Graph& g, const Graph& base) {
  if (base.n() == 0) return g.n() == 0 ? std::optional<std::vector<int>>({}) : std::nullopt;
  int min_deg = base.n();
  int max_deg = 0;
  for (int v = 0; v < base.n(); ++v) {
    min_deg = std::min(min_deg, base.degree(v));
    max_deg = std::max(max_deg, base.degree(v));
  }
  if (max_deg <= 2) {
    if (matches_degree_two_base(g, base)) return std::vector<int>{};
    return std::nullopt;
  }
  if (min_deg >= 3) return smooth_and_match(g, base);
  throw std::invalid_argument(
      "subdivision test: base must have minimum degree 3 or maximum degree 2");
}

bool is_subdivision_of(const Graph& g, const Graph& base) {
  return subdivision_branch_map(g, base).has_value();
}

std::optional<WheelWitness> find_min_3wheel(const Graph& g) {
  // Smallest wheel first, then least center, then lexicographically
  // least cycle; within a fixed cycle length the DFS below emits vertex
  // sequences in lexicographic order.
  for (int len = 3; len < g.n(); ++len) {
    for (int center = 0; center < g.n(); ++center) {
      if (g.degree(center) < 3) continue;
      std::vector<int> cycle;
      std::uint64_t on_path = 0;
      auto dfs = [&](auto&& self) -> bool {
        if (static_cast<int>(cycle.size()) == len) {
          if (!g.has_edge(cycle.back(), cycle.front())) return false;
          if (cycle[1] > cycle.back()) return false;  // fix direction
          return std::popcount(g.adj_mask(center) & on_path) >= 3;
        }
        for (int v = cycle.empty() ? 0 : cycle.front() + 1; v < g.n(); ++v) {
          if (v == center || (on_path & bit(v))) continue;
          if (!cycle.empty() && !g.has_edge(cycle.back(), v)) continue;
          cycle.push_back(v);
          on_path |= bit(v);
          if (self(self)) return true;
          on_path &= ~bit(v);
          cycle.pop_back();
        }
        return false;
      };
      if (!dfs(dfs)) continue;
      WheelWitness witness;
      witness.center = center;
      witness.cycle = cycle;
      for (int v = 0; v < g.n(); ++v)
        if ((on_path & bit(v)) && g.has_edge(center, v)) witness.spokes.push_back(v);
      return witness;
    }
  }
  return std::nullopt;
}

bool contains_rooted_diamond(const Graph& g, int root_u, int root_v) {
  // Diamond with the root joining a degree-3 vertex (0) to a degree-2
  // vertex (2).
  const Graph pattern = diamond();
  return find_model(pattern, g, Relation::rooted(0, 2, root_u, root_v)).has_value();
}

std::uint64_t dominating_vertices(const Graph& g, std::uint64_t mask) {
  if (mask & ~g.full_mask()) throw std::invalid_argument("dominating_vertices: bad mask");
  std::uint64_t out = 0;
  for (int v = 0; v < g.n(); ++v) {
    if (mask & bit(v)) continue;
    if ((g.adj_mask(v) & mask) == mask) out |= bit(v);
  }
  return out;
}

}  // namespace wqoim
