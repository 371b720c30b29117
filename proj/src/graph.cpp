#include "wqoim/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace wqoim {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)), 0) {
  if (n < 0 || n > max_vertices) throw std::invalid_argument("graph: bad vertex count");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("graph: vertex out of range");
}

int Graph::m() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += std::popcount(adj_[v]);
  return total / 2;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] >> v) & 1;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("graph: no loops");
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
}

std::uint64_t Graph::adj_mask(int v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::degree(int v) const { return std::popcount(adj_mask(v)); }

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  std::uint64_t m = adj_mask(v);
  while (m) {
    int u = std::countr_zero(m);
    out.push_back(u);
    m &= m - 1;
  }
  return out;
}

std::uint64_t Graph::full_mask() const {
  return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

Graph Graph::induced(std::uint64_t mask) const {
  if (mask & ~full_mask()) throw std::invalid_argument("graph: mask out of range");
  std::vector<int> keep;
  for (int v = 0; v < n_; ++v)
    if ((mask >> v) & 1) keep.push_back(v);
  Graph out(static_cast<int>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = a + 1; b < keep.size(); ++b)
      if (has_edge(keep[a], keep[b])) out.add_edge(static_cast<int>(a), static_cast<int>(b));
  return out;
}

Graph Graph::delete_vertex(int v) const {
  check_vertex(v);
  return induced(full_mask() & ~(std::uint64_t{1} << v));
}

Graph Graph::contract_edge(int u, int v) const {
  if (!has_edge(u, v)) throw std::invalid_argument("graph: contracting a non-edge");
  const int a = std::min(u, v), b = std::max(u, v);
  Graph out(n_ - 1);
  auto renum = [&](int w) { return w - (w > b); };
  for (int x = 0; x < n_; ++x) {
    if (x == b) continue;
    for (int y = x + 1; y < n_; ++y) {
      if (y == b) continue;
      bool edge = has_edge(x, y);
      if (x == a) edge = edge || has_edge(b, y);
      if (y == a) edge = edge || has_edge(x, b);
      if (edge) out.add_edge(renum(x), renum(y));
    }
  }
  return out;
}

Graph Graph::complement() const {
  Graph out(n_);
  for (int v = 0; v < n_; ++v)
    out.adj_[v] = full_mask() & ~adj_[v] & ~(std::uint64_t{1} << v);
  return out;
}

std::vector<std::uint64_t> Graph::components() const {
  std::vector<std::uint64_t> out;
  std::uint64_t todo = full_mask();
  while (todo) {
    std::uint64_t comp = std::uint64_t{1} << std::countr_zero(todo);
    for (;;) {
      std::uint64_t grown = comp;
      std::uint64_t scan = comp;
      while (scan) {
        int v = std::countr_zero(scan);
        scan &= scan - 1;
        grown |= adj_[v] & todo;
      }
      if (grown == comp) break;
      comp = grown;
    }
    out.push_back(comp);
    todo &= ~comp;
  }
  return out;
}

bool Graph::is_connected() const { return n_ <= 1 || components().size() == 1; }

bool Graph::is_k_connected(int k) const {
  if (k < 1 || k > 3) throw std::invalid_argument("graph: k must be 1, 2 or 3");
  if (m() == n_ * (n_ - 1) / 2) return n_ - 1 >= k;  // complete (or empty/singleton)
  if (!is_connected()) return false;
  // Not complete, so some deletion set of size < k could separate it.
  for (int u = 0; u < n_ && k >= 2; ++u) {
    std::uint64_t rest = full_mask() & ~(std::uint64_t{1} << u);
    if (!induced(rest).is_connected()) return false;
    for (int v = u + 1; v < n_ && k >= 3; ++v)
      if (!induced(rest & ~(std::uint64_t{1} << v)).is_connected()) return false;
  }
  return true;
}

namespace {

// Equitable refinement: repeatedly re-color by (color, sorted multiset of
// neighbor colors) until stable.  Color ids are assigned by sorted
// signature, so the result is isomorphism-invariant.
std::vector<int> refine_colors(const Graph& g, std::vector<int> color) {
  const int n = g.n();
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> s{color[v]};
      for (int u : g.neighbors(v)) s.push_back(color[u]);
      std::sort(s.begin() + 1, s.end());
      sig[v] = {std::move(s), v};
    }
    std::vector<std::pair<std::vector<int>, int>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> next(n);
    int c = -1;
    for (int i = 0; i < n; ++i) {
      if (i == 0 || sorted[i].first != sorted[i - 1].first) ++c;
      next[sorted[i].second] = c;
    }
    if (next == color) return color;
    color = std::move(next);
  }
}

void canon_search(const Graph& g, std::vector<int> color, std::string& best, bool& have) {
  const int n = g.n();
  color = refine_colors(g, color);
  int split_color = -1;
  std::vector<int> cell;
  for (int c = 0; c < n && split_color < 0; ++c) {
    cell.clear();
    for (int v = 0; v < n; ++v)
      if (color[v] == c) cell.push_back(v);
    if (cell.size() >= 2) split_color = c;
  }
  if (split_color < 0) {
    // Discrete coloring: read the adjacency matrix in color order.
    std::vector<int> vertex_at(n);
    for (int v = 0; v < n; ++v) vertex_at[color[v]] = v;
    std::string candidate;
    candidate.reserve(1 + n * (n - 1) / 2);
    candidate.push_back(static_cast<char>(n));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        candidate.push_back(g.has_edge(vertex_at[i], vertex_at[j]) ? '1' : '0');
    if (!have || candidate < best) {
      best = std::move(candidate);
      have = true;
    }
    return;
  }
  for (int pick : cell) {
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) {
      if (color[v] < split_color) next[v] = color[v];
      else if (color[v] > split_color) next[v] = color[v] + 1;
      else next[v] = (v == pick) ? split_color : split_color + 1;
    }
    canon_search(g, std::move(next), best, have);
  }
}

}  // namespace

std::string Graph::canonical_form() const {
  std::string best;
  bool have = false;
  canon_search(*this, std::vector<int>(n_, 0), best, have);
  if (!have) best.push_back(static_cast<char>(0));
  return best;
}

bool Graph::is_isomorphic(const Graph& other) const {
  if (n_ != other.n_ || m() != other.m()) return false;
  return canonical_form() == other.canonical_form();
}

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: need at least 3 vertices");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_multipartite(const std::vector<int>& part_sizes) {
  int n = 0;
  for (int s : part_sizes) {
    if (s <= 0) throw std::invalid_argument("complete_multipartite: empty part");
    n += s;
  }
  Graph g(n);
  int a_start = 0;
  for (std::size_t a = 0; a < part_sizes.size(); ++a) {
    int b_start = a_start + part_sizes[a];
    for (std::size_t b = a + 1; b < part_sizes.size(); ++b) {
      for (int u = 0; u < part_sizes[a]; ++u)
        for (int v = 0; v < part_sizes[b]; ++v) g.add_edge(a_start + u, b_start + v);
      b_start += part_sizes[b];
    }
    a_start += part_sizes[a];
  }
  return g;
}

Graph wheel(int cycle_len, int k) {
  if (cycle_len < 3 || k < 1 || k > cycle_len)
    throw std::invalid_argument("wheel: need cycle length >= 3 and 1 <= k <= length");
  Graph g = cycle(cycle_len);
  Graph out(cycle_len + 1);
  for (int u = 0; u < cycle_len; ++u)
    for (int v = u + 1; v < cycle_len; ++v)
      if (g.has_edge(u, v)) out.add_edge(u, v);
  for (int v = 0; v < k; ++v) out.add_edge(cycle_len, v);
  return out;
}

Graph prism() {
  return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

Graph k33() { return complete_multipartite({3, 3}); }

Graph gem() {
  return Graph::from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {0, 1}, {0, 2}, {0, 3}, {0, 4}});
}

Graph k4hat() {
  return Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 2}, {4, 3}});
}

Graph diamond() {
  return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

Graph paw() {
  return Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.n() + b.n());
  for (int u = 0; u < a.n(); ++u)
    for (int v = u + 1; v < a.n(); ++v)
      if (a.has_edge(u, v)) g.add_edge(u, v);
  for (int u = 0; u < b.n(); ++u)
    for (int v = u + 1; v < b.n(); ++v)
      if (b.has_edge(u, v)) g.add_edge(a.n() + u, a.n() + v);
  return g;
}

std::uint64_t mask_neighborhood(const Graph& g, std::uint64_t s) {
  std::uint64_t out = 0;
  for (std::uint64_t rest = s; rest != 0; rest &= rest - 1)
    out |= g.adj_mask(std::countr_zero(rest));
  return out;
}

bool mask_connected(const Graph& g, std::uint64_t s) {
  if (s == 0) return false;
  std::uint64_t reached = s & (~s + 1);
  for (;;) {
    std::uint64_t next = reached | (mask_neighborhood(g, reached) & s);
    if (next == reached) break;
    reached = next;
  }
  return reached == s;
}

std::vector<std::uint64_t> mask_components(const Graph& g, std::uint64_t s) {
  std::vector<std::uint64_t> out;
  while (s != 0) {
    std::uint64_t comp = s & (~s + 1);
    for (;;) {
      std::uint64_t next = comp | (mask_neighborhood(g, comp) & s);
      if (next == comp) break;
      comp = next;
    }
    out.push_back(comp);
    s &= ~comp;
  }
  return out;
}

}  // namespace wqoim
