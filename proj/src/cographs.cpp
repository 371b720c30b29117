#include "wqoim/cographs.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace wqoim {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Builds the subtree for the vertices in mask, returning its node index
// and canonical encoding.  The caller guarantees the graph restricted
// to mask is a cograph.
std::pair<int, std::string> build_subtree(const Graph& g, const Graph& co, std::uint64_t mask,
                                          Cotree& t) {
  if (std::popcount(mask) == 1) {
    Cotree::Node node;
    node.tag = Cotree::Tag::Leaf;
    node.leaf_vertex = std::countr_zero(mask);
    t.nodes.push_back(node);
    return {static_cast<int>(t.nodes.size()) - 1, "L"};
  }
  auto parts = mask_components(g, mask);
  Cotree::Tag tag = Cotree::Tag::Union;
  if (parts.size() < 2) {
    parts = mask_components(co, mask);
    tag = Cotree::Tag::Join;
    if (parts.size() < 2) throw std::logic_error("cotree: input is not a cograph");
  }
  std::vector<std::pair<std::string, int>> children;
  for (std::uint64_t part : parts) {
    auto [child, enc] = build_subtree(g, co, part, t);
    children.emplace_back(std::move(enc), child);
  }
  // Sort by encoding; tie-break on the least leaf id for a fully
  // deterministic tree.
  std::sort(children.begin(), children.end(),
            [&t](const auto& a, const auto& b) {
              if (a.first != b.first) return a.first < b.first;
              auto least_leaf = [&t](int node) {
                int best = Graph::max_vertices;
                auto walk = [&](auto&& self, int at) -> void {
                  const auto& nd = t.nodes[static_cast<std::size_t>(at)];
                  if (nd.tag == Cotree::Tag::Leaf) {
                    best = std::min(best, nd.leaf_vertex);
                    return;
                  }
                  for (int c : nd.children) self(self, c);
                };
                walk(walk, node);
                return best;
              };
              return least_leaf(a.second) < least_leaf(b.second);
            });
  Cotree::Node node;
  node.tag = tag;
  std::string enc(tag == Cotree::Tag::Union ? "U(" : "J(");
  for (std::size_t i = 0; i < children.size(); ++i) {
    if (i != 0) enc.push_back(',');
    enc += children[i].first;
    node.children.push_back(children[i].second);
  }
  enc.push_back(')');
  t.nodes.push_back(node);
  return {static_cast<int>(t.nodes.size()) - 1, std::move(enc)};
}

std::string encode_subtree(const Cotree& t, int at) {
  const auto& node = t.nodes[static_cast<std::size_t>(at)];
  if (node.tag == Cotree::Tag::Leaf) return "L";
  std::vector<std::string> parts;
  for (int c : node.children) parts.push_back(encode_subtree(t, c));
  std::sort(parts.begin(), parts.end());
  std::string enc(node.tag == Cotree::Tag::Union ? "U(" : "J(");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) enc.push_back(',');
    enc += parts[i];
  }
  enc.push_back(')');
  return enc;
}

}  // namespace

std::string Cotree::canonical_encoding() const {
  if (root < 0 || root >= static_cast<int>(nodes.size()))
    throw std::invalid_argument("cotree: bad root");
  return encode_subtree(*this, root);
}

bool is_cograph(const Graph& g) {
  if (g.n() <= 1) return true;
  const auto comps = g.components();
  if (comps.size() > 1) {
    for (std::uint64_t comp : comps)
      if (!is_cograph(g.induced(comp))) return false;
    return true;
  }
  const auto co_comps = g.complement().components();
  if (co_comps.size() == 1) return false;
  for (std::uint64_t comp : co_comps)
    if (!is_cograph(g.induced(comp))) return false;
  return true;
}

std::optional<Cotree> cotree(const Graph& g) {
  if (!is_cograph(g)) return std::nullopt;
  Cotree t;
  if (g.n() == 0) return t;  // empty tree for the empty graph
  const Graph co = g.complement();
  t.root = build_subtree(g, co, g.full_mask(), t).first;
  return t;
}

Graph cotree_to_graph(const Cotree& t) {
  if (t.nodes.empty()) {
    if (t.root != -1) throw std::invalid_argument("cotree: bad root");
    return Graph(0);
  }
  const int size = static_cast<int>(t.nodes.size());
  if (t.root < 0 || t.root >= size) throw std::invalid_argument("cotree: bad root");

  std::vector<int> leaves;
  std::vector<std::uint64_t> subtree_leaves(t.nodes.size(), 0);
  std::vector<char> state(t.nodes.size(), 0);  // 0 unvisited, 1 active, 2 done
  auto walk = [&](auto&& self, int at) -> std::uint64_t {
    if (at < 0 || at >= size) throw std::invalid_argument("cotree: bad child index");
    auto& st = state[static_cast<std::size_t>(at)];
    if (st == 1) throw std::invalid_argument("cotree: cycle");
    if (st == 2) throw std::invalid_argument("cotree: node reused");
    st = 1;
    const auto& node = t.nodes[static_cast<std::size_t>(at)];
    std::uint64_t mask = 0;
    if (node.tag == Cotree::Tag::Leaf) {
      if (!node.children.empty()) throw std::invalid_argument("cotree: leaf with children");
      if (node.leaf_vertex < 0 || node.leaf_vertex >= Graph::max_vertices)
        throw std::invalid_argument("cotree: bad leaf vertex");
      leaves.push_back(node.leaf_vertex);
      mask = bit(node.leaf_vertex);
    } else {
      if (node.children.size() < 2)
        throw std::invalid_argument("cotree: internal node needs two children");
      for (int c : node.children) {
        if (c >= 0 && c < size) {
          const auto& child = t.nodes[static_cast<std::size_t>(c)];
          if (child.tag == node.tag)
            throw std::invalid_argument("cotree: tags must alternate");
        }
        mask |= self(self, c);
      }
    }
    st = 2;
    subtree_leaves[static_cast<std::size_t>(at)] = mask;
    return mask;
  };
  walk(walk, t.root);

  std::sort(leaves.begin(), leaves.end());
  for (std::size_t i = 0; i < leaves.size(); ++i)
    if (leaves[i] != static_cast<int>(i))
      throw std::invalid_argument("cotree: leaf ids must be exactly 0..n-1");

  Graph g(static_cast<int>(leaves.size()));
  for (const auto& node : t.nodes) {
    if (node.tag != Cotree::Tag::Join) continue;
    for (std::size_t a = 0; a < node.children.size(); ++a)
      for (std::size_t b = a + 1; b < node.children.size(); ++b) {
        const std::uint64_t left = subtree_leaves[static_cast<std::size_t>(node.children[a])];
        std::uint64_t right = subtree_leaves[static_cast<std::size_t>(node.children[b])];
        for (std::uint64_t ls = left; ls != 0; ls &= ls - 1)
          for (std::uint64_t rs = right; rs != 0; rs &= rs - 1)
            g.add_edge(std::countr_zero(ls), std::countr_zero(rs));
      }
  }
  return g;
}

std::optional<BasicTag> is_basic_in(const Graph& g, std::uint64_t comp) {
  if (comp == 0 || (comp & ~g.full_mask()))
    throw std::invalid_argument("is_basic_in: piece must be a nonempty vertex set");
  if (!mask_connected(g, comp)) throw std::invalid_argument("is_basic_in: piece must be connected");
  const Graph piece = g.induced(comp);
  if (is_cograph(piece)) return BasicTag::Cograph;

  int deg_one = 0;
  bool path = true;
  for (std::uint64_t rest = comp; rest != 0 && path; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    const int d = std::popcount(g.adj_mask(v) & comp);
    if (d == 1) ++deg_one;
    else if (d == 2) path = g.degree(v) == 2;  // interior: no outside contacts
    else path = false;
  }
  if (path && deg_one == 2) return BasicTag::Degree2Path;
  return std::nullopt;
}

}  // namespace wqoim
