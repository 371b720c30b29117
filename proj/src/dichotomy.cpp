#include "wqoim/dichotomy.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace wqoim {

namespace {

bool component_is_path(const Graph& g, std::uint64_t comp) {
  const int size = std::popcount(comp);
  if (size == 1) return true;
  int deg_one = 0;
  for (std::uint64_t rest = comp; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    const int d = std::popcount(g.adj_mask(v) & comp);
    if (d == 1) ++deg_one;
    else if (d != 2) return false;
  }
  return deg_one == 2;
}

}  // namespace

bool FilterReport::passes_all() const {
  return linear_forest && r1 && r2 && r3 && r4 && r5 && r6;
}

FilterReport complement_filter(const Graph& h) {
  const Graph co = h.complement();
  const auto comps = co.components();
  const int cc = static_cast<int>(comps.size());
  FilterReport report;

  report.linear_forest = true;
  int non_singleton = 0;
  int largest = 0;
  for (std::uint64_t comp : comps) {
    if (!component_is_path(co, comp)) report.linear_forest = false;
    const int size = std::popcount(comp);
    if (size >= 2) ++non_singleton;
    largest = std::max(largest, size);
  }
  report.r1 = cc <= 4;
  report.r2 = non_singleton <= 1;
  report.r3 = largest <= 4;
  const Graph shape =
      disjoint_union(Graph(std::max(cc - 1, 0)), path(h.n() - cc + 1));
  report.r4 = h.n() <= 7 && co.is_isomorphic(shape);
  report.r5 = cc != 3 || h.n() <= 5;
  report.r6 = cc != 4 || h.n() <= 4;
  return report;
}

WqoVerdict classify(const Graph& h) {
  if (h.n() == 0) throw std::invalid_argument("classify: empty graph");
  WqoVerdict verdict;
  if (auto model = find_model(h, gem(), Relation::induced_minor())) {
    verdict.wqo = true;
    verdict.witness = WqoWitness::Gem;
    verdict.model = *model;
    return verdict;
  }
  if (auto model = find_model(h, k4hat(), Relation::induced_minor())) {
    verdict.wqo = true;
    verdict.witness = WqoWitness::K4Hat;
    verdict.model = *model;
    return verdict;
  }
  verdict.wqo = false;
  const FilterReport filter = complement_filter(h);
  if (!filter.linear_forest)
    verdict.reasons.push_back(
        "complement is not a disjoint union of paths; the Antihole family "
        "survives when it is excluded");
  if (!filter.r1)
    verdict.reasons.push_back(
        "complement has more than 4 components, so K5 embeds; the "
        "MatousekChain family is K5-free");
  if (!filter.r2)
    verdict.reasons.push_back(
        "complement has more than one non-singleton component, so C4 "
        "embeds; the DingInterval family is C4-free");
  if (!filter.r3)
    verdict.reasons.push_back(
        "a complement component has more than 4 vertices, so C4 embeds; "
        "the DingInterval family is C4-free");
  if (!filter.r4)
    verdict.reasons.push_back(
        "complement is not a single path plus isolated vertices on at most "
        "7 vertices");
  if (!filter.r5)
    verdict.reasons.push_back(
        "complement has 3 components on more than 5 vertices, so K5 minus "
        "an edge embeds; the MatousekChain family excludes it");
  if (!filter.r6)
    verdict.reasons.push_back(
        "complement has 4 components on more than 4 vertices, so K5 minus "
        "an edge embeds; the MatousekChain family excludes it");
  if (verdict.reasons.empty())
    verdict.reasons.push_back("no induced-minor embedding into the gem or k4hat exists");
  return verdict;
}

std::vector<Graph> wqo_table() {
  std::vector<Graph> table;
  table.push_back(complete(1));
  table.push_back(Graph(2));
  table.push_back(complete(2));
  table.push_back(disjoint_union(complete(2), complete(1)));
  table.push_back(path(3));
  table.push_back(complete(3));
  table.push_back(path(4));
  table.push_back(paw());
  table.push_back(diamond());
  table.push_back(complete(4));
  table.push_back(gem());
  table.push_back(k4hat());
  return table;
}

}  // namespace wqoim
