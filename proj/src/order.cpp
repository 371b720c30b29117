#include "wqoim/order.hpp"

#include <stdexcept>
#include <string>

namespace wqoim {

FinitePoset::FinitePoset(int size, const std::vector<std::pair<int, int>>& below)
    : size_(size) {
  if (size < 0) throw std::invalid_argument("poset: negative size");
  leq_.assign(static_cast<std::size_t>(size),
              std::vector<bool>(static_cast<std::size_t>(size), false));
  for (int a = 0; a < size; ++a) leq_[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] = true;
  for (auto [a, b] : below) {
    if (a < 0 || a >= size || b < 0 || b >= size)
      throw std::invalid_argument("poset: pair out of range");
    leq_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
  }
  for (int k = 0; k < size; ++k)
    for (int a = 0; a < size; ++a) {
      if (!leq_[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)]) continue;
      for (int b = 0; b < size; ++b)
        if (leq_[static_cast<std::size_t>(k)][static_cast<std::size_t>(b)])
          leq_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
    }
  for (int a = 0; a < size; ++a)
    for (int b = a + 1; b < size; ++b)
      if (leq_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] &&
          leq_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)])
        throw std::invalid_argument("poset: not antisymmetric");
}

bool FinitePoset::leq(int a, int b) const {
  if (a < 0 || a >= size_ || b < 0 || b >= size_)
    throw std::invalid_argument("poset: element out of range");
  return leq_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

FinitePoset FinitePoset::antichain(int n) { return FinitePoset(n, {}); }

FinitePoset FinitePoset::subsets_of_antichain(int n) {
  if (n < 0 || n > 10) throw std::invalid_argument("subsets_of_antichain: bad size");
  const int size = 1 << n;
  std::vector<std::pair<int, int>> below;
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      if ((a & b) == a && a != b) below.emplace_back(a, b);
  return FinitePoset(size, below);
}

namespace {

void check_elements(const std::vector<int>& word, const FinitePoset& p, const char* what) {
  for (int e : word)
    if (e < 0 || e >= p.size())
      throw std::invalid_argument(std::string(what) + ": element out of range");
}

}  // namespace

bool seq_embeds(const std::vector<int>& r, const std::vector<int>& s, const FinitePoset& p) {
  check_elements(r, p, "seq_embeds");
  check_elements(s, p, "seq_embeds");
  std::size_t j = 0;
  for (int e : r) {
    while (j < s.size() && !p.leq(e, s[j])) ++j;
    if (j == s.size()) return false;
    ++j;
  }
  return true;
}

bool set_embeds(const std::vector<int>& b, const std::vector<int>& c, const FinitePoset& p) {
  check_elements(b, p, "set_embeds");
  check_elements(c, p, "set_embeds");
  if (b.size() > c.size()) return false;
  std::vector<int> match(c.size(), -1);  // index into b matched to each c slot
  std::vector<bool> visited;
  auto augment = [&](auto&& self, int i) -> bool {
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (visited[j] || !p.leq(b[static_cast<std::size_t>(i)], c[j])) continue;
      visited[j] = true;
      if (match[j] < 0 || self(self, match[j])) {
        match[j] = i;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < b.size(); ++i) {
    visited.assign(c.size(), false);
    if (!augment(augment, static_cast<int>(i))) return false;
  }
  return true;
}

bool path_contraction_leq(const LabeledPath& p, const LabeledPath& q) {
  if (!(p.poset == q.poset))
    throw std::invalid_argument("path_contraction_leq: posets differ");
  if (p.labels.empty() || q.labels.empty())
    throw std::invalid_argument("path_contraction_leq: paths need at least one vertex");
  // Flatten to words over the poset plus a bottom symbol for the empty
  // label; the equivalence with the operational order needs every label
  // to carry at most one element.
  auto flatten = [&](const LabeledPath& path) {
    std::vector<int> word;
    for (const auto& label : path.labels) {
      if (label.size() > 1)
        throw std::invalid_argument("path_contraction_leq: labels must have at most one element");
      if (!label.empty() && (label[0] < 0 || label[0] >= path.poset.size()))
        throw std::invalid_argument("path_contraction_leq: label element out of range");
      word.push_back(label.empty() ? -1 : label[0]);
    }
    return word;
  };
  const std::vector<int> pw = flatten(p);
  const std::vector<int> qw = flatten(q);
  auto lifted_leq = [&](int a, int b) {
    if (a < 0) return true;  // empty label sits below everything
    if (b < 0) return false;
    return p.poset.leq(a, b);
  };
  std::size_t j = 0;
  for (int e : pw) {
    while (j < qw.size() && !lifted_leq(e, qw[j])) ++j;
    if (j == qw.size()) return false;
    ++j;
  }
  return true;
}

}  // namespace wqoim
