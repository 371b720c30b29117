#include "wqoim/graph6.hpp"

#include <cstdint>
#include <stdexcept>

namespace wqoim {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void push_group_bits(std::string& out, std::uint64_t value, int bit_count) {
  for (int shift = bit_count - 6; shift >= 0; shift -= 6)
    out.push_back(static_cast<char>(((value >> shift) & 0x3f) + 63));
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    push_group_bits(out, static_cast<std::uint64_t>(n), 18);
  }
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph graph6_decode(std::string_view line) {
  if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
    line.remove_suffix(1);
  if (line.empty()) throw std::invalid_argument("graph6: empty input");

  std::size_t pos = 0;
  auto next6 = [&]() -> int {
    if (pos >= line.size()) throw std::invalid_argument("graph6: truncated");
    const int d = static_cast<unsigned char>(line[pos++]) - 63;
    if (d < 0 || d > 63) throw std::invalid_argument("graph6: byte out of range");
    return d;
  };

  std::uint64_t n = 0;
  if (line[0] != '~') {
    n = static_cast<std::uint64_t>(next6());
  } else if (line.size() >= 2 && line[1] == '~') {
    pos = 2;
    for (int k = 0; k < 6; ++k) n = (n << 6) | static_cast<std::uint64_t>(next6());
  } else {
    pos = 1;
    for (int k = 0; k < 3; ++k) n = (n << 6) | static_cast<std::uint64_t>(next6());
  }
  if (n > static_cast<std::uint64_t>(Graph::max_vertices))
    throw std::invalid_argument("graph6: too many vertices for this library");

  Graph g(static_cast<int>(n));
  int acc = 0, left = 0;
  for (int j = 1; j < static_cast<int>(n); ++j) {
    for (int i = 0; i < j; ++i) {
      if (left == 0) {
        acc = next6();
        left = 6;
      }
      if ((acc >> --left) & 1) g.add_edge(i, j);
    }
  }
  // Padding must be zero and nothing may trail the data.
  if (left > 0 && (acc & ((1 << left) - 1)) != 0)
    throw std::invalid_argument("graph6: nonzero padding");
  if (pos != line.size()) throw std::invalid_argument("graph6: trailing bytes");
  return g;
}

}  // namespace wqoim
