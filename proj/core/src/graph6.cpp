#include "minorforge/graph6.hpp"

#include <istream>

namespace minorforge {

Graph6Error::Graph6Error(const std::string& what, std::size_t offset)
    : std::runtime_error("graph6: " + what + " at byte " + std::to_string(offset)),
      offset_(offset) {}

namespace {

constexpr int kBias = 63;
constexpr int kMaxChar = 126;

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kGraph6Header)) pos = kGraph6Header.size();

  if (pos >= text.size()) throw Graph6Error("empty record", pos);
  if (text[pos] == ':' || text[pos] == ';')
    throw Graph6Error("sparse6 records are not supported", pos);
  if (text[pos] == '&') throw Graph6Error("digraph6 records are not supported", pos);

  auto sextet = [&](std::size_t at) -> std::uint64_t {
    if (at >= text.size()) throw Graph6Error("record truncated", at);
    const int c = static_cast<unsigned char>(text[at]);
    if (c < kBias || c > kMaxChar)
      throw Graph6Error("character " + std::to_string(c) + " outside 63..126", at);
    return static_cast<std::uint64_t>(c - kBias);
  };

  std::uint64_t n = 0;
  const std::size_t size_at = pos;
  if (sextet(pos) != 63) {
    n = sextet(pos);
    pos += 1;
  } else if (pos + 1 < text.size() && sextet(pos + 1) == 63) {
    for (std::size_t i = 0; i < 6; ++i) n = (n << 6) | sextet(pos + 2 + i);
    pos += 8;
  } else {
    for (std::size_t i = 0; i < 3; ++i) n = (n << 6) | sextet(pos + 1 + i);
    pos += 4;
  }
  if (n > Graph::kMaxOrder)
    throw Graph6Error("order " + std::to_string(n) + " exceeds supported maximum " +
                          std::to_string(Graph::kMaxOrder),
                      size_at);

  const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t data_bytes = static_cast<std::size_t>((pairs + 5) / 6);
  if (text.size() > pos + data_bytes) throw Graph6Error("trailing garbage", pos + data_bytes);

  Graph g(static_cast<std::size_t>(n));
  std::uint64_t bit = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++bit) {
      const std::size_t at = pos + static_cast<std::size_t>(bit / 6);
      if ((sextet(at) >> (5 - bit % 6)) & 1U) g.add_edge(u, v);
    }
  }
  if (data_bytes > 0) {
    const std::size_t last = pos + data_bytes - 1;
    const auto used = static_cast<unsigned>(pairs - 6 * (data_bytes - 1));
    const std::uint64_t pad_mask = (std::uint64_t{1} << (6 - used)) - 1;
    if (sextet(last) & pad_mask) throw Graph6Error("bit set beyond the triangle", last);
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 258047) throw std::invalid_argument("order too large for graph6");
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(kMaxChar));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  unsigned acc = 0;
  unsigned filled = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

std::optional<Graph6Record> Graph6Reader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (line == kGraph6Header) continue;
    try {
      Graph g = parse_graph6(line);
      return Graph6Record{line_, std::move(line), std::move(g)};
    } catch (const Graph6Error& e) {
      skipped_.push_back({line_, e.what()});
    }
  }
  return std::nullopt;
}

}  // namespace minorforge
