#include "minorforge/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>
#include <string>

namespace minorforge {

VertexSet::VertexSet(std::vector<Vertex> vs) : members_(std::move(vs)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::insert(Vertex v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) members_.insert(it, v);
}

Graph::Graph(std::size_t order) : order_(order), words_((order + 63) / 64) {
  if (order > kMaxOrder) {
    throw std::invalid_argument("graph order " + std::to_string(order) +
                                " exceeds the maximum of " + std::to_string(kMaxOrder));
  }
  bits_.assign(order_ * words_, 0);
}

void Graph::check_vertex(Vertex v) const {
  if (v >= order_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                            std::to_string(order_));
  }
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto w : bits_) twice += static_cast<std::size_t>(std::popcount(w));
  return twice / 2;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return (bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1U;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  bits_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  bits_[u * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  bits_[v * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

std::size_t Graph::degree(Vertex v) const {
  std::size_t d = 0;
  for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  auto r = row(v);
  for (std::size_t k = 0; k < r.size(); ++k) {
    std::uint64_t x = r[k];
    while (x) {
      out.push_back(static_cast<Vertex>(k * 64 + std::countr_zero(x)));
      x &= x - 1;
    }
  }
  return out;
}

std::span<const std::uint64_t> Graph::row(Vertex v) const {
  check_vertex(v);
  return {bits_.data() + v * words_, words_};
}

namespace {

void check_members(const Graph& g, const VertexSet& s) {
  if (!s.empty() && s.members().back() >= g.order()) {
    throw std::out_of_range("vertex " + std::to_string(s.members().back()) +
                            " out of range for order " + std::to_string(g.order()));
  }
}

std::vector<char> membership(const Graph& g, const VertexSet& s) {
  std::vector<char> in(g.order(), 0);
  for (Vertex v : s) in[v] = 1;
  return in;
}

}  // namespace

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  check_members(g, keep);
  Subgraph sub{Graph(keep.size()), keep.members(),
               std::vector<Vertex>(g.order(), kNoVertex)};
  for (std::size_t i = 0; i < keep.size(); ++i) sub.from_host[keep[i]] = static_cast<Vertex>(i);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (g.has_edge(keep[i], keep[j]))
        sub.graph.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return sub;
}

Subgraph delete_vertices(const Graph& g, const VertexSet& drop) {
  check_members(g, drop);
  std::vector<Vertex> keep;
  keep.reserve(g.order() - drop.size());
  for (Vertex v = 0; v < g.order(); ++v)
    if (!drop.contains(v)) keep.push_back(v);
  return induced_subgraph(g, VertexSet(std::move(keep)));
}

Graph contract_set(const Graph& g, const VertexSet& s) {
  check_members(g, s);
  if (s.empty()) throw std::invalid_argument("cannot contract an empty vertex set");
  if (!induces_connected(g, s))
    throw std::invalid_argument("cannot contract a set that does not induce a connected subgraph");

  const Vertex keeper = s[0];
  std::vector<Vertex> rest(s.begin() + 1, s.end());
  Subgraph sub = delete_vertices(g, VertexSet(rest));
  const Vertex merged = sub.from_host[keeper];
  auto in_s = membership(g, s);
  for (Vertex x = 0; x < g.order(); ++x) {
    if (in_s[x]) continue;
    for (Vertex y : s) {
      if (g.has_edge(x, y)) {
        sub.graph.add_edge(merged, sub.from_host[x]);
        break;
      }
    }
  }
  return sub.graph;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<char> seen(g.order(), 0);
  for (Vertex start = 0; start < g.order(); ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> comp{start};
    seen[start] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex w : g.neighbors(comp[head])) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    out.emplace_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool induces_connected(const Graph& g, const VertexSet& s) {
  check_members(g, s);
  if (s.empty()) return false;
  auto in_s = membership(g, s);
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{s[0]};
  seen[s[0]] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (in_s[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == s.size();
}

bool is_stable(const Graph& g, const VertexSet& s) {
  check_members(g, s);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.has_edge(s[i], s[j])) return false;
  return true;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  check_members(g, s);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.has_edge(s[i], s[j])) return false;
  return true;
}

bool is_dominating(const Graph& g, const VertexSet& s) {
  check_members(g, s);
  auto in_s = membership(g, s);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (in_s[v]) continue;
    bool hit = false;
    for (Vertex w : s) {
      if (g.has_edge(v, w)) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g,
                                                      const VertexSet& sources) {
  check_members(g, sources);
  if (sources.empty()) throw std::invalid_argument("bfs_distances needs at least one source");
  std::vector<std::optional<std::size_t>> dist(g.order());
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    dist[s] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (!dist[w]) {
        dist[w] = *dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.order() + b.order());
  const auto shift = static_cast<Vertex>(a.order());
  for (Vertex u = 0; u < a.order(); ++u)
    for (Vertex v : a.neighbors(u))
      if (u < v) out.add_edge(u, v);
  for (Vertex u = 0; u < b.order(); ++u)
    for (Vertex v : b.neighbors(u))
      if (u < v) out.add_edge(u + shift, v + shift);
  return out;
}

namespace named {

Graph complete(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty(std::size_t n) { return Graph(n); }

Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return g;
}

Graph path(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph star(std::size_t leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph spider(std::span<const std::size_t> leg_lengths) {
  std::size_t n = 1;
  for (auto len : leg_lengths) n += len;
  Graph g(n);
  Vertex next = 1;
  for (auto len : leg_lengths) {
    Vertex prev = 0;
    for (std::size_t i = 0; i < len; ++i) {
      g.add_edge(prev, next);
      prev = next++;
    }
  }
  return g;
}

Graph petersen() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

}  // namespace named

}  // namespace minorforge
