#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace minorforge {

using Vertex = std::uint32_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

/// Sorted, duplicate-free list of vertex labels.
///
/// A VertexSet does not know its host graph; operations taking one check
/// membership against the graph they are given and throw
/// std::out_of_range on labels outside 0..n-1.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}
  explicit VertexSet(std::vector<Vertex> vs);

  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] bool empty() const { return members_.empty(); }
  [[nodiscard]] bool contains(Vertex v) const;
  [[nodiscard]] Vertex operator[](std::size_t i) const { return members_[i]; }
  [[nodiscard]] auto begin() const { return members_.begin(); }
  [[nodiscard]] auto end() const { return members_.end(); }
  [[nodiscard]] const std::vector<Vertex>& members() const { return members_; }

  // Adds v, keeping the order; no-op if already present.
  void insert(Vertex v);

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Simple undirected graph on vertices 0..n-1, stored as one bit row per
/// vertex. The adjacency is kept symmetric and loop-free by every mutator.
class Graph {
 public:
  static constexpr std::size_t kMaxOrder = 512;

  Graph() = default;
  explicit Graph(std::size_t order);

  [[nodiscard]] std::size_t order() const { return order_; }
  [[nodiscard]] std::size_t edge_count() const;
  [[nodiscard]] std::size_t words_per_row() const { return words_; }

  [[nodiscard]] bool has_edge(Vertex u, Vertex v) const;
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  [[nodiscard]] std::size_t degree(Vertex v) const;
  // Ascending.
  [[nodiscard]] std::vector<Vertex> neighbors(Vertex v) const;
  [[nodiscard]] std::span<const std::uint64_t> row(Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  std::size_t order_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// A derived graph together with the label correspondence to its host.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_host;    // local label -> host label
  std::vector<Vertex> from_host;  // host label -> local label or kNoVertex
};

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep);
Subgraph delete_vertices(const Graph& g, const VertexSet& drop);

/// Replaces the connected set s by one vertex. The merged vertex takes the
/// label min(s) - (number of removed vertices below it), i.e. the result is
/// relabelled like delete_vertices(g, s \ {min(s)}).
Graph contract_set(const Graph& g, const VertexSet& s);

/// Maximal connected sets, each sorted, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_connected(const Graph& g);
// True when g[s] is connected; the empty set counts as disconnected.
bool induces_connected(const Graph& g, const VertexSet& s);
bool is_stable(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);
bool is_dominating(const Graph& g, const VertexSet& s);

/// Hop distance to the nearest source; std::nullopt for unreachable vertices.
std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g,
                                                      const VertexSet& sources);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);

// Named graphs used throughout tests, benchmarks and docs.
namespace named {
Graph complete(std::size_t n);
Graph empty(std::size_t n);
Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph star(std::size_t leaves);
// Center 0, legs of the given lengths numbered outward leg by leg.
Graph spider(std::span<const std::size_t> leg_lengths);
// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram 5..9.
Graph petersen();
}  // namespace named

}  // namespace minorforge
