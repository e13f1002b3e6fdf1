#include <algorithm>

#include "minorforge/detail/bits.hpp"
#include "minorforge/invariants.hpp"

namespace minorforge {

namespace {

using detail::Bits;

constexpr std::size_t kUncolored = static_cast<std::size_t>(-1);

template <std::size_t W>
class ColoringSolver {
  using B = Bits<W>;

 public:
  ColoringSolver(const Graph& g, std::uint64_t limit) : n_(g.order()), limit_(limit) {
    adj_.reserve(n_);
    for (Vertex v = 0; v < n_; ++v) adj_.push_back(detail::load_row<W>(g.row(v)));
    degree_.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) degree_[v] = adj_[v].count();
    color_.assign(n_, kUncolored);
    classes_.assign(n_, B{});
  }

  Coloring solve(const VertexSet& clique) {
    lower_ = clique.size();
    std::size_t used = 0;
    for (Vertex v : clique) assign(v, used++);
    std::size_t colored = used;

    greedy_dsatur(used, colored);
    if (best_ > lower_) search(used, colored);

    return {best_, best_coloring_, timed_out_ ? SolveStatus::timeout : SolveStatus::exact};
  }

 private:
  void assign(std::size_t v, std::size_t c) {
    color_[v] = c;
    classes_[c].set(v);
  }
  void unassign(std::size_t v) {
    classes_[color_[v]].reset(v);
    color_[v] = kUncolored;
  }

  // Uncoloured vertex with the most distinct neighbour colours; ties go to
  // the larger degree, then the lower index.
  std::size_t pick(std::size_t used) const {
    std::size_t best_v = kUncolored;
    std::size_t best_sat = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      if (color_[v] != kUncolored) continue;
      std::size_t sat = 0;
      for (std::size_t c = 0; c < used; ++c)
        if (classes_[c].intersects(adj_[v])) ++sat;
      if (best_v == kUncolored || sat > best_sat ||
          (sat == best_sat && degree_[v] > degree_[best_v])) {
        best_v = v;
        best_sat = sat;
      }
    }
    return best_v;
  }

  void greedy_dsatur(std::size_t used, std::size_t colored) {
    std::vector<std::size_t> trail;
    while (colored < n_) {
      const std::size_t v = pick(used);
      std::size_t c = 0;
      while (c < used && classes_[c].intersects(adj_[v])) ++c;
      if (c == used) ++used;
      assign(v, c);
      trail.push_back(v);
      ++colored;
    }
    best_ = used;
    best_coloring_ = color_;
    for (auto v : trail) unassign(v);
  }

  void search(std::size_t used, std::size_t colored) {
    if (timed_out_ || best_ == lower_) return;
    if (++nodes_ > limit_) {
      timed_out_ = true;
      return;
    }
    if (used >= best_) return;
    if (colored == n_) {
      best_ = used;
      best_coloring_ = color_;
      return;
    }
    const std::size_t v = pick(used);
    for (std::size_t c = 0; c < used; ++c) {
      if (classes_[c].intersects(adj_[v])) continue;
      assign(v, c);
      search(used, colored + 1);
      unassign(v);
      if (timed_out_ || best_ == lower_) return;
    }
    if (used + 1 < best_) {
      assign(v, used);
      search(used + 1, colored + 1);
      unassign(v);
    }
  }

  std::size_t n_;
  std::uint64_t limit_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
  std::vector<B> adj_;
  std::vector<std::size_t> degree_;
  std::vector<std::size_t> color_;
  std::vector<B> classes_;
  std::size_t lower_ = 0;
  std::size_t best_ = 0;
  std::vector<std::size_t> best_coloring_;
};

}  // namespace

Coloring chromatic_number(const Graph& g, NodeBudget budget) {
  if (g.order() == 0) return {};
  // The clique only seeds the bound; an inexact clique is still a clique.
  const ExtremalSet clique = clique_number(g, budget);
  return detail::dispatch_width(g.order(), [&](auto width) {
    return ColoringSolver<decltype(width)::value>(g, budget.nodes).solve(clique.witness);
  });
}

bool is_proper_coloring(const Graph& g, const Coloring& c) {
  if (c.color_of.size() != g.order()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (c.color_of[v] >= c.colors) return false;
    for (Vertex w : g.neighbors(v))
      if (c.color_of[v] == c.color_of[w]) return false;
  }
  return true;
}

}  // namespace minorforge
