#include <algorithm>

#include "minorforge/detail/bits.hpp"
#include "minorforge/invariants.hpp"

namespace minorforge {

namespace {

using detail::Bits;

template <std::size_t W>
class StableSetSolver {
  using B = Bits<W>;

 public:
  StableSetSolver(const Graph& g, std::uint64_t limit) : n_(g.order()), limit_(limit) {
    adj_.reserve(n_);
    for (Vertex v = 0; v < n_; ++v) adj_.push_back(detail::load_row<W>(g.row(v)));
  }

  ExtremalSet solve() {
    const B all = B::prefix(n_);
    seed_greedy(all);
    search(all, B{}, 0);

    std::vector<Vertex> members;
    best_.for_each([&](std::size_t v) { members.push_back(static_cast<Vertex>(v)); });
    return {best_size_, VertexSet(std::move(members)),
            timed_out_ ? SolveStatus::timeout : SolveStatus::exact};
  }

 private:
  // Minimum-degree greedy gives the search a non-trivial incumbent.
  void seed_greedy(B cand) {
    B chosen;
    std::size_t size = 0;
    while (cand.any()) {
      std::size_t pick = B::kCapacity;
      std::size_t pick_deg = n_ + 1;
      cand.for_each([&](std::size_t v) {
        const std::size_t d = adj_[v].count_and(cand);
        if (d < pick_deg) {
          pick_deg = d;
          pick = v;
        }
      });
      chosen.set(pick);
      ++size;
      cand.reset(pick);
      cand -= adj_[pick];
    }
    best_ = chosen;
    best_size_ = size;
  }

  // Number of cliques in a greedy clique cover of cand; bounds alpha(cand).
  std::size_t clique_cover(B cand) const {
    std::size_t cliques = 0;
    while (cand.any()) {
      const std::size_t u = cand.first();
      cand.reset(u);
      B grow = cand & adj_[u];
      while (grow.any()) {
        const std::size_t w = grow.first();
        cand.reset(w);
        grow &= adj_[w];
      }
      ++cliques;
    }
    return cliques;
  }

  void search(B cand, B current, std::size_t size) {
    if (timed_out_) return;
    if (++nodes_ > limit_) {
      timed_out_ = true;
      return;
    }

    // Vertices with no neighbour among the candidates belong to some
    // maximum stable set of cand.
    std::size_t branch = B::kCapacity;
    std::size_t branch_deg = 0;
    B isolated;
    cand.for_each([&](std::size_t v) {
      const std::size_t d = adj_[v].count_and(cand);
      if (d == 0) {
        isolated.set(v);
      } else if (d > branch_deg) {
        branch_deg = d;
        branch = v;
      }
    });
    if (isolated.any()) {
      current |= isolated;
      size += isolated.count();
      cand -= isolated;
    }

    if (cand.none()) {
      if (size > best_size_) {
        best_size_ = size;
        best_ = current;
      }
      return;
    }
    if (size + cand.count() <= best_size_) return;
    if (size + clique_cover(cand) <= best_size_) return;

    // `branch` was chosen before isolated vertices were removed; removing
    // them does not change any remaining degree.
    B take = cand;
    take.reset(branch);
    take -= adj_[branch];
    B with = current;
    with.set(branch);
    search(take, with, size + 1);

    cand.reset(branch);
    search(cand, current, size);
  }

  std::size_t n_;
  std::uint64_t limit_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
  std::vector<B> adj_;
  B best_;
  std::size_t best_size_ = 0;
};

}  // namespace

const char* to_string(SolveStatus s) { return s == SolveStatus::exact ? "exact" : "timeout"; }

ExtremalSet stability_number(const Graph& g, NodeBudget budget) {
  if (g.order() == 0) return {};
  return detail::dispatch_width(g.order(), [&](auto width) {
    return StableSetSolver<decltype(width)::value>(g, budget.nodes).solve();
  });
}

ExtremalSet clique_number(const Graph& g, NodeBudget budget) {
  return stability_number(complement(g), budget);
}

}  // namespace minorforge
