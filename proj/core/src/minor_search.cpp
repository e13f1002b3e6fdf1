// K_t-minor decision and Hadwiger number.
//
// For a connected graph any K_t model can be grown until it covers every
// vertex (an unused vertex adjacent to a branch set can join it), so K_t is a
// minor iff V splits into t connected, pairwise adjacent parts. The search
// walks that space by contraction: a state is a partition of V into
// connected parts (the vertices of the contracted graph G/P), some of which
// are frozen as final branch sets. Each node picks the unfrozen part v of
// minimum degree and either merges it into an unfrozen neighbour or, when its
// degree allows, freezes it. Necessary conditions prune the rest:
//   - m parts must contract to t: edges(G/P) >= C(t,2) + (m - t), since a
//     contraction always loses the contracted edge;
//   - at least 2t - m parts survive as singletons; those have degree >= t-1
//     and are pairwise adjacent, so they need a clique that large;
//   - frozen parts are pairwise adjacent and keep degree >= t-1;
//   - a part of degree < t-1 cannot be final and must merge; with t >= 4 a
//     part of degree <= 2 can always be merged into its first unfrozen
//     neighbour, so it does not branch.
// Failed states are memoised on (partition, frozen set).

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "minorforge/detail/bits.hpp"
#include "minorforge/invariants.hpp"

namespace minorforge {

namespace {

using detail::Bits;

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& key) const noexcept {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL ^ key.size();
    for (auto x : key) {
      h ^= x + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
      h *= 0xBF58476D1CE4E5B9ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

constexpr std::size_t kMemoMinOrder = 11;
constexpr std::size_t kMemoCapacity = 400'000;

template <std::size_t W>
class ContractionSearch {
  using B = Bits<W>;

  struct State {
    B alive;
    B frozen;
    std::vector<B> members;
    std::vector<B> adj;
    std::size_t parts = 0;
    std::size_t edges = 0;
  };

 public:
  // g must be connected with 3 <= t <= order.
  ContractionSearch(const Graph& g, std::size_t t, std::uint64_t limit)
      : n_(g.order()), t_(t), limit_(limit), memo_enabled_(n_ >= kMemoMinOrder) {
    stack_.resize(n_ + 2);
    for (auto& s : stack_) {
      s.members.resize(n_);
      s.adj.resize(n_);
    }
    State& root = stack_[0];
    root.alive = B::prefix(n_);
    for (Vertex v = 0; v < n_; ++v) {
      root.members[v].set(v);
      root.adj[v] = detail::load_row<W>(g.row(v));
    }
    root.parts = n_;
    root.edges = g.edge_count();
  }

  MinorAnswer run() {
    if (search(0)) return MinorAnswer::found;
    return timed_out_ ? MinorAnswer::timeout : MinorAnswer::none;
  }

  [[nodiscard]] std::vector<VertexSet> parts() const {
    std::vector<VertexSet> out;
    const State& s = stack_[found_depth_];
    s.alive.for_each([&](std::size_t r) {
      std::vector<Vertex> vs;
      s.members[r].for_each([&](std::size_t v) { vs.push_back(static_cast<Vertex>(v)); });
      out.emplace_back(std::move(vs));
    });
    return out;
  }

  [[nodiscard]] std::uint64_t nodes() const { return nodes_; }

 private:
  bool search(std::size_t depth) {
    if (timed_out_) return false;
    if (++nodes_ > limit_) {
      timed_out_ = true;
      return false;
    }
    const State& s = stack_[depth];
    if (s.parts == t_) {
      if (s.edges == t_ * (t_ - 1) / 2) {
        found_depth_ = depth;
        return true;
      }
      return false;
    }
    if (!feasible(s)) return false;
    if (memo_enabled_) {
      make_key(s);
      if (memo_.contains(key_)) return false;
    }

    std::size_t v = B::kCapacity;
    std::size_t v_deg = n_ + 1;
    (s.alive - s.frozen).for_each([&](std::size_t u) {
      const std::size_t d = s.adj[u].count();
      if (d < v_deg) {
        v_deg = d;
        v = u;
      }
    });

    const B cands = s.adj[v] - s.frozen;
    if (cands.any()) {
      if (v_deg < t_ - 1 && (cands.count() == 1 || (t_ >= 4 && v_deg <= 2))) {
        contract(s, stack_[depth + 1], v, cands.first());
        if (search(depth + 1)) return true;
      } else {
        // Merging along an edge with few common neighbours loses few edges.
        std::vector<std::pair<std::size_t, std::size_t>> order;
        cands.for_each([&](std::size_t c) { order.emplace_back(s.adj[v].count_and(s.adj[c]), c); });
        std::sort(order.begin(), order.end());
        for (const auto& [common, c] : order) {
          contract(s, stack_[depth + 1], v, c);
          if (search(depth + 1)) return true;
          if (timed_out_) return false;
        }
      }
    }
    if (!timed_out_ && v_deg >= t_ - 1 && s.frozen.subset_of(s.adj[v])) {
      State& next = stack_[depth + 1];
      copy_state(s, next);
      next.frozen.set(v);
      if (search(depth + 1)) return true;
    }

    if (memo_enabled_ && !timed_out_ && memo_.size() < kMemoCapacity) {
      make_key(stack_[depth]);
      memo_.insert(key_);
    }
    return false;
  }

  bool feasible(const State& s) const {
    const std::size_t m = s.parts;
    if (s.edges < t_ * (t_ - 1) / 2 + (m - t_)) return false;
    if (s.frozen.count() >= t_) return false;

    bool frozen_ok = true;
    s.frozen.for_each([&](std::size_t v) {
      if (s.adj[v].count() < t_ - 1) frozen_ok = false;
    });
    if (!frozen_ok) return false;

    if (2 * t_ > m) {
      const std::size_t singles = 2 * t_ - m;
      B high;
      s.alive.for_each([&](std::size_t v) {
        if (s.adj[v].count() >= t_ - 1) high.set(v);
      });
      if (high.count() < singles) return false;
      if (singles >= 3 && greedy_colors(s, high) < singles) return false;
    }
    return true;
  }

  // Colours used by a sequential greedy colouring of the contracted graph
  // restricted to `within`; an upper bound on its clique number.
  std::size_t greedy_colors(const State& s, B within) const {
    std::size_t colors = 0;
    while (within.any()) {
      B cls = within;
      B pick;
      while (cls.any()) {
        const std::size_t v = cls.first();
        pick.set(v);
        cls.reset(v);
        cls -= s.adj[v];
      }
      within -= pick;
      ++colors;
    }
    return colors;
  }

  void copy_state(const State& from, State& to) const {
    to.alive = from.alive;
    to.frozen = from.frozen;
    std::copy(from.members.begin(), from.members.end(), to.members.begin());
    std::copy(from.adj.begin(), from.adj.end(), to.adj.begin());
    to.parts = from.parts;
    to.edges = from.edges;
  }

  void contract(const State& from, State& to, std::size_t a, std::size_t b) const {
    copy_state(from, to);
    const std::size_t keep = std::min(a, b);
    const std::size_t gone = std::max(a, b);
    const std::size_t common = from.adj[keep].count_and(from.adj[gone]);
    to.members[keep] |= from.members[gone];
    B merged = from.adj[keep] | from.adj[gone];
    merged.reset(keep);
    merged.reset(gone);
    to.adj[keep] = merged;
    from.adj[gone].for_each([&](std::size_t w) {
      if (w == keep) return;
      to.adj[w].reset(gone);
      to.adj[w].set(keep);
    });
    to.adj[gone] = B{};
    to.members[gone] = B{};
    to.alive.reset(gone);
    to.parts = from.parts - 1;
    to.edges = from.edges - 1 - common;
  }

  void make_key(const State& s) {
    key_.clear();
    s.alive.for_each([&](std::size_t r) {
      key_.insert(key_.end(), s.members[r].w.begin(), s.members[r].w.end());
    });
    key_.insert(key_.end(), s.frozen.w.begin(), s.frozen.w.end());
  }

  std::size_t n_;
  std::size_t t_;
  std::uint64_t limit_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
  bool memo_enabled_;
  std::size_t found_depth_ = 0;
  std::vector<State> stack_;
  std::unordered_set<std::vector<std::uint64_t>, KeyHash> memo_;
  std::vector<std::uint64_t> key_;
};

// Largest t with C(t,2) + (n - t) <= edges, capped at n; valid for connected g.
std::size_t edge_upper_bound(std::size_t n, std::size_t edges) {
  std::size_t t = 1;
  while (t < n && (t + 1) * t / 2 + (n - t - 1) <= edges) ++t;
  return t;
}

// Decision on a connected graph; the model covers every vertex.
MinorSearch connected_kt(const Graph& g, std::size_t t, std::uint64_t limit) {
  const std::size_t n = g.order();
  if (t > n || t > edge_upper_bound(n, g.edge_count())) return {MinorAnswer::none, {}, 0};
  if (t <= 2) {
    MinorModel m;
    if (t == 1) {
      std::vector<Vertex> all(n);
      for (Vertex v = 0; v < n; ++v) all[v] = v;
      m.branch_sets.emplace_back(std::move(all));
    } else {
      // The last vertex in BFS order is never a cut vertex.
      std::vector<Vertex> order{0};
      std::vector<char> seen(n, 0);
      seen[0] = 1;
      for (std::size_t head = 0; head < order.size(); ++head)
        for (Vertex w : g.neighbors(order[head]))
          if (!seen[w]) {
            seen[w] = 1;
            order.push_back(w);
          }
      const Vertex last = order.back();
      order.pop_back();
      m.branch_sets.emplace_back(std::move(order));
      m.branch_sets.push_back(VertexSet{last});
    }
    return {MinorAnswer::found, std::move(m), 0};
  }
  return detail::dispatch_width(n, [&](auto width) {
    ContractionSearch<decltype(width)::value> search(g, t, limit);
    const MinorAnswer answer = search.run();
    MinorSearch out{answer, {}, search.nodes()};
    if (answer == MinorAnswer::found) out.model = MinorModel{search.parts()};
    return out;
  });
}

}  // namespace

const char* to_string(MinorAnswer a) {
  switch (a) {
    case MinorAnswer::found:
      return "found";
    case MinorAnswer::none:
      return "none";
    case MinorAnswer::timeout:
      return "timeout";
  }
  return "?";
}

MinorSearch kt_minor_model(const Graph& g, std::size_t t, NodeBudget budget) {
  if (t == 0) throw std::invalid_argument("kt_minor_model: t must be at least 1");
  MinorSearch result{MinorAnswer::none, {}, 0};
  bool timed_out = false;
  for (const auto& comp : connected_components(g)) {
    if (comp.size() < t) continue;
    const std::uint64_t left = budget.nodes > result.nodes ? budget.nodes - result.nodes : 0;
    Subgraph sub = induced_subgraph(g, comp);
    MinorSearch r = connected_kt(sub.graph, t, left);
    result.nodes += r.nodes;
    if (r.answer == MinorAnswer::found) {
      result.answer = MinorAnswer::found;
      result.model = lift_model(*r.model, sub.to_host);
      if (!verify_minor_model(g, *result.model))
        throw std::logic_error("kt_minor_model produced an invalid model");
      return result;
    }
    if (r.answer == MinorAnswer::timeout) timed_out = true;
  }
  if (timed_out) result.answer = MinorAnswer::timeout;
  return result;
}

Hadwiger hadwiger_number(const Graph& g, NodeBudget budget) {
  if (g.order() == 0) throw std::invalid_argument("hadwiger_number: graph has no vertices");

  Hadwiger best;
  best.h = 0;
  std::uint64_t spent = 0;
  // Smallest order that some component failed to decide.
  std::size_t undecided_from = 0;
  for (const auto& comp : connected_components(g)) {
    Subgraph sub = induced_subgraph(g, comp);
    const std::size_t n = sub.graph.order();
    const std::size_t ub = edge_upper_bound(n, sub.graph.edge_count());
    if (ub <= best.h) continue;

    MinorModel model = greedy_contraction_model(sub.graph);
    for (std::size_t t = model.order() + 1; t <= ub; ++t) {
      const std::uint64_t left = budget.nodes > spent ? budget.nodes - spent : 0;
      MinorSearch r = connected_kt(sub.graph, t, left);
      spent += r.nodes;
      if (r.answer == MinorAnswer::found) {
        model = std::move(*r.model);
      } else {
        if (r.answer == MinorAnswer::timeout && (undecided_from == 0 || t < undecided_from))
          undecided_from = t;
        break;
      }
    }
    if (model.order() > best.h) {
      best.h = model.order();
      best.witness = lift_model(model, sub.to_host);
    }
  }
  if (undecided_from != 0 && undecided_from > best.h) best.status = SolveStatus::timeout;
  if (!verify_minor_model(g, best.witness))
    throw std::logic_error("hadwiger_number produced an invalid model");
  return best;
}

}  // namespace minorforge
