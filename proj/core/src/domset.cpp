#include "minorforge/domset.hpp"

#include <stdexcept>
#include <string>

namespace minorforge {

namespace {

bool adjacent_to_any(const Graph& g, Vertex x, const std::vector<char>& in_set) {
  for (Vertex w : g.neighbors(x))
    if (in_set[w]) return true;
  return false;
}

std::vector<char> closed_neighborhood(const Graph& g, const std::vector<char>& in_set) {
  std::vector<char> out(in_set);
  for (Vertex x = 0; x < g.order(); ++x)
    if (in_set[x])
      for (Vertex w : g.neighbors(x)) out[w] = 1;
  return out;
}

}  // namespace

DomSetTrace grow_dominating_set(const Graph& g, const Claw& claw) {
  if (!is_claw(g, claw)) throw std::invalid_argument("grow_dominating_set: not an induced claw");
  if (!is_connected(g)) throw std::invalid_argument("grow_dominating_set: graph is disconnected");

  const std::size_t n = g.order();
  DomSetTrace trace;
  trace.claw = claw;
  std::vector<char> in_d(n, 0);
  for (Vertex x : claw.vertices()) in_d[x] = 1;
  std::vector<Vertex> stable(claw.leaves.begin(), claw.leaves.end());

  for (;;) {
    const auto dominated = closed_neighborhood(g, in_d);
    Vertex v = kNoVertex;
    for (Vertex x = 0; x < n && v == kNoVertex; ++x)
      if (!dominated[x] && adjacent_to_any(g, x, dominated)) v = x;
    if (v == kNoVertex) break;  // connected, so nothing undominated remains

    Vertex u = kNoVertex;
    for (Vertex x : g.neighbors(v)) {
      if (adjacent_to_any(g, x, in_d)) {
        u = x;
        break;
      }
    }
    Vertex anchor = kNoVertex;
    for (Vertex x : g.neighbors(u)) {
      if (in_d[x]) {
        anchor = x;
        break;
      }
    }
    trace.steps.push_back({anchor, u, v});
    in_d[u] = 1;
    in_d[v] = 1;
    stable.push_back(v);
  }

  std::vector<Vertex> d;
  for (Vertex x = 0; x < n; ++x)
    if (in_d[x]) d.push_back(x);
  trace.k = trace.steps.size();
  trace.dominating = VertexSet(std::move(d));
  trace.stable = VertexSet(std::move(stable));
  return trace;
}

Verdict verify_domset_trace(const Graph& g, const DomSetTrace& t, const DomSetCheck& opts) {
  const std::size_t n = g.order();
  if (!is_claw(g, t.claw)) return Verdict::fail("claw is not an induced K_{1,3}");
  if (t.k != t.steps.size()) return Verdict::fail("k does not match the number of steps");

  std::vector<char> in_d(n, 0);
  for (Vertex x : t.claw.vertices()) in_d[x] = 1;
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto& [anchor, u, v] = t.steps[i];
    const std::string at = "step " + std::to_string(i) + ": ";
    if (anchor >= n || u >= n || v >= n) return Verdict::fail(at + "vertex out of range");
    if (!in_d[anchor]) return Verdict::fail(at + "anchor not in D_i");
    if (in_d[u] || in_d[v]) return Verdict::fail(at + "u or v already in D_i");
    if (!g.has_edge(u, v) || !g.has_edge(u, anchor))
      return Verdict::fail(at + "u not adjacent to both v and anchor");
    if (adjacent_to_any(g, v, in_d)) return Verdict::fail(at + "v not at distance 2 from D_i");
    in_d[u] = 1;
    in_d[v] = 1;
  }
  for (Vertex x : t.dominating)
    if (x >= n) return Verdict::fail("D contains a vertex outside the graph");
  std::vector<Vertex> replayed;
  for (Vertex x = 0; x < n; ++x)
    if (in_d[x]) replayed.push_back(x);
  if (VertexSet(std::move(replayed)) != t.dominating)
    return Verdict::fail("D differs from the claw plus the recorded steps");

  if (t.dominating.size() != 2 * t.k + 4) return Verdict::fail("|D| != 2k+4");
  for (Vertex x : t.stable)
    if (x >= n || !t.dominating.contains(x)) return Verdict::fail("S is not a subset of D");
  if (!is_stable(g, t.stable)) return Verdict::fail("S is not stable");
  if (t.stable.size() != t.k + 3) return Verdict::fail("|S| != k+3");
  if (t.dominating.size() != 2 * t.stable.size() - 2) return Verdict::fail("|D| != 2|S|-2");
  if (!induces_connected(g, t.dominating)) return Verdict::fail("D is not connected");
  if (!is_dominating(g, t.dominating)) return Verdict::fail("not dominating");

  if (opts.recompute_alpha) {
    const Subgraph sub = induced_subgraph(g, t.dominating);
    const ExtremalSet a = stability_number(sub.graph, opts.budget);
    if (a.status == SolveStatus::exact && a.size < t.stable.size())
      return Verdict::fail("alpha(G[D]) < |S|");
  }
  return Verdict::pass();
}

DomSetTrace relabel(const DomSetTrace& t, const std::vector<Vertex>& to_host) {
  DomSetTrace out;
  out.claw.center = to_host.at(t.claw.center);
  for (std::size_t i = 0; i < 3; ++i) out.claw.leaves[i] = to_host.at(t.claw.leaves[i]);
  for (const auto& s : t.steps) out.steps.push_back({to_host.at(s.anchor), to_host.at(s.u), to_host.at(s.v)});
  out.k = t.k;
  std::vector<Vertex> d;
  for (Vertex x : t.dominating) d.push_back(to_host.at(x));
  std::vector<Vertex> s;
  for (Vertex x : t.stable) s.push_back(to_host.at(x));
  out.dominating = VertexSet(std::move(d));
  out.stable = VertexSet(std::move(s));
  return out;
}

}  // namespace minorforge
