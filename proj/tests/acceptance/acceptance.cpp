// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "minorforge/bounds.hpp"
#include "minorforge/domset.hpp"
#include "minorforge/graph6.hpp"
#include "minorforge/peel.hpp"
#include "minorforge/random.hpp"
#include "oracles.hpp"

namespace mf = minorforge;
using mf::BoundId;
using mf::CheckStatus;
using mf::Graph;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Every labelled graph on 1..max_order vertices.
mf::GraphSource all_labelled_graphs(std::size_t max_order) {
  return [max_order, n = std::size_t{1}, mask = std::uint64_t{0}]() mutable
         -> std::optional<mf::CorpusItem> {
    if (n > max_order) return std::nullopt;
    Graph g = oracle::from_mask(n, mask);
    if (++mask == (std::uint64_t{1} << (n * (n - 1) / 2))) {
      ++n;
      mask = 0;
    }
    return mf::CorpusItem{"", std::move(g), 0};
  };
}

// Criteria 1 and 7 share one pass over the corpus.
std::pair<Outcome, Outcome> exhaustive_bounds() {
  const std::array<BoundId, 9> always{BoundId::theorem1,  BoundId::kpt_eq1,  BoundId::ks_eq2,
                                      BoundId::wood_eq3,  BoundId::duchet_meyniel,
                                      BoundId::kpt_omega, BoundId::kpt_32,   BoundId::fox,
                                      BoundId::balogh_kostochka};
  std::size_t bad = 0;
  std::size_t undecided = 0;
  std::size_t conj_bad = 0;
  std::size_t chi_bad = 0;
  std::size_t theorem_applicable = 0;
  std::size_t eq1_skipped = 0;
  std::string first_bad;
  const auto summary = mf::verify_corpus(all_labelled_graphs(7), {}, [&](const mf::BoundReport& r) {
    if (r.undecided()) ++undecided;
    if (r.check(BoundId::theorem1).status == CheckStatus::satisfied) ++theorem_applicable;
    if (r.check(BoundId::kpt_eq1).status == CheckStatus::not_applicable) ++eq1_skipped;
    for (BoundId id : always) {
      if (r.check(id).status == CheckStatus::violated) {
        ++bad;
        if (first_bad.empty()) first_bad = r.graph6 + " " + mf::to_string(id);
      }
    }
    if (r.h <= 5 && r.check(BoundId::conj_alpha_h).status == CheckStatus::violated) ++conj_bad;
    if (r.hadwiger != CheckStatus::satisfied) ++chi_bad;
  });
  Outcome o;
  o.pass = bad == 0 && undecided == 0 && conj_bad == 0 && summary.checked > 0;
  o.detail = std::to_string(summary.checked) + " labelled graphs, " + std::to_string(bad) +
             " proven-bound violations, " + std::to_string(conj_bad) +
             " conj_alpha_h violations with h<=5, " + std::to_string(undecided) + " undecided, " +
             std::to_string(theorem_applicable) + " with theorem1 applicable, " +
             std::to_string(eq1_skipped) + " edgeless graphs outside kpt_eq1 (h = 1)";
  if (!first_bad.empty()) o.detail += ", first: " + first_bad;
  Outcome chi{chi_bad == 0 && summary.checked > 0,
              std::to_string(summary.checked) + " labelled graphs, " + std::to_string(chi_bad) +
                  " with chi > h or undecided"};
  return {o, chi};
}

Outcome domset_certification() {
  const std::array<double, 4> ps{0.1, 0.2, 0.3, 0.5};
  std::size_t traces = 0;
  std::size_t failures = 0;
  std::string first;
  for (std::uint64_t seed = 0; traces < 1000 && seed < 1'000'000; ++seed) {
    const std::size_t n = 4 + seed % 37;  // 4..40
    const Graph g = mf::random_gnp(n, ps[(seed / 37) % 4], seed);
    if (!mf::is_connected(g)) continue;
    const auto claw = mf::find_claw(g);
    if (!claw) continue;
    ++traces;
    const auto t = mf::grow_dominating_set(g, *claw);
    const auto verdict = mf::verify_domset_trace(g, t);
    const auto alpha = mf::stability_number(g);
    const bool ok = verdict.ok && t.dominating.size() == 2 * t.k + 4 &&
                    t.stable.size() == t.k + 3 && alpha.status == mf::SolveStatus::exact &&
                    t.dominating.size() + 2 <= 2 * alpha.size;
    if (!ok) {
      ++failures;
      if (first.empty()) first = mf::write_graph6(g) + " " + verdict.message;
    }
  }
  Outcome o;
  o.pass = traces == 1000 && failures == 0;
  o.detail = std::to_string(traces) + " traces, " + std::to_string(failures) + " failures";
  if (!first.empty()) o.detail += ", first: " + first;
  return o;
}

Outcome minor_soundness() {
  std::size_t graphs = 0;
  std::size_t failures = 0;
  std::size_t tight = 0;
  std::string first;
  for (std::uint64_t seed = 0; graphs < 500; ++seed) {
    const std::size_t n = 5 + seed % 16;  // 5..20
    const double p = 0.1 + 0.1 * static_cast<double>((seed / 16) % 8);  // 0.1..0.8
    const Graph g = mf::random_gnp(n, p, 7919 * seed + 1);
    ++graphs;
    const auto r = mf::peel_minor(g);
    const auto h = mf::hadwiger_number(g);
    const bool ok = mf::verify_minor_model(g, r.model).ok && r.model.order() == r.achieved &&
                    h.status == mf::SolveStatus::exact && r.achieved <= h.h;
    if (ok && r.achieved == h.h) ++tight;
    if (!ok) {
      ++failures;
      if (first.empty()) first = mf::write_graph6(g);
    }
  }
  Outcome o;
  o.pass = failures == 0;
  o.detail = std::to_string(graphs) + " graphs, " + std::to_string(failures) + " failures, " +
             std::to_string(tight) + " reach exact h";
  if (!first.empty()) o.detail += ", first: " + first;
  return o;
}

Outcome oracle_equivalence() {
  std::size_t graphs = 0;
  std::size_t mismatches = 0;
  std::string first;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask) {
      const Graph g = oracle::from_mask(n, mask);
      ++graphs;
      const auto a = mf::stability_number(g);
      const auto w = mf::clique_number(g);
      const auto c = mf::chromatic_number(g);
      const auto h = mf::hadwiger_number(g);
      const bool ok = a.size == oracle::alpha(g) && w.size == oracle::omega(g) &&
                      c.colors == oracle::chi(g) && h.h == oracle::hadwiger(g) &&
                      mf::is_stable(g, a.witness) && mf::is_clique(g, w.witness) &&
                      mf::is_proper_coloring(g, c) && mf::verify_minor_model(g, h.witness).ok;
      if (!ok) {
        ++mismatches;
        if (first.empty()) first = mf::write_graph6(g);
      }
    }
  }
  Outcome o;
  o.pass = mismatches == 0;
  o.detail = std::to_string(graphs) + " labelled graphs, " + std::to_string(mismatches) +
             " mismatches";
  if (!first.empty()) o.detail += ", first: " + first;
  return o;
}

Outcome dominance() {
  std::size_t cells = 0;
  std::size_t failures = 0;
  for (std::int64_t a = 3; a <= 50; ++a) {
    for (std::int64_t h = 5; h <= 50; ++h) {
      ++cells;
      const auto t = mf::eval_bound(BoundId::theorem1, a, h, 1);
      const auto ks = mf::eval_bound(BoundId::ks_eq2, a, h, 1);
      const auto wood = mf::eval_bound(BoundId::wood_eq3, a, h, 1);
      const bool ok = t && ks && wood && *t < *ks && *t <= *wood && ((*t == *wood) == (h == 5)) &&
                      *t - *ks == mf::Rational(5 * (2 - a)) && *t - *wood == mf::Rational(5 - h);
      if (!ok) ++failures;
    }
  }
  return {failures == 0, std::to_string(cells) + " (alpha, h) cells, " +
                             std::to_string(failures) + " failures"};
}

// Largest t for which t branch sets could be pairwise adjacent in a
// 3-regular graph: a connected set of s vertices has at most 3s - 2(s-1) =
// s + 2 edges leaving it, so each set needs s >= t - 3 and t(t-3) <= n.
bool cubic_counting_allows(std::size_t n, std::size_t t) {
  return t * std::max<std::size_t>(t > 3 ? t - 3 : 1, 1) <= n;
}

Outcome named_graphs() {
  std::vector<std::string> failed;
  auto expect = [&](bool cond, const std::string& what) {
    if (!cond) failed.push_back(what);
  };

  const Graph p = mf::named::petersen();
  expect(mf::stability_number(p).size == 4 && oracle::alpha(p) == 4, "petersen alpha");
  const auto ph = mf::hadwiger_number(p);
  expect(ph.h == 5 && ph.status == mf::SolveStatus::exact, "petersen h");
  expect(mf::verify_minor_model(p, ph.witness).ok && ph.witness.order() == 5, "petersen K5 model");
  const auto k6 = mf::kt_minor_model(p, 6);
  expect(k6.answer == mf::MinorAnswer::none, "petersen K6 refusal (search)");
  expect(!cubic_counting_allows(10, 6) && cubic_counting_allows(10, 5), "petersen counting oracle");
  expect(oracle::hadwiger(p) == 5, "petersen h (brute force)");

  const Graph c5 = mf::named::cycle(5);
  const auto inv = mf::compute_invariants(c5);
  expect(inv.alpha.size == 2 && inv.omega.size == 2 && inv.chi.colors == 3 && inv.hadwiger.h == 3,
         "C5 invariants");
  expect(oracle::alpha(c5) == 2 && oracle::omega(c5) == 2 && oracle::chi(c5) == 3 &&
             oracle::hadwiger(c5) == 3,
         "C5 oracles");

  const Graph star = mf::named::star(3);
  const auto claw = mf::find_claw(star);
  expect(claw.has_value(), "K13 claw");
  if (claw) {
    const auto t = mf::grow_dominating_set(star, *claw);
    expect(t.k == 0 && t.dominating.size() == 4 && t.stable.size() == 3 &&
               mf::verify_domset_trace(star, t).ok,
           "K13 trace");
  }

  Outcome o;
  o.pass = failed.empty();
  o.detail = failed.empty() ? "Petersen (4,5) with K5 model and K6 refused; C5 (2,2,3,3); K13 trace"
                            : "failed:";
  for (const auto& f : failed) o.detail += " [" + f + "]";
  return o;
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  bool all = true;
  auto report = [&](int id, const char* name, const Outcome& o, double seconds) {
    std::printf("[%s] criterion %d: %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", id, name,
                o.detail.c_str(), seconds);
    std::fflush(stdout);
    all = all && o.pass;
  };
  auto timed = [](const std::function<Outcome()>& f) {
    const auto start = Clock::now();
    Outcome o = f();
    return std::pair{o, std::chrono::duration<double>(Clock::now() - start).count()};
  };

  const auto start = Clock::now();
  const auto [c1, c7] = exhaustive_bounds();
  const double t1 = std::chrono::duration<double>(Clock::now() - start).count();
  report(1, "bound verification on all graphs with at most 7 vertices", c1, t1);

  auto [c2, t2] = timed(domset_certification);
  report(2, "dominating-set certification", c2, t2);

  auto [c3, t3] = timed(minor_soundness);
  report(3, "minor-model soundness", c3, t3);

  auto [c4, t4] = timed(oracle_equivalence);
  report(4, "oracle equivalence on all graphs with at most 6 vertices", c4, t4);

  auto [c5, t5] = timed(dominance);
  report(5, "dominance identities", c5, t5);

  auto [c6, t6] = timed(named_graphs);
  report(6, "named-graph spot checks", c6, t6);

  report(7, "chi <= h on the criterion 1 corpus", c7, t1);

  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return all ? 0 : 1;
}
