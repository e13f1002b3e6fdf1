#pragma once

// Upper bounds on the order n in terms of the stability number alpha, the
// Hadwiger number h and (for one formula) the clique number omega, evaluated
// in exact rational arithmetic.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "minorforge/graph.hpp"
#include "minorforge/graph6.hpp"
#include "minorforge/invariants.hpp"

namespace minorforge {

// Compare Rationals with Rationals: with Boost 1.74 in C++20 mode,
// `rational == integer` recurses without end.
using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);

// Declaration order is the tie-break order used by best_bound (reversed).
enum class BoundId {
  conj_alpha_h,      // n <= alpha h (conjectured)
  duchet_meyniel,    // n <= (2 alpha - 1) h
  kpt_eq1,           // n <= (2 alpha - 1)(h - 1) + 1,     h >= 2
  kpt_omega,         // n <= (2 alpha - 1) h - omega,      alpha >= 2
  kpt_32,            // n <= (2 alpha - 3/2) h,            alpha >= 3
  ks_eq2,            // n <= 2 (alpha - 1) h,              alpha >= 2
  wood_eq3,          // n <= (2 alpha - 1)(h - 5/2) + 5/2, h >= 5
  fox,               // n <= 1.983 alpha h
  balogh_kostochka,  // n <= 1.948 alpha h
  theorem1,          // n <= (alpha - 1)(2h - 5) + 5,      alpha >= 3, h >= 5
};

inline constexpr std::array<BoundId, 10> kAllBounds = {
    BoundId::conj_alpha_h, BoundId::duchet_meyniel, BoundId::kpt_eq1,
    BoundId::kpt_omega,    BoundId::kpt_32,         BoundId::ks_eq2,
    BoundId::wood_eq3,     BoundId::fox,            BoundId::balogh_kostochka,
    BoundId::theorem1,
};

const char* to_string(BoundId id);
std::optional<BoundId> parse_bound_id(std::string_view name);

/// False only for conj_alpha_h.
bool is_proven(BoundId id);

/// The bound's value, or std::nullopt when its hypotheses fail.
/// Throws std::invalid_argument unless alpha, h, omega >= 1.
std::optional<Rational> eval_bound(BoundId id, std::int64_t alpha, std::int64_t h,
                                   std::int64_t omega);

/// As above, by name; throws std::invalid_argument for an unknown name.
std::optional<Rational> eval_bound(std::string_view id, std::int64_t alpha, std::int64_t h,
                                   std::int64_t omega);

struct BestBound {
  BoundId id;
  Rational value;
};

/// Smallest applicable proven bound. Ties go to the formula listed last in
/// BoundId, i.e. the most recent result.
std::optional<BestBound> best_bound(std::int64_t alpha, std::int64_t h, std::int64_t omega);

enum class CheckStatus { satisfied, violated, not_applicable, undecided };

const char* to_string(CheckStatus s);

struct BoundCheck {
  BoundId id;
  CheckStatus status = CheckStatus::undecided;
  std::optional<Rational> value;  // set when applicable
  std::optional<Rational> slack;  // value - n, set when applicable
};

struct BoundReport {
  std::string graph6;
  std::size_t n = 0;
  std::size_t alpha = 0;
  SolveStatus alpha_status = SolveStatus::exact;
  std::optional<std::size_t> omega;  // only computed when kpt_omega needs it
  SolveStatus omega_status = SolveStatus::exact;
  std::size_t chi = 0;
  SolveStatus chi_status = SolveStatus::exact;
  std::size_t h = 0;
  SolveStatus h_status = SolveStatus::exact;
  std::vector<BoundCheck> checks;  // kAllBounds order
  CheckStatus hadwiger = CheckStatus::undecided;  // chi <= h

  [[nodiscard]] const BoundCheck& check(BoundId id) const;
  [[nodiscard]] bool violated() const;
  [[nodiscard]] bool undecided() const;
};

/// Exact n, alpha, chi, h (and omega when needed) plus every bound check.
/// Timeouts turn the affected checks into `undecided`.
BoundReport check_graph(const Graph& g, const InvariantBudgets& budgets = {});

struct CorpusItem {
  std::string graph6;
  Graph graph;
  std::size_t line = 0;  // 0 when not read from a file
};

using GraphSource = std::function<std::optional<CorpusItem>()>;
using ReportSink = std::function<void(const BoundReport&)>;

struct CorpusOptions {
  InvariantBudgets budgets{};
  std::size_t jobs = 1;
  std::size_t chunk = 2048;  // graphs in flight between ordered emissions
};

struct CorpusSummary {
  std::size_t checked = 0;
  std::size_t satisfied = 0;   // every check satisfied or not applicable
  std::size_t undecided = 0;   // no violation, at least one undecided check
  std::size_t violations = 0;  // at least one violated check
  std::array<std::size_t, kAllBounds.size()> formula_violations{};
  std::array<std::size_t, kAllBounds.size()> formula_undecided{};
  std::array<std::size_t, kAllBounds.size()> formula_applicable{};
  std::size_t hadwiger_violations = 0;
  std::size_t hadwiger_undecided = 0;
  std::vector<std::string> violation_witnesses;  // graph6, input order
};

/// Runs check_graph over every item of `source` using `jobs` workers.
/// Reports reach `sink` in input order regardless of `jobs`.
CorpusSummary verify_corpus(const GraphSource& source, const CorpusOptions& opts,
                            const ReportSink& sink = {});

/// Source over a graph6 stream; malformed lines are skipped and logged to
/// `log` (if non-null) with their line number.
GraphSource graph6_source(Graph6Reader& reader, std::ostream* log);

}  // namespace minorforge
