#include "minorforge/bounds.hpp"

#include <stdexcept>

#include "minorforge/graph6.hpp"

namespace minorforge {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

const char* to_string(BoundId id) {
  switch (id) {
    case BoundId::conj_alpha_h:
      return "conj_alpha_h";
    case BoundId::duchet_meyniel:
      return "duchet_meyniel";
    case BoundId::kpt_eq1:
      return "kpt_eq1";
    case BoundId::kpt_omega:
      return "kpt_omega";
    case BoundId::kpt_32:
      return "kpt_32";
    case BoundId::ks_eq2:
      return "ks_eq2";
    case BoundId::wood_eq3:
      return "wood_eq3";
    case BoundId::fox:
      return "fox";
    case BoundId::balogh_kostochka:
      return "balogh_kostochka";
    case BoundId::theorem1:
      return "theorem1";
  }
  return "?";
}

std::optional<BoundId> parse_bound_id(std::string_view name) {
  for (BoundId id : kAllBounds)
    if (name == to_string(id)) return id;
  return std::nullopt;
}

bool is_proven(BoundId id) { return id != BoundId::conj_alpha_h; }

std::optional<Rational> eval_bound(BoundId id, std::int64_t alpha, std::int64_t h,
                                   std::int64_t omega) {
  if (alpha < 1 || h < 1 || omega < 1)
    throw std::invalid_argument("eval_bound: alpha, h and omega must be at least 1");
  const Rational a(alpha);
  const Rational hh(h);
  switch (id) {
    case BoundId::conj_alpha_h:
      return a * hh;
    case BoundId::duchet_meyniel:
      return (2 * a - 1) * hh;
    case BoundId::kpt_eq1:
      // Edgeless graphs (h = 1) on two or more vertices fail the formula.
      if (h < 2) return std::nullopt;
      return (2 * a - 1) * (hh - 1) + 1;
    case BoundId::kpt_omega:
      if (alpha < 2) return std::nullopt;
      return (2 * a - 1) * hh - omega;
    case BoundId::kpt_32:
      if (alpha < 3) return std::nullopt;
      return (2 * a - Rational(3, 2)) * hh;
    case BoundId::ks_eq2:
      if (alpha < 2) return std::nullopt;
      return 2 * (a - 1) * hh;
    case BoundId::wood_eq3:
      if (h < 5) return std::nullopt;
      return (2 * a - 1) * (hh - Rational(5, 2)) + Rational(5, 2);
    case BoundId::fox:
      return Rational(1983, 1000) * a * hh;
    case BoundId::balogh_kostochka:
      return Rational(1948, 1000) * a * hh;
    case BoundId::theorem1:
      if (alpha < 3 || h < 5) return std::nullopt;
      return (a - 1) * (2 * hh - 5) + 5;
  }
  throw std::invalid_argument("eval_bound: unknown bound");
}

std::optional<Rational> eval_bound(std::string_view id, std::int64_t alpha, std::int64_t h,
                                   std::int64_t omega) {
  const auto parsed = parse_bound_id(id);
  if (!parsed) throw std::invalid_argument("eval_bound: unknown bound id '" + std::string(id) + "'");
  return eval_bound(*parsed, alpha, h, omega);
}

std::optional<BestBound> best_bound(std::int64_t alpha, std::int64_t h, std::int64_t omega) {
  std::optional<BestBound> best;
  for (BoundId id : kAllBounds) {
    if (!is_proven(id)) continue;
    const auto value = eval_bound(id, alpha, h, omega);
    if (value && (!best || *value <= best->value)) best = BestBound{id, *value};
  }
  return best;
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::satisfied:
      return "satisfied";
    case CheckStatus::violated:
      return "violated";
    case CheckStatus::not_applicable:
      return "not_applicable";
    case CheckStatus::undecided:
      return "undecided";
  }
  return "?";
}

const BoundCheck& BoundReport::check(BoundId id) const {
  return checks.at(static_cast<std::size_t>(id));
}

bool BoundReport::violated() const {
  if (hadwiger == CheckStatus::violated) return true;
  for (const auto& c : checks)
    if (c.status == CheckStatus::violated) return true;
  return false;
}

bool BoundReport::undecided() const {
  if (hadwiger == CheckStatus::undecided) return true;
  for (const auto& c : checks)
    if (c.status == CheckStatus::undecided) return true;
  return false;
}

BoundReport check_graph(const Graph& g, const InvariantBudgets& budgets) {
  BoundReport r;
  r.graph6 = write_graph6(g);
  r.n = g.order();
  if (r.n == 0) {
    for (BoundId id : kAllBounds) r.checks.push_back({id, CheckStatus::not_applicable, {}, {}});
    r.hadwiger = CheckStatus::not_applicable;
    return r;
  }

  const ExtremalSet alpha = stability_number(g, budgets.alpha);
  r.alpha = alpha.size;
  r.alpha_status = alpha.status;
  const Hadwiger had = hadwiger_number(g, budgets.minor);
  r.h = had.h;
  r.h_status = had.status;
  const Coloring chi = chromatic_number(g, budgets.chromatic);
  r.chi = chi.colors;
  r.chi_status = chi.status;

  const bool base_exact = r.alpha_status == SolveStatus::exact && r.h_status == SolveStatus::exact;
  if (base_exact && r.alpha >= 2) {
    const ExtremalSet omega = clique_number(g, budgets.alpha);
    r.omega = omega.size;
    r.omega_status = omega.status;
  }

  const Rational n(static_cast<std::int64_t>(r.n));
  for (BoundId id : kAllBounds) {
    BoundCheck c{id, CheckStatus::undecided, {}, {}};
    const bool needs_omega = id == BoundId::kpt_omega;
    const bool exact = base_exact && (!needs_omega || !r.omega ||
                                      r.omega_status == SolveStatus::exact);
    if (!exact) {
      c.status = CheckStatus::undecided;
    } else {
      // omega is only absent when alpha < 2, where kpt_omega does not apply.
      const auto omega = static_cast<std::int64_t>(r.omega.value_or(1));
      c.value = eval_bound(id, static_cast<std::int64_t>(r.alpha), static_cast<std::int64_t>(r.h),
                           omega);
      if (!c.value) {
        c.status = CheckStatus::not_applicable;
      } else {
        c.slack = *c.value - n;
        c.status = n <= *c.value ? CheckStatus::satisfied : CheckStatus::violated;
      }
    }
    r.checks.push_back(std::move(c));
  }

  // r.chi never underestimates and r.h never overestimates, so chi <= h
  // holds whenever the reported values satisfy it.
  if (r.chi <= r.h) {
    r.hadwiger = CheckStatus::satisfied;
  } else if (r.chi_status == SolveStatus::exact && r.h_status == SolveStatus::exact) {
    r.hadwiger = CheckStatus::violated;
  } else {
    r.hadwiger = CheckStatus::undecided;
  }
  return r;
}

}  // namespace minorforge
