#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "minorforge/domset.hpp"
#include "minorforge/graph6.hpp"
#include "minorforge/peel.hpp"
#include "minorforge/random.hpp"
#include "minorforge/serialize.hpp"

namespace minorforge::cli {

namespace {

constexpr int kExitCantCreate = 73;

// Bad flag values found after CLI11 has parsed the line.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string graph6_path;
  std::string gnp;
  std::uint64_t budget_alpha = NodeBudget{}.nodes;
  std::uint64_t budget_minor = NodeBudget{}.nodes;
  std::uint64_t budget_chi = InvariantBudgets{}.chromatic.nodes;
  std::size_t exact_cap = PeelOptions{}.exact_cap;
  std::optional<std::size_t> jobs;
  std::string format = "json";
  std::string out_path;
  std::string violations_path;
  std::string alpha_range;
  std::string h_range;
  std::string omega_range = "1";
};

struct GnpSpec {
  std::size_t n = 0;
  double p = 0;
  std::uint64_t seed = 0;
  std::uint64_t count = 1;
};

template <typename T>
T parse_number(std::string_view text, std::string_view what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw UsageError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto at = text.find(sep, start);
    parts.emplace_back(text.substr(start, at - start));
    if (at == std::string_view::npos) return parts;
    start = at + 1;
  }
}

GnpSpec parse_gnp(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3 && parts.size() != 4)
    throw UsageError("--gnp expects n,p,seed[,count], got '" + text + "'");
  GnpSpec spec;
  spec.n = parse_number<std::size_t>(parts[0], "vertex count");
  spec.p = parse_number<double>(parts[1], "edge probability");
  spec.seed = parse_number<std::uint64_t>(parts[2], "seed");
  if (parts.size() == 4) spec.count = parse_number<std::uint64_t>(parts[3], "sample count");
  if (spec.n > Graph::kMaxOrder)
    throw UsageError("--gnp order above " + std::to_string(Graph::kMaxOrder));
  if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw UsageError("--gnp probability outside [0,1]");
  if (spec.count == 0) throw UsageError("--gnp sample count must be positive");
  return spec;
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text, std::string_view flag) {
  const auto dots = text.find("..");
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  if (dots == std::string::npos) {
    lo = hi = parse_number<std::int64_t>(text, flag);
  } else {
    lo = parse_number<std::int64_t>(std::string_view(text).substr(0, dots), flag);
    hi = parse_number<std::int64_t>(std::string_view(text).substr(dots + 2), flag);
  }
  if (lo < 1 || hi < lo) throw UsageError(std::string(flag) + " range must satisfy 1 <= lo <= hi");
  if (hi - lo > 10000) throw UsageError(std::string(flag) + " range too wide");
  return {lo, hi};
}

std::size_t resolve_jobs(const Options& o) {
  if (o.jobs) return *o.jobs;
  if (const char* env = std::getenv("MINORFORGE_JOBS"); env && *env) {
    const auto jobs = parse_number<std::size_t>(env, "MINORFORGE_JOBS");
    if (jobs == 0) throw UsageError("MINORFORGE_JOBS must be positive");
    return jobs;
  }
  return 1;
}

InvariantBudgets budgets(const Options& o) {
  InvariantBudgets b;
  b.alpha.nodes = o.budget_alpha;
  b.minor.nodes = o.budget_minor;
  b.chromatic.nodes = o.budget_chi;
  return b;
}

// Owns whatever the graph source reads from.
class Input {
 public:
  Input(const Options& o, std::ostream& err) {
    if (o.graph6_path.empty() == o.gnp.empty())
      throw UsageError("exactly one of --graph6 or --gnp is required");
    if (!o.gnp.empty()) {
      const GnpSpec spec = parse_gnp(o.gnp);
      source_ = [spec, i = std::uint64_t{0}]() mutable -> std::optional<CorpusItem> {
        if (i == spec.count) return std::nullopt;
        Graph g = random_gnp(spec.n, spec.p, spec.seed + i++);
        std::string text = write_graph6(g);
        return CorpusItem{std::move(text), std::move(g), 0};
      };
      return;
    }
    std::istream* in = &std::cin;
    if (o.graph6_path != "-") {
      file_ = std::make_unique<std::ifstream>(o.graph6_path);
      if (!*file_) throw InputError("cannot read " + o.graph6_path);
      in = file_.get();
    }
    reader_ = std::make_unique<Graph6Reader>(*in);
    source_ = graph6_source(*reader_, &err);
  }

  std::optional<CorpusItem> next() { return source_(); }
  [[nodiscard]] const GraphSource& source() const { return source_; }

 private:
  std::unique_ptr<std::ifstream> file_;
  std::unique_ptr<Graph6Reader> reader_;
  GraphSource source_;
};

// Emits a JSON array one element at a time.
class JsonArray {
 public:
  explicit JsonArray(std::ostream& out) : out_(out) { out_ << '['; }
  void push(const Json& j) {
    out_ << (first_ ? "\n" : ",\n") << j.dump();
    first_ = false;
  }
  void close() { out_ << (first_ ? "]\n" : "\n]\n"); }

 private:
  std::ostream& out_;
  bool first_ = true;
};

std::string join(const VertexSet& s, char sep = ' ') {
  std::string out;
  for (Vertex v : s) {
    if (!out.empty()) out += sep;
    out += std::to_string(v);
  }
  return out;
}

Json with_graph6(const std::string& graph6, Json body) {
  Json out{{"graph6", graph6}};
  for (auto& [key, value] : body.items()) out[key] = value;
  return out;
}

int cmd_invariants(const Options& o, std::ostream& out, std::ostream& err) {
  Input input(o, err);
  const auto b = budgets(o);
  std::optional<JsonArray> array;
  if (o.format == "json") array.emplace(out);
  if (o.format == "csv") out << invariant_csv_header() << '\n';
  while (auto item = input.next()) {
    const InvariantReport r =
        item->graph.order() == 0 ? InvariantReport{} : compute_invariants(item->graph, b);
    if (o.format == "json") {
      array->push(with_graph6(item->graph6, to_json(r)));
    } else if (o.format == "csv") {
      out << invariant_csv_row(item->graph6, r) << '\n';
    } else {
      out << item->graph6 << ": n=" << r.order << " alpha=" << r.alpha.size
          << " omega=" << r.omega.size << " chi=" << r.chi.colors << " h=" << r.hadwiger.h
          << (r.clawfree() ? " claw-free" : " has-claw") << (r.exact() ? "" : " (budget hit)")
          << '\n';
    }
  }
  if (array) array->close();
  return kExitOk;
}

int cmd_domset(const Options& o, std::ostream& out, std::ostream& err) {
  Input input(o, err);
  std::optional<JsonArray> array;
  if (o.format == "json") array.emplace(out);
  if (o.format == "csv") out << "graph6,n,applicable,reason,k,D,S\n";
  while (auto item = input.next()) {
    const Graph& g = item->graph;
    std::optional<std::string> reason;
    std::optional<Claw> claw;
    if (g.order() == 0 || !is_connected(g)) {
      reason = "disconnected";
    } else if (claw = find_claw(g); !claw) {
      reason = "claw-free";
    }

    if (reason) {
      if (array) {
        array->push(Json{{"graph6", item->graph6},
                         {"n", g.order()},
                         {"applicable", false},
                         {"reason", *reason}});
      } else if (o.format == "csv") {
        out << item->graph6 << ',' << g.order() << ",no," << *reason << ",,,\n";
      } else {
        out << item->graph6 << ": not applicable (" << *reason << ")\n";
      }
      continue;
    }

    const DomSetTrace t = grow_dominating_set(g, *claw);
    const Verdict verdict = verify_domset_trace(g, t);
    const ExtremalSet alpha = stability_number(g, {o.budget_alpha});
    if (array) {
      array->push(Json{{"graph6", item->graph6},
                       {"n", g.order()},
                       {"applicable", true},
                       {"trace", to_json(t)},
                       {"verified", verdict.ok},
                       {"alpha", alpha.size},
                       {"alpha_status", to_string(alpha.status)}});
    } else if (o.format == "csv") {
      out << item->graph6 << ',' << g.order() << ",yes,," << t.k << ',' << join(t.dominating)
          << ',' << join(t.stable) << '\n';
    } else {
      out << item->graph6 << ": k=" << t.k << " |D|=" << t.dominating.size()
          << " |S|=" << t.stable.size() << " alpha=" << alpha.size
          << (verdict ? " verified" : " FAILED: " + verdict.message) << '\n';
    }
    if (!verdict) err << "trace check failed for " << item->graph6 << ": " << verdict.message << '\n';
  }
  if (array) array->close();
  return kExitOk;
}

int cmd_peel(const Options& o, std::ostream& out, std::ostream& err) {
  Input input(o, err);
  PeelOptions popts;
  popts.exact_cap = o.exact_cap;
  popts.alpha_budget.nodes = o.budget_alpha;
  popts.minor_budget.nodes = o.budget_minor;
  std::optional<JsonArray> array;
  if (o.format == "json") array.emplace(out);
  if (o.format == "csv") out << "graph6,n,achieved,levels,peels\n";
  while (auto item = input.next()) {
    const PeelResult r = peel_minor(item->graph, popts);
    std::size_t peels = 0;
    for (const auto& l : r.levels) peels += l.kind == PeelCase::peel ? 1 : 0;
    if (array) {
      Json j = with_graph6(item->graph6, to_json(r));
      j["n"] = item->graph.order();
      array->push(j);
    } else if (o.format == "csv") {
      out << item->graph6 << ',' << item->graph.order() << ',' << r.achieved << ','
          << r.levels.size() << ',' << peels << '\n';
    } else {
      out << item->graph6 << ": K_" << r.achieved << " minor after " << peels << " peel(s)\n";
      for (const auto& l : r.levels)
        out << "  depth " << l.depth << ": " << to_string(l.kind) << " on " << l.host.size()
            << " vertices\n";
    }
  }
  if (array) array->close();
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  Input input(o, err);
  CorpusOptions copts;
  copts.budgets = budgets(o);
  copts.jobs = resolve_jobs(o);

  std::unique_ptr<std::ofstream> violations;
  if (!o.violations_path.empty()) {
    violations = std::make_unique<std::ofstream>(o.violations_path);
    if (!*violations) throw OutputError("cannot write " + o.violations_path);
  }

  std::optional<JsonArray> array;
  if (o.format == "json") {
    out << "{\"reports\":";
    array.emplace(out);
  }
  if (o.format == "csv") out << bound_csv_header() << '\n';

  const CorpusSummary s = verify_corpus(input.source(), copts, [&](const BoundReport& r) {
    if (violations && r.violated()) *violations << r.graph6 << '\n';
    if (array) {
      array->push(to_json(r));
    } else if (o.format == "csv") {
      out << bound_csv_row(r) << '\n';
    } else if (r.violated() || r.undecided()) {
      out << r.graph6 << ": " << (r.violated() ? "VIOLATION" : "undecided") << '\n';
    }
  });

  if (array) {
    array->close();
    out << ",\"summary\":" << to_json(s).dump() << "}\n";
  } else if (o.format == "human") {
    out << "checked " << s.checked << ", satisfied " << s.satisfied << ", undecided "
        << s.undecided << ", violations " << s.violations << '\n';
  }
  err << "checked=" << s.checked << " satisfied=" << s.satisfied << " undecided=" << s.undecided
      << " violations=" << s.violations << '\n';
  return verify_exit_code(s);
}

int cmd_bounds_table(const Options& o, std::ostream& out) {
  if (o.alpha_range.empty() || o.h_range.empty())
    throw UsageError("bounds-table needs --alpha and --h");
  const auto [a_lo, a_hi] = parse_range(o.alpha_range, "--alpha");
  const auto [h_lo, h_hi] = parse_range(o.h_range, "--h");
  const auto [w_lo, w_hi] = parse_range(o.omega_range, "--omega");

  std::optional<JsonArray> array;
  if (o.format == "json") array.emplace(out);
  if (o.format == "csv") {
    out << "alpha,h,omega";
    for (BoundId id : kAllBounds) out << ',' << to_string(id);
    out << ",best,best_value\n";
  }
  for (std::int64_t a = a_lo; a <= a_hi; ++a) {
    for (std::int64_t h = h_lo; h <= h_hi; ++h) {
      for (std::int64_t w = w_lo; w <= w_hi; ++w) {
        const auto best = best_bound(a, h, w);
        if (array) {
          Json values = Json::object();
          for (BoundId id : kAllBounds) {
            const auto v = eval_bound(id, a, h, w);
            values[to_string(id)] = v ? Json(to_string(*v)) : Json(nullptr);
          }
          array->push(Json{{"alpha", a},
                           {"h", h},
                           {"omega", w},
                           {"bounds", std::move(values)},
                           {"best", best ? Json{{"id", to_string(best->id)},
                                                {"value", to_string(best->value)}}
                                         : Json(nullptr)}});
        } else if (o.format == "csv") {
          out << a << ',' << h << ',' << w;
          for (BoundId id : kAllBounds) {
            const auto v = eval_bound(id, a, h, w);
            out << ',' << (v ? to_string(*v) : std::string());
          }
          out << ',' << (best ? to_string(best->id) : "") << ','
              << (best ? to_string(best->value) : std::string()) << '\n';
        } else {
          out << "alpha=" << a << " h=" << h << " omega=" << w << '\n';
          for (BoundId id : kAllBounds) {
            const auto v = eval_bound(id, a, h, w);
            out << "  " << to_string(id) << ": " << (v ? to_string(*v) : "n/a") << '\n';
          }
          if (best) out << "  best: " << to_string(best->id) << " = " << to_string(best->value) << '\n';
        }
      }
    }
  }
  if (array) array->close();
  return kExitOk;
}

void add_input_flags(CLI::App* sub, Options& o) {
  auto* g6 = sub->add_option("--graph6", o.graph6_path, "graph6 file, one graph per line ('-' for stdin)");
  auto* gnp = sub->add_option("--gnp", o.gnp, "random graphs n,p,seed[,count]; sample i uses seed+i");
  g6->excludes(gnp);
  gnp->excludes(g6);
}

void add_budget_flags(CLI::App* sub, Options& o) {
  sub->add_option("--budget-alpha", o.budget_alpha, "node budget for stability and clique search")
      ->check(CLI::PositiveNumber);
  sub->add_option("--budget-minor", o.budget_minor, "node budget for complete-minor search")
      ->check(CLI::PositiveNumber);
  sub->add_option("--budget-chi", o.budget_chi, "node budget for the colouring search")
      ->check(CLI::PositiveNumber);
}

void add_output_flags(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "human"}));
  sub->add_option("--out", o.out_path, "write the report here instead of stdout");
}

}  // namespace

int verify_exit_code(const CorpusSummary& s) {
  if (s.violations > 0) return kExitViolation;
  if (s.undecided > 0) return kExitUndecided;
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Complete minors, stability and the bounds that relate them.", "minorforge"};
  app.require_subcommand(1);

  auto* invariants = app.add_subcommand("invariants", "alpha, omega, chi, h and a claw per graph");
  auto* domset = app.add_subcommand("domset", "connected dominating set grown from a claw");
  auto* peel = app.add_subcommand("peel", "complete-minor model by peeling dominating sets");
  auto* verify = app.add_subcommand("verify", "check every bound on a corpus");
  auto* table = app.add_subcommand("bounds-table", "bound values over ranges of alpha and h");

  for (auto* sub : {invariants, domset, peel, verify}) {
    add_input_flags(sub, o);
    add_output_flags(sub, o);
  }
  for (auto* sub : {invariants, domset, verify}) add_budget_flags(sub, o);
  peel->add_option("--budget-alpha", o.budget_alpha, "node budget for stability search")
      ->check(CLI::PositiveNumber);
  peel->add_option("--budget-minor", o.budget_minor, "node budget for exact fallbacks")
      ->check(CLI::PositiveNumber);
  peel->add_option("--exact-cap", o.exact_cap, "largest order solved exactly in fallbacks");
  verify->add_option("--jobs", o.jobs, "worker threads (default: MINORFORGE_JOBS or 1)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--violations-out", o.violations_path, "graph6 of every violating graph");
  table->set_help_flag("--help", "Print this help message and exit");
  table->add_option("--alpha", o.alpha_range, "value or range lo..hi")->required();
  table->add_option("--h", o.h_range, "value or range lo..hi")->required();
  table->add_option("--omega", o.omega_range, "value or range lo..hi (default 1)");
  add_output_flags(table, o);

  std::vector<const char*> argv{"minorforge"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    std::ofstream file;
    std::ostream* sink = &out;
    if (!o.out_path.empty()) {
      file.open(o.out_path);
      if (!file) throw OutputError("cannot write " + o.out_path);
      sink = &file;
    }
    int code = kExitOk;
    if (*invariants) code = cmd_invariants(o, *sink, err);
    if (*domset) code = cmd_domset(o, *sink, err);
    if (*peel) code = cmd_peel(o, *sink, err);
    if (*verify) code = cmd_verify(o, *sink, err);
    if (*table) code = cmd_bounds_table(o, *sink);
    sink->flush();
    return code;
  } catch (const UsageError& e) {
    err << "minorforge: " << e.what() << "\nRun with --help for more information.\n";
    return kExitUsage;
  } catch (const InputError& e) {
    err << "minorforge: " << e.what() << '\n';
    return kExitNoInput;
  } catch (const OutputError& e) {
    err << "minorforge: " << e.what() << '\n';
    return kExitCantCreate;
  } catch (const std::exception& e) {
    err << "minorforge: internal error: " << e.what() << '\n';
    return kExitSoftware;
  }
}

}  // namespace minorforge::cli
