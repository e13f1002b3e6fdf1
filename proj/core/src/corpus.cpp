#include <algorithm>
#include <atomic>
#include <exception>
#include <ostream>
#include <thread>

#include "minorforge/bounds.hpp"

namespace minorforge {

namespace {

void tally(CorpusSummary& s, const BoundReport& r) {
  ++s.checked;
  for (std::size_t i = 0; i < r.checks.size(); ++i) {
    switch (r.checks[i].status) {
      case CheckStatus::violated:
        ++s.formula_violations[i];
        ++s.formula_applicable[i];
        break;
      case CheckStatus::satisfied:
        ++s.formula_applicable[i];
        break;
      case CheckStatus::undecided:
        ++s.formula_undecided[i];
        break;
      case CheckStatus::not_applicable:
        break;
    }
  }
  if (r.hadwiger == CheckStatus::violated) ++s.hadwiger_violations;
  if (r.hadwiger == CheckStatus::undecided) ++s.hadwiger_undecided;

  if (r.violated()) {
    ++s.violations;
    s.violation_witnesses.push_back(r.graph6);
  } else if (r.undecided()) {
    ++s.undecided;
  } else {
    ++s.satisfied;
  }
}

}  // namespace

CorpusSummary verify_corpus(const GraphSource& source, const CorpusOptions& opts,
                            const ReportSink& sink) {
  CorpusSummary summary;
  const std::size_t jobs = std::max<std::size_t>(1, opts.jobs);
  const std::size_t chunk = std::max<std::size_t>(1, opts.chunk);

  std::vector<CorpusItem> batch;
  std::vector<BoundReport> reports;
  for (;;) {
    batch.clear();
    while (batch.size() < chunk) {
      auto item = source();
      if (!item) break;
      batch.push_back(std::move(*item));
    }
    if (batch.empty()) break;

    reports.assign(batch.size(), BoundReport{});
    auto work = [&](std::size_t i) {
      reports[i] = check_graph(batch[i].graph, opts.budgets);
      if (!batch[i].graph6.empty()) reports[i].graph6 = batch[i].graph6;
    };
    if (jobs == 1 || batch.size() == 1) {
      for (std::size_t i = 0; i < batch.size(); ++i) work(i);
    } else {
      std::atomic<std::size_t> next{0};
      std::exception_ptr failure;
      std::atomic<bool> failed{false};
      std::vector<std::jthread> pool;
      const std::size_t workers = std::min(jobs, batch.size());
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          for (std::size_t i = next++; i < batch.size() && !failed; i = next++) {
            try {
              work(i);
            } catch (...) {
              if (!failed.exchange(true)) failure = std::current_exception();
            }
          }
        });
      }
      pool.clear();
      if (failure) std::rethrow_exception(failure);
    }

    for (const auto& r : reports) {
      tally(summary, r);
      if (sink) sink(r);
    }
    if (batch.size() < chunk) break;
  }
  return summary;
}

GraphSource graph6_source(Graph6Reader& reader, std::ostream* log) {
  return [&reader, log, reported = std::size_t{0}]() mutable -> std::optional<CorpusItem> {
    auto rec = reader.next();
    const auto& skipped = reader.skipped();
    for (; reported < skipped.size(); ++reported) {
      if (log)
        *log << "line " << skipped[reported].line << ": skipped: " << skipped[reported].reason
             << '\n';
    }
    if (!rec) return std::nullopt;
    return CorpusItem{std::move(rec->text), std::move(rec->graph), rec->line};
  };
}

}  // namespace minorforge
