#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "minorforge/graph.hpp"

namespace minorforge {

/// Malformed graph6 input. offset() is the 0-based byte position in the
/// record (header included) where decoding failed.
class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset);
  [[nodiscard]] std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

/// Decodes one graph6 record (no line terminator). A leading ">>graph6<<"
/// header is accepted. sparse6 and digraph6 records are rejected.
Graph parse_graph6(std::string_view text);

std::string write_graph6(const Graph& g);

struct Graph6Record {
  std::size_t line = 0;  // 1-based line number in the source
  std::string text;
  Graph graph;
};

struct Graph6Skip {
  std::size_t line = 0;
  std::string reason;
};

/// Pulls records one at a time from a line-oriented graph6 stream. Blank
/// lines and lines starting with '#' are ignored; malformed lines are
/// recorded in skipped() and reading continues.
class Graph6Reader {
 public:
  explicit Graph6Reader(std::istream& in) : in_(in) {}

  std::optional<Graph6Record> next();
  [[nodiscard]] const std::vector<Graph6Skip>& skipped() const { return skipped_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
  std::vector<Graph6Skip> skipped_;
};

}  // namespace minorforge
