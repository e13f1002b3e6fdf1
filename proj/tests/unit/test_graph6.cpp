#include <gtest/gtest.h>

#include <sstream>

#include "minorforge/graph.hpp"
#include "minorforge/graph6.hpp"
#include "minorforge/random.hpp"

namespace mf = minorforge;
using mf::Graph;

namespace {

std::size_t error_offset(std::string_view text) {
  try {
    mf::parse_graph6(text);
  } catch (const mf::Graph6Error& e) {
    return e.offset();
  }
  ADD_FAILURE() << "no error for '" << text << "'";
  return 0;
}

}  // namespace

TEST(Graph6Parse, HandDecodedExamples) {
  EXPECT_EQ(mf::parse_graph6("A?"), mf::named::empty(2));
  const Graph k2 = mf::parse_graph6("A_");
  EXPECT_EQ(k2.order(), 2U);
  EXPECT_TRUE(k2.has_edge(0, 1));
  EXPECT_EQ(mf::parse_graph6("Bw"), mf::named::complete(3));
  EXPECT_EQ(mf::parse_graph6("?").order(), 0U);
}

TEST(Graph6Parse, ReferenceToolStrings) {
  // Produced by networkx.to_graph6_bytes.
  EXPECT_EQ(mf::parse_graph6("IheA@GUAo"), mf::named::petersen());
  EXPECT_EQ(mf::parse_graph6("Dhc"), mf::named::cycle(5));
  const std::string path70 =
      "~?@EhCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C?"
      "???@?????G?????_????@?????@??????_?????G?????@??????C??????G??????G??????C??????@??????"
      "?G???????_??????@???????@????????_???????G???????@????????C????????G????????G????????C"
      "????????@?????????G?????????_????????@?????????@??????????_?????????G?????????@???????"
      "???C??????????G??????????G??????????C??????????@???????????G";
  EXPECT_EQ(mf::parse_graph6(path70), mf::named::path(70));
  EXPECT_EQ(mf::write_graph6(mf::named::path(70)), path70);
}

TEST(Graph6Parse, HeaderAccepted) {
  EXPECT_EQ(mf::parse_graph6(">>graph6<<Bw"), mf::named::complete(3));
}

TEST(Graph6Parse, Errors) {
  EXPECT_THROW(mf::parse_graph6("A!"), mf::Graph6Error);
  EXPECT_EQ(error_offset("A!"), 1U);
  EXPECT_EQ(error_offset("!?"), 0U);
  EXPECT_EQ(error_offset("Bw?"), 2U);       // trailing garbage
  EXPECT_EQ(error_offset("A`"), 1U);        // K2 uses one bit; 0b100001 sets padding
  EXPECT_EQ(error_offset("D"), 1U);         // truncated: 10 pairs need 2 bytes
  EXPECT_EQ(error_offset(""), 0U);
  EXPECT_EQ(error_offset(":Fa@x^"), 0U);    // sparse6
  EXPECT_EQ(error_offset("&B?"), 0U);       // digraph6
  EXPECT_EQ(error_offset("~?H?"), 0U);      // order 576 above the supported maximum
  try {
    mf::parse_graph6("A!");
  } catch (const mf::Graph6Error& e) {
    EXPECT_NE(std::string(e.what()).find("byte 1"), std::string::npos) << e.what();
  }
}

TEST(Graph6Write, HandEncodedExamples) {
  EXPECT_EQ(mf::write_graph6(mf::named::complete(3)), "Bw");
  EXPECT_EQ(mf::write_graph6(mf::named::empty(2)), "A?");
  EXPECT_EQ(mf::write_graph6(Graph(0)), "?");
  EXPECT_EQ(mf::write_graph6(mf::named::petersen()), "IheA@GUAo");
  EXPECT_EQ(mf::write_graph6(mf::named::empty(63)).substr(0, 4), "~??~");
}

TEST(Graph6, RoundTrip) {
  for (std::size_t n : {0U, 1U, 2U, 5U, 6U, 7U, 13U, 62U, 63U, 64U, 100U, 200U, 512U}) {
    for (double p : {0.0, 0.1, 0.5, 1.0}) {
      const Graph g = mf::random_gnp(n, p, n * 31 + static_cast<std::uint64_t>(p * 10));
      EXPECT_EQ(mf::parse_graph6(mf::write_graph6(g)), g) << "n=" << n << " p=" << p;
    }
  }
}

TEST(Graph6Reader, SkipsAndReports) {
  std::istringstream in(
      ">>graph6<<\n"
      "# comment\n"
      "Bw\n"
      "\n"
      "A!\n"
      "A_\r\n"
      "Bw?\n"
      "IheA@GUAo  \n");
  mf::Graph6Reader reader(in);
  std::vector<std::size_t> lines;
  std::vector<std::string> texts;
  while (auto rec = reader.next()) {
    lines.push_back(rec->line);
    texts.push_back(rec->text);
  }
  EXPECT_EQ(lines, (std::vector<std::size_t>{3, 6, 8}));
  EXPECT_EQ(texts, (std::vector<std::string>{"Bw", "A_", "IheA@GUAo"}));
  ASSERT_EQ(reader.skipped().size(), 2U);
  EXPECT_EQ(reader.skipped()[0].line, 5U);
  EXPECT_EQ(reader.skipped()[1].line, 7U);
  EXPECT_NE(reader.skipped()[1].reason.find("trailing"), std::string::npos);
}
