#include <sstream>

#include "doctest.h"
#include "sperfect/enumerate.hpp"
#include "sperfect/families.hpp"
#include "sperfect/graph_io.hpp"

using namespace sperfect;

namespace {

// Straight transcription of the graph6 layout: N(n), then the upper
// triangle column by column, six bits per byte, plus 63.
std::string reference_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  }
  std::vector<int> bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? 1 : 0);
  while (bits.size() % 6) bits.push_back(0);
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int v = 0;
    for (int b = 0; b < 6; ++b) v = v * 2 + bits[k + b];
    out += static_cast<char>(v + 63);
  }
  return out;
}

}  // namespace

TEST_CASE("graph6 known strings") {
  CHECK(to_graph6(Graph::from_edges(0, {})) == "?");
  CHECK(to_graph6(Graph::from_edges(1, {})) == "@");
  CHECK(to_graph6(make_complete(2)) == "A_");
  CHECK(to_graph6(make_complete(3)) == "Bw");
  CHECK(to_graph6(make_complete(4)) == "C~");
  CHECK(to_graph6(Graph::from_edges(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}})) == "DQc");
  CHECK(parse_graph6("DQc") == Graph::from_edges(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}}));
  CHECK(parse_graph6(">>graph6<<Bw") == make_complete(3));
}

TEST_CASE("graph6 matches the reference encoder, including long headers") {
  for (int n : {0, 1, 2, 5, 13, 62, 63, 64}) {
    for (int seed = 0; seed < 5; ++seed) {
      const Graph g = random_graph(n, 0.3, seed * 100 + n);
      const std::string s = to_graph6(g);
      CHECK(s == reference_graph6(g));
      CHECK(parse_graph6(s) == g);
    }
  }
  CHECK(to_graph6(Graph::from_edges(63, {})).substr(0, 4) == "~??~");
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(parse_graph6(""), FormatError);
  CHECK_THROWS_AS(parse_graph6("B"), FormatError);      // missing body
  CHECK_THROWS_AS(parse_graph6("Bww"), FormatError);    // too long
  CHECK_THROWS_AS(parse_graph6("Bx"), FormatError);     // nonzero padding
  CHECK_THROWS_AS(parse_graph6("B\x7f"), FormatError);  // byte out of range
  CHECK_THROWS_AS(parse_graph6("~?A?"), FormatError);   // order 65
  CHECK_THROWS_AS(parse_graph6(":Bw"), FormatError);    // sparse6 is not graph6
}

TEST_CASE("edge list round trip and parsing") {
  const Graph g = make_cycle(4);
  CHECK(to_edge_list(g) == "4\n0 1\n0 3\n1 2\n2 3\n");
  CHECK(parse_edge_list(to_edge_list(g)) == g);
  CHECK(parse_edge_list("# a triangle\n3\n0 1 # first\n1 2\n\n2 0\n") == make_complete(3));
  CHECK(parse_edge_list("0\n").order() == 0);
  CHECK_THROWS_AS(parse_edge_list(""), FormatError);
  CHECK_THROWS_AS(parse_edge_list("3\n0 3\n"), FormatError);
  CHECK_THROWS_AS(parse_edge_list("3\n1 1\n"), FormatError);
  CHECK_THROWS_AS(parse_edge_list("3\n0 x\n"), FormatError);
  CHECK_THROWS_AS(parse_edge_list("3\n0 1 2\n"), FormatError);
  try {
    parse_edge_list("3\n0 1\n0 7\n");
    FAIL("expected a format error");
  } catch (const FormatError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("dot export") {
  const std::string dot = to_dot(make_path(3), "P3");
  CHECK(dot.find("graph P3 {") == 0);
  CHECK(dot.find("0 -- 1;") != std::string::npos);
  CHECK(dot.find("1 -- 2;") != std::string::npos);
}

TEST_CASE("graph6 streams skip blanks and comments") {
  std::istringstream in("Bw\n\n# note\n>>graph6<<A_\r\n  \nC~\n");
  const auto recs = read_graph6_lines(in);
  REQUIRE(recs.size() == 3);
  CHECK(recs[0].line == 1);
  CHECK(recs[1].line == 4);
  CHECK(parse_graph6(recs[1].text) == make_complete(2));
  CHECK(recs[2].line == 6);
}
