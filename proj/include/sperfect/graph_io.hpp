#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sperfect/graph.hpp"

namespace sperfect {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// graph6: the standard compact ASCII encoding (one graph per line).
std::string to_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" prefix. Rejects bad characters, wrong
/// lengths, nonzero padding bits and orders beyond kMaxVertices.
Graph parse_graph6(std::string_view text);

// Edge list: first line "n", then one "u v" pair per line (0-based).
// '#' starts a comment that runs to the end of the line.
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

/// Write-only Graphviz export.
std::string to_dot(const Graph& g, std::string_view name = "G");

enum class GraphFormat { graph6, edge_list };

/// A graph read from a stream, with its 1-based source line.
struct StreamRecord {
  int line = 0;
  std::string text;
};

/// Non-empty, non-comment lines of a graph6 stream.
std::vector<StreamRecord> read_graph6_lines(std::istream& in);

}  // namespace sperfect
