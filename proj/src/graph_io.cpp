#include "sperfect/graph_io.hpp"

#include <charconv>
#include <istream>
#include <sstream>

namespace sperfect {
namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

void append_order(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
    return;
  }
  out.push_back('~');
  for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kBias));
}

int sextet(char c) {
  if (c < 63 || c > 126) {
    std::ostringstream msg;
    msg << "graph6: byte " << static_cast<int>(static_cast<unsigned char>(c)) << " outside [63, 126]";
    throw FormatError(msg.str());
  }
  return c - kBias;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view tok, int line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    std::ostringstream msg;
    msg << "edge list line " << line << ": expected an integer, got '" << tok << "'";
    throw FormatError(msg.str());
  }
  return value;
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  append_order(out, n);
  int acc = 0;
  int bits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
  return out;
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw FormatError("graph6: empty record");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = sextet(text[0]);
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~') throw FormatError("graph6: 8-byte order header exceeds the vertex ceiling");
    if (text.size() < 4) throw FormatError("graph6: truncated order header");
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | sextet(text[k]);
    if (n <= 62) throw FormatError("graph6: multi-byte order header used for n <= 62");
    pos = 4;
  }
  if (n > kMaxVertices) {
    std::ostringstream msg;
    msg << "graph6: order " << n << " exceeds the vertex ceiling " << kMaxVertices;
    throw FormatError(msg.str());
  }

  const long pairs = n * (n - 1) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((pairs + 5) / 6);
  if (text.size() != expected) {
    std::ostringstream msg;
    msg << "graph6: expected " << expected << " bytes for n=" << n << ", got " << text.size();
    throw FormatError(msg.str());
  }

  std::vector<Edge> edges;
  long index = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++index) {
      const int word = sextet(text[pos + static_cast<std::size_t>(index / 6)]);
      if ((word >> (5 - index % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (index % 6 != 0) {
    const int word = sextet(text.back());
    const int pad = 6 - static_cast<int>(index % 6);
    if ((word & ((1 << pad) - 1)) != 0) throw FormatError("graph6: nonzero padding bits");
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_edge_list(std::string_view text) {
  int n = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    ++line_no;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto toks = tokens(trim(line));
    if (toks.empty()) continue;
    if (n < 0) {
      if (toks.size() != 1) {
        std::ostringstream msg;
        msg << "edge list line " << line_no << ": expected the vertex count alone";
        throw FormatError(msg.str());
      }
      n = parse_int(toks[0], line_no);
      if (n < 0 || n > kMaxVertices) throw FormatError("edge list: vertex count outside [0, 64]");
      continue;
    }
    if (toks.size() != 2) {
      std::ostringstream msg;
      msg << "edge list line " << line_no << ": expected 'u v'";
      throw FormatError(msg.str());
    }
    const Vertex u = parse_int(toks[0], line_no);
    const Vertex v = parse_int(toks[1], line_no);
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      std::ostringstream msg;
      msg << "edge list line " << line_no << ": " << (u == v ? "self-loop" : "endpoint out of range") << " in '"
          << u << " " << v << "'";
      throw FormatError(msg.str());
    }
    edges.emplace_back(u, v);
  }
  if (n < 0) throw FormatError("edge list: missing vertex count");
  try {
    return Graph::from_edges(n, edges);
  } catch (const GraphError& e) {
    throw FormatError(std::string("edge list: ") + e.what());
  }
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::vector<StreamRecord> read_graph6_lines(std::istream& in) {
  std::vector<StreamRecord> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.push_back({line_no, std::string(t)});
  }
  return out;
}

}  // namespace sperfect
