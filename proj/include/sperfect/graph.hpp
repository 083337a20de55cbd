#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sperfect/vertex_set.hpp"

namespace sperfect {

/// Raised for malformed graph construction input (self-loops, bad endpoints,
/// orders beyond the ceiling).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..order()-1.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list; duplicate edges are merged.
  /// Throws GraphError on a self-loop or an endpoint outside [0, n).
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  /// Builds from adjacency rows, validating symmetry and irreflexivity.
  static Graph from_rows(std::vector<VertexSet> rows);

  int order() const { return static_cast<int>(adj_.size()); }
  int edge_count() const;
  VertexSet vertices() const { return VertexSet::range(order()); }
  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  VertexSet closed_neighbors(Vertex v) const { return adj_[v] | VertexSet::single(v); }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  int degree(Vertex v) const { return adj_[v].size(); }
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  const std::vector<VertexSet>& rows() const { return adj_; }

  /// True iff every pair inside s is adjacent.
  bool is_clique(VertexSet s) const;

  bool operator==(const Graph&) const = default;

 private:
  explicit Graph(std::vector<VertexSet> rows) : adj_(std::move(rows)) {}

  std::vector<VertexSet> adj_;
};

/// An induced subgraph together with the map back to its parent's labels:
/// vertex i of `graph` is vertex original[i] of the parent.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> original;

  VertexSet lift(VertexSet local) const;
};

Graph build_graph(int n, std::span<const Edge> edges);

/// Vertices of s are relabeled 0..|s|-1 in ascending order.
Subgraph induced_subgraph(const Graph& g, VertexSet s);
Subgraph delete_vertex(const Graph& g, Vertex v);

/// Breadth-first hop counts for every ordered pair.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g);

  int order() const { return n_; }
  /// Hop count, or nullopt when u and v lie in different components.
  std::optional<int> at(Vertex u, Vertex v) const {
    const int d = d_[static_cast<std::size_t>(u) * n_ + v];
    if (d == kUnreachable) return std::nullopt;
    return d;
  }
  bool reachable(Vertex u, Vertex v) const { return at(u, v).has_value(); }
  /// True iff u and v are at distance >= k (unreachable counts as infinite).
  bool at_least(Vertex u, Vertex v, int k) const {
    const auto d = at(u, v);
    return !d || *d >= k;
  }

 private:
  static constexpr int kUnreachable = -1;
  int n_ = 0;
  std::vector<int> d_;
};

DistanceMatrix distance_matrix(const Graph& g);

/// Maximal connected vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
/// Components of the subgraph induced by `within`.
std::vector<VertexSet> connected_components(const Graph& g, VertexSet within);
bool is_connected(const Graph& g);
bool is_connected(const Graph& g, VertexSet within);

struct BlockDecomposition {
  VertexSet cut_vertices;
  /// Maximal 2-connected pieces, bridges (K_2) and isolated vertices (K_1).
  std::vector<VertexSet> blocks;
};

BlockDecomposition block_decomposition(const Graph& g);
/// Connected with no cut vertex.
bool is_block(const Graph& g);

/// u ~ v in the result iff 1 <= d_g(u, v) <= 2.
Graph square(const Graph& g);

/// Shortest path from `from` to `to` using only vertices of `allowed`
/// (which must hold both ends); shortest paths are induced.
std::optional<std::vector<Vertex>> shortest_path(const Graph& g, Vertex from, Vertex to, VertexSet allowed);

/// Vertices of `within` at distance 1 or 2 from v inside G[within].
VertexSet ball2_within(const Graph& g, VertexSet within, Vertex v);

/// Disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);
/// Complement of g.
Graph complement(const Graph& g);
/// Applies a relabeling: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace sperfect
