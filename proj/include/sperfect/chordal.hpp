#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "sperfect/graph.hpp"

namespace sperfect {

struct ChordalityVerdict {
  bool is_chordal = false;
  /// Perfect elimination ordering (first entry eliminated first); set iff chordal.
  std::vector<Vertex> peo;
  /// Induced cycle of length >= 4 in cyclic order; set iff not chordal.
  std::vector<Vertex> hole;
};

/// Thrown by operations that require a chordal input; carries a hole.
class NotChordalError : public std::invalid_argument {
 public:
  explicit NotChordalError(std::vector<Vertex> hole);
  const std::vector<Vertex>& hole() const { return hole_; }

 private:
  std::vector<Vertex> hole_;
};

/// Maximum cardinality search; returns vertices in visiting order.
/// Ties go to the smallest label.
std::vector<Vertex> maximum_cardinality_search(const Graph& g);

/// Later neighbours of every vertex form a clique.
bool is_perfect_elimination_ordering(const Graph& g, std::span<const Vertex> order);

/// Any induced cycle of length >= 4, or nullopt when g is chordal.
std::optional<std::vector<Vertex>> find_hole(const Graph& g);

/// True iff `cycle` (cyclic order) is an induced cycle of g of length >= 4.
bool is_induced_hole(const Graph& g, std::span<const Vertex> cycle);

ChordalityVerdict check_chordal(const Graph& g);
bool is_chordal(const Graph& g);
/// Throws NotChordalError with a hole certificate when g is not chordal.
void require_chordal(const Graph& g);

bool is_simplicial(const Graph& g, Vertex v);
VertexSet simplicial_vertices(const Graph& g);

struct SimplicialReport {
  VertexSet simplicial;
  /// Maximal cliques holding at least one simplicial vertex, by bit order.
  std::vector<VertexSet> free_cliques;
};

SimplicialReport simplicial_report(const Graph& g);

/// All maximal cliques (Bron–Kerbosch with pivoting), ordered by bit pattern.
std::vector<VertexSet> maximal_cliques(const Graph& g);
/// Maximal cliques of a chordal graph read off a perfect elimination ordering.
std::vector<VertexSet> maximal_cliques_chordal(const Graph& g, std::span<const Vertex> peo);

/// A maximal clique containing at least one simplicial vertex.
bool is_free_clique(const Graph& g, VertexSet clique);
/// A triangle with exactly one simplicial vertex.
bool is_free_triangle(const Graph& g, Vertex a, Vertex b, Vertex c);

/// Connected chordal graph grown by reverse perfect elimination. Each new
/// vertex joins a clique through a random earlier vertex; `fill` in [0, 1]
/// scales that clique from a single vertex (tree) to maximal (complete).
Graph random_chordal(int n, double fill, std::uint64_t seed);

}  // namespace sperfect
