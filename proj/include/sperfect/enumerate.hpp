#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sperfect/graph.hpp"

namespace sperfect {

struct CanonicalForm {
  Graph graph;
  /// labeling[v] is the canonical label of input vertex v.
  std::vector<Vertex> labeling;
};

/// Canonical labeling by colour refinement plus individualisation search.
/// Isomorphic inputs give identical canonical graphs.
CanonicalForm canonical_form(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

enum class GraphClass { all, connected, chordal, connected_chordal };

/// Every isomorphism class of order n in the class, one representative
/// each (in canonical form), ordered by graph6 string. Built by vertex
/// augmentation: each class is closed under deleting a suitable vertex
/// (non-cut vertex for connected graphs, simplicial vertex for chordal ones).
std::vector<Graph> enumerate_graphs(int n, GraphClass cls);

/// Same as enumerate_graphs for every order 1..max_n, in increasing order.
void for_each_graph(int max_n, GraphClass cls, const std::function<void(const Graph&)>& visit);

/// Erdős–Rényi G(n, p) with the portable generator.
Graph random_graph(int n, double p, std::uint64_t seed);

}  // namespace sperfect
