#pragma once

#include <stdexcept>
#include <vector>

#include "sperfect/graph.hpp"

namespace sperfect {

/// Raised when a brute-force routine is handed a graph above its size guard.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Vertices pairwise at distance >= 3 (no two share a star).
struct PackingSet {
  VertexSet vertices;
  int size() const { return vertices.size(); }
};

/// A star subgraph: a center plus leaves adjacent to it. No leaves is K_1.
struct Star {
  Vertex center = 0;
  VertexSet leaves;

  VertexSet members() const { return leaves | VertexSet::single(center); }
  bool operator==(const Star&) const = default;
};

struct StarCover {
  std::vector<Star> stars;
  int size() const { return static_cast<int>(stars.size()); }
};

struct AlphaResult {
  int value = 0;
  PackingSet packing;
};

struct ThetaResult {
  int value = 0;
  StarCover cover;
};

/// S-independence number with the lexicographically smallest maximum packing.
AlphaResult alpha_s(const Graph& g);
/// S-cover number (domination number) with a star cover built on the
/// lexicographically smallest minimum dominating set; every other vertex
/// joins the star of its smallest adjacent center.
ThetaResult theta_s(const Graph& g);

/// alpha_S and theta_S of the induced subgraph G[within], values only.
int alpha_s_value(const Graph& g, VertexSet within);
int theta_s_value(const Graph& g, VertexSet within);

/// Exhaustive oracles, independent of the branch-and-bound code; n <= 20.
inline constexpr int kBruteForceLimit = 20;
int brute_alpha(const Graph& g);
int brute_theta(const Graph& g);

/// Pairwise distance >= 3. Throws GraphError for vertices out of range.
bool verify_packing(const Graph& g, const PackingSet& p);
/// Every star is a subgraph of g and the stars cover V(g).
/// Throws GraphError for vertices out of range.
bool verify_cover(const Graph& g, const StarCover& c);

}  // namespace sperfect
