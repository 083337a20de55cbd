#include "sperfect/chordal.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "sperfect/rng.hpp"

namespace sperfect {
namespace {

std::string hole_message(const std::vector<Vertex>& hole) {
  std::string msg = "graph is not chordal; induced hole:";
  for (Vertex v : hole) msg += " " + std::to_string(v);
  return msg;
}

/// With x, y nonadjacent neighbours of v: a chordless x..y path avoiding the
/// rest of N[v] closes an induced cycle through v.
std::optional<std::vector<Vertex>> hole_through(const Graph& g, Vertex v, Vertex x, Vertex y) {
  const VertexSet allowed = (g.vertices() - g.closed_neighbors(v)) | VertexSet{x, y};
  auto path = shortest_path(g, x, y, allowed);
  if (!path) return std::nullopt;
  std::vector<Vertex> cycle{v};
  cycle.insert(cycle.end(), path->begin(), path->end());
  return cycle;
}

}  // namespace

NotChordalError::NotChordalError(std::vector<Vertex> hole)
    : std::invalid_argument(hole_message(hole)), hole_(std::move(hole)) {}

std::vector<Vertex> maximum_cardinality_search(const Graph& g) {
  const int n = g.order();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  VertexSet unvisited = g.vertices();
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  while (!unvisited.empty()) {
    Vertex best = unvisited.first();
    for (Vertex v : unvisited) {
      if (weight[v] > weight[best]) best = v;
    }
    order.push_back(best);
    unvisited.erase(best);
    for (Vertex w : g.neighbors(best) & unvisited) ++weight[w];
  }
  return order;
}

bool is_perfect_elimination_ordering(const Graph& g, std::span<const Vertex> order) {
  if (static_cast<int>(order.size()) != g.order()) return false;
  if (VertexSet::from(order) != g.vertices()) return false;
  VertexSet later = g.vertices();
  for (Vertex v : order) {
    later.erase(v);
    if (!g.is_clique(g.neighbors(v) & later)) return false;
  }
  return true;
}

bool is_induced_hole(const Graph& g, std::span<const Vertex> cycle) {
  const std::size_t k = cycle.size();
  if (k < 4) return false;
  const VertexSet members = VertexSet::from(cycle);
  if (members.size() != static_cast<int>(k)) return false;
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex v = cycle[i];
    if (v < 0 || v >= g.order()) return false;
    const VertexSet expected{cycle[(i + 1) % k], cycle[(i + k - 1) % k]};
    if ((g.neighbors(v) & members) != expected) return false;
  }
  return true;
}

std::optional<std::vector<Vertex>> find_hole(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    const VertexSet nv = g.neighbors(v);
    for (Vertex x : nv) {
      for (Vertex y : (nv - g.closed_neighbors(x)) - VertexSet::range(x + 1)) {
        if (auto cycle = hole_through(g, v, x, y)) return cycle;
      }
    }
  }
  return std::nullopt;
}

ChordalityVerdict check_chordal(const Graph& g) {
  std::vector<Vertex> visit = maximum_cardinality_search(g);
  std::vector<Vertex> peo(visit.rbegin(), visit.rend());

  VertexSet later = g.vertices();
  for (Vertex v : peo) {
    later.erase(v);
    const VertexSet tail = g.neighbors(v) & later;
    for (Vertex x : tail) {
      const VertexSet missing = (tail - g.closed_neighbors(x)) - VertexSet::range(x + 1);
      if (missing.empty()) continue;
      ChordalityVerdict out;
      if (auto cycle = hole_through(g, v, x, missing.first())) {
        out.hole = std::move(*cycle);
      } else {
        out.hole = find_hole(g).value();
      }
      return out;
    }
  }
  return {true, std::move(peo), {}};
}

bool is_chordal(const Graph& g) { return check_chordal(g).is_chordal; }

void require_chordal(const Graph& g) {
  auto verdict = check_chordal(g);
  if (!verdict.is_chordal) throw NotChordalError(std::move(verdict.hole));
}

bool is_simplicial(const Graph& g, Vertex v) { return g.is_clique(g.neighbors(v)); }

VertexSet simplicial_vertices(const Graph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (is_simplicial(g, v)) out.insert(v);
  }
  return out;
}

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  std::function<void(VertexSet, VertexSet, VertexSet)> expand = [&](VertexSet r, VertexSet p, VertexSet x) {
    if (p.empty() && x.empty()) {
      out.push_back(r);
      return;
    }
    Vertex pivot = (p | x).first();
    for (Vertex u : p | x) {
      if ((p & g.neighbors(u)).size() > (p & g.neighbors(pivot)).size()) pivot = u;
    }
    for (Vertex v : p - g.neighbors(pivot)) {
      expand(r | VertexSet::single(v), p & g.neighbors(v), x & g.neighbors(v));
      p.erase(v);
      x.insert(v);
    }
  };
  if (g.order() > 0) expand({}, g.vertices(), {});
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
  return out;
}

std::vector<VertexSet> maximal_cliques_chordal(const Graph& g, std::span<const Vertex> peo) {
  std::vector<VertexSet> candidates;
  VertexSet later = g.vertices();
  for (Vertex v : peo) {
    later.erase(v);
    candidates.push_back((g.neighbors(v) & later) | VertexSet::single(v));
  }
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < candidates.size() && maximal; ++j) {
      if (i != j && candidates[i].is_subset_of(candidates[j]) && candidates[i] != candidates[j]) maximal = false;
    }
    if (maximal) out.push_back(candidates[i]);
  }
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SimplicialReport simplicial_report(const Graph& g) {
  SimplicialReport out;
  out.simplicial = simplicial_vertices(g);
  // A simplicial vertex lies in exactly one maximal clique, namely N[v].
  const auto verdict = check_chordal(g);
  const std::vector<VertexSet> cliques =
      verdict.is_chordal ? maximal_cliques_chordal(g, verdict.peo) : maximal_cliques(g);
  for (VertexSet c : cliques) {
    if (c.intersects(out.simplicial)) out.free_cliques.push_back(c);
  }
  return out;
}

bool is_free_clique(const Graph& g, VertexSet clique) {
  if (clique.empty() || !g.is_clique(clique)) return false;
  VertexSet common = g.vertices();
  for (Vertex v : clique) common &= g.neighbors(v);
  if (!common.empty()) return false;  // extendable, so not maximal
  for (Vertex v : clique) {
    if (is_simplicial(g, v)) return true;
  }
  return false;
}

bool is_free_triangle(const Graph& g, Vertex a, Vertex b, Vertex c) {
  if (!g.is_clique(VertexSet{a, b, c}) || VertexSet{a, b, c}.size() != 3) return false;
  const int count = (is_simplicial(g, a) ? 1 : 0) + (is_simplicial(g, b) ? 1 : 0) + (is_simplicial(g, c) ? 1 : 0);
  return count == 1;
}

Graph random_chordal(int n, double fill, std::uint64_t seed) {
  if (n <= 0) throw std::invalid_argument("random_chordal: n must be positive");
  if (n > kMaxVertices) throw GraphError("random_chordal: n exceeds the vertex ceiling");
  if (!(fill >= 0.0 && fill <= 1.0)) throw std::invalid_argument("random_chordal: fill must lie in [0, 1]");

  Rng rng(seed);
  std::vector<VertexSet> rows(static_cast<std::size_t>(n));
  for (Vertex v = 1; v < n; ++v) {
    const Vertex anchor = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(v)));
    std::vector<Vertex> order = rows[anchor].to_vector();
    rng.shuffle(order);
    std::vector<Vertex> clique{anchor};
    for (Vertex w : order) {
      bool joins = true;
      for (Vertex c : clique) joins = joins && rows[c].contains(w);
      if (joins) clique.push_back(w);
    }
    const auto extra = static_cast<std::size_t>(std::lround(fill * static_cast<double>(clique.size() - 1)));
    clique.resize(1 + extra);
    for (Vertex c : clique) {
      rows[v].insert(c);
      rows[c].insert(v);
    }
  }
  return Graph::from_rows(std::move(rows));
}

}  // namespace sperfect
