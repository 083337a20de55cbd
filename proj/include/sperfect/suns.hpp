#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sperfect/graph.hpp"

namespace sperfect {

enum class Parity { any, odd, even };

std::string_view parity_name(Parity p);
Parity parse_parity(std::string_view name);

/// Witness for an induced k-sun: inner[i] and inner[(i+1) % k] are the two
/// inner neighbours of outer[i].
struct SunCertificate {
  int k = 0;
  std::vector<Vertex> inner;
  std::vector<Vertex> outer;
  Parity parity = Parity::odd;

  VertexSet vertices() const { return VertexSet::from(inner) | VertexSet::from(outer); }
};

/// Re-checks every adjacency and non-adjacency a k-sun requires.
bool verify_sun_certificate(const Graph& g, const SunCertificate& cert);

/// Smallest-k induced sun of the requested parity with 3 <= k <= max_k
/// (max_k < 0 means order/2). The inner cycle may carry chords.
std::optional<SunCertificate> find_induced_sun(const Graph& g, Parity parity = Parity::any, int max_k = -1);

/// 3-sun built from a simplicial vertex v and two neighbours u, w of v with
/// incomparable neighbourhoods: a shortest path from N(u) \ N[w] to
/// N(w) \ N[u] that avoids N[v] is scanned for a vertex t adjacent to both
/// u and w whose path neighbours split between u and w. Returns nullopt when
/// no such configuration exists; it does not fall back to a full search.
std::optional<SunCertificate> find_three_sun_constructive(const Graph& g);

/// Constructive search first, then exhaustive k = 3 search. Throws
/// NotChordalError on a non-chordal input.
std::optional<SunCertificate> find_three_sun_chordal(const Graph& g);

/// Inner Hamiltonian cycle plus the attached simplicial groups: groups[i]
/// hangs off the cycle edge (cycle[i], cycle[(i+1) % k]).
struct ExtendedSunStructure {
  std::vector<Vertex> cycle;
  std::vector<VertexSet> groups;
};

/// True iff `s` describes g as an extended sun: the groups partition the
/// non-cycle vertices, each group is a nonempty clique adjacent to exactly
/// its two cycle vertices outside itself, and groups are pairwise non-adjacent.
bool is_extended_sun(const Graph& g, const ExtendedSunStructure& s);

/// Finds the extended-sun structure of g if there is one.
std::optional<ExtendedSunStructure> recognize_extended_sun(const Graph& g);

struct ExtendedSunEmbedding {
  enum class Status { embedded, inapplicable };

  Status status = Status::inapplicable;
  std::string reason;
  /// The extended sun; vertices 0..n-1 are the input's vertices.
  Graph sun;
  ExtendedSunStructure structure;
  /// Fresh simplicial vertices, one per cycle edge that carried none.
  std::vector<Vertex> added;
};

/// Strips the simplicial vertices, finds a Hamiltonian cycle of the rest in
/// which every simplicial vertex hangs off a cycle edge, and attaches a fresh
/// simplicial vertex to each bare cycle edge in cycle order.
/// Throws NotChordalError for non-chordal input and std::invalid_argument
/// when g is not a block or has no simplicial vertex.
ExtendedSunEmbedding embed_in_extended_sun(const Graph& g);

/// Hamiltonian cycle through every edge in `required`, starting at the
/// smallest vertex; nullopt if none exists.
std::optional<std::vector<Vertex>> hamiltonian_cycle(const Graph& g, std::span<const Edge> required = {});
/// Subset dynamic programming up to 24 vertices, backtracking beyond.
bool is_hamiltonian(const Graph& g);

/// Some induced cycle whose length satisfies `accept` (lengths >= 4 only).
template <typename Accept>
std::optional<std::vector<Vertex>> find_induced_cycle(const Graph& g, Accept accept);

/// Induced copy of `pattern` in `host`: result[i] is the host image of
/// pattern vertex i.
std::optional<std::vector<Vertex>> find_induced_subgraph(const Graph& pattern, const Graph& host);

// -- implementation --------------------------------------------------------

template <typename Accept>
std::optional<std::vector<Vertex>> find_induced_cycle(const Graph& g, Accept accept) {
  std::vector<Vertex> path;
  std::optional<std::vector<Vertex>> found;
  // path[0] is the smallest cycle vertex; path[1] < closing vertex fixes
  // the orientation.
  auto extend = [&](auto&& self, VertexSet interior) -> bool {
    const Vertex start = path.front();
    const Vertex tail = path.back();
    const VertexSet blocked = VertexSet::range(start + 1) | VertexSet::from(path);
    for (Vertex x : g.neighbors(tail) - blocked) {
      if (g.neighbors(x).intersects(interior)) continue;
      if (path.size() >= 2 && g.adjacent(x, start)) {
        // x closes a cycle; with only one vertex between it is a triangle.
        if (path.size() >= 3 && x > path[1] && accept(static_cast<int>(path.size()) + 1)) {
          path.push_back(x);
          found = path;
          return true;
        }
        continue;
      }
      path.push_back(x);
      VertexSet next_interior = interior;
      if (path.size() >= 3) next_interior.insert(path[path.size() - 2]);
      if (self(self, next_interior)) return true;
      path.pop_back();
    }
    return false;
  };
  for (Vertex s = 0; s < g.order(); ++s) {
    path.assign(1, s);
    if (extend(extend, VertexSet{})) return found;
  }
  return std::nullopt;
}

}  // namespace sperfect
