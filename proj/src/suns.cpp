#include "sperfect/suns.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "sperfect/chordal.hpp"

namespace sperfect {
namespace {

bool parity_matches(Parity p, int k) {
  switch (p) {
    case Parity::any: return true;
    case Parity::odd: return k % 2 == 1;
    case Parity::even: return k % 2 == 0;
  }
  return false;
}

/// Depth-first search for an induced k-sun with inner[0] the smallest inner
/// label and inner[1] < inner[k-1].
class SunSearch {
 public:
  SunSearch(const Graph& g, int k) : g_(g), k_(k) {}

  std::optional<SunCertificate> run() {
    for (Vertex v0 = 0; v0 < g_.order(); ++v0) {
      inner_.assign(1, v0);
      outer_.clear();
      if (extend()) {
        return SunCertificate{k_, inner_, outer_, k_ % 2 == 1 ? Parity::odd : Parity::even};
      }
    }
    return std::nullopt;
  }

 private:
  VertexSet outer_reach() const {
    VertexSet reach;
    for (Vertex u : outer_) reach |= g_.neighbors(u);
    return reach;
  }

  /// Vertices adjacent to a and b, outside the sun so far, with no other
  /// neighbour among the chosen vertices.
  VertexSet private_candidates(Vertex a, Vertex b, VertexSet inner) const {
    const VertexSet used = inner | VertexSet::from(outer_);
    VertexSet cands = (g_.neighbors(a) & g_.neighbors(b)) - used - outer_reach();
    for (Vertex x : inner - VertexSet{a, b}) cands -= g_.neighbors(x);
    return cands;
  }

  bool extend() {
    const Vertex v0 = inner_.front();
    const Vertex tail = inner_.back();
    const VertexSet inner = VertexSet::from(inner_);

    if (static_cast<int>(inner_.size()) == k_) {
      if (!g_.adjacent(tail, v0) || inner_[1] > tail) return false;
      const VertexSet cands = private_candidates(tail, v0, inner);
      if (cands.empty()) return false;
      outer_.push_back(cands.first());
      return true;
    }

    const VertexSet used = inner | VertexSet::from(outer_);
    const VertexSet next = g_.neighbors(tail) - used - outer_reach() - VertexSet::range(v0 + 1);
    for (Vertex x : next) {
      const VertexSet with_x = inner | VertexSet::single(x);
      for (Vertex u : private_candidates(tail, x, with_x)) {
        inner_.push_back(x);
        outer_.push_back(u);
        if (extend()) return true;
        inner_.pop_back();
        outer_.pop_back();
      }
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<Vertex> inner_;
  std::vector<Vertex> outer_;
};

SunCertificate three_sun(Vertex a, Vertex b, Vertex c, Vertex ab, Vertex bc, Vertex ca) {
  return SunCertificate{3, {a, b, c}, {ab, bc, ca}, Parity::odd};
}

/// Hamiltonian-cycle backtracking honouring required edges.
class CycleSearch {
 public:
  CycleSearch(const Graph& g, std::vector<VertexSet> required) : g_(g), required_(std::move(required)) {}

  std::optional<std::vector<Vertex>> run() {
    if (g_.order() < 3) return std::nullopt;
    path_.assign(1, 0);
    visited_ = VertexSet::single(0);
    if (extend()) return path_;
    return std::nullopt;
  }

 private:
  bool extend() {
    const int n = g_.order();
    const Vertex x = path_.back();
    const Vertex pred = path_.size() >= 2 ? path_[path_.size() - 2] : -1;
    if (static_cast<int>(path_.size()) == n) {
      const Vertex start = path_.front();
      if (!g_.adjacent(x, start)) return false;
      if (!(required_[x] - VertexSet{pred, start}).empty()) return false;
      return (required_[start] - VertexSet{path_[1], x}).empty();
    }
    for (Vertex y : g_.neighbors(x) - visited_) {
      if (pred >= 0 && !(required_[x] - VertexSet{pred, y}).empty()) continue;
      if (pred < 0 && required_[x].size() == 2 && !required_[x].contains(y)) continue;
      path_.push_back(y);
      visited_.insert(y);
      if (extend()) return true;
      visited_.erase(y);
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  std::vector<VertexSet> required_;
  std::vector<Vertex> path_;
  VertexSet visited_;
};

/// Extended-sun structure of g around its non-simplicial vertices. Cycle
/// edges without a simplicial group are allowed when `allow_bare` is set.
struct StructureAttempt {
  std::optional<ExtendedSunStructure> structure;
  std::string reason;
};

StructureAttempt find_structure(const Graph& g, bool allow_bare) {
  const VertexSet simplicial = simplicial_vertices(g);
  const VertexSet core = g.vertices() - simplicial;
  if (core.size() < 3) return {std::nullopt, "fewer than 3 non-simplicial vertices"};

  std::map<std::pair<Vertex, Vertex>, VertexSet> by_edge;
  for (Vertex s : simplicial) {
    const VertexSet attach = g.neighbors(s) & core;
    if (attach.size() != 2) {
      return {std::nullopt, "simplicial vertex " + std::to_string(s) + " has " + std::to_string(attach.size()) +
                                " non-simplicial neighbours, not 2"};
    }
    const auto ends = attach.to_vector();
    by_edge[{ends[0], ends[1]}].insert(s);
  }
  for (const auto& [edge, group] : by_edge) {
    for (Vertex s : group) {
      if ((g.neighbors(s) & simplicial) != group - VertexSet::single(s)) {
        return {std::nullopt, "simplicial group on edge " + std::to_string(edge.first) + "-" +
                                  std::to_string(edge.second) + " is not an isolated clique"};
      }
    }
  }

  const Subgraph stripped = induced_subgraph(g, core);
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < stripped.original.size(); ++i) local[stripped.original[i]] = static_cast<int>(i);
  std::vector<VertexSet> required(stripped.original.size());
  for (const auto& [edge, group] : by_edge) {
    required[local[edge.first]].insert(local[edge.second]);
    required[local[edge.second]].insert(local[edge.first]);
  }
  for (const VertexSet& r : required) {
    if (r.size() > 2) return {std::nullopt, "a core vertex carries more than two attachment edges"};
  }

  const auto cycle = CycleSearch(stripped.graph, required).run();
  if (!cycle) return {std::nullopt, "stripped graph has no Hamiltonian cycle through the attachment edges"};

  ExtendedSunStructure out;
  const int k = static_cast<int>(cycle->size());
  for (Vertex v : *cycle) out.cycle.push_back(stripped.original[v]);
  for (int i = 0; i < k; ++i) {
    Vertex a = out.cycle[i];
    Vertex b = out.cycle[(i + 1) % k];
    if (a > b) std::swap(a, b);
    auto it = by_edge.find({a, b});
    out.groups.push_back(it == by_edge.end() ? VertexSet{} : it->second);
    if (!allow_bare && out.groups.back().empty()) return {std::nullopt, "a cycle edge carries no simplicial group"};
  }
  return {std::move(out), {}};
}

}  // namespace

std::string_view parity_name(Parity p) {
  switch (p) {
    case Parity::any: return "any";
    case Parity::odd: return "odd";
    case Parity::even: return "even";
  }
  return "?";
}

Parity parse_parity(std::string_view name) {
  if (name == "any") return Parity::any;
  if (name == "odd") return Parity::odd;
  if (name == "even") return Parity::even;
  throw std::invalid_argument("unknown parity '" + std::string(name) + "'");
}

bool verify_sun_certificate(const Graph& g, const SunCertificate& cert) {
  const int k = cert.k;
  if (k < 3 || static_cast<int>(cert.inner.size()) != k || static_cast<int>(cert.outer.size()) != k) return false;
  if (cert.parity != (k % 2 == 1 ? Parity::odd : Parity::even)) return false;
  for (Vertex v : cert.inner) {
    if (v < 0 || v >= g.order()) return false;
  }
  for (Vertex v : cert.outer) {
    if (v < 0 || v >= g.order()) return false;
  }
  const VertexSet all = cert.vertices();
  if (all.size() != 2 * k) return false;
  for (int i = 0; i < k; ++i) {
    const Vertex a = cert.inner[i];
    const Vertex b = cert.inner[(i + 1) % k];
    if (!g.adjacent(a, b)) return false;
    if ((g.neighbors(cert.outer[i]) & all) != VertexSet{a, b}) return false;
  }
  return true;
}

std::optional<SunCertificate> find_induced_sun(const Graph& g, Parity parity, int max_k) {
  const int limit = max_k < 0 ? g.order() / 2 : std::min(max_k, g.order() / 2);
  for (int k = 3; k <= limit; ++k) {
    if (!parity_matches(parity, k)) continue;
    if (auto cert = SunSearch(g, k).run()) return cert;
  }
  return std::nullopt;
}

std::optional<SunCertificate> find_three_sun_constructive(const Graph& g) {
  for (Vertex v : simplicial_vertices(g)) {
    const VertexSet around = g.neighbors(v);
    const VertexSet allowed = g.vertices() - g.closed_neighbors(v);
    for (Vertex u : around) {
      for (Vertex w : around - VertexSet::range(u + 1)) {
        const VertexSet nu = g.neighbors(u) - VertexSet{w, v};
        const VertexSet nw = g.neighbors(w) - VertexSet{u, v};
        if (nu.is_subset_of(nw) || nw.is_subset_of(nu)) continue;
        // Members of N(v) are common to both, so these lie outside N[v].
        for (Vertex u1 : nu - nw) {
          for (Vertex w1 : nw - nu) {
            const auto path = shortest_path(g, u1, w1, allowed);
            if (!path) continue;
            const auto& p = *path;
            for (std::size_t j = 1; j + 1 < p.size(); ++j) {
              const Vertex t = p[j];
              if (!g.adjacent(t, u) || !g.adjacent(t, w)) continue;
              auto u_only = [&](Vertex x) { return g.adjacent(x, u) && !g.adjacent(x, w); };
              auto w_only = [&](Vertex x) { return g.adjacent(x, w) && !g.adjacent(x, u); };
              const Vertex before = p[j - 1];
              const Vertex after = p[j + 1];
              std::optional<SunCertificate> cert;
              if (u_only(before) && w_only(after)) cert = three_sun(u, w, t, v, after, before);
              if (w_only(before) && u_only(after)) cert = three_sun(u, w, t, v, before, after);
              if (cert && verify_sun_certificate(g, *cert)) return cert;
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<SunCertificate> find_three_sun_chordal(const Graph& g) {
  require_chordal(g);
  if (auto cert = find_three_sun_constructive(g)) return cert;
  return find_induced_sun(g, Parity::odd, 3);
}

bool is_extended_sun(const Graph& g, const ExtendedSunStructure& s) {
  const int k = static_cast<int>(s.cycle.size());
  if (k < 3 || static_cast<int>(s.groups.size()) != k) return false;
  for (Vertex v : s.cycle) {
    if (v < 0 || v >= g.order()) return false;
  }
  const VertexSet core = VertexSet::from(s.cycle);
  if (core.size() != k) return false;
  VertexSet seen = core;
  for (int i = 0; i < k; ++i) {
    const Vertex a = s.cycle[i];
    const Vertex b = s.cycle[(i + 1) % k];
    if (!g.adjacent(a, b)) return false;
    const VertexSet group = s.groups[i];
    if (group.empty() || seen.intersects(group) || !group.is_subset_of(g.vertices())) return false;
    seen |= group;
    for (Vertex x : group) {
      if (g.neighbors(x) != ((group - VertexSet::single(x)) | VertexSet{a, b})) return false;
    }
  }
  return seen == g.vertices();
}

std::optional<ExtendedSunStructure> recognize_extended_sun(const Graph& g) {
  auto attempt = find_structure(g, false);
  if (attempt.structure && is_extended_sun(g, *attempt.structure)) return attempt.structure;
  return std::nullopt;
}

ExtendedSunEmbedding embed_in_extended_sun(const Graph& g) {
  require_chordal(g);
  if (!is_block(g)) throw std::invalid_argument("embed_in_extended_sun: graph is not a block");
  if (simplicial_vertices(g).empty()) throw std::invalid_argument("embed_in_extended_sun: no simplicial vertex");

  ExtendedSunEmbedding out;
  auto attempt = find_structure(g, true);
  if (!attempt.structure) {
    out.reason = attempt.reason;
    return out;
  }
  ExtendedSunStructure s = std::move(*attempt.structure);
  std::vector<Edge> edges = g.edges();
  Vertex next = g.order();
  const int k = static_cast<int>(s.cycle.size());
  for (int i = 0; i < k; ++i) {
    if (!s.groups[i].empty()) continue;
    if (next >= kMaxVertices) {
      out.reason = "extended sun would exceed the vertex ceiling";
      return out;
    }
    edges.emplace_back(next, s.cycle[i]);
    edges.emplace_back(next, s.cycle[(i + 1) % k]);
    s.groups[i] = VertexSet::single(next);
    out.added.push_back(next++);
  }
  out.sun = Graph::from_edges(next, edges);
  out.structure = std::move(s);
  out.status = ExtendedSunEmbedding::Status::embedded;
  return out;
}

std::optional<std::vector<Vertex>> hamiltonian_cycle(const Graph& g, std::span<const Edge> required) {
  std::vector<VertexSet> req(static_cast<std::size_t>(g.order()));
  for (const auto& [a, b] : required) {
    if (!g.adjacent(a, b)) return std::nullopt;
    req[a].insert(b);
    req[b].insert(a);
  }
  for (const VertexSet& r : req) {
    if (r.size() > 2) return std::nullopt;
  }
  return CycleSearch(g, std::move(req)).run();
}

bool is_hamiltonian(const Graph& g) {
  const int n = g.order();
  if (n < 3) return false;
  if (n > 24) return hamiltonian_cycle(g).has_value();
  // reach[mask] holds the possible path ends of Hamiltonian paths from
  // vertex 0 through exactly {0} ∪ mask, where mask covers vertices 1..n-1.
  const int m = n - 1;
  std::vector<std::uint32_t> reach(std::size_t{1} << m, 0);
  for (Vertex v : g.neighbors(0)) reach[std::size_t{1} << (v - 1)] |= 1U << (v - 1);
  for (std::size_t mask = 1; mask < reach.size(); ++mask) {
    const std::uint32_t ends = reach[mask];
    if (ends == 0) continue;
    for (Vertex e : VertexSet(ends)) {
      const VertexSet next = VertexSet(g.neighbors(e + 1).bits() >> 1) - VertexSet(mask);
      for (Vertex w : next) reach[mask | (std::size_t{1} << w)] |= 1U << w;
    }
  }
  const std::uint32_t ends = reach.back();
  return VertexSet(ends).intersects(VertexSet(g.neighbors(0).bits() >> 1));
}

std::optional<std::vector<Vertex>> find_induced_subgraph(const Graph& pattern, const Graph& host) {
  const int p = pattern.order();
  if (p > host.order()) return std::nullopt;
  if (p == 0) return std::vector<Vertex>{};

  // Connected-first visiting order: BFS from high-degree vertices.
  std::vector<Vertex> order;
  VertexSet placed;
  while (placed.size() < p) {
    Vertex root = -1;
    for (Vertex v : pattern.vertices() - placed) {
      if (root < 0 || pattern.degree(v) > pattern.degree(root)) root = v;
    }
    std::vector<Vertex> queue{root};
    placed.insert(root);
    for (std::size_t h = 0; h < queue.size(); ++h) {
      order.push_back(queue[h]);
      for (Vertex w : pattern.neighbors(queue[h]) - placed) {
        placed.insert(w);
        queue.push_back(w);
      }
    }
  }

  std::vector<Vertex> image(static_cast<std::size_t>(p), -1);
  VertexSet used;
  auto place = [&](auto&& self, std::size_t idx) -> bool {
    if (idx == order.size()) return true;
    const Vertex pv = order[idx];
    VertexSet cands = host.vertices() - used;
    for (std::size_t j = 0; j < idx; ++j) {
      const Vertex q = order[j];
      if (pattern.adjacent(pv, q)) cands &= host.neighbors(image[q]);
      else cands -= host.neighbors(image[q]);
    }
    for (Vertex h : cands) {
      if (host.degree(h) < pattern.degree(pv)) continue;
      image[pv] = h;
      used.insert(h);
      if (self(self, idx + 1)) return true;
      used.erase(h);
    }
    image[pv] = -1;
    return false;
  };
  if (place(place, 0)) return image;
  return std::nullopt;
}

}  // namespace sperfect
