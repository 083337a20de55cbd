#include "sperfect/solvers.hpp"

#include <algorithm>
#include <array>
#include <climits>

namespace sperfect {
namespace {

using Rows = std::array<VertexSet, kMaxVertices>;

/// Maximum independent set size inside `p` for the conflict graph `rows`.
int max_independent(const Rows& rows, VertexSet p) {
  if (p.empty()) return 0;
  Vertex hub = p.first();
  int hub_degree = -1;
  for (Vertex v : p) {
    const int d = (rows[v] & p).size();
    if (d <= 1) {
      // A vertex of degree <= 1 belongs to some maximum independent set.
      return 1 + max_independent(rows, p - (rows[v] | VertexSet::single(v)));
    }
    if (d > hub_degree) {
      hub = v;
      hub_degree = d;
    }
  }
  const int with = 1 + max_independent(rows, p - (rows[hub] | VertexSet::single(hub)));
  return std::max(with, max_independent(rows, p - VertexSet::single(hub)));
}

/// Lexicographically smallest maximum independent set inside `p`.
VertexSet lex_max_independent(const Rows& rows, VertexSet p) {
  const int target = max_independent(rows, p);
  VertexSet chosen;
  VertexSet open = p;
  while (!open.empty() && chosen.size() < target) {
    const Vertex v = open.first();
    open.erase(v);
    const VertexSet rest = open - rows[v];
    if (chosen.size() + 1 + max_independent(rows, rest) == target) {
      chosen.insert(v);
      open = rest;
    }
  }
  return chosen;
}

/// Branch and bound for dominating sets. `closed[v]` is the closed
/// neighbourhood of v in the graph under consideration.
class Dominator {
 public:
  explicit Dominator(const Rows& closed) : closed_(closed) {}

  /// Smallest |D| with D ⊆ allowed dominating `pending`, if it is <= limit;
  /// otherwise some value > limit.
  int solve(VertexSet pending, VertexSet allowed, int limit) const {
    if (pending.empty()) return 0;
    if (limit <= 0) return limit + 1;
    if (lower_bound(pending, allowed) > limit) return limit + 1;

    Vertex pick = -1;
    int options = INT_MAX;
    for (Vertex u : pending) {
      const int c = (closed_[u] & allowed).size();
      if (c < options) {
        options = c;
        pick = u;
      }
    }
    if (options == 0) return limit + 1;

    std::vector<Vertex> cands = (closed_[pick] & allowed).to_vector();
    std::stable_sort(cands.begin(), cands.end(), [&](Vertex a, Vertex b) {
      return (closed_[a] & pending).size() > (closed_[b] & pending).size();
    });
    int best = limit + 1;
    for (Vertex c : cands) {
      const int sub = solve(pending - closed_[c], allowed - VertexSet::single(c), best - 2);
      best = std::min(best, 1 + sub);
      // Solutions through c are exhausted; later branches may not use it.
      allowed.erase(c);
      if (best <= 1) break;
    }
    return best;
  }

 private:
  int lower_bound(VertexSet pending, VertexSet allowed) const {
    int max_reach = 0;
    VertexSet reachable;
    for (Vertex u : pending) reachable |= closed_[u] & allowed;
    for (Vertex c : reachable) max_reach = std::max(max_reach, (closed_[c] & pending).size());
    if (max_reach == 0) return INT_MAX / 2;
    const int by_count = (pending.size() + max_reach - 1) / max_reach;

    // Pending vertices whose dominator candidates are pairwise disjoint each
    // need their own dominator.
    int packed = 0;
    VertexSet used;
    for (Vertex u : pending) {
      const VertexSet c = closed_[u] & allowed;
      if (!c.intersects(used)) {
        used |= c;
        ++packed;
      }
    }
    return std::max(by_count, packed);
  }

  const Rows& closed_;
};

Rows square_rows(const Graph& g, VertexSet within) {
  Rows rows{};
  for (Vertex v : within) rows[v] = ball2_within(g, within, v);
  return rows;
}

Rows closed_rows(const Graph& g, VertexSet within) {
  Rows rows{};
  for (Vertex v : within) rows[v] = g.closed_neighbors(v) & within;
  return rows;
}

int min_dominating(const Rows& closed, VertexSet within) {
  return Dominator(closed).solve(within, within, within.size());
}

VertexSet lex_min_dominating(const Rows& closed, VertexSet within) {
  const Dominator dom(closed);
  const int target = dom.solve(within, within, within.size());
  VertexSet chosen;
  VertexSet covered;
  VertexSet open = within;
  while (chosen.size() < target) {
    const Vertex v = open.first();
    open.erase(v);
    const VertexSet now = covered | closed[v];
    const int budget = target - chosen.size() - 1;
    if (dom.solve(within - now, open, budget) <= budget) {
      chosen.insert(v);
      covered = now;
    }
  }
  return chosen;
}

void require_in_range(const Graph& g, VertexSet s, const char* what) {
  if (!s.is_subset_of(g.vertices())) throw GraphError(std::string(what) + ": vertex out of range");
}

void require_brute_size(const Graph& g, const char* what) {
  if (g.order() > kBruteForceLimit) {
    throw SizeLimitError(std::string(what) + ": order " + std::to_string(g.order()) + " exceeds the brute-force limit " +
                         std::to_string(kBruteForceLimit));
  }
}

}  // namespace

AlphaResult alpha_s(const Graph& g) {
  const Rows rows = square_rows(g, g.vertices());
  AlphaResult out;
  for (VertexSet comp : connected_components(g)) {
    // Components share no conflicts, so per-component lex-min sets combine
    // into the global lex-min set.
    out.packing.vertices |= lex_max_independent(rows, comp);
  }
  out.value = out.packing.size();
  return out;
}

ThetaResult theta_s(const Graph& g) {
  const Rows closed = closed_rows(g, g.vertices());
  VertexSet centers;
  for (VertexSet comp : connected_components(g)) centers |= lex_min_dominating(closed, comp);

  ThetaResult out;
  for (Vertex c : centers) out.cover.stars.push_back({c, {}});
  for (Vertex v : g.vertices() - centers) {
    const Vertex c = (g.neighbors(v) & centers).first();
    for (Star& s : out.cover.stars) {
      if (s.center == c) s.leaves.insert(v);
    }
  }
  out.value = out.cover.size();
  return out;
}

int alpha_s_value(const Graph& g, VertexSet within) {
  require_in_range(g, within, "alpha_s_value");
  return max_independent(square_rows(g, within), within);
}

int theta_s_value(const Graph& g, VertexSet within) {
  require_in_range(g, within, "theta_s_value");
  const Rows closed = closed_rows(g, within);
  int total = 0;
  for (VertexSet comp : connected_components(g, within)) total += min_dominating(closed, comp);
  return total;
}

int brute_alpha(const Graph& g) {
  require_brute_size(g, "brute_alpha");
  const DistanceMatrix dist(g);
  const int n = g.order();
  int best = 0;
  std::vector<Vertex> chosen;
  auto extend = [&](auto&& self, Vertex start) -> void {
    best = std::max(best, static_cast<int>(chosen.size()));
    for (Vertex v = start; v < n; ++v) {
      if (static_cast<int>(chosen.size()) + (n - v) <= best) return;
      bool far = true;
      for (Vertex c : chosen) far = far && dist.at_least(c, v, 3);
      if (!far) continue;
      chosen.push_back(v);
      self(self, v + 1);
      chosen.pop_back();
    }
  };
  extend(extend, 0);
  return best;
}

int brute_theta(const Graph& g) {
  require_brute_size(g, "brute_theta");
  const int n = g.order();
  const std::uint64_t all = VertexSet::range(n).bits();
  for (int k = 0; k <= n; ++k) {
    if (k == 0) {
      if (n == 0) return 0;
      continue;
    }
    // Gosper's hack: every k-subset of n bits in increasing order.
    std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    while (mask <= all) {
      std::uint64_t covered = 0;
      for (Vertex v : VertexSet(mask)) covered |= g.closed_neighbors(v).bits();
      if (covered == all) return k;
      const std::uint64_t low = mask & (~mask + 1);
      const std::uint64_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }
  return n;
}

bool verify_packing(const Graph& g, const PackingSet& p) {
  require_in_range(g, p.vertices, "verify_packing");
  const DistanceMatrix dist(g);
  for (Vertex u : p.vertices) {
    for (Vertex v : p.vertices - VertexSet::range(u + 1)) {
      if (!dist.at_least(u, v, 3)) return false;
    }
  }
  return true;
}

bool verify_cover(const Graph& g, const StarCover& c) {
  VertexSet covered;
  for (const Star& s : c.stars) {
    if (s.center < 0 || s.center >= g.order()) throw GraphError("verify_cover: center out of range");
    require_in_range(g, s.leaves, "verify_cover");
    if (!s.leaves.is_subset_of(g.neighbors(s.center))) return false;
    covered |= s.members();
  }
  return covered == g.vertices();
}

}  // namespace sperfect
