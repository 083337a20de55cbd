#include "sperfect/perfection.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "sperfect/chordal.hpp"
#include "sperfect/enumerate.hpp"
#include "sperfect/graph_io.hpp"
#include "sperfect/solvers.hpp"

namespace sperfect {
namespace {

void require_brute_order(int n) {
  if (n > kBrutePerfectionLimit) {
    throw SizeLimitError("brute S-perfection: order " + std::to_string(n) + " exceeds " +
                         std::to_string(kBrutePerfectionLimit));
  }
}

bool balanced(const Graph& g, VertexSet s) { return alpha_s_value(g, s) == theta_s_value(g, s); }

/// First connected subset of `within` (by size, then bit pattern) whose
/// induced subgraph has alpha_S != theta_S. Connected subsets are grown by
/// adding one neighbour at a time, so each level holds every connected
/// subset of that size.
std::optional<VertexSet> first_unbalanced(const Graph& g, VertexSet within) {
  std::vector<std::uint64_t> level;
  for (Vertex v : within) level.push_back(VertexSet::single(v).bits());
  while (!level.empty()) {
    for (std::uint64_t bits : level) {
      if (!balanced(g, VertexSet(bits))) return VertexSet(bits);
    }
    std::vector<std::uint64_t> next;
    for (std::uint64_t bits : level) {
      const VertexSet s(bits);
      VertexSet border;
      for (Vertex v : s) border |= g.neighbors(v);
      for (Vertex w : (border & within) - s) next.push_back(bits | (std::uint64_t{1} << w));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }
  return std::nullopt;
}

}  // namespace

std::string_view method_name(PerfectionMethod m) {
  return m == PerfectionMethod::brute ? "brute" : "chordal_theorem";
}

bool is_s_perfect_within(const Graph& g, VertexSet within) {
  require_brute_order(within.size());
  return !first_unbalanced(g, within).has_value();
}

VertexSet minimize_witness(const Graph& g, VertexSet imperfect) {
  VertexSet w = imperfect;
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (Vertex x : w) {
      const VertexSet rest = w - VertexSet::single(x);
      if (!rest.empty() && first_unbalanced(g, rest)) {
        w = rest;
        shrunk = true;
        break;
      }
    }
  }
  return w;
}

PerfectionVerdict is_s_perfect_brute(const Graph& g) {
  require_brute_order(g.order());
  PerfectionVerdict out;
  out.method = PerfectionMethod::brute;
  const auto failing = first_unbalanced(g, g.vertices());
  if (!failing) return out;
  const VertexSet w = minimize_witness(g, *failing);
  out.is_s_perfect = false;
  out.witness = ImperfectWitness{w, alpha_s_value(g, w), theta_s_value(g, w)};
  return out;
}

PerfectionVerdict is_s_perfect_chordal(const Graph& g) {
  require_chordal(g);
  PerfectionVerdict out;
  out.method = PerfectionMethod::chordal_theorem;
  out.sun = find_induced_sun(g, Parity::odd);
  out.is_s_perfect = !out.sun.has_value();
  return out;
}

bool is_minimal_s_imperfect(const Graph& g) {
  require_brute_order(g.order());
  if (g.order() == 0 || balanced(g, g.vertices())) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    const VertexSet rest = g.vertices() - VertexSet::single(v);
    if (first_unbalanced(g, rest)) return false;
  }
  return true;
}

MinimalImperfectProperties minimal_imperfect_properties(const Graph& w) {
  if (!is_minimal_s_imperfect(w)) throw std::invalid_argument("graph is not minimal S-imperfect");
  MinimalImperfectProperties out;
  out.chordal = is_chordal(w);
  out.is_block = is_block(w);
  out.alpha = alpha_s(w).value;
  out.theta = theta_s(w).value;
  for (Vertex u = 0; u < w.order() && !out.nested_pair; ++u) {
    for (Vertex v = 0; v < w.order(); ++v) {
      if (u != v && w.neighbors(u).is_subset_of(w.neighbors(v))) {
        out.nested_pair = Edge{u, v};
        break;
      }
    }
  }
  if (out.chordal) out.hamiltonian = is_hamiltonian(w);
  return out;
}

std::optional<TheoremCheck> MainTheoremVerifier::check(const Graph& g) {
  if (g.order() > kBrutePerfectionLimit) {
    ++rejected_too_large_;
    return std::nullopt;
  }
  if (!is_chordal(g)) {
    ++rejected_nonchordal_;
    return std::nullopt;
  }
  TheoremCheck out{to_graph6(g), is_s_perfect_brute(g), is_s_perfect_chordal(g)};
  TheoremSweepCounts& counts = per_order_[g.order()];
  ++counts.graphs;
  ++(out.brute.is_s_perfect ? counts.s_perfect : counts.s_imperfect);
  if (out.brute.witness) {
    const Graph sub = induced_subgraph(g, out.brute.witness->vertices).graph;
    std::string key = to_graph6(canonical_form(sub).graph);
    if (std::find(witnesses_.begin(), witnesses_.end(), key) == witnesses_.end()) witnesses_.push_back(std::move(key));
  }
  if (!out.agree()) {
    ++counts.disagreements;
    disagreements_.push_back(out);
  }
  return out;
}

long MainTheoremVerifier::checked() const {
  long total = 0;
  for (const auto& [n, c] : per_order_) total += c.graphs;
  return total;
}

}  // namespace sperfect
