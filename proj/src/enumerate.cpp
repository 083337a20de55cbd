#include "sperfect/enumerate.hpp"

#include <algorithm>
#include <unordered_set>

#include "sperfect/chordal.hpp"
#include "sperfect/graph_io.hpp"
#include "sperfect/rng.hpp"

namespace sperfect {
namespace {

using Cells = std::vector<std::vector<Vertex>>;

/// Splits cells by neighbour counts into every cell until stable. Cell order
/// depends only on the graph and the incoming cell order.
void refine(const Graph& g, Cells& cells) {
  const int n = g.order();
  std::vector<int> cell_of(static_cast<std::size_t>(n));
  std::vector<VertexSet> cell_sets;
  while (true) {
    cell_sets.assign(cells.size(), VertexSet{});
    for (std::size_t c = 0; c < cells.size(); ++c) {
      for (Vertex v : cells[c]) {
        cell_of[v] = static_cast<int>(c);
        cell_sets[c].insert(v);
      }
    }
    Cells next;
    next.reserve(cells.size());
    bool split = false;
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<int>, Vertex>> keyed;
      keyed.reserve(cell.size());
      for (Vertex v : cell) {
        std::vector<int> sig(cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c) sig[c] = (g.neighbors(v) & cell_sets[c]).size();
        keyed.emplace_back(std::move(sig), v);
      }
      std::sort(keyed.begin(), keyed.end());
      std::vector<Vertex> run{keyed[0].second};
      for (std::size_t i = 1; i < keyed.size(); ++i) {
        if (keyed[i].first != keyed[i - 1].first) {
          next.push_back(std::move(run));
          run.clear();
          split = true;
        }
        run.push_back(keyed[i].second);
      }
      next.push_back(std::move(run));
    }
    cells = std::move(next);
    if (!split) return;
  }
}

bool twins(const Graph& g, Vertex a, Vertex b) {
  const VertexSet pair{a, b};
  return (g.neighbors(a) - pair) == (g.neighbors(b) - pair);
}

class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g) : g_(g) {}

  CanonicalForm run() {
    Cells cells;
    if (g_.order() > 0) cells.push_back(g_.vertices().to_vector());
    search(std::move(cells));
    CanonicalForm out;
    out.labeling = best_labeling_;
    out.graph = relabel(g_, best_labeling_);
    return out;
  }

 private:
  void search(Cells cells) {
    refine(g_, cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const std::size_t t = static_cast<std::size_t>(target - cells.begin());
    const std::vector<Vertex> members = cells[t];
    std::vector<Vertex> tried;
    for (Vertex v : members) {
      // Swapping twins is an automorphism that fixes this node's partition,
      // so their subtrees yield the same leaves.
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex w) { return twins(g_, v, w); })) continue;
      tried.push_back(v);
      Cells child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(t));
      child.push_back({v});
      std::vector<Vertex> rest;
      for (Vertex w : members) {
        if (w != v) rest.push_back(w);
      }
      child.push_back(std::move(rest));
      child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(t) + 1, cells.end());
      search(std::move(child));
    }
  }

  void leaf(const Cells& cells) {
    const int n = g_.order();
    std::vector<Vertex> labeling(static_cast<std::size_t>(n));
    for (std::size_t c = 0; c < cells.size(); ++c) labeling[cells[c][0]] = static_cast<Vertex>(c);
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w : g_.neighbors(v)) rows[labeling[v]] |= std::uint64_t{1} << labeling[w];
    }
    if (best_rows_.empty() || rows < best_rows_) {
      best_rows_ = std::move(rows);
      best_labeling_ = std::move(labeling);
    }
  }

  const Graph& g_;
  std::vector<std::uint64_t> best_rows_;
  std::vector<Vertex> best_labeling_;
};

bool keeps_class(const Graph& parent, VertexSet attach, GraphClass cls) {
  switch (cls) {
    case GraphClass::all: return true;
    case GraphClass::connected: return !attach.empty();
    case GraphClass::chordal: return parent.is_clique(attach);
    case GraphClass::connected_chordal: return !attach.empty() && parent.is_clique(attach);
  }
  return false;
}

std::vector<Graph> extend_level(const std::vector<Graph>& previous, GraphClass cls) {
  std::unordered_set<std::string> seen;
  std::vector<std::pair<std::string, Graph>> found;
  for (const Graph& parent : previous) {
    const int m = parent.order();
    std::vector<Edge> base = parent.edges();
    const std::uint64_t subsets = std::uint64_t{1} << m;
    for (std::uint64_t bits = 0; bits < subsets; ++bits) {
      const VertexSet attach(bits);
      if (!keeps_class(parent, attach, cls)) continue;
      std::vector<Edge> edges = base;
      for (Vertex v : attach) edges.emplace_back(v, m);
      CanonicalForm canon = canonical_form(Graph::from_edges(m + 1, edges));
      std::string key = to_graph6(canon.graph);
      if (seen.insert(key).second) found.emplace_back(std::move(key), std::move(canon.graph));
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& [key, g] : found) out.push_back(std::move(g));
  return out;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) { return CanonSearch(g).run(); }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a).graph == canonical_form(b).graph;
}

std::vector<Graph> enumerate_graphs(int n, GraphClass cls) {
  if (n < 0 || n > 12) throw std::invalid_argument("enumerate_graphs: n must lie in [0, 12]");
  if (n == 0) {
    if (cls == GraphClass::connected || cls == GraphClass::connected_chordal) return {};
    return {Graph{}};
  }
  std::vector<Graph> level{Graph::from_edges(1, {})};
  for (int m = 2; m <= n; ++m) level = extend_level(level, cls);
  return level;
}

void for_each_graph(int max_n, GraphClass cls, const std::function<void(const Graph&)>& visit) {
  if (max_n < 1) return;
  if (max_n > 12) throw std::invalid_argument("for_each_graph: max_n must be at most 12");
  std::vector<Graph> level{Graph::from_edges(1, {})};
  for (const Graph& g : level) visit(g);
  for (int m = 2; m <= max_n; ++m) {
    level = extend_level(level, cls);
    for (const Graph& g : level) visit(g);
  }
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (n < 0 || n > kMaxVertices) throw GraphError("random_graph: order outside [0, 64]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (rng.chance(p)) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace sperfect
