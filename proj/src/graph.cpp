#include "sperfect/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

namespace sperfect {
namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    std::ostringstream msg;
    msg << "graph order " << n << " outside [0, " << kMaxVertices << "]";
    throw GraphError(msg.str());
  }
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  check_order(n);
  std::vector<VertexSet> rows(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      std::ostringstream msg;
      msg << "edge (" << u << "," << v << ") has an endpoint outside [0, " << n << ")";
      throw GraphError(msg.str());
    }
    if (u == v) {
      std::ostringstream msg;
      msg << "self-loop (" << u << "," << v << ") in a simple graph";
      throw GraphError(msg.str());
    }
    rows[u].insert(v);
    rows[v].insert(u);
  }
  return Graph(std::move(rows));
}

Graph Graph::from_rows(std::vector<VertexSet> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  const VertexSet all = VertexSet::range(n);
  for (Vertex v = 0; v < n; ++v) {
    if (!rows[v].is_subset_of(all)) throw GraphError("adjacency row references a vertex out of range");
    if (rows[v].contains(v)) throw GraphError("adjacency row contains a self-loop");
    for (Vertex u : rows[v]) {
      if (!rows[u].contains(v)) throw GraphError("adjacency rows are not symmetric");
    }
  }
  return Graph(std::move(rows));
}

int Graph::edge_count() const {
  int twice = 0;
  for (const VertexSet& row : adj_) twice += row.size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u] - VertexSet::range(u + 1)) out.emplace_back(u, v);
  }
  return out;
}

bool Graph::is_clique(VertexSet s) const {
  for (Vertex v : s) {
    if (!(s - VertexSet::single(v)).is_subset_of(adj_[v])) return false;
  }
  return true;
}

VertexSet Subgraph::lift(VertexSet local) const {
  VertexSet out;
  for (Vertex v : local) out.insert(original[v]);
  return out;
}

Graph build_graph(int n, std::span<const Edge> edges) { return Graph::from_edges(n, edges); }

Subgraph induced_subgraph(const Graph& g, VertexSet s) {
  if (!s.is_subset_of(g.vertices())) throw GraphError("induced_subgraph: vertex out of range");
  Subgraph out;
  out.original = s.to_vector();
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < out.original.size(); ++i) local[out.original[i]] = static_cast<int>(i);
  std::vector<VertexSet> rows(out.original.size());
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    for (Vertex w : g.neighbors(out.original[i]) & s) rows[i].insert(local[w]);
  }
  out.graph = Graph::from_rows(std::move(rows));
  return out;
}

Subgraph delete_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) throw GraphError("delete_vertex: vertex out of range");
  return induced_subgraph(g, g.vertices() - VertexSet::single(v));
}

DistanceMatrix::DistanceMatrix(const Graph& g)
    : n_(g.order()), d_(static_cast<std::size_t>(n_) * n_, kUnreachable) {
  for (Vertex s = 0; s < n_; ++s) {
    int* row = &d_[static_cast<std::size_t>(s) * n_];
    row[s] = 0;
    VertexSet seen = VertexSet::single(s);
    VertexSet frontier = seen;
    for (int depth = 1; !frontier.empty(); ++depth) {
      VertexSet next;
      for (Vertex v : frontier) next |= g.neighbors(v);
      next -= seen;
      for (Vertex v : next) row[v] = depth;
      seen |= next;
      frontier = next;
    }
  }
}

DistanceMatrix distance_matrix(const Graph& g) { return DistanceMatrix(g); }

std::vector<VertexSet> connected_components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet rest = within;
  while (!rest.empty()) {
    VertexSet comp = VertexSet::single(rest.first());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= g.neighbors(v);
      next = (next & within) - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return connected_components(g, g.vertices());
}

bool is_connected(const Graph& g, VertexSet within) {
  return connected_components(g, within).size() <= 1;
}

bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

BlockDecomposition block_decomposition(const Graph& g) {
  const int n = g.order();
  BlockDecomposition out;
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<Edge> stack;
  int timer = 0;

  std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (Vertex w : g.neighbors(v)) {
      if (disc[w] < 0) {
        ++children;
        stack.emplace_back(v, w);
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          if (parent >= 0 || children > 1) out.cut_vertices.insert(v);
          VertexSet block;
          while (true) {
            const Edge e = stack.back();
            stack.pop_back();
            block.insert(e.first);
            block.insert(e.second);
            if (e == Edge{v, w}) break;
          }
          out.blocks.push_back(block);
        }
      } else if (w != parent && disc[w] < disc[v]) {
        stack.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };

  for (Vertex v = 0; v < n; ++v) {
    if (disc[v] >= 0) continue;
    if (g.degree(v) == 0) {
      disc[v] = timer++;
      out.blocks.push_back(VertexSet::single(v));
      continue;
    }
    dfs(v, -1);
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
  return out;
}

bool is_block(const Graph& g) {
  return is_connected(g) && block_decomposition(g).cut_vertices.empty();
}

std::optional<std::vector<Vertex>> shortest_path(const Graph& g, Vertex from, Vertex to, VertexSet allowed) {
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -1);
  VertexSet seen = VertexSet::single(from);
  std::vector<Vertex> queue{from};
  for (std::size_t head = 0; head < queue.size() && !seen.contains(to); ++head) {
    for (Vertex w : (g.neighbors(queue[head]) & allowed) - seen) {
      seen.insert(w);
      parent[w] = queue[head];
      queue.push_back(w);
    }
  }
  if (!seen.contains(to)) return std::nullopt;
  std::vector<Vertex> path;
  for (Vertex v = to; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

VertexSet ball2_within(const Graph& g, VertexSet within, Vertex v) {
  const VertexSet near = g.neighbors(v) & within;
  VertexSet reach = near;
  for (Vertex w : near) reach |= g.neighbors(w);
  return (reach & within) - VertexSet::single(v);
}

Graph square(const Graph& g) {
  std::vector<VertexSet> rows(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) rows[v] = ball2_within(g, g.vertices(), v);
  return Graph::from_rows(std::move(rows));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int shift = a.order();
  std::vector<Edge> edges = a.edges();
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph::from_edges(a.order() + b.order(), edges);
}

Graph complement(const Graph& g) {
  std::vector<VertexSet> rows(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) rows[v] = g.vertices() - g.closed_neighbors(v);
  return Graph::from_rows(std::move(rows));
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw GraphError("relabel: permutation size mismatch");
  VertexSet image;
  for (Vertex v : perm) {
    if (v < 0 || v >= g.order() || image.contains(v)) throw GraphError("relabel: not a permutation");
    image.insert(v);
  }
  std::vector<VertexSet> rows(perm.size());
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w : g.neighbors(v)) rows[perm[v]].insert(perm[w]);
  }
  return Graph::from_rows(std::move(rows));
}

}  // namespace sperfect
