#include "vstab/graph.hpp"

#include "vstab/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>

namespace vstab {

namespace {

VertexMask bit(int v) { return VertexMask{1} << v; }

}  // namespace

VertexMask mask_of(std::span<const int> vertices) {
  VertexMask m = 0;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices) {
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " outside mask range");
    }
    m |= bit(v);
  }
  return m;
}

std::vector<int> mask_vertices(VertexMask mask) {
  std::vector<int> out;
  while (mask != 0) {
    int v = std::countr_zero(mask);
    out.push_back(v);
    mask &= mask - 1;
  }
  return out;
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count " + std::to_string(n) +
                                " outside [0, " +
                                std::to_string(kMaxVertices) + "]");
  }
  adj_.assign(static_cast<std::size_t>(n), 0);
  for (Edge& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + ", " +
                                  std::to_string(e.v) +
                                  ") has an endpoint outside [0, " +
                                  std::to_string(n) + ")");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    }
    if (adj_[static_cast<std::size_t>(e.u)] & bit(e.v)) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) +
                                  ", " + std::to_string(e.v) + ")");
    }
    adj_[static_cast<std::size_t>(e.u)] |= bit(e.v);
    adj_[static_cast<std::size_t>(e.v)] |= bit(e.u);
  }
  std::sort(edges.begin(), edges.end());
  edges_ = std::move(edges);
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  return (adj_[static_cast<std::size_t>(u)] & bit(v)) != 0;
}

VertexMask Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) {
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " outside [0, " + std::to_string(n_) + ")");
  }
  return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const { return std::popcount(neighbors(v)); }

VertexMask Graph::vertex_mask() const {
  return n_ == 64 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
}

Graph make_graph(int n, std::vector<Edge> edges) {
  return Graph(n, std::move(edges));
}

int max_degree(const Graph& g) { return max_degree(g, g.vertex_mask()); }
int min_degree(const Graph& g) { return min_degree(g, g.vertex_mask()); }

int max_degree(const Graph& g, VertexMask alive) {
  int best = 0;
  for (VertexMask rest = alive; rest != 0; rest &= rest - 1) {
    int v = std::countr_zero(rest);
    best = std::max(best, std::popcount(g.neighbors(v) & alive));
  }
  return best;
}

int min_degree(const Graph& g, VertexMask alive) {
  if (alive == 0) return 0;
  int best = kMaxVertices;
  for (VertexMask rest = alive; rest != 0; rest &= rest - 1) {
    int v = std::countr_zero(rest);
    best = std::min(best, std::popcount(g.neighbors(v) & alive));
  }
  return best;
}

int edge_count(const Graph& g, VertexMask alive) {
  int m = 0;
  for (const Edge& e : g.edges()) {
    if ((alive & bit(e.u)) && (alive & bit(e.v))) ++m;
  }
  return m;
}

bool has_any_edge(const Graph& g, VertexMask alive) {
  for (const Edge& e : g.edges()) {
    if ((alive & bit(e.u)) && (alive & bit(e.v))) return true;
  }
  return false;
}

ComponentList components(const Graph& g) {
  ComponentList out;
  VertexMask seen = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (seen & bit(v)) continue;
    VertexMask comp = bit(v);
    VertexMask frontier = comp;
    while (frontier != 0) {
      VertexMask next = 0;
      for (VertexMask rest = frontier; rest != 0; rest &= rest - 1) {
        next |= g.neighbors(std::countr_zero(rest));
      }
      frontier = next & ~comp;
      comp |= frontier;
    }
    seen |= comp;
    out.members.push_back(comp);
  }
  out.count = static_cast<int>(out.members.size());
  return out;
}

int component_count(const Graph& g) {
  return component_count(g, g.vertex_mask());
}

int component_count(const Graph& g, VertexMask alive) {
  int count = 0;
  VertexMask seen = 0;
  VertexMask todo = alive;
  while (todo != 0) {
    int v = std::countr_zero(todo);
    VertexMask comp = bit(v);
    VertexMask frontier = comp;
    while (frontier != 0) {
      VertexMask next = 0;
      for (VertexMask rest = frontier; rest != 0; rest &= rest - 1) {
        next |= g.neighbors(std::countr_zero(rest)) & alive;
      }
      frontier = next & ~comp;
      comp |= frontier;
    }
    seen |= comp;
    todo = alive & ~seen;
    ++count;
  }
  return count;
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

bool is_connected(const Graph& g, VertexMask alive) {
  if (alive == 0) return false;
  return component_count(g, alive) == 1;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (color[static_cast<std::size_t>(s)] != -1) continue;
    color[static_cast<std::size_t>(s)] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (VertexMask rest = g.neighbors(v); rest != 0; rest &= rest - 1) {
        int w = std::countr_zero(rest);
        if (color[static_cast<std::size_t>(w)] == -1) {
          color[static_cast<std::size_t>(w)] =
              1 - color[static_cast<std::size_t>(v)];
          q.push(w);
        } else if (color[static_cast<std::size_t>(w)] ==
                   color[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_overfull(const Graph& g) {
  int n = g.vertex_count();
  if (n % 2 == 0) return false;
  return 2 * g.edge_count() > max_degree(g) * (n - 1);
}

int connectivity(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) {
    throw std::invalid_argument("connectivity of the empty graph is undefined");
  }
  if (!is_connected(g)) return 0;
  if (2 * g.edge_count() == n * (n - 1)) return n - 1;
  // The graph is connected and not complete, so some cut of size < n - 1
  // exists. Scan cut candidates by increasing size, lexicographic within a
  // size, and return the first size whose removal disconnects the remainder.
  VertexMask full = g.vertex_mask();
  for (int k = 1; k < n - 1; ++k) {
    int found = 0;
    for_each_combination(n, k, [&](std::span<const int> cut_vertices) {
      VertexMask cut = 0;
      for (int v : cut_vertices) cut |= bit(v);
      if (!is_connected(g, full & ~cut)) {
        found = 1;
        return true;
      }
      return false;
    });
    if (found) return k;
  }
  return n - 1;
}

InducedSubgraph delete_vertices(const Graph& g, VertexMask removed) {
  if ((removed & ~g.vertex_mask()) != 0) {
    throw std::invalid_argument("removal set contains vertices outside the graph");
  }
  InducedSubgraph out;
  out.old_to_new.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  int next = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!(removed & bit(v))) out.old_to_new[static_cast<std::size_t>(v)] = next++;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    int nu = out.old_to_new[static_cast<std::size_t>(e.u)];
    int nv = out.old_to_new[static_cast<std::size_t>(e.v)];
    if (nu != -1 && nv != -1) edges.push_back({nu, nv});
  }
  out.graph = Graph(next, std::move(edges));
  return out;
}

Graph delete_edges(const Graph& g, std::span<const Edge> removed) {
  std::vector<Edge> gone;
  gone.reserve(removed.size());
  for (Edge e : removed) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!g.has_edge(e.u, e.v)) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + ", " +
                                  std::to_string(e.v) + ") is not in the graph");
    }
    gone.push_back(e);
  }
  std::sort(gone.begin(), gone.end());
  if (std::adjacent_find(gone.begin(), gone.end()) != gone.end()) {
    throw std::invalid_argument("edge listed twice in the removal set");
  }
  std::vector<Edge> kept;
  kept.reserve(g.edges().size() - gone.size());
  std::set_difference(g.edges().begin(), g.edges().end(), gone.begin(),
                      gone.end(), std::back_inserter(kept));
  return Graph(g.vertex_count(), std::move(kept));
}

namespace {

void require_capacity(int total, const char* op) {
  if (total > kMaxVertices) {
    throw std::invalid_argument(std::string(op) + " would produce " +
                                std::to_string(total) + " vertices, over the " +
                                std::to_string(kMaxVertices) + " cap");
  }
}

}  // namespace

Graph disjoint_union(const Graph& g, const Graph& h) {
  int n1 = g.vertex_count();
  int n2 = h.vertex_count();
  require_capacity(n1 + n2, "disjoint union");
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : h.edges()) edges.push_back({e.u + n1, e.v + n1});
  return Graph(n1 + n2, std::move(edges));
}

Graph join(const Graph& g, const Graph& h) {
  int n1 = g.vertex_count();
  int n2 = h.vertex_count();
  require_capacity(n1 + n2, "join");
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : h.edges()) edges.push_back({e.u + n1, e.v + n1});
  for (int u = 0; u < n1; ++u) {
    for (int v = 0; v < n2; ++v) edges.push_back({u, n1 + v});
  }
  return Graph(n1 + n2, std::move(edges));
}

Graph corona(const Graph& g, const Graph& h) {
  int n1 = g.vertex_count();
  int n2 = h.vertex_count();
  require_capacity(n1 + n1 * n2, "corona");
  std::vector<Edge> edges = g.edges();
  for (int i = 0; i < n1; ++i) {
    int base = n1 + i * n2;
    for (const Edge& e : h.edges()) edges.push_back({e.u + base, e.v + base});
    for (int v = 0; v < n2; ++v) edges.push_back({i, base + v});
  }
  return Graph(n1 + n1 * n2, std::move(edges));
}

Graph complement(const Graph& g) {
  int n = g.vertex_count();
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace vstab
