#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace vstab {

// Hard cap so vertex subsets fit in one machine word.
inline constexpr int kMaxVertices = 64;

// Unordered endpoint pair, always stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Vertex subset encoded as a bitmask, vertex i at bit i.
using VertexMask = std::uint64_t;

VertexMask mask_of(std::span<const int> vertices);
std::vector<int> mask_vertices(VertexMask mask);

// Simple undirected graph on vertices 0..n-1, no loops, no multi-edges.
// Construction validates and normalizes; instances are immutable after that,
// so equality and hashing over (n, edges) are well defined.
class Graph {
 public:
  Graph() = default;

  // Throws std::invalid_argument on out-of-range n, endpoints outside
  // [0, n), loops, or duplicate edges (in either orientation).
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Edges sorted lexicographically by (u, v); index into this vector is the
  // canonical edge id used by colorings.
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(int u, int v) const;
  VertexMask neighbors(int v) const;
  int degree(int v) const;

  // Mask with bits 0..n-1 set.
  VertexMask vertex_mask() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<VertexMask> adj_;
  std::vector<Edge> edges_;
};

Graph make_graph(int n, std::vector<Edge> edges);

// Degree extremes. The masked overloads evaluate the subgraph induced on the
// vertices of `alive` without building it; an empty vertex set yields 0.
int max_degree(const Graph& g);
int min_degree(const Graph& g);
int max_degree(const Graph& g, VertexMask alive);
int min_degree(const Graph& g, VertexMask alive);

int edge_count(const Graph& g, VertexMask alive);
bool has_any_edge(const Graph& g, VertexMask alive);

struct ComponentList {
  int count = 0;
  std::vector<VertexMask> members;  // one mask per component, sorted by lowest vertex
};

ComponentList components(const Graph& g);
int component_count(const Graph& g);
int component_count(const Graph& g, VertexMask alive);

bool is_connected(const Graph& g);
bool is_connected(const Graph& g, VertexMask alive);
bool is_bipartite(const Graph& g);

// n odd and 2m > max_degree * (n - 1); such graphs cannot be edge-colored
// with max_degree colors.
bool is_overfull(const Graph& g);

// Vertex connectivity: the fewest vertex deletions that disconnect the graph
// or leave a single vertex. Complete graphs give n - 1, disconnected graphs 0.
// Throws std::invalid_argument on the empty graph.
int connectivity(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  // old_to_new[v] is the new label of surviving vertex v, or -1 if deleted.
  std::vector<int> old_to_new;
};

InducedSubgraph delete_vertices(const Graph& g, VertexMask removed);

// Removes the given edges, keeping every vertex. Throws if an edge is absent.
Graph delete_edges(const Graph& g, std::span<const Edge> removed);

// Binary operators. Vertices of h are relabeled by +n(g) in the union and
// join; corona(g, h) keeps g on 0..n(g)-1 and places the i-th copy of h at
// n(g) + i*n(h). All throw std::invalid_argument past the vertex cap.
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);
Graph corona(const Graph& g, const Graph& h);
Graph complement(const Graph& g);

}  // namespace vstab
