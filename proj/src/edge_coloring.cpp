#include "vstab/edge_coloring.hpp"

#include "vstab/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace vstab {

namespace {

// Any simple graph here has chromatic index <= kMaxVertices, so clamping k
// to that keeps per-vertex used-color sets in one machine word without
// changing feasibility.
int effective_colors(int k) { return std::min(k, kMaxVertices); }

struct OrderedEdge {
  int u = 0;
  int v = 0;
  int input_index = 0;
};

// Core backtracker over an explicit edge list on vertices 0..n-1. When out
// is non-null it receives one color per input edge, indexed as given.
bool colorable(int n, const std::vector<Edge>& edges, int k,
               std::vector<int>* out) {
  int m = static_cast<int>(edges.size());
  if (m == 0) {
    if (out) out->clear();
    return true;
  }
  k = effective_colors(k);
  if (k <= 0) return false;

  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges) {
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  for (int v = 0; v < n; ++v) {
    if (deg[static_cast<std::size_t>(v)] > k) return false;
  }

  // Hardest edges first: descending endpoint degree sum, input order as the
  // deterministic tie-break.
  std::vector<OrderedEdge> order(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    order[static_cast<std::size_t>(i)] = {edges[static_cast<std::size_t>(i)].u,
                                          edges[static_cast<std::size_t>(i)].v,
                                          i};
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](const OrderedEdge& a, const OrderedEdge& b) {
                     int da = deg[static_cast<std::size_t>(a.u)] +
                              deg[static_cast<std::size_t>(a.v)];
                     int db = deg[static_cast<std::size_t>(b.u)] +
                              deg[static_cast<std::size_t>(b.v)];
                     return da > db;
                   });

  std::vector<std::uint64_t> used(static_cast<std::size_t>(n), 0);
  std::vector<int> color(static_cast<std::size_t>(m), -1);

  // Depth-first over edge positions; introduced counts distinct colors used
  // so far, so position idx may try colors 0..min(k, introduced+1)-1.
  std::vector<int> introduced_at(static_cast<std::size_t>(m) + 1, 0);
  int idx = 0;
  int col = 0;
  while (true) {
    if (idx == m) {
      if (out) {
        out->assign(static_cast<std::size_t>(m), 0);
        for (int i = 0; i < m; ++i) {
          (*out)[static_cast<std::size_t>(
              order[static_cast<std::size_t>(i)].input_index)] =
              color[static_cast<std::size_t>(i)];
        }
      }
      return true;
    }
    const OrderedEdge& e = order[static_cast<std::size_t>(idx)];
    std::uint64_t busy = used[static_cast<std::size_t>(e.u)] |
                         used[static_cast<std::size_t>(e.v)];
    int limit =
        std::min(k, introduced_at[static_cast<std::size_t>(idx)] + 1);
    int chosen = -1;
    for (; col < limit; ++col) {
      if (!((busy >> col) & 1)) {
        chosen = col;
        break;
      }
    }
    if (chosen >= 0) {
      std::uint64_t cbit = std::uint64_t{1} << chosen;
      used[static_cast<std::size_t>(e.u)] |= cbit;
      used[static_cast<std::size_t>(e.v)] |= cbit;
      color[static_cast<std::size_t>(idx)] = chosen;
      introduced_at[static_cast<std::size_t>(idx) + 1] =
          std::max(introduced_at[static_cast<std::size_t>(idx)], chosen + 1);
      ++idx;
      col = 0;
    } else {
      // Exhausted this position; undo the previous assignment and advance
      // its color.
      --idx;
      if (idx < 0) return false;
      int prev = color[static_cast<std::size_t>(idx)];
      const OrderedEdge& pe = order[static_cast<std::size_t>(idx)];
      std::uint64_t pbit = std::uint64_t{1} << prev;
      used[static_cast<std::size_t>(pe.u)] &= ~pbit;
      used[static_cast<std::size_t>(pe.v)] &= ~pbit;
      col = prev + 1;
    }
  }
}

int max_edge_degree(int n, const std::vector<Edge>& edges) {
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  int best = 0;
  for (const Edge& e : edges) {
    best = std::max(best, ++deg[static_cast<std::size_t>(e.u)]);
    best = std::max(best, ++deg[static_cast<std::size_t>(e.v)]);
  }
  return best;
}

// Relabels the edge set over its non-isolated vertices (isolated vertices
// never affect the chromatic index) and packs the upper triangle into one
// word when it fits: pair (a,b), a < b, at bit b*(b-1)/2 + a. Returns
// nullopt when the support is too large to pack.
std::optional<std::uint64_t> canonical_key(const std::vector<Edge>& edges) {
  VertexMask support = 0;
  for (const Edge& e : edges) {
    support |= VertexMask{1} << e.u;
    support |= VertexMask{1} << e.v;
  }
  int na = std::popcount(support);
  if (na > 11) return std::nullopt;  // C(12,2) = 66 bits would overflow
  int rank[kMaxVertices];
  int next = 0;
  for (VertexMask rest = support; rest != 0; rest &= rest - 1) {
    rank[std::countr_zero(rest)] = next++;
  }
  std::uint64_t bits = 0;
  for (const Edge& e : edges) {
    int a = rank[e.u];
    int b = rank[e.v];
    if (a > b) std::swap(a, b);
    bits |= std::uint64_t{1} << (b * (b - 1) / 2 + a);
  }
  return (std::uint64_t{static_cast<std::uint64_t>(na)} << 58) | bits;
}

// Chromatic index of an explicit edge list. Memoized: corpus sweeps evaluate
// the same induced edge sets many times across different hosts.
int chromatic_index_of_edges(int n, const std::vector<Edge>& edges) {
  if (edges.empty()) return 0;
  int delta = max_edge_degree(n, edges);
  if (delta == 1) return 1;

  thread_local std::unordered_map<std::uint64_t, int> memo;
  std::optional<std::uint64_t> key = canonical_key(edges);
  if (key) {
    auto it = memo.find(*key);
    if (it != memo.end()) return it->second;
  }

  int result;
  VertexMask support = 0;
  for (const Edge& e : edges) {
    support |= VertexMask{1} << e.u;
    support |= VertexMask{1} << e.v;
  }
  int na = std::popcount(support);
  // Overfull on the isolated-free support: odd order with more edges than
  // delta disjoint matchings can hold forces class 2, skipping the search.
  bool overfull =
      (na % 2 == 1) &&
      2 * static_cast<int>(edges.size()) > delta * (na - 1);
  if (overfull) {
    result = delta + 1;
  } else {
    result = colorable(n, edges, delta, nullptr) ? delta : delta + 1;
  }
  if (key) memo.emplace(*key, result);
  return result;
}

std::vector<Edge> surviving_edges(const Graph& g, VertexMask alive) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if ((alive >> e.u & 1) && (alive >> e.v & 1)) edges.push_back(e);
  }
  return edges;
}

}  // namespace

std::optional<EdgeColoring> edge_colorable(const Graph& g, int k) {
  if (k < 0) {
    throw std::invalid_argument("color count must be nonnegative");
  }
  EdgeColoring witness;
  witness.k = k;
  if (!colorable(g.vertex_count(), g.edges(), k, &witness.colors)) {
    return std::nullopt;
  }
  return witness;
}

int chromatic_index(const Graph& g) {
  return chromatic_index_of_edges(g.vertex_count(), g.edges());
}

int chromatic_index(const Graph& g, VertexMask alive) {
  return chromatic_index_of_edges(g.vertex_count(), surviving_edges(g, alive));
}

GraphClass graph_class(const Graph& g) {
  return class_value(g) == 1 ? GraphClass::kClassOne : GraphClass::kClassTwo;
}

int class_value(const Graph& g) {
  if (g.edge_count() == 0) return 1;
  return chromatic_index(g) == max_degree(g) ? 1 : 2;
}

int t_star(const Graph& g) {
  int m = g.edge_count();
  if (m == 0) {
    throw std::invalid_argument(
        "minimum color-class size needs at least one edge");
  }
  int chi = chromatic_index(g);
  int cap = m / chi;
  for (int size = 1; size <= cap; ++size) {
    int found = 0;
    for_each_combination(m, size, [&](std::span<const int> picked) {
      VertexMask touched = 0;
      for (int i : picked) {
        const Edge& e = g.edges()[static_cast<std::size_t>(i)];
        VertexMask ends = (VertexMask{1} << e.u) | (VertexMask{1} << e.v);
        if (touched & ends) return false;  // not a matching
        touched |= ends;
      }
      std::vector<Edge> rest;
      rest.reserve(static_cast<std::size_t>(m - size));
      std::size_t next = 0;
      for (int i = 0; i < m; ++i) {
        if (next < picked.size() && picked[next] == i) {
          ++next;
          continue;
        }
        rest.push_back(g.edges()[static_cast<std::size_t>(i)]);
      }
      if (chromatic_index_of_edges(g.vertex_count(), rest) <= chi - 1) {
        found = 1;
        return true;
      }
      return false;
    });
    if (found) return size;
  }
  // Unreachable: some color class of a chi-coloring has <= m/chi edges.
  throw std::logic_error("minimum color-class search exhausted its bound");
}

bool verify_coloring(const Graph& g, const EdgeColoring& c) {
  int m = g.edge_count();
  if (c.k < 0) return false;
  if (static_cast<int>(c.colors.size()) != m) return false;
  for (int color : c.colors) {
    if (color < 0 || color >= c.k) return false;
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const Edge& a = g.edges()[static_cast<std::size_t>(i)];
      const Edge& b = g.edges()[static_cast<std::size_t>(j)];
      bool adjacent = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
      if (adjacent && c.colors[static_cast<std::size_t>(i)] ==
                          c.colors[static_cast<std::size_t>(j)]) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace vstab
