#pragma once

#include "vstab/graph.hpp"

#include <optional>
#include <vector>

namespace vstab {

// Proper edge coloring witness: colors[i] is the color of g.edges()[i],
// each in 0..k-1. A coloring need not use all k colors.
struct EdgeColoring {
  int k = 0;
  std::vector<int> colors;
};

// Complete backtracking decision for "does g admit a proper k-edge-coloring",
// returning a witness on success. A nullopt answer is a proof of
// infeasibility. Edges are processed in descending endpoint-degree-sum order
// and a new color index may be introduced only after all smaller indices
// appear, which prunes color permutations without losing completeness.
// Throws std::invalid_argument for k < 0.
std::optional<EdgeColoring> edge_colorable(const Graph& g, int k);

// 0 for edgeless graphs; otherwise max_degree if the backtracker succeeds
// there, else max_degree + 1 (feasibility at max_degree + 1 is guaranteed,
// so that side is never searched). The masked overload evaluates the
// subgraph induced on `alive`. Results are memoized keyed on the relabeled
// edge set with isolated vertices dropped.
int chromatic_index(const Graph& g);
int chromatic_index(const Graph& g, VertexMask alive);

// class(g) = chromatic_index - max_degree + 1; edgeless graphs are class 1
// by convention so the label stays total.
enum class GraphClass : int {
  kClassOne = 1,
  kClassTwo = 2,
};

GraphClass graph_class(const Graph& g);
int class_value(const Graph& g);

// Minimum color-class size over all proper colorings with chromatic_index(g)
// colors. Computed by enumerating matchings M by increasing size and testing
// chromatic_index(g - M) <= chromatic_index(g) - 1: a color class is exactly
// such a matching, and any such M extends to a full coloring. Throws
// std::invalid_argument on edgeless graphs.
int t_star(const Graph& g);

// True iff c assigns every edge of g a color in 0..k-1 and edges sharing an
// endpoint get distinct colors. Malformed input yields false, never a throw.
bool verify_coloring(const Graph& g, const EdgeColoring& c);

}  // namespace vstab
