#pragma once

#include "vstab/families.hpp"
#include "vstab/graph.hpp"
#include "vstab/invariants.hpp"

#include <optional>
#include <vector>

namespace vstab {

enum class RemovalKind {
  kVertices,
  kEdges,
};

// Outcome of a stability search: the minimum number of removals after which
// the invariant changes or no edges remain, plus the witness realizing it.
struct StabilityResult {
  int value = 0;
  RemovalKind kind = RemovalKind::kVertices;
  std::vector<int> removed_vertices;  // sorted; set when kind is kVertices
  std::vector<Edge> removed_edges;    // sorted; set when kind is kEdges
  int rho_before = 0;
  int rho_after = 0;
  // True when the search ended because the remainder lost all edges while
  // the invariant value stayed put; false means rho_after != rho_before.
  bool emptied = false;
  // Every strictly smaller removal set was checked and rejected.
  bool exhaustive_below = true;
};

// Minimum vertex removals leaving a subgraph H with rho(H) != rho(g) or
// E(H) empty. Edgeless inputs return 0 immediately. Subsets are scanned by
// increasing cardinality, lexicographic within a cardinality, so the witness
// is the lexicographically smallest success at the minimal size.
StabilityResult vertex_stability(const Graph& g, const InvariantDescriptor& rho);

// Same contract over edge subsets; removal keeps all vertices.
StabilityResult edge_stability(const Graph& g, const InvariantDescriptor& rho);

struct DominationResult {
  int value = 0;
  std::vector<int> witness;  // sorted
};

// Smallest set whose closed neighborhood covers every target vertex,
// by increasing-size exhaustive search with lexicographic tie-break.
DominationResult dominate_targets(const Graph& g, VertexMask targets);

// dominate_targets applied to the maximum-degree vertices. Throws
// std::invalid_argument on edgeless graphs.
DominationResult domination_of_max_degree(const Graph& g);

// Closed form for the component-count stability number: the minimum
// connectivity over components larger than a single vertex. Throws
// std::invalid_argument on edgeless graphs. The generic engine
// vertex_stability(g, components) is the oracle this is tested against.
int vs_omega(const Graph& g);

// Predicted chromatic-index vertex stability value for the named families,
// exactly as the source formulas state them; nullopt for families with no
// recorded closed form (complete multipartite, paths shorter than 3).
// These predictions are the expected values the verification claims compare
// against engine output; several are refuted at specific small parameters
// and the claims report those instances. Throws on malformed parameters.
std::optional<int> closed_form_vs_chi_prime(const FamilySpec& spec);

}  // namespace vstab
