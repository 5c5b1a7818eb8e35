#pragma once

#include "vstab/graph.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace vstab {

// How the invariant behaves under taking subgraphs: increasing means a
// subgraph never exceeds its host.
enum class Monotonicity {
  kIncreasing,
  kDecreasing,
  kNone,
};

// How the invariant composes over a disjoint union of two graphs.
enum class Composition {
  kMaxing,
  kAdditive,
  kNone,
};

// A named integer graph invariant. eval_masked computes the value of the
// subgraph induced on `alive` without relabeling, which lets the stability
// engines search subsets with no graph rebuilding. The metadata is honest:
// it is spot-checked against behavior on small corpora by the test suite.
struct InvariantDescriptor {
  std::string name;
  Monotonicity monotone = Monotonicity::kNone;
  Composition composition = Composition::kNone;
  std::function<int(const Graph&, VertexMask)> eval_masked;

  int evaluate(const Graph& g) const {
    return eval_masked(g, g.vertex_mask());
  }
};

// Built-in descriptors: chi_prime (increasing, maxing), max_degree
// (increasing, maxing), min_degree (none, none), components (none,
// additive), class (none, none).
const std::vector<InvariantDescriptor>& invariant_registry();

// Lookup by name; throws std::invalid_argument for unknown names.
const InvariantDescriptor& invariant(std::string_view name);

// Wraps a whole-graph evaluator as a descriptor (metadata defaults to none);
// the masked form is derived by materializing the induced subgraph.
InvariantDescriptor custom_invariant(std::string name,
                                     std::function<int(const Graph&)> fn);

}  // namespace vstab
