#include "vstab/invariants.hpp"

#include "vstab/edge_coloring.hpp"

#include <stdexcept>
#include <utility>

namespace vstab {

namespace {

int masked_class_value(const Graph& g, VertexMask alive) {
  if (!has_any_edge(g, alive)) return 1;
  return chromatic_index(g, alive) == max_degree(g, alive) ? 1 : 2;
}

std::vector<InvariantDescriptor> build_registry() {
  std::vector<InvariantDescriptor> regs;
  regs.push_back({"chi_prime", Monotonicity::kIncreasing, Composition::kMaxing,
                  [](const Graph& g, VertexMask alive) {
                    return chromatic_index(g, alive);
                  }});
  regs.push_back({"max_degree", Monotonicity::kIncreasing, Composition::kMaxing,
                  [](const Graph& g, VertexMask alive) {
                    return max_degree(g, alive);
                  }});
  regs.push_back({"min_degree", Monotonicity::kNone, Composition::kNone,
                  [](const Graph& g, VertexMask alive) {
                    return min_degree(g, alive);
                  }});
  regs.push_back({"components", Monotonicity::kNone, Composition::kAdditive,
                  [](const Graph& g, VertexMask alive) {
                    return component_count(g, alive);
                  }});
  regs.push_back({"class", Monotonicity::kNone, Composition::kNone,
                  masked_class_value});
  return regs;
}

}  // namespace

const std::vector<InvariantDescriptor>& invariant_registry() {
  static const std::vector<InvariantDescriptor> registry = build_registry();
  return registry;
}

const InvariantDescriptor& invariant(std::string_view name) {
  for (const InvariantDescriptor& desc : invariant_registry()) {
    if (desc.name == name) return desc;
  }
  throw std::invalid_argument("unknown invariant: " + std::string(name));
}

InvariantDescriptor custom_invariant(std::string name,
                                     std::function<int(const Graph&)> fn) {
  InvariantDescriptor desc;
  desc.name = std::move(name);
  desc.eval_masked = [fn = std::move(fn)](const Graph& g, VertexMask alive) {
    return fn(delete_vertices(g, g.vertex_mask() & ~alive).graph);
  };
  return desc;
}

}  // namespace vstab
