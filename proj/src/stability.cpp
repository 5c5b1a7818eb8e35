#include "vstab/stability.hpp"

#include "vstab/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace vstab {

namespace {

VertexMask bit(int v) { return VertexMask{1} << v; }

}  // namespace

StabilityResult vertex_stability(const Graph& g,
                                 const InvariantDescriptor& rho) {
  StabilityResult result;
  result.kind = RemovalKind::kVertices;
  result.rho_before = rho.evaluate(g);
  result.rho_after = result.rho_before;
  if (g.edge_count() == 0) {
    result.emptied = true;
    return result;
  }
  int n = g.vertex_count();
  VertexMask full = g.vertex_mask();
  for (int k = 1; k <= n; ++k) {
    bool found = for_each_combination(n, k, [&](std::span<const int> picked) {
      VertexMask removed = 0;
      for (int v : picked) removed |= bit(v);
      VertexMask alive = full & ~removed;
      bool empty = !has_any_edge(g, alive);
      int after = rho.eval_masked(g, alive);
      if (!empty && after == result.rho_before) return false;
      result.value = k;
      result.removed_vertices.assign(picked.begin(), picked.end());
      result.rho_after = after;
      result.emptied = (after == result.rho_before);
      return true;
    });
    if (found) return result;
  }
  // Unreachable: removing every vertex leaves no edges.
  throw std::logic_error("vertex stability search exhausted all subsets");
}

StabilityResult edge_stability(const Graph& g, const InvariantDescriptor& rho) {
  StabilityResult result;
  result.kind = RemovalKind::kEdges;
  result.rho_before = rho.evaluate(g);
  result.rho_after = result.rho_before;
  if (g.edge_count() == 0) {
    result.emptied = true;
    return result;
  }
  int m = g.edge_count();
  for (int k = 1; k <= m; ++k) {
    bool found = for_each_combination(m, k, [&](std::span<const int> picked) {
      std::vector<Edge> removal;
      removal.reserve(picked.size());
      for (int i : picked) {
        removal.push_back(g.edges()[static_cast<std::size_t>(i)]);
      }
      Graph h = delete_edges(g, removal);
      bool empty = h.edge_count() == 0;
      int after = rho.evaluate(h);
      if (!empty && after == result.rho_before) return false;
      result.value = k;
      result.removed_edges = std::move(removal);
      result.rho_after = after;
      result.emptied = (after == result.rho_before);
      return true;
    });
    if (found) return result;
  }
  throw std::logic_error("edge stability search exhausted all subsets");
}

DominationResult dominate_targets(const Graph& g, VertexMask targets) {
  if ((targets & ~g.vertex_mask()) != 0) {
    throw std::invalid_argument("domination targets outside the graph");
  }
  DominationResult result;
  if (targets == 0) return result;
  int n = g.vertex_count();
  for (int k = 1; k <= n; ++k) {
    bool found = for_each_combination(n, k, [&](std::span<const int> picked) {
      VertexMask covered = 0;
      for (int v : picked) covered |= bit(v) | g.neighbors(v);
      if ((targets & ~covered) != 0) return false;
      result.value = k;
      result.witness.assign(picked.begin(), picked.end());
      return true;
    });
    if (found) return result;
  }
  // Unreachable: the whole vertex set covers every target.
  throw std::logic_error("domination search exhausted all subsets");
}

DominationResult domination_of_max_degree(const Graph& g) {
  if (g.edge_count() == 0) {
    throw std::invalid_argument(
        "max-degree domination needs at least one edge");
  }
  int delta = max_degree(g);
  VertexMask targets = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == delta) targets |= bit(v);
  }
  return dominate_targets(g, targets);
}

int vs_omega(const Graph& g) {
  if (g.edge_count() == 0) {
    throw std::invalid_argument(
        "component stability closed form needs at least one edge");
  }
  ComponentList comps = components(g);
  int best = kMaxVertices + 1;
  for (VertexMask comp : comps.members) {
    if (std::popcount(comp) < 2) continue;
    Graph h = delete_vertices(g, g.vertex_mask() & ~comp).graph;
    best = std::min(best, connectivity(h));
  }
  return best;
}

std::optional<int> closed_form_vs_chi_prime(const FamilySpec& spec) {
  // Validates parameters exactly like the generator does.
  (void)generate(spec);
  switch (spec.family) {
    case Family::kPath: {
      int n = spec.params[0];
      if (n < 3) return std::nullopt;
      return (n - 2 + 2) / 3;  // ceil((n-2)/3)
    }
    case Family::kCycle: {
      int n = spec.params[0];
      if (n % 2 == 1) return 1;
      return (n + 2) / 3;  // ceil(n/3)
    }
    case Family::kComplete: {
      int n = spec.params[0];
      if (n < 2) return std::nullopt;
      return n % 2 == 1 ? 1 : 2;
    }
    case Family::kCompleteBipartite: {
      return spec.params[0] == spec.params[1] ? 2 : 1;
    }
    case Family::kCompleteMultipartite:
      return std::nullopt;  // only bounds are recorded for this family
    case Family::kWheel: {
      return spec.params[0] == 3 ? 2 : 1;
    }
    case Family::kGadgetChain:
      return spec.params[0];
    case Family::kCompletePlusApex: {
      int n = spec.params[0];
      int d = spec.params[1];
      if (n % 2 == 1) return 2;
      return d == 0 ? 2 : 1;
    }
  }
  return std::nullopt;
}

}  // namespace vstab
