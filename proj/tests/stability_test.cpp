#include "doctest.h"

#include "vstab/edge_coloring.hpp"
#include "vstab/enumerate.hpp"
#include "vstab/families.hpp"
#include "vstab/invariants.hpp"
#include "vstab/stability.hpp"

#include <stdexcept>
#include <vector>

using namespace vstab;

namespace {

StabilityResult vs(const Graph& g, const char* rho) {
  return vertex_stability(g, invariant(rho));
}

StabilityResult es(const Graph& g, const char* rho) {
  return edge_stability(g, invariant(rho));
}

}  // namespace

TEST_CASE("chromatic-index vertex stability reference values") {
  StabilityResult c5 = vs(cycle_graph(5), "chi_prime");
  CHECK(c5.value == 1);
  CHECK(c5.removed_vertices == std::vector<int>{0});
  CHECK(c5.rho_before == 3);
  CHECK(c5.rho_after == 2);
  CHECK_FALSE(c5.emptied);
  CHECK(c5.exhaustive_below);

  StabilityResult k4 = vs(complete_graph(4), "chi_prime");
  CHECK(k4.value == 2);
  CHECK(k4.removed_vertices == std::vector<int>{0, 1});

  StabilityResult p7 = vs(path_graph(7), "chi_prime");
  CHECK(p7.value == 2);
  CHECK(p7.removed_vertices == std::vector<int>{1, 4});

  StabilityResult p4 = vs(path_graph(4), "chi_prime");
  CHECK(p4.value == 1);
  CHECK(p4.removed_vertices == std::vector<int>{1});

  CHECK(vs(path_graph(8), "chi_prime").value == 2);

  StabilityResult k33 = vs(complete_bipartite_graph(3, 3), "chi_prime");
  CHECK(k33.value == 2);
  CHECK(k33.removed_vertices == std::vector<int>{0, 3});

  CHECK(vs(wheel_graph(4), "chi_prime").value == 1);
  CHECK(vs(complete_graph(2), "chi_prime").value == 1);
}

TEST_CASE("chromatic-index edge stability reference values") {
  StabilityResult c5 = es(cycle_graph(5), "chi_prime");
  CHECK(c5.value == 1);
  CHECK(c5.removed_edges == std::vector<Edge>{{0, 1}});
  CHECK(c5.kind == RemovalKind::kEdges);

  StabilityResult p4 = es(path_graph(4), "chi_prime");
  CHECK(p4.value == 1);
  CHECK(p4.removed_edges == std::vector<Edge>{{1, 2}});

  StabilityResult k4 = es(complete_graph(4), "chi_prime");
  CHECK(k4.value == 2);
  CHECK(k4.removed_edges == std::vector<Edge>{{0, 1}, {2, 3}});

  CHECK(es(complete_bipartite_graph(3, 3), "chi_prime").value == 3);
}

TEST_CASE("edgeless graphs are stable at zero") {
  StabilityResult r = vs(Graph(3, {}), "chi_prime");
  CHECK(r.value == 0);
  CHECK(r.emptied);
  CHECK(r.removed_vertices.empty());
  CHECK(es(Graph(3, {}), "chi_prime").value == 0);
}

TEST_CASE("emptying without an invariant change counts as success") {
  StabilityResult r = vs(complete_graph(2), "components");
  CHECK(r.value == 1);
  CHECK(r.emptied);
  CHECK(r.rho_before == 1);
  CHECK(r.rho_after == 1);
}

TEST_CASE("witness is the lexicographically smallest minimal set") {
  Graph p7 = path_graph(7);
  const InvariantDescriptor& chi = invariant("chi_prime");
  int before = chi.evaluate(p7);
  bool any_single = for_each_combination(7, 1, [&](std::span<const int> s) {
    VertexMask alive = p7.vertex_mask() & ~mask_of(s);
    return !has_any_edge(p7, alive) || chi.eval_masked(p7, alive) != before;
  });
  CHECK_FALSE(any_single);
  std::vector<int> first_success;
  for_each_combination(7, 2, [&](std::span<const int> s) {
    VertexMask alive = p7.vertex_mask() & ~mask_of(s);
    if (!has_any_edge(p7, alive) || chi.eval_masked(p7, alive) != before) {
      first_success.assign(s.begin(), s.end());
      return true;
    }
    return false;
  });
  CHECK(first_success == vs(p7, "chi_prime").removed_vertices);
}

TEST_CASE("other invariants drive the same engine") {
  CHECK(vs(complete_graph(3), "min_degree").value == 1);
  StabilityResult c5 = vs(cycle_graph(5), "components");
  CHECK(c5.value == 2);
  CHECK(c5.removed_vertices == std::vector<int>{0, 2});

  Graph k2_k3 = disjoint_union(complete_graph(2), complete_graph(3));
  StabilityResult r = vs(k2_k3, "components");
  CHECK(r.value == 2);
  CHECK(r.removed_vertices == std::vector<int>{0, 1});

  Graph k2_k2 = disjoint_union(complete_graph(2), complete_graph(2));
  CHECK(vs(k2_k2, "components").value == 2);

  Graph k1_k4 = disjoint_union(complete_graph(1), complete_graph(4));
  StabilityResult iso = vs(k1_k4, "components");
  CHECK(iso.value == 1);
  CHECK(iso.removed_vertices == std::vector<int>{0});
  CHECK(vs_omega(k1_k4) == 3);
}

TEST_CASE("domination of targeted vertices") {
  CHECK(dominate_targets(complete_graph(2), 0b11).value == 1);
  CHECK(dominate_targets(complete_graph(2), 0).value == 0);

  DominationResult c6 = domination_of_max_degree(cycle_graph(6));
  CHECK(c6.value == 2);
  CHECK(c6.witness == std::vector<int>{0, 3});

  DominationResult p8 = domination_of_max_degree(path_graph(8));
  CHECK(p8.value == 2);
  CHECK(p8.witness == std::vector<int>{2, 5});
  StabilityResult p8_delta = vs(path_graph(8), "max_degree");
  CHECK(p8_delta.value == 2);
  CHECK(p8_delta.removed_vertices == std::vector<int>{2, 5});

  CHECK_THROWS_AS(domination_of_max_degree(Graph(3, {})),
                  std::invalid_argument);
}

TEST_CASE("component-count closed form on edge-covered graphs") {
  CHECK(vs_omega(cycle_graph(5)) == 2);
  CHECK(vs_omega(disjoint_union(complete_graph(2), complete_graph(3))) == 1);
  CHECK(vs_omega(complete_graph(4)) == 3);
  CHECK_THROWS_AS(vs_omega(Graph(2, {})), std::invalid_argument);
}

TEST_CASE("invariant registry metadata and lookup") {
  CHECK(invariant("chi_prime").monotone == Monotonicity::kIncreasing);
  CHECK(invariant("chi_prime").composition == Composition::kMaxing);
  CHECK(invariant("max_degree").monotone == Monotonicity::kIncreasing);
  CHECK(invariant("components").composition == Composition::kAdditive);
  CHECK(invariant("class").monotone == Monotonicity::kNone);
  CHECK(invariant("min_degree").composition == Composition::kNone);
  CHECK(invariant_registry().size() == 5);
  CHECK_THROWS_AS(invariant("girth"), std::invalid_argument);

  CHECK(invariant("class").evaluate(complete_graph(3)) == 2);
  CHECK(invariant("components").evaluate(Graph(4, {})) == 4);
}

TEST_CASE("custom invariants plug into the engine") {
  InvariantDescriptor edge_total = custom_invariant(
      "edge_total", [](const Graph& g) { return g.edge_count(); });
  StabilityResult r = vertex_stability(cycle_graph(5), edge_total);
  CHECK(r.value == 1);
  CHECK(r.removed_vertices == std::vector<int>{0});
  CHECK(r.rho_before == 5);
  CHECK(r.rho_after == 3);
}

TEST_CASE("closed-form predictions for the recorded families") {
  CHECK(closed_form_vs_chi_prime({Family::kPath, {7}}) == 2);
  CHECK(closed_form_vs_chi_prime({Family::kPath, {3}}) == 1);
  CHECK_FALSE(closed_form_vs_chi_prime({Family::kPath, {2}}).has_value());
  CHECK(closed_form_vs_chi_prime({Family::kCycle, {5}}) == 1);
  CHECK(closed_form_vs_chi_prime({Family::kCycle, {6}}) == 2);
  CHECK(closed_form_vs_chi_prime({Family::kComplete, {2}}) == 2);
  CHECK(closed_form_vs_chi_prime({Family::kComplete, {7}}) == 1);
  CHECK_FALSE(closed_form_vs_chi_prime({Family::kComplete, {1}}).has_value());
  CHECK(closed_form_vs_chi_prime({Family::kCompleteBipartite, {1, 1}}) == 2);
  CHECK(closed_form_vs_chi_prime({Family::kCompleteBipartite, {2, 3}}) == 1);
  CHECK_FALSE(closed_form_vs_chi_prime({Family::kCompleteMultipartite,
                                        {1, 1, 2}})
                  .has_value());
  CHECK(closed_form_vs_chi_prime({Family::kWheel, {3}}) == 2);
  CHECK(closed_form_vs_chi_prime({Family::kWheel, {5}}) == 1);
  CHECK(closed_form_vs_chi_prime({Family::kGadgetChain, {2}}) == 2);
  CHECK(closed_form_vs_chi_prime({Family::kCompletePlusApex, {5, 2}}) == 2);
  CHECK(closed_form_vs_chi_prime({Family::kCompletePlusApex, {4, 3}}) == 1);
  CHECK(closed_form_vs_chi_prime({Family::kCompletePlusApex, {4, 0}}) == 2);
  CHECK_THROWS_AS(closed_form_vs_chi_prime({Family::kCycle, {2}}),
                  std::invalid_argument);
}

TEST_CASE("stability chain vs <= es <= floor(m/chi) on small corpora") {
  for (int n = 1; n <= 4; ++n) {
    for_each_labeled_graph(n, [&](const Graph& g) {
      if (g.edge_count() == 0) return;
      int v = vs(g, "chi_prime").value;
      int e = es(g, "chi_prime").value;
      CHECK(v <= e);
      CHECK(e <= g.edge_count() / chromatic_index(g));
      CHECK(v >= 1);
    });
  }
}
