#pragma once

#include "vstab/graph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vstab {

enum class Family {
  kPath,
  kCycle,
  kComplete,
  kCompleteBipartite,
  kCompleteMultipartite,
  kWheel,
  kGadgetChain,
  kCompletePlusApex,
};

// A named family plus its integer parameters:
//   path n >= 1, cycle n >= 3, complete n >= 1, complete_bipartite m,n >= 1,
//   complete_multipartite part sizes sorted ascending (each >= 1),
//   wheel n >= 3 (rim size), gadget_chain k >= 1,
//   complete_plus_apex n >= 2 with apex degree 0 <= d <= n.
struct FamilySpec {
  Family family = Family::kPath;
  std::vector<int> params;
};

// Throws std::invalid_argument on malformed parameters.
Graph generate(const FamilySpec& spec);

std::string family_name(Family family);
std::optional<Family> family_from_name(std::string_view name);

// Convenience builders used throughout the test and claim corpora; each is
// generate() for the corresponding tag.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int m, int n);
Graph complete_multipartite_graph(const std::vector<int>& parts);

// Rim cycle on 0..n-1 plus hub vertex n, realized as join(cycle(n), K1).
Graph wheel_graph(int n);

// Chain of k pendant triangles: vertices 0..2k-1 form a path, and block i
// (1-based) gets an extra vertex 2k+i-1 adjacent to path vertices 2i-2 and
// 2i-1. 3k vertices, 4k-1 edges; k = 1 gives a triangle.
Graph gadget_chain(int k);

// Complete graph on 0..n-1 plus vertex n adjacent to vertices 0..d-1.
Graph complete_plus_apex(int n, int d);

}  // namespace vstab
