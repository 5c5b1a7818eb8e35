#pragma once

#include "vstab/graph.hpp"

#include <functional>
#include <span>
#include <vector>

namespace vstab {

// Visits every k-subset of {0..n-1} in lexicographic order of the sorted
// index tuple: (0,1,2), (0,1,3), ..., (n-3,n-2,n-1). The visitor receives the
// current tuple and returns true to stop early. Returns true if it stopped.
// k = 0 visits the empty tuple once; k > n visits nothing.
template <typename Visitor>
bool for_each_combination(int n, int k, Visitor&& visit) {
  if (k < 0 || k > n) return false;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (visit(std::span<const int>(pick))) return true;
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      pick[static_cast<std::size_t>(j)] =
          pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

// All n*(n-1)/2 vertex pairs in column-major upper-triangle order: (0,1),
// (0,2), (1,2), (0,3), (1,3), (2,3), ... This is the bit order of the graph6
// encoding; pair (a,b) with a < b sits at index b*(b-1)/2 + a. Bit k of a
// labeled-graph mask refers to all_pairs(n)[k].
std::vector<Edge> all_pairs(int n);

// Streams every labeled graph on exactly n vertices, in increasing order of
// the edge-subset mask over all_pairs(n). Caps at n = 6 (32768 graphs);
// larger n throws std::invalid_argument.
void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn);

inline constexpr int kMaxEnumerationVertices = 6;

}  // namespace vstab
