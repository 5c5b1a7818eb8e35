#include "vstab/enumerate.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vstab {

std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2);
  for (int b = 1; b < n; ++b) {
    for (int a = 0; a < b; ++a) pairs.push_back({a, b});
  }
  return pairs;
}

void for_each_labeled_graph(int n,
                            const std::function<void(const Graph&)>& fn) {
  if (n < 0 || n > kMaxEnumerationVertices) {
    throw std::invalid_argument(
        "labeled enumeration capped at " +
        std::to_string(kMaxEnumerationVertices) + " vertices, got " +
        std::to_string(n));
  }
  std::vector<Edge> pairs = all_pairs(n);
  std::uint32_t total = std::uint32_t{1} << pairs.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (mask & (std::uint32_t{1} << k)) edges.push_back(pairs[k]);
    }
    fn(Graph(n, std::move(edges)));
  }
}

}  // namespace vstab
