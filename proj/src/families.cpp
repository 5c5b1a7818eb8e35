#include "vstab/families.hpp"

#include <stdexcept>

namespace vstab {

namespace {

[[noreturn]] void bad_params(const std::string& what) {
  throw std::invalid_argument("malformed family parameters: " + what);
}

void require_param_count(const FamilySpec& spec, std::size_t count) {
  if (spec.params.size() != count) {
    bad_params(family_name(spec.family) + " takes " + std::to_string(count) +
               " parameter(s), got " + std::to_string(spec.params.size()));
  }
}

}  // namespace

Graph path_graph(int n) {
  if (n < 1) bad_params("path needs n >= 1");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) bad_params("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({0, n - 1});
  return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  if (n < 1) bad_params("complete needs n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

Graph complete_bipartite_graph(int m, int n) {
  if (m < 1 || n < 1) bad_params("complete_bipartite needs m, n >= 1");
  if (m + n > kMaxVertices) bad_params("complete_bipartite over the vertex cap");
  std::vector<Edge> edges;
  for (int u = 0; u < m; ++u) {
    for (int v = 0; v < n; ++v) edges.push_back({u, m + v});
  }
  return Graph(m + n, std::move(edges));
}

Graph complete_multipartite_graph(const std::vector<int>& parts) {
  if (parts.empty()) bad_params("complete_multipartite needs at least one part");
  int total = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) bad_params("complete_multipartite parts must be >= 1");
    if (i > 0 && parts[i] < parts[i - 1]) {
      bad_params("complete_multipartite parts must be sorted ascending");
    }
    total += parts[i];
  }
  if (total > kMaxVertices) bad_params("complete_multipartite over the vertex cap");
  // Part i occupies the next parts[i] labels; edges cross parts only.
  std::vector<int> start(parts.size() + 1, 0);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    start[i + 1] = start[i] + parts[i];
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      for (int u = start[i]; u < start[i + 1]; ++u) {
        for (int v = start[j]; v < start[j + 1]; ++v) edges.push_back({u, v});
      }
    }
  }
  return Graph(total, std::move(edges));
}

Graph wheel_graph(int n) {
  if (n < 3) bad_params("wheel needs rim size n >= 3");
  return join(cycle_graph(n), complete_graph(1));
}

Graph gadget_chain(int k) {
  if (k < 1) bad_params("gadget_chain needs k >= 1");
  if (3 * k > kMaxVertices) bad_params("gadget_chain over the vertex cap");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < 2 * k; ++v) edges.push_back({v, v + 1});
  for (int i = 1; i <= k; ++i) {
    int z = 2 * k + i - 1;
    edges.push_back({2 * i - 2, z});
    edges.push_back({2 * i - 1, z});
  }
  return Graph(3 * k, std::move(edges));
}

Graph complete_plus_apex(int n, int d) {
  if (n < 2) bad_params("complete_plus_apex needs n >= 2");
  if (d < 0 || d > n) bad_params("complete_plus_apex needs 0 <= d <= n");
  if (n + 1 > kMaxVertices) bad_params("complete_plus_apex over the vertex cap");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  for (int v = 0; v < d; ++v) edges.push_back({v, n});
  return Graph(n + 1, std::move(edges));
}

Graph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::kPath:
      require_param_count(spec, 1);
      return path_graph(spec.params[0]);
    case Family::kCycle:
      require_param_count(spec, 1);
      return cycle_graph(spec.params[0]);
    case Family::kComplete:
      require_param_count(spec, 1);
      return complete_graph(spec.params[0]);
    case Family::kCompleteBipartite:
      require_param_count(spec, 2);
      return complete_bipartite_graph(spec.params[0], spec.params[1]);
    case Family::kCompleteMultipartite:
      return complete_multipartite_graph(spec.params);
    case Family::kWheel:
      require_param_count(spec, 1);
      return wheel_graph(spec.params[0]);
    case Family::kGadgetChain:
      require_param_count(spec, 1);
      return gadget_chain(spec.params[0]);
    case Family::kCompletePlusApex:
      require_param_count(spec, 2);
      return complete_plus_apex(spec.params[0], spec.params[1]);
  }
  bad_params("unknown family tag");
}

std::string family_name(Family family) {
  switch (family) {
    case Family::kPath: return "path";
    case Family::kCycle: return "cycle";
    case Family::kComplete: return "complete";
    case Family::kCompleteBipartite: return "complete_bipartite";
    case Family::kCompleteMultipartite: return "complete_multipartite";
    case Family::kWheel: return "wheel";
    case Family::kGadgetChain: return "gadget_chain";
    case Family::kCompletePlusApex: return "complete_plus_apex";
  }
  return "unknown";
}

std::optional<Family> family_from_name(std::string_view name) {
  if (name == "path") return Family::kPath;
  if (name == "cycle") return Family::kCycle;
  if (name == "complete") return Family::kComplete;
  if (name == "complete_bipartite") return Family::kCompleteBipartite;
  if (name == "complete_multipartite") return Family::kCompleteMultipartite;
  if (name == "wheel") return Family::kWheel;
  if (name == "gadget_chain") return Family::kGadgetChain;
  if (name == "complete_plus_apex") return Family::kCompletePlusApex;
  return std::nullopt;
}

}  // namespace vstab
