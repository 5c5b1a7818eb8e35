#include "vstab/io.hpp"

#include "vstab/edge_coloring.hpp"
#include "vstab/enumerate.hpp"
#include "vstab/stability.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace vstab {

namespace {

constexpr int kGraph6MaxVertices = 62;
constexpr char kGraph6Offset = 63;

}  // namespace

std::string format_graph6(const Graph& g) {
  int n = g.vertex_count();
  if (n > kGraph6MaxVertices) {
    throw std::invalid_argument("graph6 short form caps at " +
                                std::to_string(kGraph6MaxVertices) +
                                " vertices");
  }
  std::string out;
  out.push_back(static_cast<char>(kGraph6Offset + n));
  int group = 0;
  int filled = 0;
  for (const Edge& pair : all_pairs(n)) {
    group = (group << 1) | (g.has_edge(pair.u, pair.v) ? 1 : 0);
    if (++filled == 6) {
      out.push_back(static_cast<char>(kGraph6Offset + group));
      group = 0;
      filled = 0;
    }
  }
  if (filled > 0) {
    group <<= (6 - filled);
    out.push_back(static_cast<char>(kGraph6Offset + group));
  }
  return out;
}

Graph parse_graph6(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("graph6: empty input");
  }
  unsigned char size_char = static_cast<unsigned char>(text[0]);
  if (size_char < 63 || size_char > 126) {
    throw std::invalid_argument("graph6: size character out of range 63..126");
  }
  if (size_char == 126) {
    throw std::invalid_argument(
        "graph6: long size form not supported (max 62 vertices)");
  }
  int n = size_char - kGraph6Offset;
  int pair_count = n * (n - 1) / 2;
  std::size_t body_bytes = static_cast<std::size_t>((pair_count + 5) / 6);
  if (text.size() != 1 + body_bytes) {
    throw std::invalid_argument(
        "graph6: expected " + std::to_string(1 + body_bytes) +
        " characters for " + std::to_string(n) + " vertices, got " +
        std::to_string(text.size()));
  }
  std::vector<Edge> pairs = all_pairs(n);
  std::vector<Edge> edges;
  for (std::size_t byte = 0; byte < body_bytes; ++byte) {
    unsigned char c = static_cast<unsigned char>(text[1 + byte]);
    if (c < 63 || c > 126) {
      throw std::invalid_argument("graph6: body character out of range 63..126");
    }
    int group = c - kGraph6Offset;
    for (int b = 0; b < 6; ++b) {
      int index = static_cast<int>(byte) * 6 + b;
      int bit = (group >> (5 - b)) & 1;
      if (index < pair_count) {
        if (bit) edges.push_back(pairs[static_cast<std::size_t>(index)]);
      } else if (bit) {
        throw std::invalid_argument("graph6: nonzero padding bits");
      }
    }
  }
  return Graph(n, std::move(edges));
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count();
  for (const Edge& e : g.edges()) {
    out << '\n' << e.u << ' ' << e.v;
  }
  return out.str();
}

namespace {

[[noreturn]] void edge_list_error(int line, const std::string& what) {
  throw std::invalid_argument("edge list line " + std::to_string(line) + ": " +
                              what);
}

// Splits a line into integer tokens; returns false on any non-integer token.
bool parse_ints(const std::string& line, std::vector<long>& out) {
  out.clear();
  std::istringstream in(line);
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(token, &used);
    } catch (const std::exception&) {
      return false;
    }
    if (used != token.size()) return false;
    out.push_back(value);
  }
  return true;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int n = -1;
  long declared_m = 0;
  std::vector<Edge> edges;
  std::vector<long> nums;
  while (std::getline(in, line)) {
    ++line_no;
    if (!parse_ints(line, nums)) {
      edge_list_error(line_no, "expected integers, got \"" + line + "\"");
    }
    if (nums.empty()) continue;  // blank lines are fine anywhere
    if (n < 0) {
      if (nums.size() != 2) {
        edge_list_error(line_no, "header must be \"n m\"");
      }
      if (nums[0] < 0 || nums[0] > kMaxVertices) {
        edge_list_error(line_no, "vertex count outside [0, 64]");
      }
      if (nums[1] < 0) edge_list_error(line_no, "negative edge count");
      n = static_cast<int>(nums[0]);
      declared_m = nums[1];
      continue;
    }
    if (nums.size() != 2) {
      edge_list_error(line_no, "edge line must be \"u v\"");
    }
    long u = nums[0];
    long v = nums[1];
    if (u < 0 || u >= n || v < 0 || v >= n) {
      edge_list_error(line_no, "endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) edge_list_error(line_no, "self-loop");
    Edge e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
    if (std::find(edges.begin(), edges.end(), e) != edges.end()) {
      edge_list_error(line_no, "duplicate edge");
    }
    if (static_cast<long>(edges.size()) == declared_m) {
      edge_list_error(line_no, "more edges than the declared " +
                                   std::to_string(declared_m));
    }
    edges.push_back(e);
  }
  if (n < 0) {
    throw std::invalid_argument("edge list: missing \"n m\" header");
  }
  if (static_cast<long>(edges.size()) != declared_m) {
    throw std::invalid_argument(
        "edge list: declared " + std::to_string(declared_m) +
        " edges, found " + std::to_string(edges.size()));
  }
  return Graph(n, std::move(edges));
}

WitnessCertificate make_certificate(const Graph& g,
                                    const InvariantDescriptor& rho) {
  StabilityResult res = vertex_stability(g, rho);
  WitnessCertificate cert;
  cert.graph6 = format_graph6(g);
  cert.invariant = rho.name;
  cert.value = res.value;
  cert.removal_set = res.removed_vertices;
  cert.rho_before = res.rho_before;
  cert.rho_after = res.rho_after;
  cert.max_cardinality_fully_searched = std::max(res.value - 1, 0);
  if (rho.name == "chi_prime") {
    Graph reduced =
        delete_vertices(g, mask_of(res.removed_vertices)).graph;
    std::optional<EdgeColoring> col = edge_colorable(reduced, res.rho_after);
    if (!col) {
      // rho_after is the reduced graph's chromatic index, so this cannot
      // happen; guard anyway rather than emit a bogus certificate.
      throw std::logic_error("reduced graph rejected its own color count");
    }
    CertificateColoring cc;
    cc.k = col->k;
    for (std::size_t i = 0; i < reduced.edges().size(); ++i) {
      const Edge& e = reduced.edges()[i];
      cc.edges.push_back({e.u, e.v, col->colors[i]});
    }
    cert.coloring = std::move(cc);
  }
  return cert;
}

std::string certificate_to_json(const WitnessCertificate& cert) {
  nlohmann::ordered_json j;
  j["graph6"] = cert.graph6;
  j["invariant"] = cert.invariant;
  j["value"] = cert.value;
  j["removal_set"] = cert.removal_set;
  j["rho_before"] = cert.rho_before;
  j["rho_after"] = cert.rho_after;
  if (cert.coloring) {
    nlohmann::ordered_json col;
    col["k"] = cert.coloring->k;
    col["edges"] = cert.coloring->edges;
    j["coloring"] = col;
  } else {
    j["coloring"] = nullptr;
  }
  j["max_cardinality_fully_searched"] = cert.max_cardinality_fully_searched;
  return j.dump();
}

WitnessCertificate certificate_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("certificate JSON: ") + e.what());
  }
  WitnessCertificate cert;
  try {
    cert.graph6 = j.at("graph6").get<std::string>();
    cert.invariant = j.at("invariant").get<std::string>();
    cert.value = j.at("value").get<int>();
    cert.removal_set = j.at("removal_set").get<std::vector<int>>();
    cert.rho_before = j.at("rho_before").get<int>();
    cert.rho_after = j.at("rho_after").get<int>();
    if (!j.at("coloring").is_null()) {
      CertificateColoring cc;
      cc.k = j.at("coloring").at("k").get<int>();
      cc.edges =
          j.at("coloring").at("edges").get<std::vector<std::array<int, 3>>>();
      cert.coloring = std::move(cc);
    }
    cert.max_cardinality_fully_searched =
        j.at("max_cardinality_fully_searched").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("certificate JSON: ") + e.what());
  }
  return cert;
}

std::optional<std::string> certificate_error(const WitnessCertificate& cert) {
  Graph g;
  try {
    g = parse_graph6(cert.graph6);
  } catch (const std::exception& e) {
    return std::string("graph6 rejected: ") + e.what();
  }
  const InvariantDescriptor* rho = nullptr;
  try {
    rho = &invariant(cert.invariant);
  } catch (const std::exception& e) {
    return std::string("invariant rejected: ") + e.what();
  }
  if (cert.value < 0) return "negative value";
  if (static_cast<int>(cert.removal_set.size()) != cert.value) {
    return "removal set size does not equal the value";
  }
  if (!std::is_sorted(cert.removal_set.begin(), cert.removal_set.end())) {
    return "removal set not sorted";
  }
  if (std::adjacent_find(cert.removal_set.begin(), cert.removal_set.end()) !=
      cert.removal_set.end()) {
    return "removal set has duplicates";
  }
  for (int v : cert.removal_set) {
    if (v < 0 || v >= g.vertex_count()) return "removal set out of range";
  }
  if (rho->evaluate(g) != cert.rho_before) {
    return "rho_before does not match a fresh evaluation";
  }
  Graph reduced = delete_vertices(g, mask_of(cert.removal_set)).graph;
  if (rho->evaluate(reduced) != cert.rho_after) {
    return "rho_after does not match a fresh evaluation";
  }
  if (cert.value > 0 && cert.rho_after == cert.rho_before &&
      reduced.edge_count() != 0) {
    return "removal neither changes the invariant nor empties the edges";
  }
  if (cert.value == 0 && g.edge_count() != 0) {
    return "zero value claimed for a graph with edges";
  }
  if (cert.invariant == "chi_prime") {
    if (!cert.coloring) return "missing coloring for chi_prime";
    if (cert.coloring->k != cert.rho_after) {
      return "coloring does not use rho_after colors";
    }
    EdgeColoring col;
    col.k = cert.coloring->k;
    col.colors.assign(reduced.edges().size(), -1);
    if (cert.coloring->edges.size() != reduced.edges().size()) {
      return "coloring is not total on the reduced graph";
    }
    for (const std::array<int, 3>& entry : cert.coloring->edges) {
      Edge e{std::min(entry[0], entry[1]), std::max(entry[0], entry[1])};
      auto it = std::lower_bound(reduced.edges().begin(),
                                 reduced.edges().end(), e);
      if (it == reduced.edges().end() || *it != e) {
        return "coloring mentions an edge absent from the reduced graph";
      }
      std::size_t idx =
          static_cast<std::size_t>(it - reduced.edges().begin());
      if (col.colors[idx] != -1) return "coloring lists an edge twice";
      col.colors[idx] = entry[2];
    }
    if (!verify_coloring(reduced, col)) {
      return "coloring is not a proper edge coloring of the reduced graph";
    }
  } else if (cert.coloring) {
    return "unexpected coloring for a non-coloring invariant";
  }
  if (cert.max_cardinality_fully_searched != std::max(cert.value - 1, 0)) {
    return "exhaustiveness note inconsistent with the value";
  }
  return std::nullopt;
}

namespace {

constexpr std::size_t kMaxRenderedInstances = 20;

void render_instances(std::ostringstream& out, const char* label,
                      const std::vector<ClaimInstance>& items) {
  std::size_t shown = std::min(items.size(), kMaxRenderedInstances);
  for (std::size_t i = 0; i < shown; ++i) {
    out << "    " << label << ' ' << items[i].graph << ": expected "
        << items[i].expected << ", got " << items[i].actual << '\n';
  }
  if (items.size() > shown) {
    out << "    ... and " << (items.size() - shown) << " more\n";
  }
}

}  // namespace

std::string render_reports(const std::vector<ClaimReport>& reports,
                           bool include_timing) {
  std::ostringstream out;
  out << std::left << std::setw(28) << "claim" << std::setw(24) << "status"
      << std::right << std::setw(10) << "instances"
      << "  detail\n";
  out << std::string(76, '-') << '\n';
  int pass = 0;
  int fail = 0;
  int discrepancy = 0;
  for (const ClaimReport& r : reports) {
    switch (r.status) {
      case ClaimStatus::kPass: ++pass; break;
      case ClaimStatus::kFail: ++fail; break;
      case ClaimStatus::kDocumentedDiscrepancy: ++discrepancy; break;
    }
    out << std::left << std::setw(28) << r.id << std::setw(24)
        << status_name(r.status) << std::right << std::setw(10) << r.instances
        << "  ";
    bool first = true;
    auto sep = [&]() {
      if (!first) out << ", ";
      first = false;
    };
    if (r.fired >= 0) {
      sep();
      out << "fired=" << r.fired << " vacuous=" << r.vacuous;
    }
    if (!r.failures.empty()) {
      sep();
      out << r.failures.size() << " failure(s)";
    }
    if (!r.discrepancies.empty()) {
      sep();
      out << r.discrepancies.size() << " discrepancy(s)";
    }
    if (include_timing) {
      sep();
      out << std::fixed << std::setprecision(2) << r.elapsed_seconds << "s";
    }
    out << '\n';
    render_instances(out, "counterexample", r.failures);
    render_instances(out, "discrepancy", r.discrepancies);
    for (const std::string& note : r.notes) {
      out << "    note: " << note << '\n';
    }
  }
  out << std::string(76, '-') << '\n';
  out << "claims: " << reports.size() << "  pass: " << pass
      << "  fail: " << fail << "  documented-discrepancy: " << discrepancy
      << '\n';
  return out.str();
}

std::string render_reports_porcelain(const std::vector<ClaimReport>& reports) {
  std::ostringstream out;
  for (const ClaimReport& r : reports) {
    out << r.id << '\t' << status_name(r.status) << '\t' << r.instances
        << '\t' << r.fired << '\t' << r.vacuous << '\t' << r.failures.size()
        << '\t' << r.discrepancies.size() << '\n';
  }
  return out.str();
}

}  // namespace vstab
