#pragma once

#include "vstab/claims.hpp"
#include "vstab/graph.hpp"
#include "vstab/invariants.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vstab {

// graph6 short form (up to 62 vertices): one size byte chr(n+63) followed by
// the upper-triangle adjacency bits in column-major pair order, packed six
// per byte, high bit first, zero-padded, each byte offset by 63. Parsing
// throws std::invalid_argument on bad length, characters outside 63..126,
// the long-form marker, or nonzero padding bits.
Graph parse_graph6(std::string_view text);
std::string format_graph6(const Graph& g);

// Plain text "n m" header plus one "u v" line per edge. Parse errors name
// the offending line. Formatting emits edges in canonical order with no
// trailing newline.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

// Proper coloring of the reduced graph, recorded explicitly so a consumer
// can check it without recomputing anything: one (u, v, color) triple per
// edge, in the reduced graph's canonical labels (the relabeling produced by
// deleting the removal set).
struct CertificateColoring {
  int k = 0;
  std::vector<std::array<int, 3>> edges;
};

// Self-contained record of one vertex-stability computation, suitable for
// independent revalidation from the serialized form alone.
struct WitnessCertificate {
  std::string graph6;
  std::string invariant;
  int value = 0;
  std::vector<int> removal_set;  // sorted original vertex labels
  int rho_before = 0;
  int rho_after = 0;
  // Present exactly for the chromatic-index invariant; uses rho_after colors.
  std::optional<CertificateColoring> coloring;
  int max_cardinality_fully_searched = 0;
};

WitnessCertificate make_certificate(const Graph& g,
                                    const InvariantDescriptor& rho);

// Single-line JSON object with fixed field order: graph6, invariant, value,
// removal_set, rho_before, rho_after, coloring, then
// max_cardinality_fully_searched. The layout is pinned for golden-file
// comparisons.
std::string certificate_to_json(const WitnessCertificate& cert);
WitnessCertificate certificate_from_json(const std::string& text);

// Revalidates a certificate using only public operations: re-parse the
// graph, re-delete the removal set, re-evaluate the invariant, re-check the
// coloring. Returns nullopt when everything holds, else a description of
// the first problem found.
std::optional<std::string> certificate_error(const WitnessCertificate& cert);

// Human-readable claim table: one row per report plus indented failure,
// discrepancy, and note lines, ending with a status summary. Timing columns
// are excluded unless requested so output is byte-stable across runs.
std::string render_reports(const std::vector<ClaimReport>& reports,
                           bool include_timing = false);

// One tab-separated line per report for scripts:
// id, status, instances, fired, vacuous, failures, discrepancies.
std::string render_reports_porcelain(const std::vector<ClaimReport>& reports);

}  // namespace vstab
