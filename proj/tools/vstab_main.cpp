#include "CLI11.hpp"

#include "vstab/claims.hpp"
#include "vstab/edge_coloring.hpp"
#include "vstab/enumerate.hpp"
#include "vstab/families.hpp"
#include "vstab/graph.hpp"
#include "vstab/invariants.hpp"
#include "vstab/io.hpp"
#include "vstab/stability.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using vstab::Graph;

std::string read_all(std::istream& in) {
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// A graph argument is stdin ("-"), a file path, or the literal text itself.
std::string resolve_graph_text(const std::string& arg) {
  if (arg == "-") return read_all(std::cin);
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream file(arg);
    if (!file) throw std::invalid_argument("cannot open file: " + arg);
    return read_all(file);
  }
  return arg;
}

std::string trim(const std::string& text) {
  const char* ws = " \t\r\n";
  std::size_t begin = text.find_first_not_of(ws);
  if (begin == std::string::npos) return "";
  std::size_t end = text.find_last_not_of(ws);
  return text.substr(begin, end - begin + 1);
}

Graph load_graph(const std::string& arg, const std::string& format) {
  std::string text = trim(resolve_graph_text(arg));
  std::string chosen = format;
  if (chosen == "auto") {
    // Edge-list text always has whitespace (the "n m" header); a graph6
    // token never does.
    chosen = text.find_first_of(" \t\r\n") != std::string::npos ? "edgelist"
                                                                : "g6";
  }
  if (chosen == "g6") return vstab::parse_graph6(text);
  return vstab::parse_edge_list(text);
}

std::string format_vertex_set(const std::vector<int>& vs) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out << ',';
    out << vs[i];
  }
  out << ']';
  return out.str();
}

std::string format_edge_set(const std::vector<vstab::Edge>& es) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (i) out << ',';
    out << '(' << es[i].u << ',' << es[i].v << ')';
  }
  out << ']';
  return out.str();
}

int run_invariant(const std::string& graph_arg, const std::string& format,
                  const std::string& rho) {
  Graph g = load_graph(graph_arg, format);
  int value = 0;
  if (rho == "t_star") {
    value = vstab::t_star(g);
  } else if (rho == "connectivity") {
    value = vstab::connectivity(g);
  } else {
    value = vstab::invariant(rho).evaluate(g);
  }
  std::cout << value << '\n';
  return 0;
}

int run_stability(const std::string& graph_arg, const std::string& format,
                  const std::string& rho, bool over_edges) {
  Graph g = load_graph(graph_arg, format);
  const vstab::InvariantDescriptor& descriptor = vstab::invariant(rho);
  if (over_edges) {
    vstab::StabilityResult res = vstab::edge_stability(g, descriptor);
    std::cout << "es=" << res.value
              << " witness=" << format_edge_set(res.removed_edges) << '\n';
  } else {
    vstab::StabilityResult res = vstab::vertex_stability(g, descriptor);
    std::cout << "vs=" << res.value
              << " witness=" << format_vertex_set(res.removed_vertices)
              << '\n';
  }
  return 0;
}

int run_witness(const std::string& graph_arg, const std::string& format,
                const std::string& rho, bool as_json) {
  Graph g = load_graph(graph_arg, format);
  vstab::WitnessCertificate cert =
      vstab::make_certificate(g, vstab::invariant(rho));
  if (as_json) {
    std::cout << vstab::certificate_to_json(cert) << '\n';
    return 0;
  }
  std::cout << "graph: " << cert.graph6 << '\n'
            << "invariant: " << cert.invariant << '\n'
            << "value: " << cert.value << '\n'
            << "removal_set: " << format_vertex_set(cert.removal_set) << '\n'
            << "rho_before: " << cert.rho_before << '\n'
            << "rho_after: " << cert.rho_after << '\n';
  if (cert.coloring.has_value()) {
    std::cout << "coloring: " << cert.coloring->k << " colors on "
              << cert.coloring->edges.size() << " edges\n";
  } else {
    std::cout << "coloring: none\n";
  }
  std::cout << "max_cardinality_fully_searched: "
            << cert.max_cardinality_fully_searched << '\n';
  return 0;
}

int run_verify(const std::vector<std::string>& claims, std::optional<int> max_n,
               bool porcelain, bool timing) {
  std::optional<std::vector<std::string>> ids;
  if (!claims.empty()) ids = claims;
  std::vector<vstab::ClaimReport> reports = vstab::run_suite(max_n, ids);
  if (porcelain) {
    std::cout << vstab::render_reports_porcelain(reports);
  } else {
    std::cout << vstab::render_reports(reports, timing);
  }
  return vstab::any_failure(reports) ? 1 : 0;
}

int run_gen(const std::string& family, const std::vector<int>& params,
            const std::string& format) {
  std::optional<vstab::Family> tag = vstab::family_from_name(family);
  if (!tag.has_value()) {
    throw std::invalid_argument("unknown family: " + family);
  }
  Graph g = vstab::generate({*tag, params});
  if (format == "edgelist") {
    std::cout << vstab::format_edge_list(g) << '\n';
  } else {
    std::cout << vstab::format_graph6(g) << '\n';
  }
  return 0;
}

int run_corpus(int n) {
  vstab::for_each_labeled_graph(
      n, [](const Graph& g) { std::cout << vstab::format_graph6(g) << '\n'; });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact stability numbers of graph invariants"};
  app.require_subcommand(1);

  std::string graph_arg;
  std::string graph_format = "auto";
  std::string rho = "chi_prime";
  bool over_edges = false;
  bool as_json = false;
  std::vector<std::string> claim_ids;
  int max_n_value = 0;
  bool porcelain = false;
  bool timing = false;
  std::string family;
  std::vector<int> family_params;
  std::string gen_format = "g6";
  int corpus_n = 0;

  auto add_graph_input = [&](CLI::App* cmd) {
    cmd->add_option("graph", graph_arg,
                    "graph6 text, edge-list text, a file path, or - for stdin")
        ->required();
    cmd->add_option("--format", graph_format, "input format")
        ->check(CLI::IsMember({"auto", "g6", "edgelist"}))
        ->capture_default_str();
  };

  CLI::App* inv =
      app.add_subcommand("invariant", "compute one invariant value");
  add_graph_input(inv);
  inv->add_option("--rho", rho,
                  "invariant name (registry name, t_star, or connectivity)")
      ->required();

  CLI::App* stab = app.add_subcommand(
      "stability", "minimum removals that change the invariant");
  add_graph_input(stab);
  stab->add_option("--rho", rho, "invariant name")->required();
  stab->add_flag("--edges", over_edges, "remove edges instead of vertices");

  CLI::App* wit = app.add_subcommand(
      "witness", "stability certificate with an optimal removal set");
  add_graph_input(wit);
  wit->add_option("--rho", rho, "invariant name")->capture_default_str();
  wit->add_flag("--json", as_json, "emit the certificate as one JSON object");

  CLI::App* ver =
      app.add_subcommand("verify", "run the recorded-claim check suite");
  ver->add_option("--claims", claim_ids, "comma-separated claim ids")
      ->delimiter(',');
  CLI::Option* max_n_opt =
      ver->add_option("--max-n", max_n_value, "corpus scale override");
  ver->add_flag("--porcelain", porcelain, "tab-separated machine output");
  ver->add_flag("--timing", timing, "include per-claim wall time");

  CLI::App* gen = app.add_subcommand("gen", "generate a named graph family");
  gen->add_option("--family", family, "family tag")->required();
  gen->add_option("--params", family_params, "integer parameters")
      ->delimiter(',');
  gen->add_option("--format", gen_format, "output format")
      ->check(CLI::IsMember({"g6", "edgelist"}))
      ->capture_default_str();

  CLI::App* corpus =
      app.add_subcommand("corpus", "all labeled graphs on n vertices");
  corpus->add_option("--n", corpus_n, "vertex count")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (inv->parsed()) return run_invariant(graph_arg, graph_format, rho);
    if (stab->parsed()) {
      return run_stability(graph_arg, graph_format, rho, over_edges);
    }
    if (wit->parsed()) {
      return run_witness(graph_arg, graph_format, rho, as_json);
    }
    if (ver->parsed()) {
      std::optional<int> max_n;
      if (max_n_opt->count() > 0) max_n = max_n_value;
      return run_verify(claim_ids, max_n, porcelain, timing);
    }
    if (gen->parsed()) return run_gen(family, family_params, gen_format);
    if (corpus->parsed()) return run_corpus(corpus_n);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
