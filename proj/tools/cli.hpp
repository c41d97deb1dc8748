#pragma once

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "nbrecon/nbrecon.hpp"

namespace nbrecon::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2, kViolations = 3 };

inline int verification_exit_code(const VerificationReport& report) { return report.ok() ? kOk : kViolations; }

/// Runs one invocation; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Neighborhood reconstruction and direct-product cancellation of small graphs", "nbrecon"};
  app.require_subcommand(1);
  bool no_guard = false;
  app.add_flag("--no-guard", no_guard, "Lift the default size limits on enumerations");

  std::string g_path;
  std::string h_path;
  std::string perm_text;

  auto* analyze = app.add_subcommand("analyze", "Classify a graph (JSON report)");
  analyze->add_option("graph", g_path, "Graph file")->required();

  auto* ant = app.add_subcommand("ant", "List the anti-automorphisms (JSON)");
  ant->add_option("graph", g_path, "Graph file")->required();

  auto* tf = app.add_subcommand("tf", "List the two-fold automorphisms (JSON)");
  tf->add_option("graph", g_path, "Graph file")->required();

  auto* galpha = app.add_subcommand("galpha", "Write G^alpha as a graph file");
  galpha->add_option("graph", g_path, "Graph file")->required();
  galpha->add_option("perm", perm_text, "Image list, e.g. \"3 4 5 0 1 2\"")->required();

  auto* product = app.add_subcommand("product", "Write the direct product as a graph file");
  product->add_option("graph", g_path, "First factor")->required();
  product->add_option("other", h_path, "Second factor")->required();

  auto* iso = app.add_subcommand("iso", "Test isomorphism (JSON)");
  iso->add_option("graph", g_path, "Graph file")->required();
  iso->add_option("other", h_path, "Graph file")->required();

  auto* nbhd = app.add_subcommand("nbhd", "Print the neighborhood multiset (JSON)");
  nbhd->add_option("graph", g_path, "Graph file")->required();

  int max_n = 0;
  bool loops = false;
  unsigned jobs = 0;
  int bipartite_max_n = 7;
  auto* verify = app.add_subcommand("verify", "Run the exhaustive cross-checks (JSON report)");
  verify->add_option("--max-n", max_n, "Largest order checked")->required()->check(CLI::NonNegativeNumber);
  verify->add_flag("--loops", loops, "Enumerate graphs with loops");
  verify->add_option("--jobs", jobs, "Worker threads (default: all cores)");
  verify->add_option("--bipartite-max-n", bipartite_max_n, "Largest order of the bipartite sweep")
      ->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  const Budget budget{no_guard};
  try {
    if (analyze->parsed()) {
      const Graph g = read_graph_file(g_path);
      out << to_json(classify(g, budget), g).dump(2) << '\n';
    } else if (ant->parsed()) {
      const Graph g = read_graph_file(g_path);
      Json list = Json::array();
      for (const Permutation& a : enumerate_ant(g, budget)) list.push_back(to_json(a));
      out << Json{{"n", g.order()}, {"count", list.size()}, {"ant", list}}.dump(2) << '\n';
    } else if (tf->parsed()) {
      const Graph g = read_graph_file(g_path);
      Json list = Json::array();
      for (const TwoFoldPair& p : enumerate_aut_tf(g, budget)) list.push_back(to_json(p));
      out << Json{{"n", g.order()}, {"count", list.size()}, {"pairs", list}}.dump(2) << '\n';
    } else if (galpha->parsed()) {
      const Graph g = read_graph_file(g_path);
      const Permutation a = parse_permutation(perm_text);
      if (a.size() != g.order()) {
        throw UsageError("permutation has " + std::to_string(a.size()) + " entries, graph has " +
                         std::to_string(g.order()) + " vertices");
      }
      out << serialize_graph(apply_anti(g, a), "G^alpha for alpha = " + format_permutation(a));
    } else if (product->parsed()) {
      const Graph g = read_graph_file(g_path);
      const Graph h = read_graph_file(h_path);
      out << serialize_graph(direct_product(g, h),
                             "direct product, vertex (x, y) numbered x*" + std::to_string(h.order()) + "+y");
    } else if (iso->parsed()) {
      const Graph g = read_graph_file(g_path);
      const Graph h = read_graph_file(h_path);
      const std::optional<Permutation> phi = find_isomorphism(g, h);
      out << Json{{"isomorphic", phi.has_value()},
                  {"witness", optional_json(phi)},
                  {"certificates", {canonical_form(g).hex(), canonical_form(h).hex()}}}
                 .dump(2)
          << '\n';
    } else if (nbhd->parsed()) {
      const Graph g = read_graph_file(g_path);
      Json entries = Json::array();
      for (const auto& e : neighborhood_multiset(g).entries) entries.push_back(e);
      out << Json{{"n", g.order()}, {"multiset", entries}}.dump(2) << '\n';
    } else if (verify->parsed()) {
      VerifyOptions options;
      options.max_n = max_n;
      options.loops = loops;
      options.jobs = jobs;
      options.bipartite_max_n = bipartite_max_n;
      options.budget = budget;
      const VerificationReport report = verify_theorems(options);
      out << to_json(report).dump(2) << '\n';
      if (!report.ok()) err << "verify: " << report.violation_count << " violation(s)\n";
      return verification_exit_code(report);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kOk;
}

}  // namespace nbrecon::cli
