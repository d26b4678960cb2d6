// pegraph: build groups, export their graphs, test isomorphism, replay the
// enhanced power graph theorems over the constructible corpus.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pegraph/pegraph.hpp"

namespace fs = std::filesystem;
using namespace pegraph;

namespace {

constexpr int kExitIsomorphic = 0;
constexpr int kExitNonIsomorphic = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInput = 3;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io_error, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error(ErrorKind::io_error, "cannot write " + out_path);
  out << text;
  if (!out) throw Error(ErrorKind::io_error, "write failed for " + out_path);
}

// A group argument is a JSON file if such a file exists, else an expression.
FiniteGroup load_group(const std::string& arg) {
  std::error_code ec;
  if (fs::is_regular_file(arg, ec)) return group_from_json_text(read_file(arg));
  return build_group(parse_group_expr(arg));
}

// First cheap invariant on which the graphs differ, for the non-isomorphic message.
std::string refuting_invariant(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count()) return "vertex count";
  if (a.edge_count() != b.edge_count()) return "edge count";
  auto degrees = [](const Graph& g) {
    std::vector<int> d;
    for (int v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(a) != degrees(b)) return "degree sequence";
  auto ta = triangle_counts(a), tb = triangle_counts(b);
  std::sort(ta.begin(), ta.end());
  std::sort(tb.begin(), tb.end());
  if (ta != tb) return "triangle counts";
  auto sa = block_signature(a), sb = block_signature(b);
  if (sa && sb && !(*sa == *sb)) return "block signature";
  return "exhaustive search";
}

struct Globals {
  std::uint64_t iso_budget = kDefaultIsoBudget;
  std::string report_path;
};

int cmd_build(const std::string& expr, const std::string& out) {
  write_output(out, canonical_dump(group_to_json(load_group(expr))));
  return 0;
}

int cmd_spectrum(const std::string& group, const std::string& out) {
  write_output(out, canonical_dump(spectrum_to_json(order_spectrum(load_group(group)))));
  return 0;
}

int cmd_graph(const std::string& group, const std::string& kind_name, const std::string& format,
              const std::string& out) {
  const GraphKind kind = parse_graph_kind(kind_name);
  if (kind == GraphKind::other) invalid_parameter("unknown graph kind '" + kind_name + "'");
  if (format != "json" && format != "dot") invalid_parameter("unknown format '" + format + "' (expected json or dot)");
  const FiniteGroup g = load_group(group);
  if (kind == GraphKind::dpower) {
    const DiGraph d = directed_power_graph(g);
    write_output(out, format == "json" ? canonical_dump(digraph_to_json(d)) : digraph_to_dot(d, g.provenance()));
    return 0;
  }
  const Graph graph = group_graph(g, kind);
  write_output(out, format == "json" ? canonical_dump(graph_to_json(graph, kind)) : graph_to_dot(graph, kind, g.provenance()));
  return 0;
}

int cmd_iso(const Globals& globals, const std::string& a_arg, const std::string& b_arg, const std::string& kind_name,
            bool fast_path) {
  const GraphKind kind = parse_graph_kind(kind_name);
  if (kind == GraphKind::dpower || kind == GraphKind::other) {
    invalid_parameter("iso supports enhanced, power and cyclic graphs, not '" + kind_name + "'");
  }
  const FiniteGroup ga = load_group(a_arg), gb = load_group(b_arg);
  const Graph a = group_graph(ga, kind), b = group_graph(gb, kind);
  const IsoResult r = graphs_isomorphic(a, b, GraphIsoOptions{globals.iso_budget, fast_path});
  Json j;
  j["kind"] = std::string(to_string(kind));
  j["G"] = ga.provenance();
  j["H"] = gb.provenance();
  j["status"] = std::string(to_string(r.status));
  j["nodes"] = r.nodes;
  if (r.isomorphic()) j["certificate"] = r.mapping;
  if (r.status == IsoStatus::non_isomorphic) j["refuted_by"] = refuting_invariant(a, b);
  const std::string text = canonical_dump(j);
  write_output(globals.report_path, text);
  if (!globals.report_path.empty()) std::cout << text;
  switch (r.status) {
    case IsoStatus::isomorphic: return kExitIsomorphic;
    case IsoStatus::non_isomorphic: return kExitNonIsomorphic;
    case IsoStatus::budget_exhausted: return kExitBudget;
  }
  return kExitInput;
}

struct VerifyConfig {
  int max_order = kDefaultCorpusOrder;
  std::vector<std::string> families;
  std::vector<std::string> suites;
};

const std::vector<std::string> kSuites{"decomposition", "equivalences", "uniqueness", "figures"};

int cmd_verify(const Globals& globals, VerifyConfig config) {
  if (config.max_order < 1 || config.max_order > kCorpusOrderLimit) {
    invalid_parameter("--max-order must be in 1.." + std::to_string(kCorpusOrderLimit));
  }
  std::vector<Family> families;
  for (const auto& f : config.families) families.push_back(parse_family(f));
  if (config.suites.empty()) {
    config.suites = families.empty() ? kSuites : std::vector<std::string>{"uniqueness"};
  }
  for (const auto& s : config.suites) {
    if (std::find(kSuites.begin(), kSuites.end(), s) == kSuites.end()) {
      invalid_parameter("unknown suite '" + s + "' (expected decomposition, equivalences, uniqueness, figures)");
    }
  }
  auto selected = [&](const std::string& s) {
    return std::find(config.suites.begin(), config.suites.end(), s) != config.suites.end();
  };

  std::vector<UniquenessInstance> instances;
  if (selected("uniqueness")) {
    for (const auto& u : default_uniqueness_instances()) {
      const bool wanted = families.empty() || std::find(families.begin(), families.end(), u.family) != families.end();
      if (wanted && instance_order(u) <= config.max_order) instances.push_back(u);
    }
    if (!families.empty() && instances.empty()) {
      invalid_parameter("no instance of the selected families fits --max-order " + std::to_string(config.max_order));
    }
  }

  const Corpus corpus = build_corpus(config.max_order, globals.iso_budget);
  const VerifyOptions options{globals.iso_budget};
  VerificationReport report;
  if (selected("decomposition")) report.append(verify_decomposition_theorem(corpus, options));
  if (selected("equivalences")) report.append(verify_equivalences(corpus, options));
  for (const auto& u : instances) report.append(verify_uniqueness(u.family, u.params, corpus, options));
  if (selected("figures")) report.append(verify_figures());
  report.sort();
  report.header = corpus_header(corpus);
  report.header["iso_budget"] = globals.iso_budget;
  report.header["suites"] = config.suites;
  report.header["families"] = config.families;

  if (!globals.report_path.empty()) write_output(globals.report_path, canonical_dump(report.to_json()));
  std::cout << report.to_table();
  std::cout << "totals: pass=" << report.count(Verdict::pass) << " fail=" << report.count(Verdict::fail)
            << " skipped-budget=" << report.count(Verdict::skipped_budget) << "\n";
  if (report.count(Verdict::fail) > 0) return 1;
  if (report.count(Verdict::skipped_budget) > 0) return 2;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enhanced power graphs of finite groups"};
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--iso-budget", globals.iso_budget, "Node budget for each isomorphism search")
      ->check(CLI::PositiveNumber);
  app.add_option("--report-path", globals.report_path, "Where to write the JSON report or iso result");

  std::string out, kind = "enhanced", format = "json", expr, a, b;
  bool no_fast_path = false;
  VerifyConfig vconf;

  auto* build = app.add_subcommand("build", "Build a group from an expression and print its JSON");
  build->add_option("expr", expr, "Group expression, e.g. \"Q8 x Z15\"")->required();
  build->add_option("-o,--out", out, "Output file (default stdout)");

  auto* spectrum = app.add_subcommand("spectrum", "Print the element-order counts as JSON");
  spectrum->add_option("group", expr, "Group JSON file or expression")->required();
  spectrum->add_option("-o,--out", out, "Output file (default stdout)");

  auto* graph = app.add_subcommand("graph", "Export a graph of a group");
  graph->add_option("group", expr, "Group JSON file or expression")->required();
  graph->add_option("-k,--kind", kind, "enhanced, power, dpower or cyclic");
  graph->add_option("-f,--format", format, "json or dot");
  graph->add_option("-o,--out", out, "Output file (default stdout)");

  auto* iso = app.add_subcommand("iso", "Test whether two groups have isomorphic graphs");
  iso->add_option("a", a, "First group (JSON file or expression)")->required();
  iso->add_option("b", b, "Second group (JSON file or expression)")->required();
  iso->add_option("-k,--kind", kind, "enhanced, power or cyclic");
  iso->add_flag("--no-block-fast-path", no_fast_path, "Always run the refinement search");

  auto* verify = app.add_subcommand("verify", "Replay the theorems over the constructible corpus");
  verify->add_option("--max-order", vconf.max_order, "Largest corpus group order (at most 512)");
  verify->add_option("--families", vconf.families, "Uniqueness families to check")->delimiter(',');
  verify->add_option("--suites", vconf.suites, "decomposition, equivalences, uniqueness, figures")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*build) return cmd_build(expr, out);
    if (*spectrum) return cmd_spectrum(expr, out);
    if (*graph) return cmd_graph(expr, kind, format, out);
    if (*iso) return cmd_iso(globals, a, b, kind, !no_fast_path);
    if (*verify) return cmd_verify(globals, vconf);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
