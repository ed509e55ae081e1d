#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "bicaut/bicyclic.hpp"
#include "bicaut/enumerate.hpp"
#include "bicaut/oracle.hpp"
#include "bicaut/realizer.hpp"

namespace bicaut::cli {

namespace {

struct Config {
  std::string input;
  std::string expression;
  std::string format = "edgelist";
  std::string output;
  std::string manifest;
  bool check = false;
  bool structured = false;
  bool exhaustive = false;
  bool catalog = false;
  bool corrupt = false;
  std::uint64_t seed = 0;
  int min_n = 4;
  int max_n = 12;
  int count = 500;
  std::uint64_t cap_closure = 100000;
};

GraphFormat graph_format(const std::string& name) {
  return name == "graph6" ? GraphFormat::kGraph6 : GraphFormat::kEdgeList;
}

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    buffer << in.rdbuf();
  }
  return buffer.str();
}

std::vector<Graph> read_graphs(const Config& c) {
  const std::string text = read_input(c.input);
  if (graph_format(c.format) == GraphFormat::kGraph6) {
    return parse_graph6_lines(text);
  }
  return {parse_edge_list(text)};
}

// Maps library errors onto the exit-code contract.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const GraphFormatError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const ExprParseError& e) {
    err << "expression error: " << e.what() << '\n';
    return kParseError;
  } catch (const NotConnectedError& e) {
    err << e.what() << '\n';
    return kUnsupported;
  } catch (const DomainError& e) {
    err << e.what() << '\n';
    return kUnsupported;
  } catch (const OracleBoundError& e) {
    err << e.what() << '\n';
    return kUnsupported;
  } catch (const OutsideClassError& e) {
    err << e.what() << '\n';
    return kOutsideS;
  } catch (const SizeBudgetError& e) {
    err << e.what() << '\n';
    return kSizeBudget;
  } catch (const std::runtime_error& e) {
    err << e.what() << '\n';
    return kParseError;
  }
}

int cmd_aut(const Config& c, std::ostream& out) {
  for (const auto& g : read_graphs(c)) {
    const Report r = analyze(g, c.cap_closure);
    out << format_report(r) << '\n';
    if (c.structured) continue;
    for (std::size_t i = 0; i < r.generators.size(); ++i) {
      out << "  g" << i + 1 << " = " << r.generators[i].to_cycle_string() << '\n';
    }
  }
  return kOk;
}

int cmd_verify(const Config& c, std::ostream& out) {
  int status = kOk;
  for (const auto& g : read_graphs(c)) {
    const Report r = analyze(g, c.cap_closure);
    BigInt formula = r.order;
    if (c.corrupt) formula *= 2;
    const BigInt truth = oracle::automorphism_count(g);
    const bool ok = formula == truth;
    if (c.structured) out << format_report(r) << ' ';
    out << "formula=" << formula << " oracle=" << truth << ' '
        << (ok ? "OK" : "MISMATCH") << '\n';
    if (!ok) status = kMismatch;
  }
  return status;
}

int cmd_realize(const Config& c, std::ostream& out) {
  const GroupExpr e = parse_expr(c.expression);
  RealizeOptions options;
  options.catalog_decorations = c.catalog;
  const Realization r = realize(e, options);
  const std::string text = print_graph(r.graph, graph_format(c.format));
  if (c.output.empty()) {
    out << text;
  } else {
    std::ofstream file(c.output, std::ios::binary);
    file << text;
  }
  if (!c.manifest.empty()) {
    std::ofstream file(c.manifest, std::ios::binary);
    file << format_manifest(r.manifest);
  }
  if (c.check) {
    if (r.graph.order() > oracle::vertex_bound()) {
      out << "oracle=skipped (" << r.graph.order() << " vertices)\n";
      return kOk;
    }
    const BigInt truth = oracle::automorphism_count(r.graph);
    const bool ok = truth == order(e);
    out << "oracle=" << truth << ' ' << (ok ? "OK" : "MISMATCH") << '\n';
    if (!ok) return kMismatch;
  }
  return kOk;
}

const std::vector<std::string>& bicyclic_labels() {
  static const std::vector<std::string> labels = {
      "M1", "M2", "M3", "M4", "M5", "M6", "M7", "M8",
      "N1", "N2", "N3", "lem2", "l2.3", "generic"};
  return labels;
}

int cmd_fuzz(const Config& c, std::ostream& out) {
  if (c.max_n > oracle::vertex_bound() || c.min_n > c.max_n || c.count < 0) {
    throw std::runtime_error("fuzz bounds must satisfy min-n <= max-n <= " +
                             std::to_string(oracle::vertex_bound()));
  }
  std::vector<Graph> graphs;
  if (c.exhaustive) {
    for (int n = 1; n <= c.max_n; ++n) {
      for (auto& g : enumerate_connected(n, 2)) graphs.push_back(std::move(g));
    }
  } else {
    StratifiedGenerator gen(c.seed);
    for (int i = 0; i < c.count; ++i) graphs.push_back(gen.next(c.min_n, c.max_n));
  }
  std::map<std::string, int> labels;
  int mismatches = 0, witness_failures = 0, outside = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    const Report r = analyze(g, c.cap_closure);
    const BigInt truth = oracle::automorphism_count(g);
    const bool ok = truth == r.order;
    ++labels[r.case_label];
    mismatches += ok ? 0 : 1;
    witness_failures += r.status == "failed" ? 1 : 0;
    outside += r.family.cyclomatic == 2 && r.class_tag == ClassTag::kOutsideS;
    if (c.structured || !ok) {
      out << "index=" << i << ' ' << format_report(r) << " oracle=" << truth
          << ' ' << (ok ? "OK" : "MISMATCH") << '\n';
      if (!ok) out << "graph6=" << to_graph6(g) << '\n';
    }
  }
  out << "cases";
  for (const auto& [label, n] : labels) out << ' ' << label << '=' << n;
  out << '\n';
  if (!c.exhaustive) {
    out << "coverage missing=";
    std::string missing;
    for (const auto& label : bicyclic_labels()) {
      if (!labels.count(label)) missing += (missing.empty() ? "" : ",") + label;
    }
    out << (missing.empty() ? "none" : missing) << '\n';
  }
  out << "checked=" << graphs.size() << " mismatches=" << mismatches
      << " witness-failures=" << witness_failures << " outside-S=" << outside
      << '\n';
  return mismatches + witness_failures + outside == 0 ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Config c;
  CLI::App app{"Automorphism groups of trees, unicyclic and bicyclic graphs"};
  app.name("bicaut");
  app.require_subcommand(1);
  const std::set<std::string> formats = {"edgelist", "graph6"};

  auto* aut = app.add_subcommand("aut", "Report the automorphism group of a graph");
  auto* verify = app.add_subcommand("verify", "Compare the formula with the oracle");
  for (auto* sub : {aut, verify}) {
    sub->add_option("input", c.input, "Graph file, '-' for stdin")->required();
    sub->add_option("--format", c.format)->check(CLI::IsMember(formats));
    sub->add_option("--cap-closure", c.cap_closure, "Closure cap for witnesses");
    sub->add_flag("--structured", c.structured, "One key=value record per graph");
  }
  verify->add_flag("--corrupt", c.corrupt)->group("");

  auto* realize_cmd = app.add_subcommand("realize", "Build a bicyclic graph for an expression");
  realize_cmd->add_option("expr", c.expression, "Group expression")->required();
  realize_cmd->add_option("--format", c.format)->check(CLI::IsMember(formats));
  realize_cmd->add_option("--output", c.output, "Write the graph here");
  realize_cmd->add_option("--manifest", c.manifest, "Write the build manifest here");
  realize_cmd->add_flag("--check", c.check, "Confirm with the oracle");
  realize_cmd->add_flag("--catalog", c.catalog, "Decorate with asymmetric trees");

  auto* fuzz = app.add_subcommand("fuzz", "Differential test against the oracle");
  fuzz->add_option("--seed", c.seed);
  fuzz->add_option("--min-n", c.min_n);
  fuzz->add_option("--max-n", c.max_n);
  fuzz->add_option("--count", c.count);
  fuzz->add_option("--cap-closure", c.cap_closure);
  fuzz->add_flag("--exhaustive", c.exhaustive, "All bicyclic graphs up to --max-n");
  fuzz->add_flag("--structured", c.structured);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kParseError;
  }

  return guarded(err, [&] {
    if (aut->parsed()) return cmd_aut(c, out);
    if (verify->parsed()) return cmd_verify(c, out);
    if (realize_cmd->parsed()) return cmd_realize(c, out);
    return cmd_fuzz(c, out);
  });
}

}  // namespace bicaut::cli
