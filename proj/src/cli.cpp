#include "onefact/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "onefact/factorizer.hpp"
#include "onefact/instances.hpp"
#include "onefact/io.hpp"
#include "onefact/verify.hpp"

namespace onefact {

namespace {

struct GenArgs {
  std::size_t n = 0;
  std::size_t n2 = 0;
  std::size_t d = 0;
  std::size_t r = 1;
  Seed seed = 0;
  std::size_t swaps = 0;
  bool disjoint = false;
  std::string output;
};

struct FactorizeArgs {
  std::string graph;
  std::string output;
  std::optional<std::size_t> r;
  Seed seed = 0;
  bool strict = false;
  std::optional<std::size_t> gamma;
  std::optional<std::size_t> residual_palette;
  std::optional<double> split_bound;
  std::size_t split_retries = 50;
};

struct VerifyArgs {
  std::string graph;
  std::string factorization;
};

Multigraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph(in);
}

// Writes via a buffer so a failed write never leaves a partial file.
void save(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << text;
  if (!file) throw std::runtime_error("write failed for " + path);
}

int gen(const std::string& kind, const GenArgs& a, std::ostream& out) {
  Multigraph g;
  std::vector<std::string> comments;
  if (kind == "extremal") {
    g = extremal_graph(a.n, a.r, a.disjoint);
    comments.push_back("extremal n=" + std::to_string(a.n) + " r=" + std::to_string(a.r) +
                       (a.disjoint ? " disjoint" : ""));
  } else if (kind == "factors") {
    g = regular_from_factors(a.n2, a.d, a.r, a.seed);
    if (a.swaps) g = edge_swap_shuffle(g, a.r, a.swaps, a.seed);
    comments.push_back("factors n2=" + std::to_string(a.n2) + " d=" + std::to_string(a.d) + " r=" +
                       std::to_string(a.r) + " swaps=" + std::to_string(a.swaps));
  } else {
    g = random_bipartite_regular(a.n, a.d, a.r, a.seed);
    comments.push_back("bipartite n=" + std::to_string(a.n) + " d=" + std::to_string(a.d) + " r=" +
                       std::to_string(a.r));
  }
  comments.push_back("seed=" + std::to_string(a.seed));
  std::ostringstream text;
  write_graph(text, g, comments);
  save(a.output, text.str(), out);
  return kExitOk;
}

int factorize_cmd(const FactorizeArgs& a, std::ostream& out) {
  const Multigraph g = load_graph(a.graph);
  PipelineConfig config;
  config.r = a.r.value_or(std::max<std::size_t>(g.multiplicity(), 1));
  config.seed = a.seed;
  config.enforce_paper_preconditions = a.strict;
  config.good_degree_cap = a.gamma;
  config.residual_palette = a.residual_palette;
  config.split_bound = a.split_bound;
  config.split_retries = a.split_retries;
  const FactorizeResult result = factorize(g, config);
  for (const auto& [key, value] : result.stats.key_values()) out << key << '=' << value << '\n';
  if (!result.ok()) {
    const FailureReport& f = result.failure();
    out << "status=failure\n";
    out << "stage=" << to_string(f.stage) << '\n';
    out << "detail=" << f.detail << '\n';
    if (f.color) out << "color=" << *f.color << '\n';
    if (!f.witness.empty()) {
      out << "witness=";
      for (std::size_t i = 0; i < f.witness.size(); ++i) out << (i ? "," : "") << f.witness[i];
      out << '\n';
    }
    return kExitFailure;
  }
  out << "status=ok\n";
  std::ostringstream text;
  write_factorization(text, g.num_vertices(), to_pairs(g, result.factorization()));
  save(a.output, text.str(), out);
  return kExitOk;
}

int verify_cmd(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const Multigraph g = load_graph(a.graph);
  std::ifstream in(a.factorization);
  if (!in) throw std::runtime_error("cannot open " + a.factorization);
  const FactorFile file = read_factorization(in);
  if (file.num_vertices != g.num_vertices()) {
    err << "error: factorization has " << file.num_vertices << " vertices, graph has " << g.num_vertices() << '\n';
    return kExitInput;
  }
  const PairAssignment lifted = assign_edge_ids(g, file.factors);
  const VerificationReport report = verify_factorization(g, lifted.factorization);
  std::size_t count = 0;
  for (const auto* list : {&lifted.violations, &report.violations}) {
    for (const auto& v : *list) {
      out << "violation " << v.describe() << '\n';
      ++count;
    }
  }
  out << "status=" << (count ? "violations" : "ok") << '\n';
  return count ? kExitFailure : kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certifying 1-factorization of dense regular multigraphs"};
  app.require_subcommand(1);

  auto* gen_cmd = app.add_subcommand("gen", "generate a graph file");
  gen_cmd->require_subcommand(1);
  GenArgs gen_args;
  auto* extremal = gen_cmd->add_subcommand("extremal", "two r-fold cliques joined by an (r-1)-fold matching");
  extremal->add_option("--n", gen_args.n, "clique size (odd)")->required();
  extremal->add_option("--r", gen_args.r, "multiplicity")->required();
  extremal->add_flag("--disjoint", gen_args.disjoint, "allow r = 1 (two disjoint cliques)");
  auto* factors = gen_cmd->add_subcommand("factors", "union of round-robin 1-factors");
  factors->add_option("--n2", gen_args.n2, "order (even)")->required();
  factors->add_option("--d", gen_args.d, "degree")->required();
  factors->add_option("--r", gen_args.r, "multiplicity cap")->required();
  factors->add_option("--swaps", gen_args.swaps, "edge-switch proposals applied afterwards");
  auto* bipartite = gen_cmd->add_subcommand("bipartite", "random bipartite regular multigraph");
  bipartite->add_option("--n", gen_args.n, "side size")->required();
  bipartite->add_option("--d", gen_args.d, "degree")->required();
  bipartite->add_option("--r", gen_args.r, "multiplicity cap")->required();
  for (auto* sub : {extremal, factors, bipartite}) {
    sub->add_option("--seed", gen_args.seed, "rng seed");
    sub->add_option("-o,--output", gen_args.output, "output file (default stdout)");
  }

  auto* fact_cmd = app.add_subcommand("factorize", "run the factorization pipeline");
  FactorizeArgs fact_args;
  fact_cmd->add_option("graph", fact_args.graph, "graph file")->required();
  fact_cmd->add_option("-o,--output", fact_args.output, "factorization file (default stdout)");
  fact_cmd->add_option("--r", fact_args.r, "multiplicity bound (default: the graph's multiplicity)");
  fact_cmd->add_option("--seed", fact_args.seed, "split seed");
  fact_cmd->add_flag("--strict", fact_args.strict, "refuse inputs below the guaranteed-success thresholds");
  fact_cmd->add_option("--gamma", fact_args.gamma, "good-degree cap");
  fact_cmd->add_option("--residual-palette", fact_args.residual_palette, "residual palette size j");
  fact_cmd->add_option("--split-bound", fact_args.split_bound, "split deviation bound");
  fact_cmd->add_option("--split-retries", fact_args.split_retries, "split attempts");

  auto* ver_cmd = app.add_subcommand("verify", "check a factorization file against a graph");
  VerifyArgs ver_args;
  ver_cmd->add_option("graph", ver_args.graph, "graph file")->required();
  ver_cmd->add_option("factorization", ver_args.factorization, "factorization file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (gen_cmd->parsed()) {
      for (auto* sub : {extremal, factors, bipartite}) {
        if (sub->parsed()) return gen(sub->get_name(), gen_args, out);
      }
    }
    if (fact_cmd->parsed()) return factorize_cmd(fact_args, out);
    return verify_cmd(ver_args, out, err);
  } catch (const std::logic_error& e) {
    // invalid_argument and out_of_range are input problems; other logic errors are bugs.
    if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::out_of_range*>(&e)) {
      err << "error: " << e.what() << '\n';
      return kExitInput;
    }
    throw;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace onefact
