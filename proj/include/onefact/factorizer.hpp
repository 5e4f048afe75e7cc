#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "onefact/coloring.hpp"
#include "onefact/multigraph.hpp"
#include "onefact/splitter.hpp"
#include "onefact/verify.hpp"

namespace onefact {

// Threshold knobs. Unset optionals take their default formula for order 2n:
// good-degree cap ceil(n^{5/6}), residual palette cap + r + 1, split bound n^{2/3}.
struct PipelineConfig {
  std::size_t r = 1;
  std::optional<std::size_t> good_degree_cap;
  std::optional<std::size_t> residual_palette;
  std::optional<double> split_bound;
  std::size_t split_retries = 50;
  Seed seed = 0;
  bool enforce_paper_preconditions = false;
};

struct ResolvedConfig {
  std::size_t n = 0;  // half the order
  std::size_t r = 1;
  std::size_t gamma = 1;
  std::size_t j = 1;
  double split_bound = 1.0;
  std::size_t split_retries = 50;
  Seed seed = 0;
  bool strict = false;
};

// Throws std::invalid_argument for gamma == 0, j == 0 or a non-positive bound.
ResolvedConfig resolve_config(const PipelineConfig& config, std::size_t n);

// Smallest integer >= n^{5/6}, computed exactly.
std::size_t ceil_pow_five_sixths(std::size_t n);

enum class Stage { kPreconditions, kSplit, kStep1, kStep2, kStep3, kStep4 };
std::string_view to_string(Stage stage);

struct FailureReport {
  Stage stage = Stage::kPreconditions;
  std::string detail;
  std::optional<Color> color;
  std::vector<VertexId> witness;    // step2: {a, b}; step3: Hall deficiency set
  std::vector<VertexId> neighbors;  // step3: its neighbor set in the residual cross graph
  std::size_t gamma = 0;
  std::vector<char> side_a;                   // A membership by vertex, once split
  std::vector<std::optional<Color>> partial;  // coloring at failure, by edge id
};

// Re-derives the failure witness from the recorded partial coloring.
bool failure_witness_holds(const Multigraph& g, const FailureReport& report);

struct PipelineStats {
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t degree = 0;
  std::size_t gamma = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  double split_bound = 0.0;
  double split_bound_effective = 0.0;  // bound the Step 1 check used
  bool split_ok = false;
  std::size_t split_attempts = 0;
  std::size_t split_max_deviation = 0;
  std::size_t step1_max_missed = 0;  // max over colors and sides
  double step1_missed_limit = 0.0;   // 2 * split_bound_effective + 3
  bool step1_bound_ok = true;
  std::size_t exchanges = 0;
  std::size_t direct_exchanges = 0;
  std::size_t residual_a_edges = 0;
  std::size_t residual_max_degree = 0;
  std::size_t cross_colored_max = 0;
  bool residual_size_bound_ok = true;   // |R_A| < 2 n^{5/3}
  std::size_t residual_class_max = 0;
  bool residual_class_bound_ok = true;  // classes < 2 n^{5/3} / j + 1
  std::size_t final_residual_degree = 0;
  std::string last_stage;

  std::vector<std::pair<std::string, std::string>> key_values() const;
};

struct FactorizeResult {
  std::variant<Factorization, FailureReport> outcome;
  PipelineStats stats;

  bool ok() const { return std::holds_alternative<Factorization>(outcome); }
  const Factorization& factorization() const { return std::get<Factorization>(outcome); }
  const FailureReport& failure() const { return std::get<FailureReport>(outcome); }
};

// Whole pipeline: validate, split, Steps 1-4, then certify the result with
// verify_factorization. A returned factorization has always passed the
// verifier. Throws std::invalid_argument for inputs that are not regular,
// have odd order, or exceed multiplicity r.
FactorizeResult factorize(const Multigraph& g, const PipelineConfig& config);

// Equalized colorings of both halves on k = max(Delta(gA), Delta(gB)) + r
// shared colors, with B's colors renamed so every color has equally many
// edges on both sides. Cross edges stay uncolored.
PartialColoring step1_base_colorings(const Multigraph& g, const Multigraph& gA, const Multigraph& gB,
                                     std::size_t r);

struct PathSearch {
  std::optional<AlternatingPath> path;
  bool direct = false;  // the single-edge fallback was used
  std::size_t n_a = 0, n_b = 0, m_a = 0, m_b = 0;
};

// Five-edge path a-b1-b2-a2-a1-b whose colored edges b1b2 and a2a1 are good:
// inside a half, with both ends of residual degree below gamma. b1 is tried
// in ascending order over N_B and a2 in ascending order over M_A, all
// candidates exhausted before giving up. When no such path exists an
// uncolored edge a-b is used as a one-edge path, if present.
// residual_degree[v] is v's number of uncolored edges inside its own half.
PathSearch find_alternating_path(const PartialColoring& state, const std::vector<char>& side_a,
                                 const std::vector<std::size_t>& residual_degree, VertexId a, VertexId b,
                                 Color color, std::size_t gamma);

// Stateful driver over one split; the stage methods run in order.
class Pipeline {
 public:
  Pipeline(const Multigraph& g, const Partition& split, ResolvedConfig config, double split_bound_effective);

  std::optional<FailureReport> step1();
  std::optional<FailureReport> step2();
  std::optional<FailureReport> step3();
  std::variant<Factorization, FailureReport> step4();

  const PartialColoring& coloring() const { return *coloring_; }
  const PipelineStats& stats() const { return stats_; }
  PipelineStats& stats() { return stats_; }
  const std::vector<std::size_t>& residual_degree() const { return residual_degree_; }
  const std::vector<char>& side_a() const { return side_; }

 private:
  FailureReport failure(Stage stage, std::string detail) const;
  void check_step2_invariants(std::initializer_list<VertexId> touched) const;
  void record_step2_stats();

  const Multigraph& g_;
  ResolvedConfig config_;
  std::vector<char> side_;
  VertexSet a_;
  VertexSet b_;
  Multigraph g_a_;
  Multigraph g_b_;
  std::optional<PartialColoring> coloring_;
  std::size_t k_ = 0;
  std::vector<std::size_t> missed_after_step1_;
  std::vector<std::size_t> residual_degree_;
  std::vector<std::size_t> cross_colored_;
  std::size_t residual_edges_a_ = 0;
  std::size_t residual_edges_b_ = 0;
  PipelineStats stats_;
};

}  // namespace onefact
