#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "scg/optimizers.hpp"

namespace scg {

/// Configuration-file problem (bad schema, unknown names, impossible ranges).
/// Messages carry the offending field path.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DatasetSpec {
  std::string path;
  bool normalize = true;
  LabelMap labels;
  Index dim_override = 0;
};

enum class AlgorithmId {
  kCgSarah,
  kCgSarahRs,
  kCgSarahSt,
  kProxSarah,
  kProxSvrgPlus,
  kProxSpiderBoost,
};
std::string_view algorithm_name(AlgorithmId id);
AlgorithmId parse_algorithm(std::string_view name);
bool is_baseline(AlgorithmId id);

/// Named benchmark configurations v1..v8 (rs-v1..rs-v8 select the restart
/// scheme). Batch and epoch length scale with n: m = floor(n^(1/3)/3) for all,
/// b per the batch rule, gamma = min(sqrt(m)/divisor, 1).
struct PresetSpec {
  enum class BatchRule { kCbrt, kSqrt, kTwoSqrt };
  BatchRule batch_rule = BatchRule::kCbrt;
  BetaFormula::Kind beta = BetaFormula::Kind::kAfr;
  double gamma_divisor = 4.0;
  bool restart = false;
};
std::optional<PresetSpec> find_preset(std::string_view name);

/// One algorithm entry of an experiment; unset overrides fall back to the
/// preset expansion or the documented defaults.
struct RunEntry {
  std::string label;
  AlgorithmId algorithm = AlgorithmId::kCgSarah;
  std::optional<PresetSpec> preset;
  int epochs = 0;
  int epoch_length = 0;
  Index batch_size = 0;
  Index outer_batch = 0;
  double gamma = 0.0;
  double eta2 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double rho = 0.0;
  double beta_cap = 0.0;
  std::optional<double> frpr_cap;
  std::optional<BetaFormula::Kind> beta_kind;
  double eta = 0.0;       // baseline fixed step
  int switch_period = 0;  // t
  double eta_fixed = 0.0;
  bool eta_fixed_inv_lipschitz = false;  // "1/L" in the file
  double metric_eta = 0.0;
  bool sample_epoch_output = false;
};

struct ExperimentSpec {
  DatasetSpec dataset;
  LossKind loss = LossKind::kNormalizedSigmoid;
  std::optional<double> lambda;  // exactly one of lambda / lambda_rule is set
  std::string lambda_rule;
  double metric_eta = 0.5;
  int epochs = 10;  // default outer-epoch count for every run
  std::vector<std::uint64_t> seeds;
  std::string output;
  std::vector<RunEntry> runs;
};

ExperimentSpec parse_spec(const std::string& json_text);
ExperimentSpec load_spec(const std::string& path);

/// Resolves the l1 weight: explicit value, or one of the per-dataset rules
/// "paper:w8a" (1e-2/n), "paper:a9a" (1e-3/n), "paper:gisette" (1e-7*sqrt(n/d)).
double resolve_lambda(const ExperimentSpec& spec, Index n, Index d);

/// Expands preset + overrides into a concrete configuration for dataset size n.
OptimizerConfig make_optimizer_config(const RunEntry& entry, const ExperimentSpec& spec, Index n,
                                      double lipschitz, std::ostream* log = nullptr);
BaselineConfig make_baseline_config(const RunEntry& entry, const ExperimentSpec& spec);

/// One CSV row of the experiment output.
struct MetricRow {
  std::string run_id;
  std::string algo;
  std::string dataset;
  std::string loss;
  std::uint64_t seed = 0;
  int epoch = 0;
  double effective_passes = 0.0;
  double objective = 0.0;
  double subopt = 0.0;
  double gmap_sq = 0.0;
  std::int64_t ls_calls = 0;
  std::int64_t fallback_count = 0;
  double wall_ms = 0.0;
};

struct ExperimentResult {
  std::vector<MetricRow> rows;
  double best_objective = 0.0;  // smallest finite objective over all rows
  int runs_total = 0;
  int runs_failed = 0;
  std::vector<std::string> failures;
};

/// Executes every (run entry, seed) pair. The suboptimality column is
/// backfilled against the best objective observed anywhere in the experiment.
/// Divergent runs keep their partial rows (the last one shows the blow-up)
/// and are reported in failures; remaining runs continue.
ExperimentResult run_experiment(const ExperimentSpec& spec, std::ostream* log = nullptr);

std::string csv_string(const std::vector<MetricRow>& rows);
/// Writes via a temp file + rename so readers never observe a partial file.
void emit_csv(const std::vector<MetricRow>& rows, const std::string& path);
std::vector<MetricRow> parse_csv(const std::string& text);

/// Console table: per algorithm, the median final suboptimality and gradient
/// mapping over seeds, sorted by suboptimality.
void emit_summary(const std::vector<MetricRow>& rows, std::ostream& out);

}  // namespace scg
