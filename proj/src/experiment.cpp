#include "scg/experiment.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace scg {

namespace {

using nlohmann::json;

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw SpecError(path + ": " + what);
}

const json* find(const json& j, const char* key) {
  const auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

double require_number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

double optional_number(const json& j, const char* key, const std::string& path, double fallback) {
  const json* v = find(j, key);
  if (!v) return fallback;
  return require_number(*v, path + "." + key);
}

std::int64_t optional_integer(const json& j, const char* key, const std::string& path,
                              std::int64_t fallback) {
  const json* v = find(j, key);
  if (!v) return fallback;
  if (!v->is_number_integer()) fail(path + "." + key, "expected an integer");
  return v->get<std::int64_t>();
}

std::string require_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

}  // namespace

std::string_view algorithm_name(AlgorithmId id) {
  switch (id) {
    case AlgorithmId::kCgSarah: return "acc-prox-cg-sarah";
    case AlgorithmId::kCgSarahRs: return "acc-prox-cg-sarah-rs";
    case AlgorithmId::kCgSarahSt: return "acc-prox-cg-sarah-st";
    case AlgorithmId::kProxSarah: return "prox-sarah";
    case AlgorithmId::kProxSvrgPlus: return "prox-svrg+";
    case AlgorithmId::kProxSpiderBoost: return "prox-spiderboost";
  }
  throw std::invalid_argument("unknown algorithm id");
}

AlgorithmId parse_algorithm(std::string_view name) {
  const std::string n = lower(name);
  if (n == "acc-prox-cg-sarah") return AlgorithmId::kCgSarah;
  if (n == "acc-prox-cg-sarah-rs") return AlgorithmId::kCgSarahRs;
  if (n == "acc-prox-cg-sarah-st") return AlgorithmId::kCgSarahSt;
  if (n == "prox-sarah" || n == "proxsarah") return AlgorithmId::kProxSarah;
  if (n == "prox-svrg+" || n == "proxsvrg+") return AlgorithmId::kProxSvrgPlus;
  if (n == "prox-spiderboost" || n == "spiderboost") return AlgorithmId::kProxSpiderBoost;
  throw SpecError("unknown algorithm name '" + std::string(name) + "'");
}

bool is_baseline(AlgorithmId id) {
  return id == AlgorithmId::kProxSarah || id == AlgorithmId::kProxSvrgPlus ||
         id == AlgorithmId::kProxSpiderBoost;
}

std::optional<PresetSpec> find_preset(std::string_view name) {
  std::string n = lower(name);
  PresetSpec preset;
  if (n.starts_with("rs-")) {
    preset.restart = true;
    n = n.substr(3);
  }
  if (n.size() != 2 || n[0] != 'v' || n[1] < '1' || n[1] > '8') return std::nullopt;
  const int variant = n[1] - '0';
  using Rule = PresetSpec::BatchRule;
  switch (variant) {
    case 1: preset.batch_rule = Rule::kCbrt; preset.beta = BetaFormula::Kind::kAfr; break;
    case 2: preset.batch_rule = Rule::kCbrt; preset.beta = BetaFormula::Kind::kFrpr; break;
    case 3: preset.batch_rule = Rule::kSqrt; preset.beta = BetaFormula::Kind::kAfr; break;
    case 4: preset.batch_rule = Rule::kSqrt; preset.beta = BetaFormula::Kind::kAfr; break;
    case 5: preset.batch_rule = Rule::kSqrt; preset.beta = BetaFormula::Kind::kFrpr; break;
    case 6: preset.batch_rule = Rule::kSqrt; preset.beta = BetaFormula::Kind::kFrpr; break;
    case 7: preset.batch_rule = Rule::kTwoSqrt; preset.beta = BetaFormula::Kind::kAfr; break;
    case 8: preset.batch_rule = Rule::kTwoSqrt; preset.beta = BetaFormula::Kind::kFrpr; break;
  }
  preset.gamma_divisor = (variant == 4 || variant == 6) ? 5.0 : 4.0;
  return preset;
}

namespace {

RunEntry parse_run_entry(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  RunEntry entry;

  const json* preset_field = find(j, "preset");
  if (preset_field) {
    const std::string name = require_string(*preset_field, path + ".preset");
    const auto preset = find_preset(name);
    if (!preset) fail(path + ".preset", "unknown preset '" + name + "'");
    entry.preset = preset;
    entry.algorithm = preset->restart ? AlgorithmId::kCgSarahRs : AlgorithmId::kCgSarah;
    entry.label = lower(name);
  }
  if (const json* algo = find(j, "algorithm")) {
    try {
      entry.algorithm = parse_algorithm(require_string(*algo, path + ".algorithm"));
    } catch (const SpecError& e) {
      fail(path + ".algorithm", e.what());
    }
    if (entry.preset && entry.preset->restart && entry.algorithm != AlgorithmId::kCgSarahRs)
      fail(path, "rs- preset conflicts with the requested algorithm");
  } else if (!preset_field) {
    fail(path, "entry needs an algorithm or a preset");
  }
  if (entry.preset && is_baseline(entry.algorithm))
    fail(path, "presets only apply to the conjugate SARAH family");

  if (const json* label = find(j, "label")) entry.label = require_string(*label, path + ".label");
  entry.epochs = static_cast<int>(optional_integer(j, "epochs", path, 0));
  if (const json* v = find(j, "S")) {
    entry.epochs = static_cast<int>(require_number(*v, path + ".S"));
  }
  entry.epoch_length = static_cast<int>(optional_integer(j, "m", path, 0));
  entry.batch_size = optional_integer(j, "b", path, 0);
  entry.outer_batch = optional_integer(j, "B", path, 0);
  entry.gamma = optional_number(j, "gamma", path, 0.0);
  entry.eta2 = optional_number(j, "eta2", path, 0.0);
  entry.c1 = optional_number(j, "c1", path, 0.0);
  entry.c2 = optional_number(j, "c2", path, 0.0);
  entry.rho = optional_number(j, "rho", path, 0.0);
  entry.beta_cap = optional_number(j, "beta_cap", path, 0.0);
  entry.eta = optional_number(j, "eta", path, 0.0);
  entry.switch_period = static_cast<int>(optional_integer(j, "t", path, 0));
  entry.metric_eta = optional_number(j, "metric_eta", path, 0.0);
  if (const json* v = find(j, "frpr_cap")) entry.frpr_cap = require_number(*v, path + ".frpr_cap");
  if (const json* v = find(j, "sample_epoch_output")) {
    if (!v->is_boolean()) fail(path + ".sample_epoch_output", "expected a boolean");
    entry.sample_epoch_output = v->get<bool>();
  }
  if (const json* v = find(j, "beta")) {
    const std::string b = lower(require_string(*v, path + ".beta"));
    if (b == "afr") {
      entry.beta_kind = BetaFormula::Kind::kAfr;
    } else if (b == "frpr") {
      entry.beta_kind = BetaFormula::Kind::kFrpr;
    } else {
      fail(path + ".beta", "expected 'afr' or 'frpr'");
    }
  }
  if (const json* v = find(j, "eta_f")) {
    if (v->is_string()) {
      const std::string s = lower(require_string(*v, path + ".eta_f"));
      if (s != "1/l") fail(path + ".eta_f", "expected a number or the string '1/L'");
      entry.eta_fixed_inv_lipschitz = true;
    } else {
      entry.eta_fixed = require_number(*v, path + ".eta_f");
    }
  }
  if (entry.label.empty()) entry.label = std::string(algorithm_name(entry.algorithm));
  return entry;
}

}  // namespace

ExperimentSpec parse_spec(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("$", "expected a JSON object");

  ExperimentSpec spec;
  const json* ds = find(j, "dataset");
  if (!ds || !ds->is_object()) fail("dataset", "required object");
  const json* path = find(*ds, "path");
  if (!path) fail("dataset.path", "required");
  spec.dataset.path = require_string(*path, "dataset.path");
  if (const json* v = find(*ds, "normalize")) {
    if (!v->is_boolean()) fail("dataset.normalize", "expected a boolean");
    spec.dataset.normalize = v->get<bool>();
  }
  if (const json* v = find(*ds, "label_map")) {
    try {
      spec.dataset.labels = LabelMap::parse(require_string(*v, "dataset.label_map"));
    } catch (const std::invalid_argument& e) {
      fail("dataset.label_map", e.what());
    }
  }
  spec.dataset.dim_override = optional_integer(*ds, "dim_override", "dataset", 0);

  const json* loss = find(j, "loss");
  if (!loss) fail("loss", "required");
  try {
    spec.loss = parse_loss_kind(require_string(*loss, "loss"));
  } catch (const std::invalid_argument& e) {
    fail("loss", e.what());
  }

  const json* lambda = find(j, "lambda");
  const json* rule = find(j, "lambda_rule");
  if ((lambda == nullptr) == (rule == nullptr))
    fail("lambda", "exactly one of lambda / lambda_rule is required");
  if (lambda) {
    spec.lambda = require_number(*lambda, "lambda");
    if (*spec.lambda < 0.0) fail("lambda", "must be >= 0");
  } else {
    spec.lambda_rule = require_string(*rule, "lambda_rule");
  }

  spec.metric_eta = optional_number(j, "metric_eta", "$", 0.5);
  if (!(spec.metric_eta > 0.0)) fail("metric_eta", "must be positive");
  spec.epochs = static_cast<int>(optional_integer(j, "epochs", "$", 10));
  if (spec.epochs < 1) fail("epochs", "must be >= 1");

  const json* seeds = find(j, "seeds");
  if (!seeds || !seeds->is_array() || seeds->empty()) fail("seeds", "required non-empty array");
  for (std::size_t i = 0; i < seeds->size(); ++i) {
    const json& s = (*seeds)[i];
    if (!s.is_number_integer() || s.get<std::int64_t>() < 0)
      fail("seeds[" + std::to_string(i) + "]", "expected a non-negative integer");
    spec.seeds.push_back(s.get<std::uint64_t>());
  }

  const json* output = find(j, "output");
  if (!output) fail("output", "required");
  spec.output = require_string(*output, "output");

  const json* runs = find(j, "runs");
  if (!runs || !runs->is_array() || runs->empty()) fail("runs", "required non-empty array");
  for (std::size_t i = 0; i < runs->size(); ++i)
    spec.runs.push_back(parse_run_entry((*runs)[i], "runs[" + std::to_string(i) + "]"));
  return spec;
}

ExperimentSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open spec file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_spec(buffer.str());
}

double resolve_lambda(const ExperimentSpec& spec, Index n, Index d) {
  if (spec.lambda) return *spec.lambda;
  const std::string rule = lower(spec.lambda_rule);
  const double nn = static_cast<double>(n);
  if (rule == "paper:w8a") return 1e-2 / nn;
  if (rule == "paper:a9a") return 1e-3 / nn;
  if (rule == "paper:gisette") return 1e-7 * std::sqrt(nn) / std::sqrt(static_cast<double>(d));
  throw SpecError("lambda_rule: unknown rule '" + spec.lambda_rule + "'");
}

OptimizerConfig make_optimizer_config(const RunEntry& entry, const ExperimentSpec& spec, Index n,
                                      double lipschitz, std::ostream* log) {
  OptimizerConfig cfg;
  cfg.epochs = entry.epochs > 0 ? entry.epochs : spec.epochs;
  cfg.metric_eta = entry.metric_eta > 0.0 ? entry.metric_eta : spec.metric_eta;
  cfg.sample_epoch_output = entry.sample_epoch_output;

  const double cbrt_n = std::cbrt(static_cast<double>(n));
  if (entry.preset) {
    using Rule = PresetSpec::BatchRule;
    double raw_b = 0.0;
    switch (entry.preset->batch_rule) {
      case Rule::kCbrt: raw_b = cbrt_n; break;
      case Rule::kSqrt: raw_b = std::sqrt(static_cast<double>(n)); break;
      case Rule::kTwoSqrt: raw_b = 2.0 * std::sqrt(static_cast<double>(n)); break;
    }
    cfg.batch_size = std::clamp<Index>(static_cast<Index>(std::floor(raw_b)), 1, n);
    cfg.epoch_length = std::max(1, static_cast<int>(std::floor(cbrt_n / 3.0)));
    cfg.beta.kind = entry.preset->beta;
    const double gamma = std::sqrt(static_cast<double>(cfg.epoch_length)) / entry.preset->gamma_divisor;
    cfg.gamma = std::min(gamma, 1.0);
    if (gamma > 1.0 && log)
      *log << "note: preset momentum sqrt(m)/" << entry.preset->gamma_divisor
           << " = " << gamma << " clamped to 1\n";
  }
  if (entry.epoch_length > 0) cfg.epoch_length = entry.epoch_length;
  if (entry.batch_size > 0) cfg.batch_size = entry.batch_size;
  if (entry.gamma > 0.0) cfg.gamma = entry.gamma;
  if (entry.eta2 > 0.0) cfg.eta2 = entry.eta2;
  if (entry.c1 > 0.0) cfg.wolfe.c1 = entry.c1;
  if (entry.c2 > 0.0) cfg.wolfe.c2 = entry.c2;
  if (entry.rho > 0.0) cfg.beta.rho = entry.rho;
  if (entry.beta_cap > 0.0) cfg.beta.cap = entry.beta_cap;
  if (entry.beta_kind) cfg.beta.kind = *entry.beta_kind;
  cfg.beta.frpr_cap = entry.frpr_cap;
  if (entry.algorithm == AlgorithmId::kCgSarahSt) {
    cfg.switch_period = entry.switch_period;
    cfg.eta_fixed = entry.eta_fixed_inv_lipschitz ? 1.0 / lipschitz : entry.eta_fixed;
    if (cfg.switch_period <= 1) throw SpecError("runs: switching variant needs t > 1");
    if (!(cfg.eta_fixed > 0.0)) throw SpecError("runs: switching variant needs eta_f");
  }
  return cfg;
}

BaselineConfig make_baseline_config(const RunEntry& entry, const ExperimentSpec& spec) {
  BaselineConfig cfg;
  cfg.epochs = entry.epochs > 0 ? entry.epochs : spec.epochs;
  cfg.metric_eta = entry.metric_eta > 0.0 ? entry.metric_eta : spec.metric_eta;
  cfg.batch_size = entry.batch_size;
  cfg.outer_batch = entry.outer_batch;
  cfg.epoch_length = entry.epoch_length;
  cfg.eta = entry.eta;
  cfg.gamma = entry.gamma;
  return cfg;
}

namespace {

std::string dataset_label(const std::string& path) {
  const std::filesystem::path p(path);
  const std::string stem = p.stem().string();
  return stem.empty() ? path : stem;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void append_rows(std::vector<MetricRow>& rows, const RunTrace& trace, const std::string& run_id,
                 const std::string& dataset, const std::string& loss, std::uint64_t seed) {
  for (const EpochRecord& rec : trace.epochs) {
    MetricRow row;
    row.run_id = run_id;
    row.algo = trace.algorithm;
    row.dataset = dataset;
    row.loss = loss;
    row.seed = seed;
    row.epoch = rec.epoch;
    row.effective_passes = rec.effective_passes;
    row.objective = rec.objective;
    row.subopt = 0.0;  // backfilled once the best objective is known
    row.gmap_sq = rec.gmap_sq;
    row.ls_calls = rec.ls_calls;
    row.fallback_count = rec.fallbacks;
    row.wall_ms = rec.wall_ms;
    rows.push_back(std::move(row));
  }
}

}  // namespace

ExperimentResult run_experiment(const ExperimentSpec& spec, std::ostream* log) {
  SparseDataset ds = load_libsvm_file(spec.dataset.path,
                                      ParseOptions{spec.dataset.labels, spec.dataset.dim_override});
  if (spec.dataset.normalize) ds = normalize_rows_l2(ds);
  const Index n = ds.num_examples();
  if (n == 0) throw ParseError(spec.dataset.path + ": empty dataset");
  const double lambda = resolve_lambda(spec, n, ds.dim());
  const double lipschitz = lipschitz_constant(spec.loss);
  const std::string ds_label = dataset_label(spec.dataset.path);
  const std::string loss_label(loss_name(spec.loss));

  // Resolve every configuration up front so config errors surface before any
  // work runs.
  struct Prepared {
    const RunEntry* entry;
    OptimizerConfig cfg;
    BaselineConfig baseline;
  };
  std::vector<Prepared> prepared;
  for (const RunEntry& entry : spec.runs) {
    Prepared p{&entry, {}, {}};
    if (is_baseline(entry.algorithm)) {
      p.baseline = make_baseline_config(entry, spec);
    } else {
      p.cfg = make_optimizer_config(entry, spec, n, lipschitz, log);
    }
    prepared.push_back(std::move(p));
  }

  ExperimentResult result;
  const Vector w0 = Vector::Zero(ds.dim());
  for (std::size_t idx = 0; idx < prepared.size(); ++idx) {
    for (const std::uint64_t seed : spec.seeds) {
      const RunEntry& entry = *prepared[idx].entry;
      const std::string run_id =
          "run" + std::to_string(idx) + "." + prepared[idx].entry->label + ".s" + std::to_string(seed);
      ++result.runs_total;
      RunTrace trace;
      try {
        switch (entry.algorithm) {
          case AlgorithmId::kCgSarah: {
            OptimizerConfig cfg = prepared[idx].cfg;
            cfg.seed = seed;
            trace = run_acc_prox_cg_sarah(cfg, ds, spec.loss, lambda, w0);
            break;
          }
          case AlgorithmId::kCgSarahRs: {
            OptimizerConfig cfg = prepared[idx].cfg;
            cfg.seed = seed;
            trace = run_acc_prox_cg_sarah_rs(cfg, ds, spec.loss, lambda, w0);
            break;
          }
          case AlgorithmId::kCgSarahSt: {
            OptimizerConfig cfg = prepared[idx].cfg;
            cfg.seed = seed;
            trace = run_acc_prox_cg_sarah_st(cfg, ds, spec.loss, lambda, w0);
            break;
          }
          case AlgorithmId::kProxSarah: {
            BaselineConfig cfg = prepared[idx].baseline;
            cfg.seed = seed;
            trace = run_prox_sarah(cfg, ds, spec.loss, lambda, w0);
            break;
          }
          case AlgorithmId::kProxSvrgPlus: {
            BaselineConfig cfg = prepared[idx].baseline;
            cfg.seed = seed;
            trace = run_prox_svrg_plus(cfg, ds, spec.loss, lambda, w0);
            break;
          }
          case AlgorithmId::kProxSpiderBoost: {
            BaselineConfig cfg = prepared[idx].baseline;
            cfg.seed = seed;
            trace = run_prox_spiderboost(cfg, ds, spec.loss, lambda, w0);
            break;
          }
        }
      } catch (const DivergenceError& e) {
        ++result.runs_failed;
        result.failures.push_back(run_id + ": " + e.what());
        if (log) *log << "warning: " << run_id << " diverged: " << e.what() << "\n";
        append_rows(result.rows, e.trace, run_id, ds_label, loss_label, seed);
        continue;
      }
      append_rows(result.rows, trace, run_id, ds_label, loss_label, seed);
    }
  }

  double best = std::numeric_limits<double>::infinity();
  for (const MetricRow& row : result.rows)
    if (std::isfinite(row.objective)) best = std::min(best, row.objective);
  result.best_objective = best;
  for (MetricRow& row : result.rows) row.subopt = row.objective - best;
  return result;
}

std::string csv_string(const std::vector<MetricRow>& rows) {
  std::string out =
      "run_id,algo,dataset,loss,seed,epoch,effective_passes,objective,subopt,gmap_sq,"
      "ls_calls,fallback_count,wall_ms\n";
  for (const MetricRow& r : rows) {
    out += csv_quote(r.run_id) + ',' + csv_quote(r.algo) + ',' + csv_quote(r.dataset) + ',' +
           csv_quote(r.loss) + ',' + std::to_string(r.seed) + ',' + std::to_string(r.epoch) + ',' +
           format_double(r.effective_passes) + ',' + format_double(r.objective) + ',' +
           format_double(r.subopt) + ',' + format_double(r.gmap_sq) + ',' +
           std::to_string(r.ls_calls) + ',' + std::to_string(r.fallback_count) + ',' +
           format_double(r.wall_ms) + '\n';
  }
  return out;
}

void emit_csv(const std::vector<MetricRow>& rows, const std::string& path) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + tmp + "' for writing");
    out << csv_string(rows);
    if (!out) throw std::runtime_error("write failed for '" + tmp + "'");
  }
  std::filesystem::rename(tmp, path);
}

std::vector<MetricRow> parse_csv(const std::string& text) {
  std::vector<MetricRow> rows;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (first) {
      first = false;
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      const char c = line[i];
      if (quoted) {
        if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else if (c == '"') {
          quoted = false;
        } else {
          cur += c;
        }
      } else if (c == '"') {
        quoted = true;
      } else if (c == ',') {
        fields.push_back(std::move(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    fields.push_back(std::move(cur));
    if (fields.size() != 13) throw std::runtime_error("csv row with wrong field count");
    MetricRow r;
    r.run_id = fields[0];
    r.algo = fields[1];
    r.dataset = fields[2];
    r.loss = fields[3];
    r.seed = std::stoull(fields[4]);
    r.epoch = std::stoi(fields[5]);
    r.effective_passes = std::stod(fields[6]);
    r.objective = std::stod(fields[7]);
    r.subopt = std::stod(fields[8]);
    r.gmap_sq = std::stod(fields[9]);
    r.ls_calls = std::stoll(fields[10]);
    r.fallback_count = std::stoll(fields[11]);
    r.wall_ms = std::stod(fields[12]);
    rows.push_back(std::move(r));
  }
  return rows;
}

void emit_summary(const std::vector<MetricRow>& rows, std::ostream& out) {
  // Final row per run id.
  std::map<std::string, MetricRow> finals;
  for (const MetricRow& r : rows) {
    auto [it, inserted] = finals.try_emplace(r.run_id, r);
    if (!inserted && r.epoch > it->second.epoch) it->second = r;
  }
  std::map<std::string, std::pair<std::vector<double>, std::vector<double>>> per_algo;
  for (const auto& [id, r] : finals) {
    per_algo[r.algo].first.push_back(r.subopt);
    per_algo[r.algo].second.push_back(r.gmap_sq);
  }
  const auto median = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t k = v.size() / 2;
    return v.size() % 2 == 1 ? v[k] : 0.5 * (v[k - 1] + v[k]);
  };
  std::vector<std::tuple<double, double, std::string>> table;
  for (auto& [algo, pair] : per_algo)
    table.emplace_back(median(pair.first), median(pair.second), algo);
  std::sort(table.begin(), table.end());
  out << "algorithm                     median_final_subopt   median_final_gmap_sq\n";
  char buf[128];
  for (const auto& [subopt, gmap, algo] : table) {
    std::snprintf(buf, sizeof(buf), "%-28s  %-20.6g  %-20.6g\n", algo.c_str(), subopt, gmap);
    out << buf;
  }
}

}  // namespace scg
