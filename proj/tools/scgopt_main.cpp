// Benchmark CLI: runs experiment specs over LIBSVM data, validates specs,
// evaluates the rate-constant calculators, and inspects datasets.
//
// Exit codes: 0 success, 1 usage/config error, 2 data error, 3 every run diverged.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "scg/experiment.hpp"
#include "scg/theory.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitDiverged = 3;

std::string resolve_output(const std::string& configured) {
  const char* dir = std::getenv("SCG_OUT_DIR");
  if (!dir || *dir == '\0') return configured;
  const std::filesystem::path p(configured);
  if (p.is_absolute()) return configured;
  return (std::filesystem::path(dir) / p).string();
}

int cmd_run(const std::string& spec_path) {
  scg::ExperimentSpec spec = scg::load_spec(spec_path);
  const std::string output = resolve_output(spec.output);
  scg::ExperimentResult result = scg::run_experiment(spec, &std::cerr);
  scg::emit_csv(result.rows, output);
  std::cout << "wrote " << result.rows.size() << " rows to " << output << "\n";
  if (result.runs_failed > 0) {
    std::cout << result.runs_failed << "/" << result.runs_total << " runs diverged\n";
    for (const auto& f : result.failures) std::cout << "  " << f << "\n";
  }
  scg::emit_summary(result.rows, std::cout);
  return result.runs_failed == result.runs_total ? kExitDiverged : kExitOk;
}

int cmd_validate(const std::string& spec_path) {
  scg::ExperimentSpec spec = scg::load_spec(spec_path);
  std::cout << "spec ok: " << spec.runs.size() << " run entries, " << spec.seeds.size()
            << " seeds, loss " << scg::loss_name(spec.loss) << "\n";
  return kExitOk;
}

int cmd_check_data(const std::string& path, const std::string& label_map, bool normalize) {
  scg::ParseOptions opts;
  if (!label_map.empty()) opts.labels = scg::LabelMap::parse(label_map);
  scg::SparseDataset ds = scg::load_libsvm_file(path, opts);
  if (normalize) ds = scg::normalize_rows_l2(ds);
  std::int64_t positive = 0;
  double min_norm = std::numeric_limits<double>::infinity();
  double max_norm = 0.0;
  for (scg::Index i = 0; i < ds.num_examples(); ++i) {
    if (ds.label(i) > 0) ++positive;
    const double norm = ds.row_norm(i);
    min_norm = std::min(min_norm, norm);
    max_norm = std::max(max_norm, norm);
  }
  std::cout << "examples:   " << ds.num_examples() << "\n"
            << "features:   " << ds.dim() << "\n"
            << "nonzeros:   " << ds.nonzeros() << "\n"
            << "labels +1:  " << positive << "\n"
            << "labels -1:  " << ds.num_examples() - positive << "\n"
            << "row |a|:    [" << min_norm << ", " << max_norm << "]\n";
  return kExitOk;
}

int cmd_theory(const std::string& inputs_path) {
  std::ifstream in(inputs_path);
  if (!in) {
    std::cerr << "error: cannot open '" << inputs_path << "'\n";
    return kExitUsage;
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "error: invalid JSON: " << e.what() << "\n";
    return kExitUsage;
  }

  scg::TheoryInputs inp;
  inp.epoch_length = j.value("m", 0);
  inp.eta1 = j.value("eta1", 0.0);
  inp.eta2 = j.value("eta2", 0.0);
  inp.beta_hat = j.value("beta_hat", 0.0);
  inp.alpha = j.value("alpha", 2.0);
  inp.tau = j.value("tau", 0.0);
  inp.sigma = j.value("sigma", 0.0);

  const auto constants = scg::rate_constants(inp);
  const auto constants2 = scg::rate_constants_small_c2(inp);
  std::cout << "xi        = " << constants.xi << "\n"
            << "C         = " << constants.c << "\n"
            << "xi_2      = " << constants2.xi << "\n"
            << "C_2       = " << constants2.c << "\n";

  if (j.contains("t")) {
    const int t = j["t"].get<int>();
    if (t > 1 && t <= inp.epoch_length - 1) {
      inp.conjugate_steps = (inp.epoch_length - 1) / t;
      const auto st = scg::switching_rate_constants(inp);
      std::cout << "q         = " << inp.conjugate_steps << "\n"
                << "xi_st     = " << st.xi << "\n"
                << "C_st      = " << st.c << "\n";
    } else {
      std::cout << "t outside 1 < t <= m-1; switching constants skipped\n";
    }
  }

  if (j.contains("n") && j.contains("b") && j.contains("gamma") && j.contains("L")) {
    const auto n = j["n"].get<scg::Index>();
    const auto b = j["b"].get<scg::Index>();
    const double gamma = j["gamma"].get<double>();
    const double lips = j["L"].get<double>();
    const int q = j.contains("t") ? inp.conjugate_steps : 0;
    std::cout << "feasible  = "
              << (scg::check_feasibility(n, b, inp.epoch_length, gamma, inp.eta2, lips, q) ? "yes"
                                                                                           : "no")
              << "\n";
    if (inp.eta2 <= 2.0 / 3.0) {
      const auto suggestion = scg::suggested_gamma(inp.epoch_length, inp.eta2, lips, n, b);
      if (suggestion) {
        std::cout << "gamma <=  " << *suggestion << "\n";
      } else {
        std::cout << "gamma suggestion: none (negative discriminant)\n";
      }
    } else {
      std::cout << "gamma suggestion: none (needs eta2 <= 2/3)\n";
    }
  }

  if (j.contains("tau_o") && j.contains("gamma")) {
    std::cout << "xi_gd     = "
              << scg::dominance_rate(j["tau_o"].get<double>(), inp.epoch_length, inp.eta1,
                                     j["gamma"].get<double>())
              << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stochastic conjugate-gradient benchmark harness"};
  app.require_subcommand(1);

  std::string spec_path;
  auto* run = app.add_subcommand("run", "Execute an experiment spec and write the metrics CSV");
  run->add_option("spec", spec_path, "experiment spec (JSON)")->required();

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check an experiment spec without running it");
  validate->add_option("spec", validate_path, "experiment spec (JSON)")->required();

  std::string theory_path;
  auto* theory = app.add_subcommand("theory", "Evaluate the rate-constant calculators");
  theory->add_option("inputs", theory_path, "calculator inputs (JSON)")->required();

  std::string data_path;
  std::string label_map;
  bool normalize = false;
  auto* check = app.add_subcommand("check-data", "Parse a LIBSVM file and print statistics");
  check->add_option("path", data_path, "LIBSVM file")->required();
  check->add_option("--label-map", label_map, "raw:mapped pairs, e.g. 0:-1,1:1");
  check->add_flag("--normalize", normalize, "l2-normalize rows before reporting stats");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (run->parsed()) return cmd_run(spec_path);
    if (validate->parsed()) return cmd_validate(validate_path);
    if (theory->parsed()) return cmd_theory(theory_path);
    if (check->parsed()) return cmd_check_data(data_path, label_map, normalize);
  } catch (const scg::SpecError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const scg::ParseError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
