#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "steplab/config.hpp"
#include "steplab/metrics.hpp"
#include "steplab/train.hpp"
#include "steplab/verify.hpp"

namespace {

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stod(item));
  }
  return out;
}

std::vector<std::string> parse_string_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cmd_train(const std::string& config_path, std::int64_t seed_override,
              const std::string& out_override) {
  steplab::RunConfig cfg = steplab::load_run_config(config_path);
  if (seed_override >= 0) cfg.seed = static_cast<std::uint64_t>(seed_override);
  if (!out_override.empty()) cfg.out_dir = out_override;
  const steplab::TrainResult r = steplab::run_training(cfg);

  nlohmann::ordered_json j;
  j["metrics_path"] = r.metrics_path;
  j["steps_run"] = r.steps_run;
  j["init_train_loss"] = r.init_train_loss;
  j["final_train_loss"] =
      std::isfinite(r.final_train_loss) ? nlohmann::ordered_json(r.final_train_loss)
                                        : nlohmann::ordered_json(nullptr);
  j["final_val_loss"] =
      std::isfinite(r.final_val_loss) ? nlohmann::ordered_json(r.final_val_loss)
                                      : nlohmann::ordered_json(nullptr);
  j["diverged"] = r.diverged;
  std::cout << j.dump(2) << "\n";
  return r.diverged ? 1 : 0;
}

int cmd_sweep(const std::string& config_path, const std::string& lrs,
              const std::string& warmups, std::int64_t seeds, int workers,
              const std::string& out_override) {
  steplab::SweepSpec spec;
  spec.base = steplab::load_run_config(config_path);
  if (!out_override.empty()) spec.base.out_dir = out_override;
  spec.peak_lrs = parse_double_list(lrs);
  spec.warmup_fracs = parse_double_list(warmups);
  spec.seeds_per_cell = seeds;
  spec.workers = workers;
  const steplab::SweepResult r = steplab::run_sweep(spec);

  nlohmann::ordered_json j;
  j["csv_path"] = r.csv_path;
  j["rows"] = r.rows.size();
  std::size_t diverged = 0;
  for (const auto& row : r.rows) diverged += row.diverged ? 1 : 0;
  j["diverged_cells"] = diverged;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::vector<std::string>& suites, std::uint64_t seed) {
  for (const auto& s : suites) {
    const auto& names = steplab::verify_suite_names();
    if (std::find(names.begin(), names.end(), s) == names.end()) {
      std::cerr << "unknown verify suite: " << s << "\n";
      return 2;
    }
  }
  const steplab::VerifyReport report = steplab::run_verify(suites, seed);
  std::cout << steplab::verify_report_json(report) << "\n";
  for (const auto& s : report.suites) {
    std::cerr << (s.pass ? "PASS " : "FAIL ") << s.suite << " ("
              << s.checks.size() << " checks, " << s.seconds << "s)\n";
  }
  return report.pass ? 0 : 1;
}

int cmd_plotdata(const std::string& metrics, const std::string& fields) {
  std::cout << steplab::plotdata_csv(metrics, parse_string_list(fields));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"optimizer update-size toolkit: training harness and verification oracles"};
  app.require_subcommand(1);

  std::string config_path;
  std::int64_t seed_override = -1;
  std::string out_override;
  auto* train = app.add_subcommand("train", "run one training configuration");
  train->add_option("--config", config_path, "config file path")->required();
  train->add_option("--seed", seed_override, "override the config seed");
  train->add_option("--out", out_override, "override the output directory");

  std::string sweep_config, sweep_lrs, sweep_warmups, sweep_out;
  std::int64_t sweep_seeds = 1;
  int sweep_workers = 1;
  auto* sweep = app.add_subcommand("sweep", "run a learning-rate / warmup grid");
  sweep->add_option("--config", sweep_config, "base config file path")->required();
  sweep->add_option("--lrs", sweep_lrs, "comma-separated peak learning rates")->required();
  sweep->add_option("--warmups", sweep_warmups, "comma-separated warmup fractions")
      ->required();
  sweep->add_option("--seeds", sweep_seeds, "seeds per cell (default 1)");
  sweep->add_option("--workers", sweep_workers, "parallel worker threads");
  sweep->add_option("--out", sweep_out, "override the output directory");

  std::vector<std::string> verify_suites;
  std::uint64_t verify_seed = 42;
  auto* verify = app.add_subcommand("verify", "run the closed-form oracle suites");
  verify->add_option("--suite", verify_suites,
                     "suite name (repeatable; default: all suites)");
  verify->add_option("--seed", verify_seed, "oracle RNG seed");

  std::string plot_metrics, plot_fields;
  auto* plotdata = app.add_subcommand("plotdata", "emit tidy CSV slices of a metrics file");
  plotdata->add_option("--metrics", plot_metrics, "metrics.jsonl path")->required();
  plotdata->add_option("--fields", plot_fields, "comma-separated field names")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (train->parsed()) return cmd_train(config_path, seed_override, out_override);
    if (sweep->parsed()) {
      return cmd_sweep(sweep_config, sweep_lrs, sweep_warmups, sweep_seeds,
                       sweep_workers, sweep_out);
    }
    if (verify->parsed()) return cmd_verify(verify_suites, verify_seed);
    if (plotdata->parsed()) return cmd_plotdata(plot_metrics, plot_fields);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
