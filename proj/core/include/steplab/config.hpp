#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "steplab/model.hpp"
#include "steplab/optim.hpp"
#include "steplab/schedule.hpp"
#include "steplab/task.hpp"

namespace steplab {

/// One training run, assembled from a flat sectioned key = value file.
/// Every key has a default; unknown sections or keys are hard errors so a
/// typo cannot silently fall back to a default.
struct RunConfig {
  // [run]
  TaskKind task = TaskKind::CharLm;
  std::int64_t steps = 1000;
  std::int64_t batch_size = 64;
  std::int64_t micro_batches = 4;
  std::uint64_t seed = 1;
  std::int64_t metric_cadence = 10;
  std::string out_dir;  // empty: $STEPLAB_OUT_DIR, then "runs"

  // [model]
  std::vector<std::size_t> hidden = {64};
  Activation activation = Activation::Relu;
  double leaky_alpha = 0.1;
  bool weight_norm = false;
  double init_gain = 1.0;
  std::size_t context = 8;          // charlm
  SyntheticSpec synthetic;          // synthetic task shape

  // [optimizer]
  OptimizerConfig optimizer;
  double rrc_wd_multiplier = 1.0;  // scales weight decay when rrc_correction is on

  // [schedule]
  ScheduleKind schedule_kind = ScheduleKind::Trapezoidal;
  double peak_lr = 1e-3;
  double warmup_frac = 0.05;
  double cooldown_frac = 0.5;

  ScheduleSpec schedule() const;
  void validate() const;
  /// Output directory after applying the environment fallback.
  std::string resolved_out_dir() const;
};

RunConfig parse_run_config(const std::string& text);
RunConfig load_run_config(const std::string& path);

/// Grid of (peak learning rate) x (warmup fraction) x (seed offset) cells
/// over a base config.
struct SweepSpec {
  RunConfig base;
  std::vector<double> peak_lrs;
  std::vector<double> warmup_fracs;
  std::int64_t seeds_per_cell = 1;
  int workers = 1;

  std::size_t cell_count() const {
    return peak_lrs.size() * warmup_fracs.size() *
           static_cast<std::size_t>(seeds_per_cell);
  }
  void validate() const;
};

/// Name of the environment variable holding the default output directory.
extern const char* const kOutDirEnvVar;

}  // namespace steplab
