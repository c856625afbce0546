#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "steplab/config.hpp"

namespace steplab {

struct TrainResult {
  std::string metrics_path;
  double init_train_loss = 0.0;
  double final_train_loss = 0.0;
  double final_val_loss = 0.0;
  std::int64_t steps_run = 0;
  bool diverged = false;
};

/// Runs the full training protocol: sample batch, forward, per-micro
/// backward, SNR estimate, optional representation-change scaling, optimizer
/// step, diagnostics, JSONL logging. Deterministic given (config, seed).
/// A non-finite loss aborts the run with a diagnostic record and reports
/// diverged instead of throwing.
TrainResult run_training(const RunConfig& config);

struct SweepRow {
  double peak_lr = 0.0;
  double warmup_frac = 0.0;
  std::uint64_t seed = 0;
  double final_train_loss = 0.0;
  double final_val_loss = 0.0;
  bool diverged = false;
};

struct SweepResult {
  std::string csv_path;
  std::vector<SweepRow> rows;
};

/// Runs every cell of the grid, in parallel when spec.workers > 1, and
/// writes one CSV row per cell. Rows are flushed incrementally in cell
/// order, so reruns of the same spec produce byte-identical files.
/// A diverged cell yields a nan row; the sweep keeps going.
SweepResult run_sweep(const SweepSpec& spec);

/// Renders one CSV row (no newline); exposed for the writer and tests.
std::string sweep_row_csv(const SweepRow& row);
extern const char* const kSweepCsvHeader;

}  // namespace steplab
