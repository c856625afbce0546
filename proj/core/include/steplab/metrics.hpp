#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include "steplab/diagnostics.hpp"

namespace steplab {

struct RunHeader {
  std::string task;
  std::string algorithm;
  std::int64_t steps = 0;
  std::int64_t batch_size = 0;
  std::int64_t micro_batches = 0;
  std::uint64_t seed = 0;
  double init_train_loss = 0.0;
};

/// JSONL metrics log: one header line followed by one line per logged step.
/// Schema v1; non-finite values serialize as null.
class MetricsWriter {
 public:
  explicit MetricsWriter(const std::string& path);

  void write_header(const RunHeader& header);
  void write_step(const StepMetrics& metrics);
  void write_abort(std::int64_t step, const std::string& reason);

  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::ofstream out_;
};

/// Tidy CSV slice of a metrics file: a step column plus one column per
/// requested field. Fields address top-level keys ("loss", "phi") or group
/// entries by dotted path ("l0.weight.l2_update").
std::string plotdata_csv(const std::string& metrics_path,
                         const std::vector<std::string>& fields);

}  // namespace steplab
