#pragma once

#include <cstdint>
#include <string>

namespace steplab {

enum class ScheduleKind { Trapezoidal, Cosine, Constant };

ScheduleKind schedule_kind_from_string(const std::string& s);
std::string to_string(ScheduleKind k);

/// Learning-rate schedule over a fixed horizon.
///
/// Trapezoidal: linear warmup to the peak, a constant plateau, then a linear
/// cooldown that reaches zero on the final step. Cosine: linear warmup, then
/// half-cosine decay to zero. Phase lengths are fractions of the horizon
/// rounded to whole steps (ties round up).
struct ScheduleSpec {
  ScheduleKind kind = ScheduleKind::Trapezoidal;
  double peak_lr = 0.0;
  std::int64_t total_steps = 0;
  double warmup_frac = 0.0;    // in [0, 1)
  double cooldown_frac = 0.0;  // trapezoidal only, in [0, 1]

  /// Throws std::invalid_argument if the spec is inconsistent.
  void validate() const;

  std::int64_t warmup_steps() const;
  std::int64_t cooldown_steps() const;
};

/// Learning rate at step t (1-based, 1 <= t <= total_steps).
///
/// During warmup the first step uses peak/W rather than zero, so the first
/// update is always well-defined.
double lr_at(const ScheduleSpec& spec, std::int64_t t);

/// max over the whole schedule, i.e. the peak learning rate.
double max_lr(const ScheduleSpec& spec);

}  // namespace steplab
