#include "steplab/schedule.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace steplab {

ScheduleKind schedule_kind_from_string(const std::string& s) {
  if (s == "trapezoidal") return ScheduleKind::Trapezoidal;
  if (s == "cosine") return ScheduleKind::Cosine;
  if (s == "constant") return ScheduleKind::Constant;
  throw std::invalid_argument("unknown schedule kind: " + s);
}

std::string to_string(ScheduleKind k) {
  switch (k) {
    case ScheduleKind::Trapezoidal: return "trapezoidal";
    case ScheduleKind::Cosine: return "cosine";
    case ScheduleKind::Constant: return "constant";
  }
  return "?";
}

namespace {
// Nearest integer, ties round up.
std::int64_t round_steps(double x) {
  return static_cast<std::int64_t>(std::floor(x + 0.5));
}
}  // namespace

void ScheduleSpec::validate() const {
  if (!(peak_lr > 0.0)) {
    throw std::invalid_argument("schedule: peak_lr must be > 0");
  }
  if (total_steps < 1) {
    throw std::invalid_argument("schedule: total_steps must be >= 1");
  }
  if (!(warmup_frac >= 0.0 && warmup_frac < 1.0)) {
    throw std::invalid_argument("schedule: warmup_frac must be in [0, 1)");
  }
  if (kind == ScheduleKind::Trapezoidal) {
    if (!(cooldown_frac >= 0.0 && cooldown_frac <= 1.0)) {
      throw std::invalid_argument("schedule: cooldown_frac must be in [0, 1]");
    }
    if (warmup_frac + cooldown_frac > 1.0) {
      throw std::invalid_argument(
          "schedule: warmup_frac + cooldown_frac must be <= 1");
    }
  }
}

std::int64_t ScheduleSpec::warmup_steps() const {
  return round_steps(warmup_frac * static_cast<double>(total_steps));
}

std::int64_t ScheduleSpec::cooldown_steps() const {
  if (kind != ScheduleKind::Trapezoidal) return 0;
  return round_steps(cooldown_frac * static_cast<double>(total_steps));
}

double lr_at(const ScheduleSpec& spec, std::int64_t t) {
  spec.validate();
  if (t < 1 || t > spec.total_steps) {
    throw std::invalid_argument("lr_at: step index out of range");
  }
  const std::int64_t w = spec.warmup_steps();
  if (t <= w) {
    return spec.peak_lr * static_cast<double>(t) / static_cast<double>(w);
  }
  switch (spec.kind) {
    case ScheduleKind::Constant:
      return spec.peak_lr;
    case ScheduleKind::Trapezoidal: {
      const std::int64_t d = spec.cooldown_steps();
      const std::int64_t plateau_end = spec.total_steps - d;
      if (t <= plateau_end) {
        return spec.peak_lr;
      }
      return spec.peak_lr * static_cast<double>(spec.total_steps - t) /
             static_cast<double>(d);
    }
    case ScheduleKind::Cosine: {
      const double progress = static_cast<double>(t - w) /
                              static_cast<double>(spec.total_steps - w);
      return spec.peak_lr * 0.5 * (1.0 + std::cos(std::numbers::pi * progress));
    }
  }
  return spec.peak_lr;
}

double max_lr(const ScheduleSpec& spec) {
  spec.validate();
  return spec.peak_lr;
}

}  // namespace steplab
