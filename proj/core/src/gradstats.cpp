#include "steplab/gradstats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace steplab {

SnrEstimate estimate_snr(const MicroBatchGrads& micro) {
  const std::size_t a = micro.micro_batch_count();
  if (a < 2) {
    throw std::invalid_argument("estimate_snr: need at least 2 micro-batches");
  }
  if (micro.micro_batch_size < 1) {
    throw std::invalid_argument("estimate_snr: micro_batch_size must be >= 1");
  }
  const std::size_t n = micro.grads[0].size();
  for (const auto& g : micro.grads) {
    if (g.size() != n) {
      throw std::invalid_argument("estimate_snr: micro-gradient length mismatch");
    }
  }

  const double inv_a = 1.0 / static_cast<double>(a);
  double sum_sq_of_mean = 0.0;   // 1^T g^2
  double mean_of_sq_total = 0.0; // 1^T (1/A) sum_m g_m^2
  for (std::size_t i = 0; i < n; ++i) {
    double mean = 0.0;
    double mean_sq = 0.0;
    for (const auto& g : micro.grads) {
      mean += g[i];
      mean_sq += g[i] * g[i];
    }
    mean *= inv_a;
    mean_sq *= inv_a;
    sum_sq_of_mean += mean * mean;
    mean_of_sq_total += mean_sq;
  }

  const double m = static_cast<double>(micro.micro_batch_size);
  const double a_d = static_cast<double>(a);
  double noise = a_d / (a_d - 1.0) * m * (mean_of_sq_total - sum_sq_of_mean);
  if (noise < 0.0) noise = 0.0;  // rounding guard; the estimator is >= 0

  double signal = sum_sq_of_mean - noise / (a_d * m);
  if (signal < 0.0) signal = 0.0;

  SnrEstimate out;
  out.signal_power = signal;
  out.noise_power = noise;
  if (noise > 0.0) {
    out.phi = signal / noise;
  } else {
    out.phi = signal > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
  }
  return out;
}

double rrc_rho_raw(double phi, std::int64_t batch_size, std::int64_t fan_in) {
  if (batch_size < 1 || fan_in < 1) {
    throw std::invalid_argument("rrc_rho: batch size and fan-in must be >= 1");
  }
  if (!(phi >= 0.0)) {
    throw std::invalid_argument("rrc_rho: phi must be >= 0");
  }
  const double b = static_cast<double>(batch_size);
  const double c = static_cast<double>(fan_in);
  if (std::isinf(phi)) {
    // Limit of the expression below: (1 + 2(B-1) + (B-1)^2)/B = B.
    return b;
  }
  const double bracket = (phi + 1.0) + (b - 1.0) / c +
                         (b - 1.0) * (b - 1.0) * phi / (phi + 1.0) * (phi + 1.0 / c) +
                         2.0 * (b - 1.0) * phi;
  return bracket / (b * (1.0 + phi));
}

double rrc_rho(double phi, std::int64_t batch_size, std::int64_t fan_in) {
  const double raw = rrc_rho_raw(phi, batch_size, fan_in);
  const double b = static_cast<double>(batch_size);
  if (raw < 1.0) return 1.0;
  if (raw > b) return b;
  return raw;
}

double update_scale(RrcCorrectionState& state, double rho) {
  if (!(rho >= 1.0)) {
    throw std::invalid_argument("update_scale: rho must be in the clamp range [1, B]");
  }
  const double inv = 1.0 / rho;
  if (!state.initialized) {
    state.inv_rho_ema = inv;
    state.initialized = true;
  } else {
    state.inv_rho_ema = ema(state.inv_rho_ema, inv, state.beta);
  }
  return std::sqrt(state.inv_rho_ema);
}

AlignmentMetrics alignment_metrics(const Vec& m_prev, const Vec& g, double beta) {
  if (m_prev.size() != g.size()) {
    throw std::invalid_argument("alignment_metrics: length mismatch");
  }
  const double g_sq = dot(g, g);
  if (g_sq == 0.0) {
    throw std::invalid_argument("alignment_metrics: zero gradient");
  }
  AlignmentMetrics out;
  const double scaled_dot = beta * dot(m_prev, g);
  out.cancel_ratio = scaled_dot / g_sq;
  const double m_norm = beta * l2_norm(m_prev);
  if (m_norm == 0.0) {
    out.cosine = 0.0;  // no momentum yet
  } else {
    out.cosine = std::clamp(scaled_dot / (m_norm * std::sqrt(g_sq)), -1.0, 1.0);
  }
  return out;
}

double critical_batch_size(double phi) {
  if (phi < 0.0) {
    throw std::invalid_argument("critical_batch_size: phi must be >= 0");
  }
  if (phi == 0.0) return std::numeric_limits<double>::infinity();
  if (std::isinf(phi)) return 0.0;
  return 1.0 / phi;
}

}  // namespace steplab
