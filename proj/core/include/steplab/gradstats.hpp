#pragma once

#include <cstdint>
#include <vector>

#include "steplab/linalg.hpp"

namespace steplab {

/// A >= 2 micro-batch mean gradients over one layer's parameters, each the
/// average of micro_batch_size per-sample gradients.
struct MicroBatchGrads {
  std::vector<Vec> grads;            // A vectors of identical length
  std::int64_t micro_batch_size = 1;  // M

  std::size_t micro_batch_count() const { return grads.size(); }
};

/// Gradient signal/noise decomposition. phi is +infinity when the noise
/// power estimate is exactly zero but signal remains.
struct SnrEstimate {
  double signal_power = 0.0;  // P_S >= 0
  double noise_power = 0.0;   // P_N >= 0
  double phi = 0.0;           // P_S / P_N, or +inf sentinel
};

/// Micro-batch SNR estimator.
///
/// With A micro-means g_m of size M and their average g:
///   P_N = A/(A-1) * M * 1^T ((1/A) sum_m g_m^2 - g^2)
///   P_S = 1^T g^2 - P_N / (A M)
///   phi = P_S / P_N
/// P_S is clamped to >= 0 (the unbiased estimator can go negative for
/// small A).
SnrEstimate estimate_snr(const MicroBatchGrads& micro);

/// Representation-change ratio predicted for a normalized update at batch
/// size B through a fan-in C dot product, relative to the sqrt(B)
/// learning-rate scaling that is exact at zero SNR. Unclamped value.
double rrc_rho_raw(double phi, std::int64_t batch_size, std::int64_t fan_in);

/// rrc_rho_raw clamped to [1, B]; phi = +inf maps to B.
double rrc_rho(double phi, std::int64_t batch_size, std::int64_t fan_in);

/// EMA of 1/rho for one parameter group. The update scale is the square
/// root of the EMA; the first observation initializes the average.
struct RrcCorrectionState {
  double beta = 0.9;     // shared with the optimizer momentum coefficient
  double inv_rho_ema = 0.0;
  bool initialized = false;
};

/// Feeds one clamped rho into the state and returns the scale sqrt(EMA[1/rho]),
/// always in [1/sqrt(B), 1] for rho in [1, B].
double update_scale(RrcCorrectionState& state, double rho);

struct AlignmentMetrics {
  double cosine = 0.0;        // angle between beta*m_{t-1} and g
  double cancel_ratio = 0.0;  // <beta*m_{t-1}, g> / <g, g>; negative = cancellation
};

/// Gradient-momentum alignment. Zero momentum reports zeros; a zero
/// gradient is an error.
AlignmentMetrics alignment_metrics(const Vec& m_prev, const Vec& g, double beta);

/// 1/phi; +inf for phi = 0, 0 for phi = +inf.
double critical_batch_size(double phi);

}  // namespace steplab
