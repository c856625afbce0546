#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "steplab/linalg.hpp"

namespace steplab {

/// Angle in radians between two weight vectors: arccos of the clamped
/// cosine, in [0, pi]. Measures directional change independent of magnitude.
double angular_update(const Vec& w_prev, const Vec& w_next);

/// Relative representation change |dw^T X| / |w^T X| for one neuron on a
/// batch of B input columns X (C x B). Returns +inf when the denominator is
/// zero instead of throwing, so a run can keep logging.
double measure_rrc(const Vec& w, const Vec& delta_w, const Mat& inputs);

/// Frobenius-norm variant over a whole layer: |dW X|_F / |W X|_F.
double measure_rrc_layer(const Mat& w, const Mat& delta_w, const Mat& inputs);

/// Fraction of units whose preactivation is <= threshold on every sample of
/// the evaluation batch. preactivations is units x samples.
double dead_unit_fraction(const Mat& preactivations, double threshold = 0.0);

/// |W|_F^2 / sigma_max^2, with sigma_max from power iteration to relative
/// tolerance 1e-8. Always in [1, min(rows, cols)].
double stable_rank(const Mat& w);

/// Per-group update-size summary for one step.
struct GroupStepMetrics {
  double l2_update = 0.0;   // |theta_after - theta_before|
  double ang_mean = 0.0;    // mean per-row angular update (radians)
  double ang_p05 = 0.0;
  double ang_p95 = 0.0;
};

/// One step's record of everything the training loop measures.
struct StepMetrics {
  std::int64_t step = 0;
  double lr = 0.0;
  double loss = 0.0;
  double phi = 0.0;
  double cancel_ratio = 0.0;
  double rrc_scale = 1.0;
  double dead_frac = 0.0;
  double rrc = 0.0;  // measured representation change, first hidden layer
  bool has_rrc = false;
  std::map<std::string, GroupStepMetrics> groups;
};

/// Summarizes one group's parameter change. For NeuronMatrix groups the
/// angular statistics aggregate over rows; Generic groups report the full
/// vector as a single row.
GroupStepMetrics summarize_group_update(const Mat& before, const Mat& after,
                                        bool rows_are_neurons);

}  // namespace steplab
