#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "steplab/linalg.hpp"

namespace steplab {

enum class GroupKind { NeuronMatrix, Generic };

/// A named parameter block. NeuronMatrix rows are neuron weight vectors with
/// fan-in equal to the column count; 1-D parameters (biases, gains) are
/// Generic and stored as a 1 x n matrix.
struct ParamGroup {
  std::string name;
  GroupKind kind = GroupKind::Generic;
  Mat values;
  std::vector<double> init_row_norms;  // NeuronMatrix only, all > 0

  /// Builds a NeuronMatrix group and records the initial per-row norms.
  /// Throws if any row has zero norm (the magnitude projection would be
  /// undefined for it).
  static ParamGroup neuron_matrix(std::string name, Mat values);
  static ParamGroup generic(std::string name, Vec values);

  std::size_t fan_in() const { return values.cols; }
  std::size_t param_count() const { return values.size(); }
};

enum class Algorithm { AdamW, LionA, LionAR, NormalizedGd };

Algorithm algorithm_from_string(const std::string& s);
std::string to_string(Algorithm a);

struct OptimizerConfig {
  Algorithm algorithm = Algorithm::AdamW;
  double weight_decay = 0.1;
  double beta1 = 0.9;   // momentum coefficient (the single beta of the Lion family)
  double beta2 = 0.95;  // AdamW second-moment smoothing
  double epsilon = 1e-8;
  bool nesterov = false;
  /// AdamW: use raw m and v instead of the bias-corrected estimates, so the
  /// first update shrinks by (1 - beta1)/sqrt(1 - beta2) relative to the
  /// corrected rule.
  bool disable_beta1_bias_correction = false;
  /// Lion family: use the time-varying momentum scaling that matches the
  /// RMS magnitude a random-gradient EMA actually has at step t.
  bool inverse_bias_correction = false;
  /// Harness-level: scale updates by the measured representation-change
  /// correction (see gradstats). The optimizer itself only honors
  /// apply_update_scale.
  bool rrc_correction = false;

  void validate() const;

  /// FNV-1a hash of the canonical config rendering; stored in checkpoints.
  std::uint64_t hash() const;
};

constexpr std::optional<std::int64_t> kSteadyState = std::nullopt;

/// Momentum scaling factor gamma.
///
/// Steady state (t = nullopt, or inverse_correction off):
///   heavy-ball: sqrt((1-b)/(1+b))
///   Nesterov:   sqrt((1-b^2)^2 + b^4 (1-b)/(1+b))
/// With inverse_correction at finite t, the time-varying forms
///   heavy-ball: sqrt((1-b^{2t}) (1-b)/(1+b))
///   Nesterov:   sqrt((1-b^2)^2 + (1-b^{2t-2}) b^4 (1-b)/(1+b))
/// which equal the RMS magnitude an EMA of IID unit-variance gradients has
/// at step t.
double momentum_scale(double beta, bool nesterov,
                      std::optional<std::int64_t> t = kSteadyState,
                      bool inverse_correction = false);

/// One step of normalized gradient descent: w - lr * g / sqrt(grad_power).
/// grad_power is an estimate of E[|g|^2] and must be positive.
Vec normalized_gd_step(const Vec& w, const Vec& batch_grad, double grad_power,
                       double lr);

struct OptimizerState {
  std::int64_t t = 0;
  std::vector<Mat> momentum;       // per group
  std::vector<Mat> second_moment;  // per group, AdamW only
  std::vector<double> update_scale;  // per group, external step-size hook
  std::vector<double> grad_power_ema;  // per group, NormalizedGd only
};

/// Sequential stochastic optimizer over a fixed set of parameter groups.
/// One instance per training run; steps must not run concurrently.
class Optimizer {
 public:
  Optimizer(OptimizerConfig config, const std::vector<ParamGroup>& groups);

  /// Applies one update. grads must match groups in order and shape.
  /// lr_max is the schedule peak; it is required by LionAR and ignored by
  /// the other rules.
  void step(std::vector<ParamGroup>& groups, const std::vector<Mat>& grads,
            double lr, double lr_max = 0.0);

  /// Multiplies the next steps' learning rate for one group by scale,
  /// scale in (0, 1]. Stays in effect until changed.
  void apply_update_scale(const std::string& group_name, double scale);

  const OptimizerConfig& config() const { return config_; }
  const OptimizerState& state() const { return state_; }

  /// Momentum scaling factor the next step (t+1) would use.
  double gamma_at(std::int64_t t) const;

  /// Versioned JSON checkpoint of (t, buffers, config hash); parse of the
  /// dump restores every double bit-exactly.
  std::string checkpoint_json() const;
  void restore_checkpoint_json(const std::string& text,
                               const std::vector<ParamGroup>& groups);

 private:
  void step_adamw(std::vector<ParamGroup>& groups, const std::vector<Mat>& grads,
                  double lr);
  void step_liona(std::vector<ParamGroup>& groups, const std::vector<Mat>& grads,
                  double lr);
  void step_lionar(std::vector<ParamGroup>& groups, const std::vector<Mat>& grads,
                   double lr, double lr_max);
  void step_normalized_gd(std::vector<ParamGroup>& groups,
                          const std::vector<Mat>& grads, double lr);
  std::size_t group_index(const std::string& name) const;

  OptimizerConfig config_;
  OptimizerState state_;
  std::vector<std::string> group_names_;
  std::vector<GroupKind> group_kinds_;
};

}  // namespace steplab
