#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "steplab/linalg.hpp"
#include "steplab/optim.hpp"
#include "steplab/rng.hpp"

namespace steplab {

enum class Activation { Relu, LeakyRelu };
enum class LossKind { CrossEntropy, MeanSquaredError };

Activation activation_from_string(const std::string& s);
std::string to_string(Activation a);

struct MlpSpec {
  std::vector<std::size_t> dims;  // input, hidden..., output
  Activation activation = Activation::Relu;
  double leaky_alpha = 0.1;
  bool weight_norm = false;
  LossKind loss = LossKind::CrossEntropy;
  double init_gain = 1.0;  // init sd = gain / sqrt(fan_in)

  void validate() const;
  std::size_t input_dim() const { return dims.front(); }
  std::size_t output_dim() const { return dims.back(); }
};

/// A batch of samples stored as columns, with a contiguous partition into
/// micro_batches equal pieces for gradient-noise estimation.
struct Batch {
  Mat inputs;                      // input_dim x B
  std::vector<int> class_targets;  // cross-entropy tasks
  Mat value_targets;               // output_dim x B, MSE tasks
  std::size_t micro_batches = 1;   // A, must divide B

  std::size_t size() const { return inputs.cols; }
  std::size_t micro_batch_size() const { return size() / micro_batches; }
  void validate(LossKind loss, std::size_t input_dim, std::size_t output_dim) const;
};

struct ForwardResult {
  double loss = 0.0;
  Vec per_sample_loss;
  std::vector<Mat> preactivations;  // per layer, units x B (last = outputs)
  std::vector<Mat> activations;     // per hidden layer, post-nonlinearity
};

struct BackwardResult {
  std::vector<Mat> grads;  // one per parameter group, group order
  /// Per micro-batch mean gradients; their average equals grads.
  std::vector<std::vector<Mat>> micro_grads;
};

/// Fully-connected network with analytic backpropagation, small enough that
/// training runs on one CPU core in seconds. The ReLU subgradient at zero
/// is zero. With weight_norm, each linear layer computes
/// gain_u * <w_u/|w_u|, x> + b_u per unit, so row magnitudes do not affect
/// the output.
class Mlp {
 public:
  Mlp(MlpSpec spec, SeededRng& rng);

  const MlpSpec& spec() const { return spec_; }
  std::vector<ParamGroup>& params() { return params_; }
  const std::vector<ParamGroup>& params() const { return params_; }
  std::size_t layer_count() const { return spec_.dims.size() - 1; }

  /// Runs the batch, caches activations for backward/diagnostics, and
  /// returns the mean loss.
  const ForwardResult& forward(const Batch& batch);

  /// Gradients of the mean loss at the parameters of the last forward call.
  /// Throws if forward has not been called.
  BackwardResult backward(bool per_micro = false);

  /// Mean loss without touching the caches.
  double loss_only(const Batch& batch) const;

  /// Mean loss plus a hash of the hidden preactivation sign pattern, used
  /// to detect activation-kink crossings under finite-difference probes.
  double loss_and_sign_hash(const Batch& batch, std::uint64_t* sign_hash) const;

  /// Output matrix (output_dim x B) without touching the caches.
  Mat predict(const Mat& inputs) const;

  /// Versioned JSON checkpoint of the parameter values.
  std::string checkpoint_json() const;
  void restore_checkpoint_json(const std::string& text);

  /// Group indices of per-layer weight matrices, in layer order.
  const std::vector<std::size_t>& weight_group_indices() const {
    return weight_groups_;
  }

 private:
  MlpSpec spec_;
  std::vector<ParamGroup> params_;
  std::vector<std::size_t> weight_groups_;  // group index per layer
  std::vector<std::size_t> bias_groups_;
  std::vector<std::size_t> gain_groups_;  // weight_norm only

  ForwardResult cache_;
  std::vector<Mat> raw_dots_;  // weight_norm: <w_u, x_b> per layer
  Batch last_batch_;
  bool has_forward_ = false;

  void forward_into(const Batch& batch, std::size_t col0, std::size_t col1,
                    ForwardResult& out, std::vector<Mat>* raw_dots) const;
  std::vector<Mat> backward_range(std::size_t col0, std::size_t col1) const;
};

/// Max relative error between analytic gradients and fourth-order central
/// finite differences over a sampled coordinate subset, with step eps.
/// Coordinates whose probe crosses an activation kink (the hidden
/// preactivation sign pattern changes at any stencil point) are excluded.
/// For quadratic losses the stencil is exact, so a large eps (1e-2) drives
/// the roundoff error down; use eps around 1e-4 for the piecewise-linear
/// activations.
double grad_check(Mlp& model, const Batch& batch, double eps, SeededRng& rng,
                  std::size_t coords_per_group = 40);

/// Classification accuracy of argmax predictions.
double accuracy(const Mlp& model, const Mat& inputs,
                const std::vector<int>& targets);

}  // namespace steplab
