#pragma once

#include <cstdint>
#include <vector>

#include "steplab/linalg.hpp"
#include "steplab/rng.hpp"

namespace steplab {

/// A Monte Carlo estimate with its standard error.
struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
};

/// Synthetic per-sample gradient generator: g_b = mean_grad + noise_b with
/// IID zero-mean Gaussian noise of total power noise_power spread evenly
/// over the C coordinates.
struct GradientModel {
  std::size_t dim = 1;          // C
  std::int64_t batch_size = 1;  // B
  Vec mean_grad;                // fixed direction, |mean_grad|^2 = signal power
  double noise_power = 0.0;     // E[|noise_b|^2]

  /// Mean gradient along the all-ones direction with the given power.
  static GradientModel isotropic(std::size_t dim, std::int64_t batch_size,
                                 double signal_power, double noise_power);

  double signal_power() const;
  /// signal/noise power ratio; +inf when noise_power is zero.
  double phi() const;
  /// E[|g|^2] of the batch-mean gradient: signal + noise/B.
  double batch_grad_power() const;

  void validate() const;
};

struct BatchSample {
  std::vector<Vec> per_sample;  // B gradients
  Vec mean;
};

/// Draws B per-sample gradients from the model and their mean.
BatchSample sample_batch(const GradientModel& model, SeededRng& rng);

/// Expected squared momentum magnitude for IID zero-mean unit-variance
/// gradients, relative to sigma^2: (1 - beta^{2t}) (1-beta)/(1+beta).
double expected_momentum_sq(double beta, std::int64_t t);

/// Squared-norm amplification of the bias-corrected momentum over its
/// steady state: (1 + beta^t)/(1 - beta^t).
double bias_amplification_target(double beta, std::int64_t t);

/// Simulates EMA momentum over t steps of IID standard normal gradients and
/// returns the empirical E[|m_t|^2]/(dims * sigma^2). Effective sample count
/// is trials * dims.
McEstimate mc_momentum_norm(double beta, std::int64_t t, std::size_t dims,
                            std::size_t trials, SeededRng& rng);

/// Empirical E[|m_t / (1-beta^t)|^2] relative to the steady-state
/// E[|m|^2]; compares against bias_amplification_target.
McEstimate mc_bias_amplification(double beta, std::int64_t t, std::size_t dims,
                                 std::size_t trials, SeededRng& rng);

enum class ElementDist {
  StandardNormal,
  UniformSym,  // uniform on [-1, 1]
  Ones,        // deterministic all-ones vector
};

/// Normalized squared-inner-product ratio E[<a,b>^2] * C / (E|a|^2 E|b|^2)
/// for independent vectors with IID elements; expected value 1 whenever at
/// least one distribution is zero-mean. Throws if neither side is zero-mean.
McEstimate mc_lemma_l1(std::size_t dim, ElementDist dist_a, ElementDist dist_b,
                       std::size_t trials, SeededRng& rng);

/// Closed-form prediction of E[(dy_b)^2]/E[y_b^2] for one normalized
/// gradient-descent step at batch size B through a fan-in C neuron, given
/// the gradient SNR phi and the squared weight norm.
double rrc_closed_form(double eta, std::int64_t batch_size, std::size_t fan_in,
                       double phi, double w_norm_sq);

struct McRrcResult {
  McEstimate ratio;           // E[(dy_b)^2] / E[y_b^2]
  McEstimate batch_grad_power;  // empirical E[|g|^2], consistency check
  double batch_grad_power_exact = 0.0;
};

/// Brute-force check of rrc_closed_form. Per trial: draw the batch
/// gradients, build the sample input parallel to its own gradient with unit
/// sign and unit norm, draw an independent IID normal weight vector, take
/// one normalized gradient-descent step using the model's exact E[|g|^2],
/// and accumulate (dw^T x)^2 and (w^T x)^2. The closed form is evaluated at
/// w_norm_sq = E[|w|^2] = C.
McRrcResult mc_rrc(const GradientModel& model, double eta, std::size_t trials,
                   SeededRng& rng);

/// Gradient of the magnitude-invariant neuron y = <w/|w|, x> with respect
/// to w.
Vec weight_normalized_neuron_grad(const Vec& w, const Vec& x);

/// Ratio |grad at c*w| / |grad at w| for one random draw of (w, x); the
/// magnitude-invariant output makes this 1/c up to rounding.
double scale_invariance_check(double c, std::size_t dim, SeededRng& rng);

}  // namespace steplab
