#include "steplab/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace steplab {

namespace {

struct RunningMoments {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::size_t n = 0;

  void add(double x) {
    sum += x;
    sum_sq += x * x;
    ++n;
  }
  double mean() const { return sum / static_cast<double>(n); }
  double variance() const {
    const double m = mean();
    return sum_sq / static_cast<double>(n) - m * m;
  }
  double std_error() const {
    return std::sqrt(std::max(variance(), 0.0) / static_cast<double>(n));
  }
};

}  // namespace

GradientModel GradientModel::isotropic(std::size_t dim, std::int64_t batch_size,
                                       double signal_power, double noise_power) {
  GradientModel m;
  m.dim = dim;
  m.batch_size = batch_size;
  m.noise_power = noise_power;
  const double coord = std::sqrt(signal_power / static_cast<double>(dim));
  m.mean_grad.assign(dim, coord);
  m.validate();
  return m;
}

double GradientModel::signal_power() const {
  double s = 0.0;
  for (double x : mean_grad) s += x * x;
  return s;
}

double GradientModel::phi() const {
  if (noise_power == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return signal_power() / noise_power;
}

double GradientModel::batch_grad_power() const {
  return signal_power() + noise_power / static_cast<double>(batch_size);
}

void GradientModel::validate() const {
  if (dim == 0 || mean_grad.size() != dim) {
    throw std::invalid_argument("GradientModel: bad dimension");
  }
  if (batch_size < 1) {
    throw std::invalid_argument("GradientModel: batch_size must be >= 1");
  }
  if (noise_power < 0.0) {
    throw std::invalid_argument("GradientModel: negative noise power");
  }
  if (signal_power() == 0.0 && noise_power == 0.0) {
    throw std::invalid_argument("GradientModel: all powers zero");
  }
}

BatchSample sample_batch(const GradientModel& model, SeededRng& rng) {
  model.validate();
  const double noise_coord_sd =
      std::sqrt(model.noise_power / static_cast<double>(model.dim));
  BatchSample out;
  out.per_sample.resize(static_cast<std::size_t>(model.batch_size));
  out.mean.assign(model.dim, 0.0);
  for (auto& g : out.per_sample) {
    g.resize(model.dim);
    for (std::size_t i = 0; i < model.dim; ++i) {
      g[i] = model.mean_grad[i] + noise_coord_sd * rng.normal();
      out.mean[i] += g[i];
    }
  }
  const double inv_b = 1.0 / static_cast<double>(model.batch_size);
  for (auto& x : out.mean) x *= inv_b;
  return out;
}

double expected_momentum_sq(double beta, std::int64_t t) {
  if (t < 1) throw std::invalid_argument("expected_momentum_sq: t must be >= 1");
  return (1.0 - std::pow(beta, 2.0 * static_cast<double>(t))) * (1.0 - beta) /
         (1.0 + beta);
}

double bias_amplification_target(double beta, std::int64_t t) {
  if (t < 1) throw std::invalid_argument("bias_amplification_target: t >= 1");
  const double bt = std::pow(beta, static_cast<double>(t));
  return (1.0 + bt) / (1.0 - bt);
}

McEstimate mc_momentum_norm(double beta, std::int64_t t, std::size_t dims,
                            std::size_t trials, SeededRng& rng) {
  if (!(beta >= 0.0 && beta < 1.0)) {
    throw std::invalid_argument("mc_momentum_norm: beta must be in [0, 1)");
  }
  RunningMoments stats;
  Vec m(dims);
  Vec g(dims);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::fill(m.begin(), m.end(), 0.0);
    for (std::int64_t step = 0; step < t; ++step) {
      rng.fill_normal(g.data(), dims);
      for (std::size_t i = 0; i < dims; ++i) {
        m[i] = beta * m[i] + (1.0 - beta) * g[i];
      }
    }
    double norm_sq = 0.0;
    for (double x : m) norm_sq += x * x;
    stats.add(norm_sq / static_cast<double>(dims));
  }
  return {stats.mean(), stats.std_error()};
}

McEstimate mc_bias_amplification(double beta, std::int64_t t, std::size_t dims,
                                 std::size_t trials, SeededRng& rng) {
  const auto raw = mc_momentum_norm(beta, t, dims, trials, rng);
  const double correction = 1.0 - std::pow(beta, static_cast<double>(t));
  const double steady = (1.0 - beta) / (1.0 + beta);
  const double scale = 1.0 / (correction * correction * steady);
  return {raw.value * scale, raw.std_error * scale};
}

namespace {

double element_second_moment(ElementDist d) {
  switch (d) {
    case ElementDist::StandardNormal: return 1.0;
    case ElementDist::UniformSym: return 1.0 / 3.0;
    case ElementDist::Ones: return 1.0;
  }
  return 1.0;
}

bool is_zero_mean(ElementDist d) { return d != ElementDist::Ones; }

void fill_dist(Vec& v, ElementDist d, SeededRng& rng) {
  switch (d) {
    case ElementDist::StandardNormal:
      rng.fill_normal(v.data(), v.size());
      break;
    case ElementDist::UniformSym:
      for (auto& x : v) x = rng.uniform(-1.0, 1.0);
      break;
    case ElementDist::Ones:
      std::fill(v.begin(), v.end(), 1.0);
      break;
  }
}

}  // namespace

McEstimate mc_lemma_l1(std::size_t dim, ElementDist dist_a, ElementDist dist_b,
                       std::size_t trials, SeededRng& rng) {
  if (!is_zero_mean(dist_a) && !is_zero_mean(dist_b)) {
    throw std::invalid_argument("mc_lemma_l1: need at least one zero-mean side");
  }
  const double denom = static_cast<double>(dim) * element_second_moment(dist_a) *
                       static_cast<double>(dim) * element_second_moment(dist_b);
  const double scale = static_cast<double>(dim) / denom;
  RunningMoments stats;
  Vec a(dim), b(dim);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    fill_dist(a, dist_a, rng);
    fill_dist(b, dist_b, rng);
    const double ip = dot(a.data(), b.data(), dim);
    stats.add(ip * ip * scale);
  }
  return {stats.mean(), stats.std_error()};
}

double rrc_closed_form(double eta, std::int64_t batch_size, std::size_t fan_in,
                       double phi, double w_norm_sq) {
  if (batch_size < 1 || fan_in == 0) {
    throw std::invalid_argument("rrc_closed_form: bad batch size or fan-in");
  }
  if (!(phi >= 0.0) || std::isinf(phi)) {
    throw std::invalid_argument("rrc_closed_form: phi must be finite and >= 0");
  }
  if (!(w_norm_sq > 0.0)) {
    throw std::invalid_argument("rrc_closed_form: w_norm_sq must be > 0");
  }
  const double b = static_cast<double>(batch_size);
  const double c = static_cast<double>(fan_in);
  const double bracket = (phi + 1.0) + (b - 1.0) / c +
                         (b - 1.0) * (b - 1.0) * phi / (phi + 1.0) * (phi + 1.0 / c) +
                         2.0 * (b - 1.0) * phi;
  return eta * eta * c / (b * b * w_norm_sq) / (phi + 1.0 / b) * bracket;
}

McRrcResult mc_rrc(const GradientModel& model, double eta, std::size_t trials,
                   SeededRng& rng) {
  model.validate();
  const std::size_t c = model.dim;
  const double exact_power = model.batch_grad_power();
  const double inv_sqrt_power = 1.0 / std::sqrt(exact_power);

  RunningMoments num_stats, den_stats, power_stats;
  double cross_sum = 0.0;  // for the covariance of (num, den)
  Vec w(c);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const BatchSample batch = sample_batch(model, rng);
    // The probe sample's input lies along its own gradient (unit sign,
    // unit norm); the derivation is invariant to both choices.
    const Vec& g_probe = batch.per_sample[0];
    const double g_probe_norm = l2_norm(g_probe);
    if (g_probe_norm == 0.0) {
      continue;  // probability-zero degenerate draw
    }
    rng.fill_normal(w.data(), c);

    double g_dot_x = 0.0;
    double w_dot_x = 0.0;
    double mean_sq = 0.0;
    for (std::size_t i = 0; i < c; ++i) {
      const double x_i = g_probe[i] / g_probe_norm;
      g_dot_x += batch.mean[i] * x_i;
      w_dot_x += w[i] * x_i;
      mean_sq += batch.mean[i] * batch.mean[i];
    }
    const double dy = -eta * inv_sqrt_power * g_dot_x;
    const double num = dy * dy;
    const double den = w_dot_x * w_dot_x;
    num_stats.add(num);
    den_stats.add(den);
    power_stats.add(mean_sq);
    cross_sum += num * den;
  }
  if (num_stats.n == 0) {
    throw std::runtime_error("mc_rrc: no valid trials");
  }

  const double n = static_cast<double>(num_stats.n);
  const double mean_num = num_stats.mean();
  const double mean_den = den_stats.mean();
  const double ratio = mean_num / mean_den;
  // Delta-method standard error for a ratio of means.
  const double var_num = std::max(num_stats.variance(), 0.0);
  const double var_den = std::max(den_stats.variance(), 0.0);
  const double cov = cross_sum / n - mean_num * mean_den;
  const double rel_var = var_num / (mean_num * mean_num) +
                         var_den / (mean_den * mean_den) -
                         2.0 * cov / (mean_num * mean_den);
  const double se = std::abs(ratio) * std::sqrt(std::max(rel_var, 0.0) / n);

  McRrcResult out;
  out.ratio = {ratio, se};
  out.batch_grad_power = {power_stats.mean(), power_stats.std_error()};
  out.batch_grad_power_exact = exact_power;
  return out;
}

Vec weight_normalized_neuron_grad(const Vec& w, const Vec& x) {
  if (w.size() != x.size()) {
    throw std::invalid_argument("weight_normalized_neuron_grad: shape mismatch");
  }
  const double norm = l2_norm(w);
  if (norm == 0.0) {
    throw std::invalid_argument("weight_normalized_neuron_grad: zero weight");
  }
  const double proj = dot(w, x) / (norm * norm);
  Vec g(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    g[i] = (x[i] - proj * w[i]) / norm;
  }
  return g;
}

double scale_invariance_check(double c, std::size_t dim, SeededRng& rng) {
  if (!(c > 0.0)) {
    throw std::invalid_argument("scale_invariance_check: c must be > 0");
  }
  const Vec w = rng.normal_vec(dim);
  const Vec x = rng.normal_vec(dim);
  Vec w_scaled(dim);
  for (std::size_t i = 0; i < dim; ++i) w_scaled[i] = c * w[i];
  const double base = l2_norm(weight_normalized_neuron_grad(w, x));
  const double scaled = l2_norm(weight_normalized_neuron_grad(w_scaled, x));
  return scaled / base;
}

}  // namespace steplab
