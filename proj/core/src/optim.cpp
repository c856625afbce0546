#include "steplab/optim.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace steplab {

ParamGroup ParamGroup::neuron_matrix(std::string name, Mat values) {
  if (values.rows == 0 || values.cols == 0) {
    throw std::invalid_argument("ParamGroup: empty matrix");
  }
  ParamGroup g;
  g.name = std::move(name);
  g.kind = GroupKind::NeuronMatrix;
  g.values = std::move(values);
  g.init_row_norms.resize(g.values.rows);
  for (std::size_t r = 0; r < g.values.rows; ++r) {
    const double n = l2_norm(g.values.row_ptr(r), g.values.cols);
    if (n == 0.0) {
      throw std::invalid_argument("ParamGroup '" + g.name +
                                  "': zero-norm neuron row at construction");
    }
    g.init_row_norms[r] = n;
  }
  return g;
}

ParamGroup ParamGroup::generic(std::string name, Vec values) {
  if (values.empty()) {
    throw std::invalid_argument("ParamGroup: empty vector");
  }
  ParamGroup g;
  g.name = std::move(name);
  g.kind = GroupKind::Generic;
  g.values.rows = 1;
  g.values.cols = values.size();
  g.values.data = std::move(values);
  return g;
}

Algorithm algorithm_from_string(const std::string& s) {
  if (s == "adamw") return Algorithm::AdamW;
  if (s == "liona") return Algorithm::LionA;
  if (s == "lionar") return Algorithm::LionAR;
  if (s == "normalized_gd") return Algorithm::NormalizedGd;
  throw std::invalid_argument("unknown algorithm: " + s);
}

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::AdamW: return "adamw";
    case Algorithm::LionA: return "liona";
    case Algorithm::LionAR: return "lionar";
    case Algorithm::NormalizedGd: return "normalized_gd";
  }
  return "?";
}

void OptimizerConfig::validate() const {
  if (!(beta1 >= 0.0 && beta1 < 1.0)) {
    throw std::invalid_argument("optimizer: beta1 must be in [0, 1)");
  }
  if (!(beta2 >= 0.0 && beta2 < 1.0)) {
    throw std::invalid_argument("optimizer: beta2 must be in [0, 1)");
  }
  if (algorithm == Algorithm::AdamW && !(epsilon > 0.0) && epsilon != 0.0) {
    throw std::invalid_argument("optimizer: epsilon must be >= 0");
  }
  if (epsilon < 0.0) {
    throw std::invalid_argument("optimizer: epsilon must be >= 0");
  }
  if (weight_decay < 0.0) {
    throw std::invalid_argument("optimizer: weight_decay must be >= 0");
  }
}

std::uint64_t OptimizerConfig::hash() const {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%s|%.17g|%.17g|%.17g|%.17g|%d|%d|%d|%d",
                to_string(algorithm).c_str(), weight_decay, beta1, beta2,
                epsilon, nesterov ? 1 : 0, disable_beta1_bias_correction ? 1 : 0,
                inverse_bias_correction ? 1 : 0, rrc_correction ? 1 : 0);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char* p = buf; *p; ++p) {
    h ^= static_cast<unsigned char>(*p);
    h *= 0x100000001b3ULL;
  }
  return h;
}

double momentum_scale(double beta, bool nesterov,
                      std::optional<std::int64_t> t, bool inverse_correction) {
  if (!(beta >= 0.0 && beta < 1.0)) {
    throw std::invalid_argument("momentum_scale: beta must be in [0, 1)");
  }
  if (t.has_value() && *t < 1) {
    throw std::invalid_argument("momentum_scale: t must be >= 1");
  }
  const double steady_sq = (1.0 - beta) / (1.0 + beta);
  const bool time_varying = inverse_correction && t.has_value();
  if (!nesterov) {
    const double ramp =
        time_varying ? 1.0 - std::pow(beta, 2.0 * static_cast<double>(*t)) : 1.0;
    return std::sqrt(ramp * steady_sq);
  }
  const double fresh = 1.0 - beta * beta;
  const double ramp =
      time_varying ? 1.0 - std::pow(beta, 2.0 * static_cast<double>(*t) - 2.0)
                   : 1.0;
  return std::sqrt(fresh * fresh + ramp * std::pow(beta, 4.0) * steady_sq);
}

Vec normalized_gd_step(const Vec& w, const Vec& batch_grad, double grad_power,
                       double lr) {
  if (!(grad_power > 0.0)) {
    throw std::invalid_argument("normalized_gd_step: grad_power must be > 0");
  }
  if (w.size() != batch_grad.size()) {
    throw std::invalid_argument("normalized_gd_step: shape mismatch");
  }
  const double scale = lr / std::sqrt(grad_power);
  Vec out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    out[i] = w[i] - scale * batch_grad[i];
  }
  return out;
}

Optimizer::Optimizer(OptimizerConfig config, const std::vector<ParamGroup>& groups)
    : config_(config) {
  config_.validate();
  state_.momentum.reserve(groups.size());
  for (const auto& g : groups) {
    group_names_.push_back(g.name);
    group_kinds_.push_back(g.kind);
    state_.momentum.emplace_back(g.values.rows, g.values.cols, 0.0);
    if (config_.algorithm == Algorithm::AdamW) {
      state_.second_moment.emplace_back(g.values.rows, g.values.cols, 0.0);
    }
    state_.update_scale.push_back(1.0);
    state_.grad_power_ema.push_back(0.0);
  }
}

std::size_t Optimizer::group_index(const std::string& name) const {
  for (std::size_t i = 0; i < group_names_.size(); ++i) {
    if (group_names_[i] == name) return i;
  }
  throw std::invalid_argument("optimizer: unknown group '" + name + "'");
}

void Optimizer::apply_update_scale(const std::string& group_name, double scale) {
  if (!(scale > 0.0 && scale <= 1.0)) {
    throw std::invalid_argument("apply_update_scale: scale must be in (0, 1]");
  }
  state_.update_scale[group_index(group_name)] = scale;
}

double Optimizer::gamma_at(std::int64_t t) const {
  return momentum_scale(config_.beta1, config_.nesterov, t,
                        config_.inverse_bias_correction);
}

namespace {

void check_step_inputs(const std::vector<ParamGroup>& groups,
                       const std::vector<Mat>& grads, double lr) {
  if (groups.size() != grads.size()) {
    throw std::invalid_argument("step: group/gradient count mismatch");
  }
  if (lr < 0.0) {
    throw std::invalid_argument("step: negative learning rate");
  }
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (groups[i].values.rows != grads[i].rows ||
        groups[i].values.cols != grads[i].cols) {
      throw std::invalid_argument("step: gradient shape mismatch for group '" +
                                  groups[i].name + "'");
    }
    if (!all_finite(grads[i])) {
      throw std::invalid_argument("step: non-finite gradient in group '" +
                                  groups[i].name + "'");
    }
  }
}

}  // namespace

void Optimizer::step(std::vector<ParamGroup>& groups,
                     const std::vector<Mat>& grads, double lr, double lr_max) {
  check_step_inputs(groups, grads, lr);
  if (groups.size() != group_names_.size()) {
    throw std::invalid_argument("step: group set changed since construction");
  }
  state_.t += 1;
  switch (config_.algorithm) {
    case Algorithm::AdamW:
      step_adamw(groups, grads, lr);
      break;
    case Algorithm::LionA:
      step_liona(groups, grads, lr);
      break;
    case Algorithm::LionAR:
      if (!(lr_max > 0.0)) {
        throw std::invalid_argument("step: lionar requires lr_max > 0");
      }
      step_lionar(groups, grads, lr, lr_max);
      break;
    case Algorithm::NormalizedGd:
      step_normalized_gd(groups, grads, lr);
      break;
  }
}

void Optimizer::step_adamw(std::vector<ParamGroup>& groups,
                           const std::vector<Mat>& grads, double lr) {
  const double b1 = config_.beta1;
  const double b2 = config_.beta2;
  const double t = static_cast<double>(state_.t);
  const double bc1 = 1.0 - std::pow(b1, t);
  const double bc2 = 1.0 - std::pow(b2, t);
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const double eta = lr * state_.update_scale[gi];
    const double decay = 1.0 - eta * config_.weight_decay;
    auto& theta = groups[gi].values.data;
    auto& m = state_.momentum[gi].data;
    auto& v = state_.second_moment[gi].data;
    const auto& g = grads[gi].data;
    for (std::size_t i = 0; i < theta.size(); ++i) {
      m[i] = b1 * m[i] + (1.0 - b1) * g[i];
      v[i] = b2 * v[i] + (1.0 - b2) * g[i] * g[i];
      const double m_hat = config_.disable_beta1_bias_correction ? m[i] : m[i] / bc1;
      const double v_hat = config_.disable_beta1_bias_correction ? v[i] : v[i] / bc2;
      theta[i] = decay * theta[i] - eta * m_hat / (std::sqrt(v_hat) + config_.epsilon);
    }
  }
}

void Optimizer::step_liona(std::vector<ParamGroup>& groups,
                           const std::vector<Mat>& grads, double lr) {
  const double b = config_.beta1;
  const double gamma = gamma_at(state_.t);
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const double eta = lr * state_.update_scale[gi];
    const double decay = 1.0 - eta * config_.weight_decay;
    auto& theta = groups[gi].values.data;
    auto& m = state_.momentum[gi].data;
    const auto& g = grads[gi].data;
    for (std::size_t i = 0; i < theta.size(); ++i) {
      m[i] = b * m[i] + (1.0 - b) * g[i];
      const double u = config_.nesterov ? b * m[i] + (1.0 - b) * g[i] : m[i];
      theta[i] = decay * theta[i] - eta * gamma * sign_of(u);
    }
  }
}

void Optimizer::step_lionar(std::vector<ParamGroup>& groups,
                            const std::vector<Mat>& grads, double lr,
                            double lr_max) {
  const double b = config_.beta1;
  const double gamma = gamma_at(state_.t);
  const double wd_scale = std::sqrt(2.0 * lr_max * config_.weight_decay);
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const double eta = lr * state_.update_scale[gi];
    auto& group = groups[gi];
    auto& m = state_.momentum[gi];
    const auto& g = grads[gi];
    if (group.kind == GroupKind::NeuronMatrix) {
      const double inv_sqrt_c = 1.0 / std::sqrt(static_cast<double>(group.fan_in()));
      for (std::size_t r = 0; r < group.values.rows; ++r) {
        double* theta = group.values.row_ptr(r);
        double* mrow = m.row_ptr(r);
        const double* grow = g.row_ptr(r);
        const double step_size =
            (eta / lr_max) * wd_scale * gamma * group.init_row_norms[r] * inv_sqrt_c;
        for (std::size_t c = 0; c < group.values.cols; ++c) {
          mrow[c] = b * mrow[c] + (1.0 - b) * grow[c];
          const double u = config_.nesterov ? b * mrow[c] + (1.0 - b) * grow[c]
                                            : mrow[c];
          theta[c] -= step_size * sign_of(u);
        }
        // Project the row back to its initial magnitude; the projection
        // replaces weight decay for neuron rows.
        const double norm = l2_norm(theta, group.values.cols);
        if (norm == 0.0) {
          throw std::runtime_error("lionar: neuron row collapsed to zero in group '" +
                                   group.name + "'");
        }
        const double rescale = group.init_row_norms[r] / norm;
        for (std::size_t c = 0; c < group.values.cols; ++c) {
          theta[c] *= rescale;
        }
      }
    } else {
      // Gains and biases keep the plain sign update, without decay.
      auto& theta = group.values.data;
      auto& mdata = m.data;
      const auto& gdata = g.data;
      for (std::size_t i = 0; i < theta.size(); ++i) {
        mdata[i] = b * mdata[i] + (1.0 - b) * gdata[i];
        const double u =
            config_.nesterov ? b * mdata[i] + (1.0 - b) * gdata[i] : mdata[i];
        theta[i] -= eta * gamma * sign_of(u);
      }
    }
  }
}

void Optimizer::step_normalized_gd(std::vector<ParamGroup>& groups,
                                   const std::vector<Mat>& grads, double lr) {
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const double eta = lr * state_.update_scale[gi];
    const auto& g = grads[gi].data;
    double norm_sq = 0.0;
    for (double x : g) norm_sq += x * x;
    // Running estimate of E[|g|^2], initialized to the first observation.
    if (state_.t == 1) {
      state_.grad_power_ema[gi] = norm_sq;
    } else {
      state_.grad_power_ema[gi] =
          ema(state_.grad_power_ema[gi], norm_sq, config_.beta1);
    }
    const double power = state_.grad_power_ema[gi];
    if (power == 0.0) {
      continue;  // nothing observed yet; zero gradient moves nothing
    }
    auto& theta = groups[gi].values.data;
    const double scale = eta / std::sqrt(power);
    for (std::size_t i = 0; i < theta.size(); ++i) {
      theta[i] -= scale * g[i];
    }
  }
}

std::string Optimizer::checkpoint_json() const {
  nlohmann::ordered_json j;
  j["v"] = 1;
  j["algorithm"] = to_string(config_.algorithm);
  j["config_hash"] = config_.hash();
  j["t"] = state_.t;
  nlohmann::ordered_json groups = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < group_names_.size(); ++i) {
    nlohmann::ordered_json g;
    g["name"] = group_names_[i];
    g["update_scale"] = state_.update_scale[i];
    g["m"] = state_.momentum[i].data;
    if (config_.algorithm == Algorithm::AdamW) {
      g["v"] = state_.second_moment[i].data;
    }
    if (config_.algorithm == Algorithm::NormalizedGd) {
      g["grad_power_ema"] = state_.grad_power_ema[i];
    }
    groups.push_back(std::move(g));
  }
  j["groups"] = std::move(groups);
  return j.dump();
}

void Optimizer::restore_checkpoint_json(const std::string& text,
                                        const std::vector<ParamGroup>& groups) {
  const auto j = nlohmann::json::parse(text);
  if (j.at("v").get<int>() != 1) {
    throw std::runtime_error("checkpoint: unsupported version");
  }
  if (j.at("config_hash").get<std::uint64_t>() != config_.hash()) {
    throw std::runtime_error("checkpoint: config hash mismatch");
  }
  const auto& jgroups = j.at("groups");
  if (jgroups.size() != group_names_.size() || groups.size() != group_names_.size()) {
    throw std::runtime_error("checkpoint: group count mismatch");
  }
  for (std::size_t i = 0; i < group_names_.size(); ++i) {
    const auto& g = jgroups.at(i);
    if (g.at("name").get<std::string>() != group_names_[i]) {
      throw std::runtime_error("checkpoint: group name mismatch");
    }
    auto m = g.at("m").get<std::vector<double>>();
    if (m.size() != groups[i].values.size()) {
      throw std::runtime_error("checkpoint: buffer shape mismatch");
    }
    state_.momentum[i].data = std::move(m);
    state_.update_scale[i] = g.at("update_scale").get<double>();
    if (config_.algorithm == Algorithm::AdamW) {
      auto v = g.at("v").get<std::vector<double>>();
      if (v.size() != groups[i].values.size()) {
        throw std::runtime_error("checkpoint: buffer shape mismatch");
      }
      state_.second_moment[i].data = std::move(v);
    }
    if (config_.algorithm == Algorithm::NormalizedGd) {
      state_.grad_power_ema[i] = g.at("grad_power_ema").get<double>();
    }
  }
  state_.t = j.at("t").get<std::int64_t>();
}

}  // namespace steplab
