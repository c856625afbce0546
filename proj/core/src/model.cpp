#include "steplab/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace steplab {

Activation activation_from_string(const std::string& s) {
  if (s == "relu") return Activation::Relu;
  if (s == "leaky_relu") return Activation::LeakyRelu;
  throw std::invalid_argument("unknown activation: " + s);
}

std::string to_string(Activation a) {
  return a == Activation::Relu ? "relu" : "leaky_relu";
}

void MlpSpec::validate() const {
  if (dims.size() < 2) {
    throw std::invalid_argument("mlp: need at least input and output dims");
  }
  for (auto d : dims) {
    if (d == 0) throw std::invalid_argument("mlp: zero layer width");
  }
  if (activation == Activation::LeakyRelu &&
      !(leaky_alpha > 0.0 && leaky_alpha < 1.0)) {
    throw std::invalid_argument("mlp: leaky_alpha must be in (0, 1)");
  }
}

void Batch::validate(LossKind loss, std::size_t input_dim,
                     std::size_t output_dim) const {
  if (inputs.rows != input_dim || inputs.cols == 0) {
    throw std::invalid_argument("batch: input shape mismatch");
  }
  if (!all_finite(inputs)) {
    throw std::invalid_argument("batch: non-finite inputs");
  }
  if (micro_batches == 0 || size() % micro_batches != 0) {
    throw std::invalid_argument("batch: micro_batches must divide batch size");
  }
  if (loss == LossKind::CrossEntropy) {
    if (class_targets.size() != size()) {
      throw std::invalid_argument("batch: target count mismatch");
    }
    for (int t : class_targets) {
      if (t < 0 || static_cast<std::size_t>(t) >= output_dim) {
        throw std::invalid_argument("batch: class target out of range");
      }
    }
  } else {
    if (value_targets.rows != output_dim || value_targets.cols != size()) {
      throw std::invalid_argument("batch: value target shape mismatch");
    }
  }
}

namespace {

double act_forward(double x, Activation a, double alpha) {
  if (x > 0.0) return x;
  return a == Activation::Relu ? 0.0 : alpha * x;
}

// Subgradient at exactly zero is the negative-side slope (zero for ReLU).
double act_grad(double pre, Activation a, double alpha) {
  if (pre > 0.0) return 1.0;
  return a == Activation::Relu ? 0.0 : alpha;
}

}  // namespace

Mlp::Mlp(MlpSpec spec, SeededRng& rng) : spec_(std::move(spec)) {
  spec_.validate();
  const std::size_t layers = spec_.dims.size() - 1;
  for (std::size_t l = 0; l < layers; ++l) {
    const std::size_t in = spec_.dims[l];
    const std::size_t out = spec_.dims[l + 1];
    const double sd = spec_.init_gain / std::sqrt(static_cast<double>(in));
    Mat w(out, in);
    for (auto& x : w.data) x = sd * rng.normal();
    const std::string prefix = "l" + std::to_string(l);
    weight_groups_.push_back(params_.size());
    params_.push_back(ParamGroup::neuron_matrix(prefix + ".weight", std::move(w)));
    bias_groups_.push_back(params_.size());
    params_.push_back(ParamGroup::generic(prefix + ".bias", Vec(out, 0.0)));
    if (spec_.weight_norm) {
      gain_groups_.push_back(params_.size());
      params_.push_back(ParamGroup::generic(prefix + ".gain", Vec(out, 1.0)));
    }
  }
}

void Mlp::forward_into(const Batch& batch, std::size_t col0, std::size_t col1,
                       ForwardResult& out, std::vector<Mat>* raw_dots) const {
  const std::size_t layers = layer_count();
  const std::size_t b = col1 - col0;
  out.preactivations.assign(layers, Mat());
  out.activations.assign(layers > 0 ? layers - 1 : 0, Mat());
  if (raw_dots) raw_dots->assign(layers, Mat());
  out.per_sample_loss.assign(b, 0.0);

  Mat x(batch.inputs.rows, b);
  for (std::size_t r = 0; r < batch.inputs.rows; ++r) {
    const double* src = batch.inputs.row_ptr(r);
    std::copy(src + col0, src + col1, x.row_ptr(r));
  }

  for (std::size_t l = 0; l < layers; ++l) {
    const Mat& w = params_[weight_groups_[l]].values;
    const Vec& bias = params_[bias_groups_[l]].values.data;
    Mat pre(w.rows, b);
    if (spec_.weight_norm) {
      const Vec& gain = params_[gain_groups_[l]].values.data;
      Mat dots = matmul(w, x);
      for (std::size_t u = 0; u < w.rows; ++u) {
        const double norm = l2_norm(w.row_ptr(u), w.cols);
        if (norm == 0.0) {
          throw std::runtime_error("mlp: zero-norm row under weight_norm");
        }
        const double scale = gain[u] / norm;
        for (std::size_t s = 0; s < b; ++s) {
          pre(u, s) = scale * dots(u, s) + bias[u];
        }
      }
      if (raw_dots) (*raw_dots)[l] = std::move(dots);
    } else {
      pre = matmul(w, x);
      for (std::size_t u = 0; u < w.rows; ++u) {
        double* row = pre.row_ptr(u);
        for (std::size_t s = 0; s < b; ++s) row[s] += bias[u];
      }
    }
    if (l + 1 < layers) {
      Mat act(pre.rows, pre.cols);
      for (std::size_t i = 0; i < pre.size(); ++i) {
        act.data[i] = act_forward(pre.data[i], spec_.activation, spec_.leaky_alpha);
      }
      out.activations[l] = act;
      x = std::move(act);
    }
    out.preactivations[l] = std::move(pre);
  }

  const Mat& outputs = out.preactivations.back();
  double total = 0.0;
  if (spec_.loss == LossKind::CrossEntropy) {
    for (std::size_t s = 0; s < b; ++s) {
      double max_logit = outputs(0, s);
      for (std::size_t u = 1; u < outputs.rows; ++u) {
        max_logit = std::max(max_logit, outputs(u, s));
      }
      double sum_exp = 0.0;
      for (std::size_t u = 0; u < outputs.rows; ++u) {
        sum_exp += std::exp(outputs(u, s) - max_logit);
      }
      const int target = batch.class_targets[col0 + s];
      const double log_prob =
          outputs(static_cast<std::size_t>(target), s) - max_logit - std::log(sum_exp);
      out.per_sample_loss[s] = -log_prob;
      total -= log_prob;
    }
  } else {
    for (std::size_t s = 0; s < b; ++s) {
      double sq = 0.0;
      for (std::size_t u = 0; u < outputs.rows; ++u) {
        const double d = outputs(u, s) - batch.value_targets(u, col0 + s);
        sq += d * d;
      }
      out.per_sample_loss[s] = 0.5 * sq;
      total += 0.5 * sq;
    }
  }
  out.loss = total / static_cast<double>(b);
}

const ForwardResult& Mlp::forward(const Batch& batch) {
  batch.validate(spec_.loss, spec_.input_dim(), spec_.output_dim());
  last_batch_ = batch;
  forward_into(batch, 0, batch.size(), cache_,
               spec_.weight_norm ? &raw_dots_ : nullptr);
  has_forward_ = true;
  if (!std::isfinite(cache_.loss)) {
    throw std::runtime_error("mlp: non-finite loss");
  }
  return cache_;
}

std::vector<Mat> Mlp::backward_range(std::size_t col0, std::size_t col1) const {
  const std::size_t layers = layer_count();
  const std::size_t b = col1 - col0;
  const double inv_b = 1.0 / static_cast<double>(b);

  std::vector<Mat> grads(params_.size());
  for (std::size_t i = 0; i < params_.size(); ++i) {
    grads[i] = Mat(params_[i].values.rows, params_[i].values.cols);
  }

  const Mat& outputs = cache_.preactivations.back();
  Mat delta(outputs.rows, b);  // dLoss/dPre for the current layer
  if (spec_.loss == LossKind::CrossEntropy) {
    for (std::size_t s = 0; s < b; ++s) {
      const std::size_t col = col0 + s;
      double max_logit = outputs(0, col);
      for (std::size_t u = 1; u < outputs.rows; ++u) {
        max_logit = std::max(max_logit, outputs(u, col));
      }
      double sum_exp = 0.0;
      for (std::size_t u = 0; u < outputs.rows; ++u) {
        sum_exp += std::exp(outputs(u, col) - max_logit);
      }
      for (std::size_t u = 0; u < outputs.rows; ++u) {
        const double p = std::exp(outputs(u, col) - max_logit) / sum_exp;
        delta(u, s) = p * inv_b;
      }
      delta(static_cast<std::size_t>(last_batch_.class_targets[col]), s) -= inv_b;
    }
  } else {
    for (std::size_t s = 0; s < b; ++s) {
      const std::size_t col = col0 + s;
      for (std::size_t u = 0; u < outputs.rows; ++u) {
        delta(u, s) = (outputs(u, col) - last_batch_.value_targets(u, col)) * inv_b;
      }
    }
  }

  for (std::size_t li = layers; li-- > 0;) {
    const Mat& w = params_[weight_groups_[li]].values;
    // Input to this layer, sliced to [col0, col1).
    Mat x(w.cols, b);
    const Mat& full_x = li == 0 ? last_batch_.inputs : cache_.activations[li - 1];
    for (std::size_t r = 0; r < w.cols; ++r) {
      const double* src = full_x.row_ptr(r);
      std::copy(src + col0, src + col1, x.row_ptr(r));
    }

    Mat& wgrad = grads[weight_groups_[li]];
    Mat& bgrad = grads[bias_groups_[li]];
    Mat dx(w.cols, b);

    if (spec_.weight_norm) {
      const Vec& gain = params_[gain_groups_[li]].values.data;
      Mat& ggrad = grads[gain_groups_[li]];
      const Mat& dots = raw_dots_[li];
      for (std::size_t u = 0; u < w.rows; ++u) {
        const double* wrow = w.row_ptr(u);
        const double norm = l2_norm(wrow, w.cols);
        const double inv_norm = 1.0 / norm;
        double dsum = 0.0;       // sum_s delta * (dot/norm)  -> gain grad
        double dproj_sum = 0.0;  // sum_s delta * dot         -> radial part
        for (std::size_t s = 0; s < b; ++s) {
          const double d = delta(u, s);
          dsum += d * dots(u, col0 + s) * inv_norm;
          dproj_sum += d * dots(u, col0 + s);
        }
        ggrad(0, u) += dsum;
        const double gscale = gain[u] * inv_norm;
        double* wg = wgrad.row_ptr(u);
        // d/dw of gain * <w, x>/|w| = gain (x - (<w,x>/|w|^2) w)/|w|
        for (std::size_t s = 0; s < b; ++s) {
          const double d = delta(u, s) * gscale;
          for (std::size_t c = 0; c < w.cols; ++c) {
            wg[c] += d * x(c, s);
          }
        }
        const double radial = gscale * inv_norm * inv_norm * dproj_sum;
        for (std::size_t c = 0; c < w.cols; ++c) {
          wg[c] -= radial * wrow[c];
        }
        for (std::size_t s = 0; s < b; ++s) {
          const double d = delta(u, s) * gscale;
          for (std::size_t c = 0; c < w.cols; ++c) {
            dx(c, s) += d * wrow[c];
          }
        }
      }
      for (std::size_t u = 0; u < w.rows; ++u) {
        double sum = 0.0;
        for (std::size_t s = 0; s < b; ++s) sum += delta(u, s);
        bgrad(0, u) = sum;
      }
    } else {
      // wgrad = delta * x^T, bgrad = rowsum(delta), dx = w^T delta
      for (std::size_t u = 0; u < w.rows; ++u) {
        double* wg = wgrad.row_ptr(u);
        double bsum = 0.0;
        for (std::size_t s = 0; s < b; ++s) {
          const double d = delta(u, s);
          bsum += d;
          if (d != 0.0) {
            for (std::size_t c = 0; c < w.cols; ++c) {
              wg[c] += d * x(c, s);
            }
          }
        }
        bgrad(0, u) = bsum;
      }
      for (std::size_t s = 0; s < b; ++s) {
        for (std::size_t u = 0; u < w.rows; ++u) {
          const double d = delta(u, s);
          if (d != 0.0) {
            const double* wrow = w.row_ptr(u);
            for (std::size_t c = 0; c < w.cols; ++c) {
              dx(c, s) += d * wrow[c];
            }
          }
        }
      }
    }

    if (li > 0) {
      const Mat& pre = cache_.preactivations[li - 1];
      delta = Mat(w.cols, b);
      for (std::size_t r = 0; r < w.cols; ++r) {
        for (std::size_t s = 0; s < b; ++s) {
          delta(r, s) = dx(r, s) * act_grad(pre(r, col0 + s), spec_.activation,
                                            spec_.leaky_alpha);
        }
      }
    }
  }
  return grads;
}

BackwardResult Mlp::backward(bool per_micro) {
  if (!has_forward_) {
    throw std::runtime_error("mlp: backward without a forward pass");
  }
  BackwardResult out;
  if (!per_micro) {
    out.grads = backward_range(0, last_batch_.size());
    return out;
  }
  const std::size_t a = last_batch_.micro_batches;
  const std::size_t m = last_batch_.micro_batch_size();
  out.micro_grads.reserve(a);
  for (std::size_t i = 0; i < a; ++i) {
    out.micro_grads.push_back(backward_range(i * m, (i + 1) * m));
  }
  // The full-batch gradient is exactly the average of the micro means.
  out.grads = out.micro_grads[0];
  for (std::size_t i = 1; i < a; ++i) {
    for (std::size_t gi = 0; gi < out.grads.size(); ++gi) {
      for (std::size_t k = 0; k < out.grads[gi].size(); ++k) {
        out.grads[gi].data[k] += out.micro_grads[i][gi].data[k];
      }
    }
  }
  const double inv_a = 1.0 / static_cast<double>(a);
  for (auto& g : out.grads) {
    for (auto& x : g.data) x *= inv_a;
  }
  return out;
}

double Mlp::loss_only(const Batch& batch) const {
  ForwardResult tmp;
  forward_into(batch, 0, batch.size(), tmp, nullptr);
  return tmp.loss;
}

double Mlp::loss_and_sign_hash(const Batch& batch, std::uint64_t* sign_hash) const {
  ForwardResult tmp;
  forward_into(batch, 0, batch.size(), tmp, nullptr);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t l = 0; l + 1 < layer_count(); ++l) {
    for (double x : tmp.preactivations[l].data) {
      h ^= x > 0.0 ? 0x9eULL : 0x31ULL;
      h *= 0x100000001b3ULL;
    }
  }
  *sign_hash = h;
  return tmp.loss;
}

Mat Mlp::predict(const Mat& inputs) const {
  Batch b;
  b.inputs = inputs;
  b.micro_batches = 1;
  if (spec_.loss == LossKind::CrossEntropy) {
    b.class_targets.assign(inputs.cols, 0);
  } else {
    b.value_targets = Mat(spec_.output_dim(), inputs.cols);
  }
  ForwardResult tmp;
  forward_into(b, 0, inputs.cols, tmp, nullptr);
  return tmp.preactivations.back();
}

std::string Mlp::checkpoint_json() const {
  nlohmann::ordered_json j;
  j["v"] = 1;
  nlohmann::ordered_json groups = nlohmann::ordered_json::array();
  for (const auto& p : params_) {
    nlohmann::ordered_json g;
    g["name"] = p.name;
    g["rows"] = p.values.rows;
    g["cols"] = p.values.cols;
    g["values"] = p.values.data;
    groups.push_back(std::move(g));
  }
  j["groups"] = std::move(groups);
  return j.dump();
}

void Mlp::restore_checkpoint_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  if (j.at("v").get<int>() != 1) {
    throw std::runtime_error("model checkpoint: unsupported version");
  }
  const auto& groups = j.at("groups");
  if (groups.size() != params_.size()) {
    throw std::runtime_error("model checkpoint: group count mismatch");
  }
  for (std::size_t i = 0; i < params_.size(); ++i) {
    const auto& g = groups.at(i);
    if (g.at("name").get<std::string>() != params_[i].name ||
        g.at("rows").get<std::size_t>() != params_[i].values.rows ||
        g.at("cols").get<std::size_t>() != params_[i].values.cols) {
      throw std::runtime_error("model checkpoint: group mismatch");
    }
    params_[i].values.data = g.at("values").get<std::vector<double>>();
  }
  has_forward_ = false;
}

double grad_check(Mlp& model, const Batch& batch, double eps, SeededRng& rng,
                  std::size_t coords_per_group) {
  model.forward(batch);
  const auto analytic = model.backward(false).grads;

  std::uint64_t base_hash = 0;
  model.loss_and_sign_hash(batch, &base_hash);

  double worst = 0.0;
  auto& params = model.params();
  for (std::size_t gi = 0; gi < params.size(); ++gi) {
    auto& values = params[gi].values.data;
    const std::size_t count = std::min(coords_per_group, values.size());
    for (std::size_t k = 0; k < count; ++k) {
      const std::size_t idx =
          count == values.size() ? k : rng.uniform_index(values.size());
      const double saved = values[idx];
      // (8(f(h) - f(-h)) - (f(2h) - f(-2h))) / 12h; exact through cubics.
      // Differencing the symmetric pairs first makes the result exactly
      // zero for coordinates the loss does not depend on.
      const double offsets[4] = {eps, -eps, 2.0 * eps, -2.0 * eps};
      double losses[4] = {0.0, 0.0, 0.0, 0.0};
      bool crossed_kink = false;
      for (int p = 0; p < 4; ++p) {
        values[idx] = saved + offsets[p];
        std::uint64_t h = 0;
        losses[p] = model.loss_and_sign_hash(batch, &h);
        if (h != base_hash) crossed_kink = true;
      }
      values[idx] = saved;
      if (crossed_kink) continue;
      const double fd =
          (8.0 * (losses[0] - losses[1]) - (losses[2] - losses[3])) / (12.0 * eps);
      const double an = analytic[gi].data[idx];
      const double rel = std::abs(an - fd) /
                         std::max({std::abs(an), std::abs(fd), 1e-12});
      worst = std::max(worst, rel);
    }
  }
  return worst;
}

double accuracy(const Mlp& model, const Mat& inputs,
                const std::vector<int>& targets) {
  const Mat out = model.predict(inputs);
  std::size_t correct = 0;
  for (std::size_t s = 0; s < out.cols; ++s) {
    std::size_t best = 0;
    for (std::size_t u = 1; u < out.rows; ++u) {
      if (out(u, s) > out(best, s)) best = u;
    }
    if (static_cast<int>(best) == targets[s]) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(out.cols);
}

}  // namespace steplab
