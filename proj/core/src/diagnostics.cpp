#include "steplab/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "steplab/rng.hpp"

namespace steplab {

double angular_update(const Vec& w_prev, const Vec& w_next) {
  return std::acos(cosine_between(w_prev, w_next));
}

double measure_rrc(const Vec& w, const Vec& delta_w, const Mat& inputs) {
  if (w.size() != inputs.rows || delta_w.size() != inputs.rows) {
    throw std::invalid_argument("measure_rrc: shape mismatch");
  }
  const Vec y = mat_tvec(inputs, w);
  const Vec dy = mat_tvec(inputs, delta_w);
  const double denom = l2_norm(y);
  if (denom == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return l2_norm(dy) / denom;
}

double measure_rrc_layer(const Mat& w, const Mat& delta_w, const Mat& inputs) {
  require_same_shape(w, delta_w, "measure_rrc_layer");
  if (w.cols != inputs.rows) {
    throw std::invalid_argument("measure_rrc_layer: shape mismatch");
  }
  const Mat y = matmul(w, inputs);
  const Mat dy = matmul(delta_w, inputs);
  const double denom = frobenius_norm(y);
  if (denom == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return frobenius_norm(dy) / denom;
}

double dead_unit_fraction(const Mat& preactivations, double threshold) {
  if (preactivations.rows == 0 || preactivations.cols == 0) {
    throw std::invalid_argument("dead_unit_fraction: empty input");
  }
  std::size_t dead = 0;
  for (std::size_t u = 0; u < preactivations.rows; ++u) {
    const double* row = preactivations.row_ptr(u);
    bool all_off = true;
    for (std::size_t s = 0; s < preactivations.cols; ++s) {
      if (row[s] > threshold) {
        all_off = false;
        break;
      }
    }
    if (all_off) ++dead;
  }
  return static_cast<double>(dead) / static_cast<double>(preactivations.rows);
}

double stable_rank(const Mat& w) {
  if (w.rows == 0 || w.cols == 0) {
    throw std::invalid_argument("stable_rank: empty matrix");
  }
  const double frob = frobenius_norm(w);
  if (frob == 0.0) {
    throw std::invalid_argument("stable_rank: zero matrix");
  }
  // Power iteration on the Gram matrix of the smaller side.
  const bool use_cols = w.cols <= w.rows;
  const std::size_t n = use_cols ? w.cols : w.rows;
  SeededRng rng(0x5feddead, 0);
  Vec v = rng.normal_vec(n);
  double vn = l2_norm(v);
  for (auto& x : v) x /= vn;

  double sigma_sq = 0.0;
  constexpr int kMaxIters = 10000;
  for (int it = 0; it < kMaxIters; ++it) {
    Vec gram_v;
    if (use_cols) {
      gram_v = mat_tvec(w, mat_vec(w, v));  // W^T (W v)
    } else {
      gram_v = mat_vec(w, mat_tvec(w, v));  // W (W^T v)
    }
    const double rayleigh = dot(v, gram_v);
    const double norm = l2_norm(gram_v);
    if (norm == 0.0) {
      break;  // v landed in the null space; restart direction
    }
    for (std::size_t i = 0; i < n; ++i) v[i] = gram_v[i] / norm;
    if (it > 0 && std::abs(rayleigh - sigma_sq) <= 1e-8 * std::abs(rayleigh)) {
      sigma_sq = rayleigh;
      break;
    }
    sigma_sq = rayleigh;
  }
  return frob * frob / sigma_sq;
}

GroupStepMetrics summarize_group_update(const Mat& before, const Mat& after,
                                        bool rows_are_neurons) {
  require_same_shape(before, after, "summarize_group_update");
  GroupStepMetrics out;
  Vec delta(before.size());
  for (std::size_t i = 0; i < before.size(); ++i) {
    delta[i] = after.data[i] - before.data[i];
  }
  out.l2_update = l2_norm(delta);

  std::vector<double> angles;
  if (rows_are_neurons) {
    angles.reserve(before.rows);
    for (std::size_t r = 0; r < before.rows; ++r) {
      const Vec wb = before.row(r);
      const Vec wa = after.row(r);
      if (l2_norm(wb) == 0.0 || l2_norm(wa) == 0.0) continue;
      angles.push_back(angular_update(wb, wa));
    }
  } else {
    if (l2_norm(before.data) > 0.0 && l2_norm(after.data) > 0.0) {
      angles.push_back(angular_update(before.data, after.data));
    }
  }
  if (!angles.empty()) {
    std::sort(angles.begin(), angles.end());
    double sum = 0.0;
    for (double a : angles) sum += a;
    out.ang_mean = sum / static_cast<double>(angles.size());
    const auto pick = [&](double q) {
      const double pos = q * static_cast<double>(angles.size() - 1);
      const std::size_t idx = static_cast<std::size_t>(pos);
      const double frac = pos - static_cast<double>(idx);
      if (idx + 1 >= angles.size()) return angles.back();
      return angles[idx] * (1.0 - frac) + angles[idx + 1] * frac;
    };
    out.ang_p05 = pick(0.05);
    out.ang_p95 = pick(0.95);
  }
  return out;
}

}  // namespace steplab
