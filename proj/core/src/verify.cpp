#include "steplab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "steplab/diagnostics.hpp"
#include "steplab/gradstats.hpp"
#include "steplab/model.hpp"
#include "steplab/optim.hpp"
#include "steplab/schedule.hpp"
#include "steplab/sim.hpp"
#include "steplab/task.hpp"

namespace steplab {

namespace {

// Stream-id blocks so each suite draws from its own independent sequences.
enum SuiteStream : std::uint64_t {
  kEq1 = 100,
  kAmp = 200,
  kL1 = 300,
  kRrc = 400,
  kScaleInv = 500,
  kSnr = 600,
  kGradCheck = 700,
  kLionarNorms = 800,
};

VerifyCheck make_check(std::string name, double estimate, double target,
                       double tolerance, double std_error = 0.0) {
  VerifyCheck c;
  c.name = std::move(name);
  c.estimate = estimate;
  c.target = target;
  c.tolerance = tolerance;
  c.std_error = std_error;
  c.pass = std::isfinite(estimate) && std::abs(estimate - target) <= tolerance;
  return c;
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), pattern, a, b, c);
  return buf;
}

SuiteResult suite_eq1(std::uint64_t seed) {
  SuiteResult out;
  out.suite = "eq1";
  const double betas[] = {0.5, 0.9, 0.98};
  const std::int64_t ts[] = {1, 5, 50, 500};
  // trials * dims >= 1e5 effective samples per cell.
  const std::size_t dims = 100;
  const std::size_t trials = 1000;
  std::uint64_t stream = kEq1;
  for (double beta : betas) {
    for (std::int64_t t : ts) {
      SeededRng rng(seed, stream++);
      const McEstimate est = mc_momentum_norm(beta, t, dims, trials, rng);
      const double target = expected_momentum_sq(beta, t);
      out.checks.push_back(make_check(
          fmt("momentum power beta=%.2f t=%.0f", beta, static_cast<double>(t)),
          est.value, target, 0.02 * target, est.std_error));
    }
  }
  return out;
}

SuiteResult suite_amplification(std::uint64_t seed) {
  SuiteResult out;
  out.suite = "amplification";

  // Scaling constants against a line-by-line re-derivation.
  const double steady_hb = std::sqrt((1.0 - 0.9) / (1.0 + 0.9));
  out.checks.push_back(make_check("gamma heavy-ball steady beta=0.9",
                                  momentum_scale(0.9, false), steady_hb, 1e-12));
  const double fresh = 1.0 - 0.9 * 0.9;
  const double steady_nesterov =
      std::sqrt(fresh * fresh + std::pow(0.9, 4.0) * (0.1 / 1.9));
  out.checks.push_back(make_check("gamma nesterov steady beta=0.9",
                                  momentum_scale(0.9, true), steady_nesterov, 1e-12));
  out.checks.push_back(make_check(
      "gamma heavy-ball inverse t=1 beta=0.9",
      momentum_scale(0.9, false, 1, true), std::sqrt((1.0 - 0.81) * 0.1 / 1.9), 1e-12));
  out.checks.push_back(make_check("gamma nesterov inverse t=1 beta=0.9",
                                  momentum_scale(0.9, true, 1, true), fresh, 1e-12));
  // Frozen decimals quoted to 1e-6.
  out.checks.push_back(
      make_check("gamma heavy-ball steady quoted", momentum_scale(0.9, false),
                 0.229416, 1e-6));
  out.checks.push_back(make_check("gamma nesterov steady quoted",
                                  momentum_scale(0.9, true), 0.265766, 1e-6));

  // Closed-form amplification at t=1 is exactly (1+b)/(1-b) = 19.
  out.checks.push_back(
      make_check("amplification closed form t=1", bias_amplification_target(0.9, 1),
                 19.0, 1e-12));

  const std::size_t dims = 100;
  const std::size_t trials = 1000;
  std::uint64_t stream = kAmp;
  for (std::int64_t t : {1, 2, 5}) {
    SeededRng rng(seed, stream++);
    const McEstimate est = mc_bias_amplification(0.9, t, dims, trials, rng);
    const double target = bias_amplification_target(0.9, t);
    out.checks.push_back(
        make_check(fmt("amplification mc t=%.0f", static_cast<double>(t)), est.value,
                   target, 0.03 * target, est.std_error));
  }
  return out;
}

SuiteResult suite_l1(std::uint64_t seed) {
  SuiteResult out;
  out.suite = "l1";
  const std::size_t trials = 100000;
  std::uint64_t stream = kL1;
  for (std::size_t c : {1u, 4u, 16u, 64u}) {
    SeededRng rng(seed, stream++);
    const McEstimate est = mc_lemma_l1(c, ElementDist::StandardNormal,
                                       ElementDist::StandardNormal, trials, rng);
    out.checks.push_back(make_check(fmt("normal x normal C=%.0f", c), est.value, 1.0,
                                    3.0 * est.std_error, est.std_error));
  }
  {
    SeededRng rng(seed, stream++);
    const McEstimate est = mc_lemma_l1(16, ElementDist::Ones,
                                       ElementDist::StandardNormal, trials, rng);
    out.checks.push_back(make_check("ones x normal C=16", est.value, 1.0,
                                    3.0 * est.std_error, est.std_error));
  }
  {
    SeededRng rng(seed, stream++);
    const McEstimate est = mc_lemma_l1(8, ElementDist::UniformSym,
                                       ElementDist::StandardNormal, trials, rng);
    out.checks.push_back(make_check("uniform x normal C=8", est.value, 1.0,
                                    3.0 * est.std_error, est.std_error));
  }
  return out;
}

SuiteResult suite_rrc(std::uint64_t seed) {
  SuiteResult out;
  out.suite = "rrc";
  const double eta = 0.1;

  // The B=1 bracket collapses: prediction = eta^2 C / |w|^2 for any phi.
  for (double phi : {0.0, 0.1, 1.0, 10.0}) {
    const double got = rrc_closed_form(eta, 1, 32, phi, 32.0);
    const double want = eta * eta * 32.0 / 32.0;
    out.checks.push_back(
        make_check(fmt("closed form B=1 identity phi=%.1f", phi), got, want,
                   1e-12 * want));
  }

  // rho formula spot values and properties.
  out.checks.push_back(make_check("rho raw B=4 C=8 phi=1",
                                  rrc_rho_raw(1.0, 4, 8), 1.679688, 1e-6));
  out.checks.push_back(
      make_check("rho clamp low B=4 C=8 phi=0", rrc_rho(0.0, 4, 8), 1.0, 0.0));
  out.checks.push_back(
      make_check("rho limit phi=inf B=4",
                 rrc_rho(std::numeric_limits<double>::infinity(), 4, 8), 4.0, 0.0));
  {
    double prev = -1.0;
    bool monotone = true;
    for (int i = 0; i < 50; ++i) {
      const double phi = std::pow(10.0, -2.0 + 4.0 * i / 49.0);
      const double r = rrc_rho(phi, 4, 8);
      if (r < prev - 1e-12) monotone = false;
      prev = r;
    }
    out.checks.push_back(
        make_check("rho monotone in phi (50-point grid)", monotone ? 1.0 : 0.0, 1.0, 0.0));
  }

  std::uint64_t stream = kRrc;
  for (std::int64_t b : {1, 4, 16}) {
    for (std::size_t c : {8u, 64u}) {
      for (double phi : {0.0, 0.1, 1.0}) {
        const double noise = 1.0;
        const GradientModel model = GradientModel::isotropic(c, b, phi * noise, noise);
        SeededRng rng(seed, stream++);
        const std::size_t trials = 60000;
        const McRrcResult mc = mc_rrc(model, eta, trials, rng);
        const double target =
            rrc_closed_form(eta, b, c, phi, static_cast<double>(c));
        const double tol = std::max(0.05 * target, 3.0 * mc.ratio.std_error);
        out.checks.push_back(make_check(
            fmt("rrc mc B=%.0f C=%.0f phi=%.1f", static_cast<double>(b),
                static_cast<double>(c), phi),
            mc.ratio.value, target, tol, mc.ratio.std_error));
        // Internal consistency: the sampled batch-gradient power must match
        // signal + noise/B before the comparison above means anything.
        out.checks.push_back(make_check(
            fmt("grad power gate B=%.0f C=%.0f phi=%.1f", static_cast<double>(b),
                static_cast<double>(c), phi),
            mc.batch_grad_power.value, mc.batch_grad_power_exact,
            0.01 * mc.batch_grad_power_exact, mc.batch_grad_power.std_error));
      }
    }
  }
  return out;
}

SuiteResult suite_scale_invariance(std::uint64_t seed) {
  SuiteResult out;
  out.suite = "scale_invariance";
  const std::size_t dim = 64;
  std::uint64_t stream = kScaleInv;
  for (double c : {0.5, 2.0, 10.0}) {
    SeededRng rng(seed, stream++);
    double worst = 0.0;
    for (int rep = 0; rep < 5; ++rep) {
      worst = std::max(worst, std::abs(scale_invariance_check(c, dim, rng) - 1.0 / c));
    }
    out.checks.push_back(
        make_check(fmt("gradient norm ratio dev c=%.1f", c), worst, 0.0, 1e-10));
  }

  // Fixed-magnitude updates on a magnitude-invariant neuron rotate the
  // weight by an angle proportional to 1/c.
  const double eta = 1e-4;
  const std::size_t trials = 4000;
  auto mean_angle = [&](double c, SeededRng& rng) {
    double sum = 0.0;
    for (std::size_t i = 0; i < trials; ++i) {
      Vec w = rng.normal_vec(dim);
      for (auto& x : w) x *= c;
      const Vec x = rng.normal_vec(dim);
      const Vec g = weight_normalized_neuron_grad(w, x);
      std::vector<ParamGroup> groups;
      groups.push_back(ParamGroup::neuron_matrix("w", Mat{1, dim, w}));
      OptimizerConfig cfg;
      cfg.algorithm = Algorithm::LionA;
      cfg.weight_decay = 0.0;
      cfg.beta1 = 0.9;
      Optimizer opt(cfg, groups);
      std::vector<Mat> grads;
      grads.push_back(Mat{1, dim, g});
      opt.step(groups, grads, eta);
      sum += angular_update(w, groups[0].values.data);
    }
    return sum / static_cast<double>(trials);
  };
  for (double c : {0.5, 2.0, 10.0}) {
    SeededRng rng_c(seed, stream++);
    SeededRng rng_1(seed, stream++);
    const double ratio = mean_angle(c, rng_c) / mean_angle(1.0, rng_1);
    out.checks.push_back(make_check(fmt("liona angular ratio c=%.1f", c), ratio,
                                    1.0 / c, 0.05 / c));
  }
  return out;
}

SuiteResult suite_snr(std::uint64_t seed) {
  SuiteResult out;
  out.suite = "snr";

  // Hand-evaluated two-micro-batch cases.
  {
    MicroBatchGrads m;
    m.micro_batch_size = 1;
    m.grads = {{1.0}, {-1.0}};
    const SnrEstimate e = estimate_snr(m);
    out.checks.push_back(make_check("hand case [1],[-1] noise", e.noise_power, 2.0, 1e-12));
    out.checks.push_back(make_check("hand case [1],[-1] signal", e.signal_power, 0.0, 1e-12));
    out.checks.push_back(make_check("hand case [1],[-1] phi", e.phi, 0.0, 1e-12));
  }
  {
    MicroBatchGrads m;
    m.micro_batch_size = 1;
    m.grads = {{3.0}, {3.0}};
    const SnrEstimate e = estimate_snr(m);
    out.checks.push_back(make_check("hand case [3],[3] signal", e.signal_power, 9.0, 1e-12));
    out.checks.push_back(make_check("hand case [3],[3] phi=inf",
                                    std::isinf(e.phi) ? 1.0 : 0.0, 1.0, 0.0));
  }
  {
    MicroBatchGrads m;
    m.micro_batch_size = 1;
    m.grads = {{2.0}, {0.0}};
    const SnrEstimate e = estimate_snr(m);
    out.checks.push_back(make_check("hand case [2],[0] noise", e.noise_power, 2.0, 1e-12));
    out.checks.push_back(make_check("hand case [2],[0] phi", e.phi, 0.0, 1e-12));
  }

  // Median over repeats against the generating model.
  const std::size_t a = 8, m_sz = 16, c = 64, repeats = 64;
  std::uint64_t stream = kSnr;
  for (double phi : {0.1, 1.0, 10.0}) {
    SeededRng rng(seed, stream++);
    const GradientModel model = GradientModel::isotropic(c, 1, phi, 1.0);
    std::vector<double> estimates;
    estimates.reserve(repeats);
    for (std::size_t rep = 0; rep < repeats; ++rep) {
      MicroBatchGrads micro;
      micro.micro_batch_size = static_cast<std::int64_t>(m_sz);
      for (std::size_t i = 0; i < a; ++i) {
        Vec mean(c, 0.0);
        for (std::size_t s = 0; s < m_sz; ++s) {
          const BatchSample one = sample_batch(model, rng);
          for (std::size_t k = 0; k < c; ++k) mean[k] += one.mean[k];
        }
        for (auto& x : mean) x /= static_cast<double>(m_sz);
        micro.grads.push_back(std::move(mean));
      }
      estimates.push_back(estimate_snr(micro).phi);
    }
    std::sort(estimates.begin(), estimates.end());
    const double median =
        0.5 * (estimates[repeats / 2 - 1] + estimates[repeats / 2]);
    out.checks.push_back(make_check(fmt("median phi estimate phi=%.1f", phi), median,
                                    phi, 0.15 * phi));
  }
  return out;
}

SuiteResult suite_gradcheck(std::uint64_t seed) {
  SuiteResult out;
  out.suite = "gradcheck";
  SeededRng data_rng(seed, kGradCheck);

  auto make_batch = [&](std::size_t in, std::size_t outdim, std::size_t n,
                        LossKind loss) {
    Batch b;
    b.inputs = Mat(in, n);
    for (auto& x : b.inputs.data) x = data_rng.normal();
    if (loss == LossKind::CrossEntropy) {
      b.class_targets.resize(n);
      for (auto& t : b.class_targets) {
        t = static_cast<int>(data_rng.uniform_index(outdim));
      }
    } else {
      b.value_targets = Mat(outdim, n);
      for (auto& x : b.value_targets.data) x = data_rng.normal();
    }
    return b;
  };

  {
    MlpSpec spec;
    spec.dims = {8, 1};
    spec.loss = LossKind::MeanSquaredError;
    SeededRng init(seed, kGradCheck + 1);
    Mlp model(spec, init);
    SeededRng pick(seed, kGradCheck + 2);
    const Batch batch = make_batch(8, 1, 16, LossKind::MeanSquaredError);
    // Quadratic loss: the stencil is exact, so a large step minimizes
    // roundoff in the divided difference.
    const double err = grad_check(model, batch, 1e-2, pick, 64);
    out.checks.push_back(make_check("linear + mse", err, 0.0, 1e-9));
  }
  {
    MlpSpec spec;
    spec.dims = {12, 32, 16, 4};
    spec.activation = Activation::LeakyRelu;
    spec.leaky_alpha = 0.1;
    SeededRng init(seed, kGradCheck + 3);
    Mlp model(spec, init);
    SeededRng pick(seed, kGradCheck + 4);
    const Batch batch = make_batch(12, 4, 16, LossKind::CrossEntropy);
    const double err = grad_check(model, batch, 1e-4, pick, 48);
    out.checks.push_back(make_check("leaky-relu mlp alpha=0.1", err, 0.0, 1e-5));
  }
  {
    MlpSpec spec;
    spec.dims = {12, 32, 16, 4};
    spec.activation = Activation::Relu;
    SeededRng init(seed, kGradCheck + 5);
    Mlp model(spec, init);
    SeededRng pick(seed, kGradCheck + 6);
    const Batch batch = make_batch(12, 4, 16, LossKind::CrossEntropy);
    const double err = grad_check(model, batch, 1e-4, pick, 48);
    out.checks.push_back(make_check("relu mlp kink-excluded", err, 0.0, 1e-5));
  }
  return out;
}

SuiteResult suite_lionar_norms(std::uint64_t seed) {
  SuiteResult out;
  out.suite = "lionar_norms";

  // LionAR under IID random gradients: row norms pinned to their initial
  // values, mean per-row angle matching the closed-form target.
  const std::size_t rows = 16, cols = 32;
  const double eta = 0.01, lambda = 0.1;
  const std::int64_t steps = 2000;

  SeededRng init(seed, kLionarNorms);
  Mat w(rows, cols);
  for (auto& x : w.data) x = init.normal();
  std::vector<ParamGroup> groups;
  groups.push_back(ParamGroup::neuron_matrix("w", std::move(w)));
  groups.push_back(ParamGroup::generic("b", Vec(rows, 0.1)));
  const std::vector<double> init_norms = groups[0].init_row_norms;

  OptimizerConfig cfg;
  cfg.algorithm = Algorithm::LionAR;
  cfg.weight_decay = lambda;
  cfg.beta1 = 0.9;
  Optimizer opt(cfg, groups);

  SeededRng grad_rng(seed, kLionarNorms + 1);
  double worst_norm_dev = 0.0;
  double angle_sum = 0.0;
  std::size_t angle_count = 0;
  for (std::int64_t t = 1; t <= steps; ++t) {
    std::vector<Mat> grads;
    grads.emplace_back(rows, cols);
    for (auto& x : grads[0].data) x = grad_rng.normal();
    grads.emplace_back(1, rows);
    for (auto& x : grads[1].data) x = grad_rng.normal();

    const Mat before = groups[0].values;
    opt.step(groups, grads, eta, eta);
    for (std::size_t r = 0; r < rows; ++r) {
      const double n = l2_norm(groups[0].values.row_ptr(r), cols);
      worst_norm_dev =
          std::max(worst_norm_dev, std::abs(n - init_norms[r]) / init_norms[r]);
      angle_sum += angular_update(before.row(r), groups[0].values.row(r));
      ++angle_count;
    }
  }
  out.checks.push_back(make_check("row norm preservation (relative)",
                                  worst_norm_dev, 0.0, 1e-12));
  const double gamma = momentum_scale(cfg.beta1, false);
  const double angle_target = std::atan(std::sqrt(2.0 * eta * lambda) * gamma);
  out.checks.push_back(make_check("mean angular update vs arctan target",
                                  angle_sum / static_cast<double>(angle_count),
                                  angle_target, 0.10 * angle_target));

  // LionA pre-decay update norm equals eta_t * gamma * sqrt(d) exactly when
  // no sign coordinate is zero.
  {
    const std::size_t d_rows = 8, d_cols = 8;
    const double d = static_cast<double>(d_rows * d_cols);
    SeededRng w_rng(seed, kLionarNorms + 2);
    Mat w2(d_rows, d_cols);
    for (auto& x : w2.data) x = 0.5 * w_rng.normal();
    std::vector<ParamGroup> g2;
    g2.push_back(ParamGroup::neuron_matrix("w", std::move(w2)));
    OptimizerConfig cfg2;
    cfg2.algorithm = Algorithm::LionA;
    cfg2.weight_decay = 0.1;
    cfg2.beta1 = 0.9;
    Optimizer opt2(cfg2, g2);
    ScheduleSpec sched;
    sched.kind = ScheduleKind::Trapezoidal;
    sched.peak_lr = 0.05;
    sched.total_steps = 500;
    sched.warmup_frac = 0.1;
    sched.cooldown_frac = 0.5;
    const double gamma2 = momentum_scale(cfg2.beta1, false);
    SeededRng g_rng(seed, kLionarNorms + 3);
    double worst = 0.0;
    for (std::int64_t t = 1; t <= sched.total_steps; ++t) {
      std::vector<Mat> grads;
      grads.emplace_back(d_rows, d_cols);
      for (auto& x : grads[0].data) x = g_rng.normal();
      const Mat before = g2[0].values;
      const double lr = lr_at(sched, t);
      opt2.step(g2, grads, lr);
      const double decay = 1.0 - lr * cfg2.weight_decay;
      double norm_sq = 0.0;
      bool zero_sign = false;
      for (std::size_t i = 0; i < before.size(); ++i) {
        const double pre_decay = g2[0].values.data[i] - decay * before.data[i];
        if (pre_decay == 0.0) zero_sign = true;
        norm_sq += pre_decay * pre_decay;
      }
      if (zero_sign) continue;  // excluded by the claim's precondition
      const double got = std::sqrt(norm_sq);
      const double want = lr * gamma2 * std::sqrt(d);
      worst = std::max(worst, std::abs(got - want) / want);
    }
    out.checks.push_back(
        make_check("liona pre-decay l2 norm = lr*gamma*sqrt(d)", worst, 0.0, 1e-12));
  }
  return out;
}

SuiteResult finalize(SuiteResult&& s, std::chrono::steady_clock::time_point start) {
  s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                  .count();
  s.pass = std::all_of(s.checks.begin(), s.checks.end(),
                       [](const VerifyCheck& c) { return c.pass; });
  return std::move(s);
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {
      "eq1",  "amplification", "l1",        "rrc",
      "snr",  "scale_invariance", "gradcheck", "lionar_norms"};
  return names;
}

SuiteResult run_verify_suite(const std::string& name, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  if (name == "eq1") return finalize(suite_eq1(seed), start);
  if (name == "amplification") return finalize(suite_amplification(seed), start);
  if (name == "l1") return finalize(suite_l1(seed), start);
  if (name == "rrc") return finalize(suite_rrc(seed), start);
  if (name == "scale_invariance") return finalize(suite_scale_invariance(seed), start);
  if (name == "snr") return finalize(suite_snr(seed), start);
  if (name == "gradcheck") return finalize(suite_gradcheck(seed), start);
  if (name == "lionar_norms") return finalize(suite_lionar_norms(seed), start);
  throw std::invalid_argument("unknown verify suite: " + name);
}

VerifyReport run_verify(const std::vector<std::string>& suites, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.seed = seed;
  const std::vector<std::string>& selected =
      suites.empty() ? verify_suite_names() : suites;
  for (const auto& name : selected) {
    report.suites.push_back(run_verify_suite(name, seed));
  }
  report.pass = std::all_of(report.suites.begin(), report.suites.end(),
                            [](const SuiteResult& s) { return s.pass; });
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string verify_report_json(const VerifyReport& report) {
  nlohmann::ordered_json j;
  j["v"] = 1;
  j["seed"] = report.seed;
  j["pass"] = report.pass;
  j["seconds"] = report.seconds;
  nlohmann::ordered_json suites = nlohmann::ordered_json::array();
  for (const auto& s : report.suites) {
    nlohmann::ordered_json js;
    js["suite"] = s.suite;
    js["pass"] = s.pass;
    js["seconds"] = s.seconds;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : s.checks) {
      nlohmann::ordered_json jc;
      jc["name"] = c.name;
      jc["estimate"] = std::isfinite(c.estimate)
                           ? nlohmann::ordered_json(c.estimate)
                           : nlohmann::ordered_json(nullptr);
      jc["target"] = c.target;
      jc["tolerance"] = c.tolerance;
      if (c.std_error > 0.0) jc["std_error"] = c.std_error;
      jc["pass"] = c.pass;
      checks.push_back(std::move(jc));
    }
    js["checks"] = std::move(checks);
    suites.push_back(std::move(js));
  }
  j["suites"] = std::move(suites);
  return j.dump(2);
}

}  // namespace steplab
