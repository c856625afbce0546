#include "steplab/train.hpp"

#include <atomic>
#include <cmath>
#include <condition_variable>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <thread>

#include "steplab/gradstats.hpp"
#include "steplab/metrics.hpp"

namespace steplab {

namespace {

// Fixed RNG stream ids so every randomness source is independent and a run
// is fully determined by (config, seed).
enum Stream : std::uint64_t {
  kStreamData = 1,
  kStreamModelInit = 2,
  kStreamEvalTrain = 3,
  kStreamEvalVal = 4,
};

Dataset build_dataset(const RunConfig& cfg) {
  if (cfg.task == TaskKind::CharLm) {
    return make_charlm_task(cfg.context);
  }
  return make_synthetic_task(cfg.synthetic, cfg.seed);
}

Mlp build_model(const RunConfig& cfg, const Dataset& data) {
  MlpSpec spec;
  spec.dims.push_back(data.input_dim);
  for (auto h : cfg.hidden) spec.dims.push_back(h);
  spec.dims.push_back(data.output_dim);
  spec.activation = cfg.activation;
  spec.leaky_alpha = cfg.leaky_alpha;
  spec.weight_norm = cfg.weight_norm;
  spec.loss = data.loss;
  spec.init_gain = cfg.init_gain;
  SeededRng rng(cfg.seed, kStreamModelInit);
  return Mlp(std::move(spec), rng);
}

Vec concat_group_mats(const std::vector<Mat>& mats) {
  std::size_t total = 0;
  for (const auto& m : mats) total += m.size();
  Vec out;
  out.reserve(total);
  for (const auto& m : mats) {
    out.insert(out.end(), m.data.begin(), m.data.end());
  }
  return out;
}

Vec concat_micro(const std::vector<std::vector<Mat>>& micro, std::size_t a) {
  return concat_group_mats(micro[a]);
}

double pooled_dead_fraction(const ForwardResult& fr, std::size_t layers) {
  // Pool hidden-layer preactivations; each unit is one row.
  std::size_t dead = 0;
  std::size_t units = 0;
  for (std::size_t l = 0; l + 1 < layers; ++l) {
    const Mat& pre = fr.preactivations[l];
    units += pre.rows;
    for (std::size_t u = 0; u < pre.rows; ++u) {
      const double* row = pre.row_ptr(u);
      bool all_off = true;
      for (std::size_t s = 0; s < pre.cols; ++s) {
        if (row[s] > 0.0) {
          all_off = false;
          break;
        }
      }
      if (all_off) ++dead;
    }
  }
  if (units == 0) return 0.0;
  return static_cast<double>(dead) / static_cast<double>(units);
}

}  // namespace

TrainResult run_training(const RunConfig& config) {
  config.validate();
  const Dataset data = build_dataset(config);
  Mlp model = build_model(config, data);

  OptimizerConfig opt_cfg = config.optimizer;
  if (opt_cfg.rrc_correction) {
    opt_cfg.weight_decay *= config.rrc_wd_multiplier;
  }
  Optimizer optimizer(opt_cfg, model.params());
  const ScheduleSpec schedule = config.schedule();
  const double lr_peak = config.steps > 0 ? max_lr(schedule) : config.peak_lr;

  SeededRng data_rng(config.seed, kStreamData);
  SeededRng eval_train_rng(config.seed, kStreamEvalTrain);
  SeededRng eval_val_rng(config.seed, kStreamEvalVal);

  const std::size_t eval_size = 256;
  const Batch eval_train = data.sample_train_batch(eval_size, 1, eval_train_rng);
  const Batch eval_val = data.sample_val_batch(eval_size, eval_val_rng);

  const std::string out_dir = config.resolved_out_dir();
  std::filesystem::create_directories(out_dir);
  MetricsWriter writer(out_dir + "/metrics.jsonl");

  TrainResult result;
  result.metrics_path = writer.path();
  result.init_train_loss = model.loss_only(eval_train);

  RunHeader header;
  header.task = to_string(config.task);
  header.algorithm = to_string(config.optimizer.algorithm);
  header.steps = config.steps;
  header.batch_size = config.batch_size;
  header.micro_batches = config.micro_batches;
  header.seed = config.seed;
  header.init_train_loss = result.init_train_loss;
  writer.write_header(header);

  // One inverse-rho EMA per neuron-matrix group.
  std::vector<RrcCorrectionState> rrc_states(model.params().size());
  for (auto& s : rrc_states) s.beta = opt_cfg.beta1;

  const auto& group_list = model.params();
  std::optional<std::size_t> first_weight_group;
  for (std::size_t i = 0; i < group_list.size(); ++i) {
    if (group_list[i].kind == GroupKind::NeuronMatrix) {
      first_weight_group = i;
      break;
    }
  }

  for (std::int64_t t = 1; t <= config.steps; ++t) {
    const bool log_step =
        t == 1 || t == config.steps || t % config.metric_cadence == 0;
    try {
      const Batch batch =
          data.sample_train_batch(config.batch_size, config.micro_batches, data_rng);
      const ForwardResult& fr = model.forward(batch);
      const BackwardResult bw = model.backward(/*per_micro=*/true);

      // Whole-model SNR from the micro-batch means.
      MicroBatchGrads micro;
      micro.micro_batch_size = static_cast<std::int64_t>(batch.micro_batch_size());
      for (std::size_t a = 0; a < bw.micro_grads.size(); ++a) {
        micro.grads.push_back(concat_micro(bw.micro_grads, a));
      }
      const SnrEstimate snr = estimate_snr(micro);

      // Gradient-momentum alignment against the pre-step momentum buffer.
      const Vec grad_flat = concat_group_mats(bw.grads);
      const Vec mom_flat = concat_group_mats(optimizer.state().momentum);
      AlignmentMetrics align;
      const double grad_norm = l2_norm(grad_flat);
      if (grad_norm > 0.0) {
        align = alignment_metrics(mom_flat, grad_flat, opt_cfg.beta1);
      }

      // Per-layer update scaling from the measured SNR.
      double logged_scale = 1.0;
      if (opt_cfg.rrc_correction) {
        for (std::size_t gi = 0; gi < group_list.size(); ++gi) {
          if (group_list[gi].kind != GroupKind::NeuronMatrix) continue;
          MicroBatchGrads layer_micro;
          layer_micro.micro_batch_size = micro.micro_batch_size;
          for (std::size_t a = 0; a < bw.micro_grads.size(); ++a) {
            const Mat& g = bw.micro_grads[a][gi];
            layer_micro.grads.emplace_back(g.data.begin(), g.data.end());
          }
          const double phi_layer = estimate_snr(layer_micro).phi;
          const double rho = rrc_rho(phi_layer, config.batch_size,
                                     static_cast<std::int64_t>(group_list[gi].fan_in()));
          const double scale = update_scale(rrc_states[gi], rho);
          optimizer.apply_update_scale(group_list[gi].name, scale);
          if (first_weight_group && gi == *first_weight_group) {
            logged_scale = scale;
          }
        }
      }

      // Snapshots for update-size diagnostics.
      std::vector<Mat> before;
      if (log_step) {
        before.reserve(group_list.size());
        for (const auto& g : group_list) before.push_back(g.values);
      }

      const double lr = lr_at(schedule, t);
      optimizer.step(model.params(), bw.grads, lr, lr_peak);

      if (log_step) {
        StepMetrics m;
        m.step = t;
        m.lr = lr;
        m.loss = fr.loss;
        m.phi = snr.phi;
        m.cancel_ratio = align.cancel_ratio;
        m.rrc_scale = logged_scale;
        m.dead_frac = pooled_dead_fraction(fr, model.layer_count());
        for (std::size_t gi = 0; gi < group_list.size(); ++gi) {
          m.groups[group_list[gi].name] = summarize_group_update(
              before[gi], group_list[gi].values,
              group_list[gi].kind == GroupKind::NeuronMatrix);
        }
        if (first_weight_group) {
          const std::size_t gi = *first_weight_group;
          Mat delta = group_list[gi].values;
          for (std::size_t i = 0; i < delta.size(); ++i) {
            delta.data[i] -= before[gi].data[i];
          }
          m.rrc = measure_rrc_layer(before[gi], delta, batch.inputs);
          m.has_rrc = true;
        }
        writer.write_step(m);
      }
      result.steps_run = t;
    } catch (const std::exception& e) {
      writer.write_abort(t, e.what());
      result.diverged = true;
      break;
    }
  }

  if (result.diverged) {
    result.final_train_loss = std::nan("");
    result.final_val_loss = std::nan("");
  } else {
    result.final_train_loss = model.loss_only(eval_train);
    result.final_val_loss = model.loss_only(eval_val);
  }
  return result;
}

const char* const kSweepCsvHeader =
    "peak_lr,warmup_frac,seed,final_train_loss,final_val_loss,status";

std::string sweep_row_csv(const SweepRow& row) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%.10g,%.10g,%llu,%.10g,%.10g,%s", row.peak_lr,
                row.warmup_frac, static_cast<unsigned long long>(row.seed),
                row.final_train_loss, row.final_val_loss,
                row.diverged ? "diverged" : "ok");
  return buf;
}

SweepResult run_sweep(const SweepSpec& spec) {
  spec.validate();
  const std::string out_dir = spec.base.resolved_out_dir();
  std::filesystem::create_directories(out_dir);

  struct Cell {
    double lr;
    double warmup;
    std::uint64_t seed;
    std::string subdir;
  };
  std::vector<Cell> cells;
  std::size_t idx = 0;
  for (double lr : spec.peak_lrs) {
    for (double w : spec.warmup_fracs) {
      for (std::int64_t s = 0; s < spec.seeds_per_cell; ++s) {
        cells.push_back(Cell{lr, w, spec.base.seed + static_cast<std::uint64_t>(s),
                             out_dir + "/cell_" + std::to_string(idx)});
        ++idx;
      }
    }
  }

  std::vector<std::optional<SweepRow>> results(cells.size());
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      RunConfig cfg = spec.base;
      cfg.peak_lr = cells[i].lr;
      cfg.warmup_frac = cells[i].warmup;
      cfg.seed = cells[i].seed;
      cfg.out_dir = cells[i].subdir;
      SweepRow row;
      row.peak_lr = cells[i].lr;
      row.warmup_frac = cells[i].warmup;
      row.seed = cells[i].seed;
      try {
        const TrainResult r = run_training(cfg);
        row.final_train_loss = r.final_train_loss;
        row.final_val_loss = r.final_val_loss;
        row.diverged = r.diverged;
      } catch (const std::exception&) {
        row.final_train_loss = std::nan("");
        row.final_val_loss = std::nan("");
        row.diverged = true;
      }
      {
        std::lock_guard<std::mutex> lock(mu);
        results[i] = row;
      }
      cv.notify_one();
    }
  };

  const int threads = std::min<int>(spec.workers, static_cast<int>(cells.size()));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int k = 0; k < threads; ++k) pool.emplace_back(worker);

  // Flush rows incrementally but in cell order, so output is deterministic
  // regardless of which worker finishes first.
  SweepResult out;
  out.csv_path = out_dir + "/sweep.csv";
  std::ofstream csv(out.csv_path);
  if (!csv) {
    for (auto& th : pool) th.join();
    throw std::runtime_error("cannot open sweep csv for writing: " + out.csv_path);
  }
  csv << kSweepCsvHeader << "\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::unique_lock<std::mutex> lock(mu);
    cv.wait(lock, [&] { return results[i].has_value(); });
    csv << sweep_row_csv(*results[i]) << "\n";
    csv.flush();
    out.rows.push_back(*results[i]);
  }
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace steplab
