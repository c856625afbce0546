#include "steplab/config.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace steplab {

const char* const kOutDirEnvVar = "STEPLAB_OUT_DIR";

ScheduleSpec RunConfig::schedule() const {
  ScheduleSpec s;
  s.kind = schedule_kind;
  s.peak_lr = peak_lr;
  s.total_steps = steps;
  s.warmup_frac = warmup_frac;
  s.cooldown_frac = cooldown_frac;
  return s;
}

void RunConfig::validate() const {
  if (steps < 0) throw std::invalid_argument("config: steps must be >= 0");
  if (batch_size < 1) throw std::invalid_argument("config: batch_size must be >= 1");
  if (micro_batches < 1 || batch_size % micro_batches != 0) {
    throw std::invalid_argument("config: micro_batches must divide batch_size");
  }
  if (metric_cadence < 1) {
    throw std::invalid_argument("config: metric_cadence must be >= 1");
  }
  if (hidden.empty()) {
    throw std::invalid_argument("config: need at least one hidden layer");
  }
  if (!(rrc_wd_multiplier > 0.0)) {
    throw std::invalid_argument("config: rrc_wd_multiplier must be > 0");
  }
  optimizer.validate();
  if (steps > 0) {
    schedule().validate();
  }
}

std::string RunConfig::resolved_out_dir() const {
  if (!out_dir.empty()) return out_dir;
  if (const char* env = std::getenv(kOutDirEnvVar); env != nullptr && *env) {
    return env;
  }
  return "runs";
}

void SweepSpec::validate() const {
  base.validate();
  if (peak_lrs.empty() || warmup_fracs.empty()) {
    throw std::invalid_argument("sweep: learning-rate and warmup grids must be nonempty");
  }
  if (seeds_per_cell < 1) {
    throw std::invalid_argument("sweep: seeds_per_cell must be >= 1");
  }
  if (workers < 1) {
    throw std::invalid_argument("sweep: workers must be >= 1");
  }
}

namespace {

struct ParsedFile {
  // section -> key -> value, plus line numbers for error messages
  std::map<std::string, std::map<std::string, std::string>> sections;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

ParsedFile parse_sections(const std::string& text) {
  ParsedFile out;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find_first_of("#;");
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw std::invalid_argument("config line " + std::to_string(line_no) +
                                    ": malformed section header");
      }
      section = trim(line.substr(1, line.size() - 2));
      out.sections[section];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": empty key");
    }
    if (!out.sections[section].emplace(key, value).second) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": duplicate key '" + key + "'");
    }
  }
  return out;
}

class SectionReader {
 public:
  SectionReader(ParsedFile& file, std::string name) : name_(std::move(name)) {
    auto it = file.sections.find(name_);
    if (it != file.sections.end()) {
      pending_ = &it->second;
    }
  }

  template <typename F>
  void take(const std::string& key, F&& apply) {
    if (!pending_) return;
    auto it = pending_->find(key);
    if (it == pending_->end()) return;
    try {
      apply(it->second);
    } catch (const std::exception& e) {
      throw std::invalid_argument("config [" + name_ + "] " + key + ": " + e.what());
    }
    pending_->erase(it);
  }

  void finish() const {
    if (pending_ && !pending_->empty()) {
      throw std::invalid_argument("config [" + name_ + "]: unknown key '" +
                                  pending_->begin()->first + "'");
    }
  }

 private:
  std::string name_;
  std::map<std::string, std::string>* pending_ = nullptr;
};

std::int64_t to_int(const std::string& s) {
  std::size_t pos = 0;
  const long long v = std::stoll(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("not an integer: " + s);
  return v;
}

std::uint64_t to_uint(const std::string& s) {
  std::size_t pos = 0;
  const unsigned long long v = std::stoull(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("not an integer: " + s);
  return v;
}

double to_double(const std::string& s) {
  std::size_t pos = 0;
  const double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("not a number: " + s);
  return v;
}

bool to_bool(const std::string& s) {
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw std::invalid_argument("not a boolean: " + s);
}

std::vector<std::size_t> to_size_list(const std::string& s) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const std::int64_t v = to_int(item);
    if (v < 1) throw std::invalid_argument("widths must be positive");
    out.push_back(static_cast<std::size_t>(v));
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

}  // namespace

RunConfig parse_run_config(const std::string& text) {
  ParsedFile file = parse_sections(text);
  RunConfig cfg;

  SectionReader run(file, "run");
  run.take("task", [&](const std::string& v) { cfg.task = task_kind_from_string(v); });
  run.take("steps", [&](const std::string& v) { cfg.steps = to_int(v); });
  run.take("batch_size", [&](const std::string& v) { cfg.batch_size = to_int(v); });
  run.take("micro_batches", [&](const std::string& v) { cfg.micro_batches = to_int(v); });
  run.take("seed", [&](const std::string& v) { cfg.seed = to_uint(v); });
  run.take("metric_cadence", [&](const std::string& v) { cfg.metric_cadence = to_int(v); });
  run.take("out_dir", [&](const std::string& v) { cfg.out_dir = v; });
  run.finish();

  SectionReader model(file, "model");
  model.take("hidden", [&](const std::string& v) { cfg.hidden = to_size_list(v); });
  model.take("activation",
             [&](const std::string& v) { cfg.activation = activation_from_string(v); });
  model.take("leaky_alpha", [&](const std::string& v) { cfg.leaky_alpha = to_double(v); });
  model.take("weight_norm", [&](const std::string& v) { cfg.weight_norm = to_bool(v); });
  model.take("init_gain", [&](const std::string& v) { cfg.init_gain = to_double(v); });
  model.take("context", [&](const std::string& v) {
    cfg.context = static_cast<std::size_t>(to_int(v));
  });
  model.take("input_dim", [&](const std::string& v) {
    cfg.synthetic.input_dim = static_cast<std::size_t>(to_int(v));
  });
  model.take("classes", [&](const std::string& v) {
    cfg.synthetic.classes = static_cast<std::size_t>(to_int(v));
  });
  model.take("train_samples", [&](const std::string& v) {
    cfg.synthetic.train_samples = static_cast<std::size_t>(to_int(v));
  });
  model.take("val_samples", [&](const std::string& v) {
    cfg.synthetic.val_samples = static_cast<std::size_t>(to_int(v));
  });
  model.take("cluster_spread", [&](const std::string& v) {
    cfg.synthetic.cluster_spread = to_double(v);
  });
  model.take("sample_noise", [&](const std::string& v) {
    cfg.synthetic.sample_noise = to_double(v);
  });
  model.take("label_noise", [&](const std::string& v) {
    cfg.synthetic.label_noise = to_double(v);
  });
  model.finish();

  SectionReader opt(file, "optimizer");
  opt.take("algorithm", [&](const std::string& v) {
    cfg.optimizer.algorithm = algorithm_from_string(v);
  });
  opt.take("weight_decay", [&](const std::string& v) {
    cfg.optimizer.weight_decay = to_double(v);
  });
  opt.take("beta1", [&](const std::string& v) { cfg.optimizer.beta1 = to_double(v); });
  opt.take("beta2", [&](const std::string& v) { cfg.optimizer.beta2 = to_double(v); });
  opt.take("epsilon", [&](const std::string& v) { cfg.optimizer.epsilon = to_double(v); });
  opt.take("nesterov", [&](const std::string& v) { cfg.optimizer.nesterov = to_bool(v); });
  opt.take("disable_beta1_bias_correction", [&](const std::string& v) {
    cfg.optimizer.disable_beta1_bias_correction = to_bool(v);
  });
  opt.take("inverse_bias_correction", [&](const std::string& v) {
    cfg.optimizer.inverse_bias_correction = to_bool(v);
  });
  opt.take("rrc_correction", [&](const std::string& v) {
    cfg.optimizer.rrc_correction = to_bool(v);
  });
  opt.take("rrc_wd_multiplier", [&](const std::string& v) {
    cfg.rrc_wd_multiplier = to_double(v);
  });
  opt.finish();

  SectionReader sched(file, "schedule");
  sched.take("kind", [&](const std::string& v) {
    cfg.schedule_kind = schedule_kind_from_string(v);
  });
  sched.take("peak_lr", [&](const std::string& v) { cfg.peak_lr = to_double(v); });
  sched.take("warmup_frac", [&](const std::string& v) { cfg.warmup_frac = to_double(v); });
  sched.take("cooldown_frac", [&](const std::string& v) {
    cfg.cooldown_frac = to_double(v);
  });
  sched.finish();

  for (const auto& [name, keys] : file.sections) {
    if (name != "run" && name != "model" && name != "optimizer" && name != "schedule") {
      throw std::invalid_argument("config: unknown section '" + name + "'");
    }
  }

  cfg.validate();
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open config file: " + path);
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_run_config(buffer.str());
}

}  // namespace steplab
