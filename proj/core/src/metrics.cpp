#include "steplab/metrics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace steplab {

namespace {

nlohmann::ordered_json finite_or_null(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

}  // namespace

MetricsWriter::MetricsWriter(const std::string& path) : path_(path), out_(path) {
  if (!out_) {
    throw std::runtime_error("cannot open metrics file for writing: " + path);
  }
}

void MetricsWriter::write_header(const RunHeader& h) {
  nlohmann::ordered_json j;
  j["v"] = 1;
  j["record"] = "header";
  j["task"] = h.task;
  j["algorithm"] = h.algorithm;
  j["steps"] = h.steps;
  j["batch_size"] = h.batch_size;
  j["micro_batches"] = h.micro_batches;
  j["seed"] = h.seed;
  j["init_train_loss"] = finite_or_null(h.init_train_loss);
  out_ << j.dump() << "\n";
  out_.flush();
}

void MetricsWriter::write_step(const StepMetrics& m) {
  nlohmann::ordered_json j;
  j["v"] = 1;
  j["record"] = "step";
  j["step"] = m.step;
  j["lr"] = finite_or_null(m.lr);
  j["loss"] = finite_or_null(m.loss);
  j["phi"] = finite_or_null(m.phi);
  j["cancel_ratio"] = finite_or_null(m.cancel_ratio);
  j["rrc_scale"] = finite_or_null(m.rrc_scale);
  j["dead_frac"] = finite_or_null(m.dead_frac);
  if (m.has_rrc) {
    j["rrc"] = finite_or_null(m.rrc);
  }
  nlohmann::ordered_json groups;
  for (const auto& [name, g] : m.groups) {
    nlohmann::ordered_json jg;
    jg["l2_update"] = finite_or_null(g.l2_update);
    jg["ang_mean"] = finite_or_null(g.ang_mean);
    jg["ang_p95"] = finite_or_null(g.ang_p95);
    groups[name] = std::move(jg);
  }
  j["groups"] = std::move(groups);
  out_ << j.dump() << "\n";
}

void MetricsWriter::write_abort(std::int64_t step, const std::string& reason) {
  nlohmann::ordered_json j;
  j["v"] = 1;
  j["record"] = "abort";
  j["step"] = step;
  j["reason"] = reason;
  out_ << j.dump() << "\n";
  out_.flush();
}

std::string plotdata_csv(const std::string& metrics_path,
                         const std::vector<std::string>& fields) {
  std::ifstream in(metrics_path);
  if (!in) {
    throw std::runtime_error("cannot open metrics file: " + metrics_path);
  }
  std::ostringstream csv;
  csv << "step";
  for (const auto& f : fields) csv << "," << f;
  csv << "\n";

  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line);
    if (j.value("record", "") != "step") continue;
    csv << j.at("step").get<std::int64_t>();
    for (const auto& f : fields) {
      csv << ",";
      // Dotted paths descend into the per-group object, e.g.
      // l0.weight.l2_update -> groups["l0.weight"]["l2_update"].
      const nlohmann::json* node = nullptr;
      if (j.contains(f)) {
        node = &j.at(f);
      } else {
        const auto last_dot = f.rfind('.');
        if (last_dot != std::string::npos && j.contains("groups")) {
          const std::string group = f.substr(0, last_dot);
          const std::string key = f.substr(last_dot + 1);
          const auto& groups = j.at("groups");
          if (groups.contains(group) && groups.at(group).contains(key)) {
            node = &groups.at(group).at(key);
          }
        }
      }
      if (node == nullptr) {
        throw std::invalid_argument("plotdata: unknown field '" + f + "'");
      }
      if (node->is_number()) {
        csv << nlohmann::json(*node).dump();
      }
      // null (non-finite) leaves an empty cell
    }
    csv << "\n";
  }
  return csv.str();
}

}  // namespace steplab
