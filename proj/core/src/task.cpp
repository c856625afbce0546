#include "steplab/task.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <stdexcept>

namespace steplab {

TaskKind task_kind_from_string(const std::string& s) {
  if (s == "synthetic") return TaskKind::Synthetic;
  if (s == "charlm") return TaskKind::CharLm;
  throw std::invalid_argument("unknown task: " + s);
}

std::string to_string(TaskKind k) {
  return k == TaskKind::Synthetic ? "synthetic" : "charlm";
}

namespace {

void hash_bytes(std::uint64_t& h, const void* p, std::size_t n) {
  const auto* bytes = static_cast<const unsigned char*>(p);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= bytes[i];
    h *= 0x100000001b3ULL;
  }
}

Batch charlm_batch(const Dataset& d, std::size_t batch_size, std::size_t micro,
                   std::size_t lo, std::size_t hi, SeededRng& rng) {
  // Positions index the predicted character; the context precedes it.
  const std::size_t vocab = d.vocab.size();
  Batch b;
  b.inputs = Mat(d.context * vocab, batch_size);
  b.class_targets.resize(batch_size);
  b.micro_batches = micro;
  for (std::size_t s = 0; s < batch_size; ++s) {
    const std::size_t pos = lo + rng.uniform_index(hi - lo);
    for (std::size_t k = 0; k < d.context; ++k) {
      const std::uint16_t id = d.encoded[pos - d.context + k];
      b.inputs(k * vocab + id, s) = 1.0;
    }
    b.class_targets[s] = static_cast<int>(d.encoded[pos]);
  }
  return b;
}

Batch synthetic_batch(const Dataset& d, std::size_t batch_size, std::size_t micro,
                      const Mat& inputs, const std::vector<int>& targets,
                      SeededRng& rng) {
  Batch b;
  b.inputs = Mat(d.input_dim, batch_size);
  b.class_targets.resize(batch_size);
  b.micro_batches = micro;
  for (std::size_t s = 0; s < batch_size; ++s) {
    const std::size_t idx = rng.uniform_index(inputs.cols);
    for (std::size_t r = 0; r < d.input_dim; ++r) {
      b.inputs(r, s) = inputs(r, idx);
    }
    b.class_targets[s] = targets[idx];
  }
  return b;
}

}  // namespace

Batch Dataset::sample_train_batch(std::size_t batch_size,
                                  std::size_t micro_batches,
                                  SeededRng& rng) const {
  if (batch_size == 0 || micro_batches == 0 || batch_size % micro_batches != 0) {
    throw std::invalid_argument("sample_train_batch: micro count must divide batch");
  }
  if (kind == TaskKind::CharLm) {
    return charlm_batch(*this, batch_size, micro_batches, context, train_len, rng);
  }
  return synthetic_batch(*this, batch_size, micro_batches, train_inputs,
                         train_targets, rng);
}

Batch Dataset::sample_val_batch(std::size_t batch_size, SeededRng& rng) const {
  if (kind == TaskKind::CharLm) {
    return charlm_batch(*this, batch_size, 1, train_len + context, encoded.size(),
                        rng);
  }
  return synthetic_batch(*this, batch_size, 1, val_inputs, val_targets, rng);
}

std::uint64_t Dataset::content_hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  hash_bytes(h, train_inputs.data.data(), train_inputs.data.size() * sizeof(double));
  hash_bytes(h, val_inputs.data.data(), val_inputs.data.size() * sizeof(double));
  hash_bytes(h, train_targets.data(), train_targets.size() * sizeof(int));
  hash_bytes(h, val_targets.data(), val_targets.size() * sizeof(int));
  hash_bytes(h, encoded.data(), encoded.size() * sizeof(std::uint16_t));
  hash_bytes(h, vocab.data(), vocab.size());
  hash_bytes(h, &context, sizeof(context));
  return h;
}

Dataset make_synthetic_task(const SyntheticSpec& spec, std::uint64_t seed) {
  if (spec.classes < 2 || spec.input_dim == 0) {
    throw std::invalid_argument("synthetic task: need >= 2 classes and dim >= 1");
  }
  if (!(spec.label_noise >= 0.0 && spec.label_noise <= 1.0)) {
    throw std::invalid_argument("synthetic task: label_noise must be in [0, 1]");
  }
  SeededRng rng(seed, /*stream=*/0xDA7A);
  Dataset d;
  d.kind = TaskKind::Synthetic;
  d.loss = LossKind::CrossEntropy;
  d.input_dim = spec.input_dim;
  d.output_dim = spec.classes;

  Mat means(spec.classes, spec.input_dim);
  for (auto& x : means.data) x = spec.cluster_spread * rng.normal();

  auto fill = [&](Mat& inputs, std::vector<int>& targets, std::size_t n,
                  bool with_label_noise) {
    inputs = Mat(spec.input_dim, n);
    targets.resize(n);
    for (std::size_t s = 0; s < n; ++s) {
      const std::size_t cls = rng.uniform_index(spec.classes);
      for (std::size_t r = 0; r < spec.input_dim; ++r) {
        inputs(r, s) = means(cls, r) + spec.sample_noise * rng.normal();
      }
      int label = static_cast<int>(cls);
      if (with_label_noise && spec.label_noise > 0.0 &&
          rng.uniform() < spec.label_noise) {
        label = static_cast<int>(rng.uniform_index(spec.classes));
      }
      targets[s] = label;
    }
  };
  fill(d.train_inputs, d.train_targets, spec.train_samples, true);
  fill(d.val_inputs, d.val_targets, spec.val_samples, false);
  return d;
}

Dataset make_charlm_task(std::size_t context) {
  if (context == 0) {
    throw std::invalid_argument("charlm task: context must be >= 1");
  }
  const std::string& text = charlm_corpus();
  Dataset d;
  d.kind = TaskKind::CharLm;
  d.loss = LossKind::CrossEntropy;
  d.context = context;

  std::map<char, std::uint16_t> ids;
  for (char c : text) ids.emplace(c, 0);
  std::uint16_t next = 0;
  for (auto& [c, id] : ids) id = next++;
  d.vocab.reserve(ids.size());
  for (const auto& [c, id] : ids) d.vocab.push_back(c);

  d.encoded.reserve(text.size());
  for (char c : text) d.encoded.push_back(ids[c]);
  d.train_len = text.size() * 9 / 10;
  if (d.train_len <= context + 1 || d.encoded.size() - d.train_len <= context + 1) {
    throw std::runtime_error("charlm task: corpus too short for the context");
  }
  d.input_dim = context * d.vocab.size();
  d.output_dim = d.vocab.size();
  return d;
}

Dataset make_task(TaskKind kind, std::uint64_t seed) {
  if (kind == TaskKind::CharLm) {
    return make_charlm_task(8);
  }
  return make_synthetic_task(SyntheticSpec{}, seed);
}

}  // namespace steplab
