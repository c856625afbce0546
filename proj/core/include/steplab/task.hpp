#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "steplab/model.hpp"

namespace steplab {

enum class TaskKind { Synthetic, CharLm };

TaskKind task_kind_from_string(const std::string& s);
std::string to_string(TaskKind k);

/// Gaussian-cluster classification. Class means are drawn from a scaled
/// normal; label_noise is the probability a training label is replaced by a
/// uniformly random class, which lowers the gradient SNR.
struct SyntheticSpec {
  std::size_t input_dim = 16;
  std::size_t classes = 4;
  std::size_t train_samples = 4096;
  std::size_t val_samples = 512;
  double cluster_spread = 3.0;
  double sample_noise = 1.0;
  double label_noise = 0.0;
};

/// A deterministic dataset: synthetic samples are materialized from
/// (spec, seed); the character task encodes the embedded corpus with a
/// fixed 90/10 train/validation split. No files are read or written.
struct Dataset {
  TaskKind kind = TaskKind::Synthetic;
  LossKind loss = LossKind::CrossEntropy;
  std::size_t input_dim = 0;
  std::size_t output_dim = 0;

  // Synthetic task storage.
  Mat train_inputs;  // input_dim x N
  std::vector<int> train_targets;
  Mat val_inputs;
  std::vector<int> val_targets;

  // Character task storage.
  std::vector<std::uint16_t> encoded;  // corpus as vocabulary ids
  std::string vocab;                   // id -> byte
  std::size_t context = 8;
  std::size_t train_len = 0;  // ids [0, train_len) are the training split

  /// Samples a training batch (with replacement) and partitions it into
  /// micro_batches contiguous pieces.
  Batch sample_train_batch(std::size_t batch_size, std::size_t micro_batches,
                           SeededRng& rng) const;
  /// Samples a validation batch.
  Batch sample_val_batch(std::size_t batch_size, SeededRng& rng) const;

  /// FNV-1a over the materialized content; equal seeds give equal hashes.
  std::uint64_t content_hash() const;
};

Dataset make_task(TaskKind kind, std::uint64_t seed);
Dataset make_synthetic_task(const SyntheticSpec& spec, std::uint64_t seed);
Dataset make_charlm_task(std::size_t context);

/// The embedded public-domain anthology backing the character task.
const std::string& charlm_corpus();

}  // namespace steplab
