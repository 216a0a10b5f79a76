#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "maskbench/forge.hpp"
#include "maskbench/net/model.hpp"
#include "maskbench/nn/optim.hpp"

namespace maskbench::net {

struct TrainConfig {
  nn::SgdConfig sgd;
  std::size_t epochs = 10;
  std::size_t batch_size = 24;
  std::uint64_t seed = 1;
  /// Fraction of visual queries per epoch answered with a wrong speaker.
  double corrupt_fraction = 0.0;

  void validate() const;
};

/// Network-resolution training data for one mixture: log1p input and the
/// IBM of each source over the lowest input_bins bins, all frames.
struct TrainItem {
  std::size_t bins = 0;
  std::size_t frames = 0;
  std::vector<float> input;
  std::vector<float> target_a;
  std::vector<float> target_b;
};

/// Realizes every record (parallel, order-preserving) and caches its input
/// and IBM targets.
std::vector<TrainItem> prepare_items(const std::vector<forge::MixtureRecord>& records,
                                     const forge::ForgeConfig& forge_cfg, std::size_t input_bins);

struct LossPoint {
  std::size_t step = 0;
  std::size_t epoch = 0;
  double loss = 0.0;
};

/// Called after each step; returning false stops training early.
using StepCallback = std::function<bool(const LossPoint&)>;

/// Minibatch SGD on BCE(mask, IBM) summed over both sources. Each epoch
/// visits the items in a seeded order; each item contributes a random
/// tile_frames crop. Batches smaller than two items are skipped since batch
/// normalization needs more than one value per channel at the deepest stage.
std::vector<LossPoint> train(SeparationModel& model, const std::vector<forge::MixtureRecord>& records,
                             const std::vector<TrainItem>& items, const TrainConfig& cfg,
                             const StepCallback& on_step = {});

}  // namespace maskbench::net
