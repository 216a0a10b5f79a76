#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "maskbench/forge.hpp"
#include "maskbench/masks.hpp"
#include "maskbench/net/conditioning.hpp"
#include "maskbench/net/resunet.hpp"
#include "maskbench/stft.hpp"

namespace maskbench::net {

/// Number of sources per mixture; one contraction slot each.
inline constexpr std::size_t kSlots = 2;

struct ModelConfig {
  ResUNetConfig net;
  ModalitySet modalities;
  FusionMode fusion = FusionMode::Add;

  void validate() const { net.validate(); }
  bool operator==(const ModelConfig&) const = default;
};

/// log1p of the lowest `bins` rows of a magnitude spectrogram.
RealGrid network_input(const dsp::MagnitudeSpectrogram& mag, std::size_t bins);

/// Frame offsets of the inference tiles: 0, t, 2t, ... with the last tile
/// aligned to the end. One tile at 0 when frames <= t.
std::vector<std::size_t> tile_starts(std::size_t frames, std::size_t tile_frames);

/// Conditioned mask predictor. Every slot's conditioning vector is a learned
/// per-slot bias plus the fused per-speaker embeddings of the enabled side
/// modalities; with audio only the bias is all there is.
class SeparationModel {
 public:
  SeparationModel(const ModelConfig& cfg, std::vector<std::string> speakers, std::uint64_t init_seed);

  const ModelConfig& config() const noexcept { return cfg_; }
  const std::vector<std::string>& speakers() const noexcept { return speakers_; }
  /// Throws DataError when the provider tables have no row for `id`.
  std::size_t speaker_index(const std::string& id) const;

  /// Replaces the visual view with `corrupt(visual table, ...)`; fraction 0
  /// restores the clean table.
  void set_visual_corruption(double fraction, std::uint64_t seed, std::size_t n_queries_per_epoch);

  /// Queries for record slots: index 2 * item + slot.
  std::vector<Query> slot_queries(const std::vector<const forge::MixtureRecord*>& records,
                                  const std::vector<std::size_t>& items, std::size_t slot,
                                  std::uint64_t epoch) const;

  /// [B, K] conditioning for one slot.
  nn::Var condition(std::size_t slot, const std::vector<Query>& queries) const;
  /// Trunk output [B, K, H, W].
  nn::Var features(const nn::Var& x, nn::Mode mode);
  /// [B, 1, H, W] mask from features and a [B, K] conditioning tensor.
  nn::Var mask_from(const nn::Var& features, const nn::Var& cond) const;
  /// One mask per slot for a batch of padded inputs [B, 1, H, W].
  std::vector<nn::Var> forward(const nn::Var& x, const std::vector<std::vector<Query>>& slot_queries, nn::Mode mode);

  /// Full-resolution masks for one mixture: the network covers the lowest
  /// input_bins bins in frame tiles (overlaps averaged); higher bins get 0.5.
  std::vector<masks::TimeFreqMask> predict_masks(const dsp::MagnitudeSpectrogram& mix_mag,
                                                 const std::vector<Query>& queries);

  /// stft, predict_masks, then mixture-phase reconstruction per source.
  std::vector<audio::Waveform> separate(const audio::Waveform& mixture, const std::vector<Query>& queries);

  /// Trainable parameters in a stable order with stable names.
  std::vector<NamedParam> parameters();
  std::vector<NamedStats> running_stats() { return trunk_.running_stats(); }

 private:
  ModelConfig cfg_;
  std::vector<std::string> speakers_;
  ResUNet trunk_;
  nn::Var slot_bias_;
  std::shared_ptr<LookupProvider> visual_table_;
  std::shared_ptr<LookupProvider> sign_table_;
  std::shared_ptr<const EmbeddingProvider> visual_view_;
  nn::Var projection_;
};

/// Applies each mask to the mixture and reconstructs with the mixture phase.
std::vector<audio::Waveform> reconstruct_sources(const dsp::ComplexSpectrogram& mix,
                                                 const std::vector<masks::TimeFreqMask>& masks, std::size_t out_len);

}  // namespace maskbench::net
