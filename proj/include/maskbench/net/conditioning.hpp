#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "maskbench/nn/tensor.hpp"

namespace maskbench::net {

enum class FusionMode { Add, Multiply, Concat };

std::string to_string(FusionMode m);
FusionMode parse_fusion(const std::string& s);

/// Audio is always present; visual and sign are optional conditioning inputs.
struct ModalitySet {
  bool visual = false;
  bool sign = false;
  bool operator==(const ModalitySet&) const = default;
};

/// "AO", "AV", "AS" or "AVS".
std::string label(ModalitySet m);
/// Comma-separated subset of {audio, visual, sign}; audio is mandatory.
ModalitySet parse_modalities(const std::string& s);
std::string to_string(ModalitySet m);

/// One embedding request: which speaker, and the (epoch, index) slot used by
/// corruption to pick affected queries.
struct Query {
  std::size_t speaker = 0;
  std::uint64_t epoch = 0;
  std::uint64_t index = 0;
};

class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;
  virtual std::size_t dim() const = 0;
  virtual std::size_t n_speakers() const = 0;
  /// Speaker whose embedding is returned for `q`.
  virtual std::size_t resolve(const Query& q) const { return q.speaker; }
  /// [queries.size(), K].
  virtual nn::Var embed(const std::vector<Query>& queries) const = 0;
};

/// Trainable per-speaker table.
class LookupProvider final : public EmbeddingProvider {
 public:
  LookupProvider(std::size_t n_speakers, std::size_t k, Rng& rng);
  std::size_t dim() const override { return table_.shape()[1]; }
  std::size_t n_speakers() const override { return table_.shape()[0]; }
  nn::Var embed(const std::vector<Query>& queries) const override;
  nn::Var& table() { return table_; }

 private:
  nn::Var table_;
};

/// Seeded constant per-speaker vectors, N(0, 1/K).
class FixedProvider final : public EmbeddingProvider {
 public:
  FixedProvider(std::size_t n_speakers, std::size_t k, std::uint64_t seed);
  std::size_t dim() const override { return table_.shape()[1]; }
  std::size_t n_speakers() const override { return table_.shape()[0]; }
  nn::Var embed(const std::vector<Query>& queries) const override;

 private:
  nn::Tensor table_;
};

/// Per epoch, exactly round(fraction * n_queries_per_epoch) query indices
/// (the head of a seeded permutation) return a uniformly chosen wrong speaker.
class CorruptedProvider final : public EmbeddingProvider {
 public:
  CorruptedProvider(std::shared_ptr<const EmbeddingProvider> inner, double fraction, std::uint64_t seed,
                    std::size_t n_queries_per_epoch);
  std::size_t dim() const override { return inner_->dim(); }
  std::size_t n_speakers() const override { return inner_->n_speakers(); }
  std::size_t resolve(const Query& q) const override;
  nn::Var embed(const std::vector<Query>& queries) const override;
  bool is_corrupted(std::uint64_t epoch, std::uint64_t index) const;

 private:
  const std::vector<bool>& corrupted_set(std::uint64_t epoch) const;

  std::shared_ptr<const EmbeddingProvider> inner_;
  double fraction_;
  std::uint64_t seed_;
  std::size_t n_queries_;
  mutable std::mutex mutex_;
  mutable std::map<std::uint64_t, std::vector<bool>> sets_;
};

std::shared_ptr<const EmbeddingProvider> corrupt(std::shared_ptr<const EmbeddingProvider> inner, double fraction,
                                                 std::uint64_t seed, std::size_t n_queries_per_epoch);

/// Combines visual and sign embeddings [B, K]. An undefined Var is absent;
/// a single present input passes through unchanged. Concat needs the
/// [K, 2K] `projection`.
nn::Var fuse(const nn::Var& visual, const nn::Var& sign, FusionMode mode, const nn::Var& projection = {});

}  // namespace maskbench::net
