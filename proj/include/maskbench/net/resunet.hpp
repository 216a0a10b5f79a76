#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "maskbench/nn/ops.hpp"
#include "maskbench/nn/tensor.hpp"

namespace maskbench::net {

/// Where the sigmoid sits relative to the per-source contraction.
enum class ContractionMode {
  SigmoidAfter,   // sigma(sum_k e_k F_k): default, masks strictly in (0, 1)
  SigmoidBefore,  // clamp(sum_k e_k sigma(F_k), 0, 1)
};

struct ResUNetConfig {
  std::size_t n_down = 6;
  std::size_t n_up = 6;
  std::size_t base_channels = 16;
  std::size_t K = 32;
  /// The network sees the lowest input_bins STFT bins.
  std::size_t input_bins = 64;
  /// Frames per network tile; padded up to a multiple of 2^n_down.
  std::size_t tile_frames = 48;
  ContractionMode contraction = ContractionMode::SigmoidAfter;

  void validate() const;
  std::size_t padded_frames() const;
  /// Encoder widths: base * (1, 2, 4, 8, 8, 8, ...).
  std::vector<std::size_t> channels() const;
  bool operator==(const ResUNetConfig&) const = default;
};

struct NamedParam {
  std::string name;
  nn::Var var;
};

struct NamedStats {
  std::string name;
  nn::RunningStats* stats;
};

/// Encoder-decoder trunk mapping [N, 1, H, W] to a linear [N, K, H, W]
/// feature map. Encoder stage: 4x4 stride-2 conv, BN, leaky ReLU, then a
/// residual 3x3 conv block with an identity shortcut. Decoder stage: 4x4
/// stride-2 transposed conv, BN, ReLU, concatenated with the mirror encoder
/// output. A 1x1 convolution with bias produces the K channels.
class ResUNet {
 public:
  ResUNet(const ResUNetConfig& cfg, Rng& rng);

  nn::Var forward(const nn::Var& x, nn::Mode mode);

  const ResUNetConfig& config() const noexcept { return cfg_; }
  std::vector<NamedParam> parameters();
  std::vector<NamedStats> running_stats();

 private:
  struct BatchNorm {
    nn::Var gamma, beta;
    nn::RunningStats stats;
    BatchNorm() = default;
    explicit BatchNorm(std::size_t c);
    nn::Var operator()(const nn::Var& x, nn::Mode mode) { return nn::batchnorm2d(x, gamma, beta, stats, mode); }
  };
  struct Down {
    nn::Var kernel;
    BatchNorm bn;
    nn::Var res_kernel;
    BatchNorm res_bn;
  };
  struct Up {
    nn::Var kernel;
    BatchNorm bn;
  };

  ResUNetConfig cfg_;
  std::vector<Down> down_;
  std::vector<Up> up_;
  nn::Var head_kernel_;
  nn::Var head_bias_;
};

}  // namespace maskbench::net
