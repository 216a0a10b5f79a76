#pragma once

#include <cstddef>
#include <vector>

#include "maskbench/nn/tensor.hpp"

namespace maskbench::nn {

// Elementwise and shape ops.
Var add(const Var& a, const Var& b);
Var mul(const Var& a, const Var& b);
Var scale(const Var& a, double s);
/// x[N, ...] + row[...] broadcast over the leading axis.
Var add_broadcast(const Var& x, const Var& row);
/// Concatenates along axis 1 (channels for 4-D, features for 2-D).
Var concat(const Var& a, const Var& b);
/// Top-left crop of a 4-D tensor to (h, w).
Var crop2d(const Var& x, std::size_t h, std::size_t w);
/// Rows of `table` [S, K] at `indices` -> [indices.size(), K].
Var gather_rows(const Var& table, const std::vector<std::size_t>& indices);
/// x[B, I] * weight[O, I]^T + bias[O] (bias may be undefined).
Var linear(const Var& x, const Var& weight, const Var& bias);
Var sum(const Var& x);
/// sum(x * w) with a constant weight tensor; used for gradient checks.
Var weighted_sum(const Var& x, const Tensor& w);
/// Elementwise clamp; gradient is zero where clamped.
Var clamp(const Var& x, double lo, double hi);

// Pointwise nonlinearities.
Var relu(const Var& x);
Var leaky_relu(const Var& x, double slope = 0.2);
Var sigmoid(const Var& x);

/// Cross-correlation. x [N, C, H, W], kernel [O, C, kh, kw]. Requires
/// (H + 2 pad - kh) divisible by stride.
Var conv2d(const Var& x, const Var& kernel, std::size_t stride, std::size_t pad);

/// Adjoint of conv2d with the same kernel tensor: x [N, O, H', W'],
/// kernel [O, C, kh, kw] -> [N, C, (H'-1) stride - 2 pad + kh, ...].
Var conv_transpose2d(const Var& x, const Var& kernel, std::size_t stride, std::size_t pad);

/// x [N, C, H, W] + bias [C].
Var add_channel_bias(const Var& x, const Var& bias);

Var maxpool2d(const Var& x, std::size_t kernel, std::size_t stride);

enum class Mode { Train, Eval };

struct RunningStats {
  Tensor mean;
  Tensor var;
  double momentum = 0.1;

  explicit RunningStats(std::size_t channels = 0) : mean(Shape{channels}, 0.0), var(Shape{channels}, 1.0) {}
};

inline constexpr double kBatchNormEps = 1e-5;

/// Per-channel batch normalization. Train mode normalizes with biased batch
/// statistics and updates `stats` (unbiased variance); Eval uses `stats`.
Var batchnorm2d(const Var& x, const Var& gamma, const Var& beta, RunningStats& stats, Mode mode);

/// Per-sample contraction: features [N, K, H, W], cond [N, K] ->
/// [N, 1, H, W] with out(n,h,w) = sum_k cond(n,k) features(n,k,h,w).
Var contract(const Var& features, const Var& cond);

inline constexpr double kBceClamp = 1e-7;

/// Mean binary cross-entropy. pred is clamped to [1e-7, 1 - 1e-7]; the
/// gradient is that of the loss at the clamped value.
Var bce_loss(const Var& pred, const Tensor& target);

}  // namespace maskbench::nn
