#pragma once

#include <vector>

#include "maskbench/nn/tensor.hpp"

namespace maskbench::nn {

struct SgdConfig {
  double learning_rate = 1e-2;
  double momentum = 0.9;
  double weight_decay = 1e-4;

  void validate() const;
};

/// v <- momentum * v + (grad + weight_decay * param); param <- param - lr * v.
void sgd_step(Tensor& param, const Tensor& grad, Tensor& velocity, const SgdConfig& cfg);

/// Momentum SGD over a fixed parameter list. Parameters that received no
/// gradient since the last zero_grad() are left untouched.
class Sgd {
 public:
  Sgd(std::vector<Var> params, SgdConfig cfg);

  void zero_grad();
  void step();

  const SgdConfig& config() const noexcept { return cfg_; }

 private:
  std::vector<Var> params_;
  std::vector<Tensor> velocity_;
  SgdConfig cfg_;
};

}  // namespace maskbench::nn
