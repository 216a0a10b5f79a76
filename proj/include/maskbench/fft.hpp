#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>

namespace maskbench::dsp {

/// Real-input FFT of a fixed size backed by FFTW. Plans are created under a
/// global lock; execution on separate instances is thread-safe.
class RealFft {
 public:
  explicit RealFft(std::size_t n);
  ~RealFft();
  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  std::size_t size() const noexcept { return n_; }

  /// input.size() == n; output.size() == n/2 + 1.
  void forward(std::span<const double> input, std::span<std::complex<double>> output);

  /// Unnormalized inverse: input has n/2 + 1 bins, output n samples scaled by n.
  void inverse(std::span<const std::complex<double>> input, std::span<double> output);

 private:
  struct Impl;
  std::size_t n_;
  std::unique_ptr<Impl> impl_;
};

}  // namespace maskbench::dsp
