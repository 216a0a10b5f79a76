#pragma once

#include <cstddef>

#include "maskbench/stft.hpp"

namespace maskbench::masks {

/// Real-valued time-frequency mask with every entry in [0, 1].
class TimeFreqMask {
 public:
  TimeFreqMask() = default;
  /// Throws NumericError when an entry is NaN or outside [0, 1].
  explicit TimeFreqMask(RealGrid grid);

  static TimeFreqMask constant(std::size_t bins, std::size_t frames, double value);

  const RealGrid& grid() const noexcept { return grid_; }
  std::size_t bins() const noexcept { return grid_.rows(); }
  std::size_t frames() const noexcept { return grid_.cols(); }
  double operator()(std::size_t b, std::size_t f) const { return grid_(b, f); }

 private:
  RealGrid grid_;
};

/// 1 where target >= interferer (ties go to the target), else 0.
TimeFreqMask ideal_binary_mask(const dsp::MagnitudeSpectrogram& target, const dsp::MagnitudeSpectrogram& interferer);

/// t / (t + i); cells with t + i < 1e-12 get 0.5.
TimeFreqMask ideal_ratio_mask(const dsp::MagnitudeSpectrogram& target, const dsp::MagnitudeSpectrogram& interferer);

/// Applies the mask to the mixture magnitude, keeps the mixture phase and
/// inverts: istft(mask * mix) since mask is real and non-negative.
audio::Waveform reconstruct(const dsp::ComplexSpectrogram& mix, const TimeFreqMask& mask, std::size_t out_len);

}  // namespace maskbench::masks
