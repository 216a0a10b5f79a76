#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <utility>

#include "maskbench/audio_io.hpp"
#include "maskbench/grid.hpp"

namespace maskbench::dsp {

/// Analysis parameters. Defaults give 25 ms / 10 ms frames at 16 kHz and keep
/// the lowest 512 of the 513 one-sided bins of a 1024-point FFT.
struct StftConfig {
  int sample_rate_hz = 16000;
  std::size_t win_len = 400;
  std::size_t hop = 160;
  std::size_t fft_size = 1024;
  std::size_t bins_kept = 512;

  /// Throws ConfigError when hop >= win_len / 2, bins_kept exceeds the
  /// one-sided bin count, or win_len > fft_size.
  void validate() const;
  std::size_t frames_for(std::size_t signal_len) const { return (signal_len + hop - 1) / hop; }
  bool operator==(const StftConfig&) const = default;
};

/// bins_kept x n_frames complex grid plus the config it was computed with.
struct ComplexSpectrogram {
  ComplexGrid grid;
  StftConfig config;

  std::size_t bins() const noexcept { return grid.rows(); }
  std::size_t frames() const noexcept { return grid.cols(); }
};

using MagnitudeSpectrogram = RealGrid;
using PhaseSpectrogram = RealGrid;

/// Periodic Hann: 0.5 - 0.5 cos(2 pi n / N).
std::vector<double> periodic_hann(std::size_t n);

/// Centered STFT: reflection-padded by win_len/2 on both ends, frames at
/// t * hop, n_frames = ceil(len / hop).
ComplexSpectrogram stft(const audio::Waveform& w, const StftConfig& cfg = {});

/// Weighted overlap-add inverse normalized by the summed squared window.
/// Bins above bins_kept are recovered per frame as the least-squares values
/// that keep the frame zero outside its window support; for an unmodified
/// spectrogram this is exact. Requires ceil(out_len/hop) == frames.
audio::Waveform istft(const ComplexSpectrogram& s, std::size_t out_len);

/// |z| and arg(z) with arg(0) = 0 and phases folded into (-pi, pi].
std::pair<MagnitudeSpectrogram, PhaseSpectrogram> magnitude_phase(const ComplexSpectrogram& s);

MagnitudeSpectrogram magnitude(const ComplexSpectrogram& s);

/// Raw magnitude dump: four little-endian u32 (magic, bins, frames, 0)
/// followed by row-major float32 magnitudes.
inline constexpr std::uint32_t kDumpMagic = 0x4753424d;  // "MBSG"
void write_magnitude_dump(const MagnitudeSpectrogram& mag, const std::filesystem::path& path);
MagnitudeSpectrogram read_magnitude_dump(const std::filesystem::path& path);

}  // namespace maskbench::dsp
