#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "maskbench/error.hpp"

namespace maskbench::audio {

inline constexpr int kCanonicalRate = 16000;
/// 3.2 s at 16 kHz; 51200 / 160 = 320 STFT frames.
inline constexpr std::size_t kCanonicalSegment = 51200;
inline constexpr double kDefaultTargetRms = 0.05;

/// Mono signal. Samples are nominally in [-1, 1].
struct Waveform {
  std::vector<double> samples;
  int sample_rate_hz = kCanonicalRate;

  std::size_t size() const noexcept { return samples.size(); }
  bool operator==(const Waveform&) const = default;
};

/// Distinct failure reasons for read_wav.
enum class WavFault { Unreadable, Malformed, NotPcm16, MultiChannel };

class WavError : public DataError {
 public:
  WavError(WavFault fault, const std::string& what) : DataError(what), fault_(fault) {}
  WavFault fault() const noexcept { return fault_; }

 private:
  WavFault fault_;
};

/// Throws if the rate is non-positive or any sample is NaN/Inf.
void validate(const Waveform& w);

/// Reads a RIFF/WAVE PCM16 mono file; samples are divided by 32768.
Waveform read_wav(const std::filesystem::path& path);

/// Writes PCM16 mono. Samples are clamped to [-1, 1] then rounded to the
/// nearest step of 1/32768 (positive full scale saturates at 32767).
void write_wav(const Waveform& w, const std::filesystem::path& path);

/// Linear-interpolation resampler to 16 kHz. Output length is
/// round(len * 16000 / rate). Rates below 8000 Hz are rejected.
Waveform resample_to_16k(const Waveform& w);

double rms(const std::vector<double>& samples);

/// Scales w so its RMS equals target_rms. Silent input (RMS <= 1e-8) throws.
Waveform rms_normalize(const Waveform& w, double target_rms);

/// Truncates from `offset` (clamped to the valid range) or zero-pads at the end.
Waveform fit_length_at(const Waveform& w, std::size_t n_samples, std::size_t offset);

/// Offset that fit_length(w, n, seed) would use for a signal of length `len`.
std::size_t random_offset(std::size_t len, std::size_t n_samples, std::uint64_t seed);

/// Truncates from a seeded uniform offset, or zero-pads at the end.
Waveform fit_length(const Waveform& w, std::size_t n_samples, std::uint64_t seed);

}  // namespace maskbench::audio
