#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "maskbench/audio_io.hpp"

namespace maskbench::metrics {

/// Decibel cap: every ratio is clamped to +-300 dB, and an error (or target)
/// energy below 1e-30 yields the cap directly.
inline constexpr double kDbCap = 300.0;
inline constexpr double kEnergyFloor = 1e-30;

/// estimate = target + interference + artifacts, with the three parts
/// mutually orthogonal in the sense of the least-squares projections.
struct BssDecomposition {
  std::vector<double> s_target;
  std::vector<double> e_interf;
  std::vector<double> e_artif;
};

/// Time-invariant-gain decomposition: s_target is the projection onto the
/// target reference, s_target + e_interf the projection onto the span of all
/// references. Throws on length mismatch or when the references' Gram matrix
/// has condition number >= 1e12.
BssDecomposition bss_decompose(std::span<const double> estimate,
                               const std::vector<std::span<const double>>& references, std::size_t target_index);
BssDecomposition bss_decompose(const audio::Waveform& estimate, const std::vector<audio::Waveform>& references,
                               std::size_t target_index);

double sdr(const BssDecomposition& d);
double sir(const BssDecomposition& d);
double sar(const BssDecomposition& d);

/// Short-time objective intelligibility of `degraded` against `clean`.
/// Throws DataError when fewer than 30 frames survive silence removal.
double stoi(const audio::Waveform& clean, const audio::Waveform& degraded);

/// 100 * (new - base) / new. Note the denominator is the new value.
double relative_improvement(double base, double new_value);

struct SeparationScores {
  double sdr_db = 0.0;
  double sir_db = 0.0;
  double sar_db = 0.0;
  double stoi = 0.0;
  bool operator==(const SeparationScores&) const = default;
};

/// Scores estimate i against reference i (assignment by conditioning
/// identity, not best permutation).
std::vector<SeparationScores> score_pair(const std::vector<audio::Waveform>& estimates,
                                         const std::vector<audio::Waveform>& references);

/// One row of a scores export.
struct ScoreRow {
  std::string mixture_id;
  std::size_t source_index = 0;
  SeparationScores scores;
};

void write_scores_csv(const std::vector<ScoreRow>& rows, const std::filesystem::path& path);
std::vector<ScoreRow> read_scores_csv(const std::filesystem::path& path);

/// Column means over all rows. Throws DataError on an empty table.
SeparationScores mean_scores(const std::vector<ScoreRow>& rows);

}  // namespace maskbench::metrics
