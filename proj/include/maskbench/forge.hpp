#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "maskbench/audio_io.hpp"

namespace maskbench::forge {

enum class Gender { M, F };
enum class Category { MM, FF, MF };
enum class Split { Train, Val };

std::string to_string(Gender g);
std::string to_string(Category c);
std::string to_string(Split s);
Gender parse_gender(const std::string& s);
Category parse_category(const std::string& s);
Split parse_split(const std::string& s);

struct SpeakerClip {
  std::string speaker_id;
  Gender gender = Gender::M;
  /// Relative to the corpus directory, '/'-separated.
  std::string path;
  bool operator==(const SpeakerClip&) const = default;
};

struct MixtureRecord {
  std::string mixture_id;
  SpeakerClip source_a;
  SpeakerClip source_b;
  std::size_t offset_a = 0;
  std::size_t offset_b = 0;
  Category category = Category::MM;
  Split split = Split::Train;
  std::uint64_t seed = 0;
  bool operator==(const MixtureRecord&) const = default;
};

struct ForgeConfig {
  std::filesystem::path corpus_dir;
  std::size_t n_per_category = 4400;
  double train_fraction = 12000.0 / 13200.0;
  std::size_t segment_samples = audio::kCanonicalSegment;
  double target_rms = audio::kDefaultTargetRms;
  std::uint64_t master_seed = 0;
  /// When set, every clip belongs to exactly one split.
  bool disjoint_clips = true;

  void validate() const;
};

/// One speaker's entry in corpus_dir/speakers.csv plus its clips.
struct Speaker {
  std::string id;
  Gender gender = Gender::M;
  std::vector<std::string> clips;  // relative paths, sorted
};

/// Reads speakers.csv (speaker_id, gender) and lists each speaker's *.wav.
std::vector<Speaker> scan_corpus(const std::filesystem::path& corpus_dir);

/// Seed of record `index` under `master_seed`.
std::uint64_t record_seed(std::uint64_t master_seed, std::size_t index);

/// Builds n_per_category records per category, category blocks in order
/// MM, FF, MF. MF records put the male speaker in source_a.
std::vector<MixtureRecord> forge_corpus(const ForgeConfig& cfg);

void write_manifest(const std::vector<MixtureRecord>& records, const std::filesystem::path& path);
std::vector<MixtureRecord> read_manifest(const std::filesystem::path& path);

struct MixtureAudio {
  audio::Waveform mixture;
  audio::Waveform ref_a;
  audio::Waveform ref_b;
};

/// Anti-clip mixing: g = min(1, 0.99 / peak(a + b)) is applied to both
/// references and the mixture is recomputed as ref_a + ref_b.
MixtureAudio mix_references(audio::Waveform a, audio::Waveform b);

/// Resample, cut at the given offsets, RMS-normalize, then mix_references.
MixtureAudio mix_sources(const audio::Waveform& a, const audio::Waveform& b, std::size_t offset_a,
                         std::size_t offset_b, std::size_t segment_samples, double target_rms);

MixtureAudio realize_mixture(const MixtureRecord& rec, const ForgeConfig& cfg);

/// Parameters for the built-in synthetic corpus: harmonic voices with
/// per-speaker pitch, formants and tilt.
struct SynthConfig {
  std::size_t n_male = 2;
  std::size_t n_female = 2;
  std::size_t clips_per_speaker = 4;
  double clip_seconds = 4.0;
  std::uint64_t seed = 0;
  /// Harmonics above this frequency are omitted.
  double max_harmonic_hz = 950.0;

  void validate() const;
};

/// Writes speakers.csv and <speaker>/<clip>.wav under `dir`. Speaker ids are
/// m00, m01, ..., f00, f01, ...
void synthesize_corpus(const std::filesystem::path& dir, const SynthConfig& cfg);

}  // namespace maskbench::forge
