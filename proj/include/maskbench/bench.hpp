#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "maskbench/forge.hpp"
#include "maskbench/metrics.hpp"
#include "maskbench/net/model.hpp"
#include "maskbench/net/train.hpp"

namespace maskbench::bench {

/// What cmd_eval scores against the references.
enum class Estimator {
  Model,      // trained checkpoint
  Reference,  // GT row: the references themselves
  Mixture,    // Mix row: the unprocessed mixture for both sources
  Ibm,        // oracle ideal-binary-mask reconstruction
};

std::string to_string(Estimator e);
Estimator parse_estimator(const std::string& s);

/// Everything one experiment needs. Sections: [synth], [forge], [network],
/// [training], [robustness], [eval]; every key optional, unknown ones rejected.
struct ExperimentConfig {
  forge::SynthConfig synth;
  forge::ForgeConfig forge;
  net::ModelConfig model;
  net::TrainConfig training;
  double train_corrupt_fraction = 0.0;
  double test_corrupt_fraction = 0.0;
  forge::Split eval_split = forge::Split::Val;
  Estimator estimator = Estimator::Model;

  /// Cross-field checks, e.g. corruption without the visual modality.
  void validate() const;
};

/// Parses a sectioned key = value file. Relative corpus paths resolve
/// against the config file's directory. Each override "section.key=value"
/// replaces or adds one entry before validation.
ExperimentConfig load_config(const std::filesystem::path& path, const std::vector<std::string>& overrides = {});
ExperimentConfig parse_config(const std::string& text, const std::filesystem::path& base_dir = {},
                              const std::vector<std::string>& overrides = {});

/// --seed: replaces the synth, forge and training seeds.
void override_seed(ExperimentConfig& cfg, std::uint64_t seed);

/// Fixed output filenames under --out.
namespace files {
inline constexpr const char* kManifest = "manifest.csv";
inline constexpr const char* kCheckpoint = "checkpoint.bin";
inline constexpr const char* kLosses = "losses.csv";
inline constexpr const char* kScores = "scores.csv";
inline constexpr const char* kReportText = "report.txt";
inline constexpr const char* kReportCsv = "report.csv";
inline constexpr const char* kSpectrogramDir = "spectrograms";
}  // namespace files

/// Writes the synthetic corpus into forge.corpus_dir.
void cmd_synth(const ExperimentConfig& cfg, std::ostream& log);

/// Forges the manifest into out/manifest.csv and returns the records.
std::vector<forge::MixtureRecord> cmd_forge(const ExperimentConfig& cfg, const std::filesystem::path& out,
                                            std::ostream& log);

struct TrainResult {
  std::vector<net::LossPoint> losses;
};

/// Trains on the manifest's train split with the configured
/// train_corrupt_fraction; writes out/checkpoint.bin and out/losses.csv.
TrainResult cmd_train(const ExperimentConfig& cfg, const std::filesystem::path& manifest,
                      const std::filesystem::path& out, std::ostream& log);

/// Scores the configured split with the configured estimator (and
/// test_corrupt_fraction for the model); writes out/scores.csv.
std::vector<metrics::ScoreRow> cmd_eval(const ExperimentConfig& cfg, const std::filesystem::path& manifest,
                                        const std::optional<std::filesystem::path>& checkpoint,
                                        const std::filesystem::path& out, std::ostream& log);

/// Magnitude dumps (dsp::write_magnitude_dump) of one eval-split mixture:
/// <id>_{mixture,ref_a,ref_b,est_a,est_b}.mag under out/spectrograms/.
/// An empty id picks the split's first mixture.
std::vector<std::filesystem::path> cmd_spectrogram(const ExperimentConfig& cfg, const std::filesystem::path& manifest,
                                                   const std::optional<std::filesystem::path>& checkpoint,
                                                   const std::string& mixture_id, const std::filesystem::path& out,
                                                   std::ostream& log);

struct ReportRow {
  std::string label;
  bool train_corrupt = false;
  bool test_corrupt = false;
  metrics::SeparationScores mean;
};

/// Table with Incr columns relative to the baseline row.
struct ReportTable {
  struct Line {
    ReportRow row;
    double incr_sdr, incr_sir, incr_sar, incr_stoi;
  };
  std::vector<Line> lines;
};

/// Throws ConfigError when no row carries the baseline label.
ReportTable build_report(const std::vector<ReportRow>& rows, const std::string& baseline);
std::string render_text(const ReportTable& t);
void write_report(const ReportTable& t, const std::filesystem::path& out);

/// Report inputs: [report] baseline = <label>, then one [row:<label>]
/// section per row with scores = <path>, train_corrupt, test_corrupt.
struct ReportSpec {
  std::string baseline;
  struct Entry {
    std::string label;
    std::filesystem::path scores;
    bool train_corrupt = false;
    bool test_corrupt = false;
  };
  std::vector<Entry> entries;
};
ReportSpec load_report_spec(const std::filesystem::path& path);
ReportTable cmd_report(const ReportSpec& spec, const std::filesystem::path& out, std::ostream& log);

struct RobustnessCell {
  std::string label;  // modality label, e.g. "AV"
  double train_fraction = 0.0;
  double test_fraction = 0.0;
  metrics::SeparationScores mean;
};

struct RobustnessResult {
  std::vector<RobustnessCell> cells;
  /// Clean-trained model scores lower with corrupted test conditioning.
  bool corruption_hurts = false;
  /// Corruption-trained model beats the clean-trained one under corrupted test.
  bool training_recovers = false;
  /// With both fractions on, the sign-augmented model scores at least as high.
  bool sign_helps = false;
  ReportTable report;
};

/// Trains and evaluates {0, train_corrupt} x {0, test_corrupt} twice: with
/// the visual modality alone (AV) and with visual plus sign (AVS); all other
/// settings come from `cfg`. Cell (0, 0) reproduces cmd_train + cmd_eval
/// under the same seed.
RobustnessResult cmd_robustness(const ExperimentConfig& cfg, const std::filesystem::path& manifest,
                                const std::filesystem::path& out, std::ostream& log);

/// Process exit code for an error class: 2 config, 3 data, 4 numeric.
int exit_code(ErrorKind kind);

}  // namespace maskbench::bench
