#ifndef FB_SYNTH_HPP
#define FB_SYNTH_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "types.hpp"

namespace fb::synth {

enum class FaultType { none, inner_race, outer_race, ball, cage, compound };

std::string fault_name(FaultType f);
FaultType fault_from_name(const std::string& name);

enum class Growth { linear, exponential };

struct Degradation {
  double onset_fraction = 0.8;   // (0,1)
  Growth growth = Growth::linear;
  double end_amplitude_g = 30.0;
  // Impulse amplitude at onset as a fraction of end_amplitude_g. Fault
  // appearance is modeled as a step followed by growth, so amplitude-threshold
  // onset detection has something to detect at the true onset.
  double start_fraction = 0.4;
};

struct SynthConfig {
  std::string bearing_id = "1_1";
  double shaft_hz = 35.0;
  double shaft_amplitude_g = 0.5;
  double sampling_rate_hz = 25600.0;
  FaultType fault_type = FaultType::outer_race;
  double fault_char_freq_hz = 90.0;   // impact repetition rate
  double resonance_hz = 3000.0;       // burst carrier
  double impulse_snr_db = 20.0;       // injected mode: peak vs noise sigma
  std::optional<Degradation> degradation;
  double noise_sigma_g = 0.5;
  std::size_t n_waveforms = 100;
  std::size_t waveform_len = 2560;
  std::uint64_t seed = 0;

  void validate() const;
};

struct GroundTruth {
  std::string bearing_id;
  std::optional<std::size_t> onset_index;  // first waveform with fault content
  FaultType fault_type = FaultType::none;
  double fault_char_freq_hz = 0.0;
};

// Run-to-failure sequence: noise + shaft tone up to the onset waveform, then
// fault impulses whose amplitude grows to end_amplitude_g at the last
// waveform. Deterministic per (seed, waveform index) substreams.
std::pair<std::vector<WaveformRecord>, GroundTruth> generate_run_to_failure(const SynthConfig& cfg);

// Stationary injected-fault sequence; every record carries fault_label.
std::pair<std::vector<WaveformRecord>, GroundTruth> generate_injected(const SynthConfig& cfg);

// Adds a bearing-specific spectral fingerprint (a fixed tone with amplitude
// 10^(gain_db/20) g) to every waveform, making same-bearing windows mutually
// identifiable. gain_db of -inf leaves the records untouched.
void add_bearing_nuisance(std::vector<WaveformRecord>& records, double nuisance_gain_db,
                          double nuisance_freq_hz);

struct NuisanceSpec {
  std::string bearing_id;
  double gain_db = -300.0;
  double freq_hz = 0.0;
};

struct BearingOverride {
  std::string bearing_id;
  std::optional<std::uint64_t> seed;
  std::optional<FaultType> fault_type;
  std::optional<double> fault_char_freq_hz;
  std::optional<double> impulse_snr_db;
  std::optional<double> end_amplitude_g;
};

// Multi-bearing dataset description (CLI / runner input).
struct DatasetConfig {
  std::string dataset_id = "synth";
  bool run_to_failure = true;
  SynthConfig base;
  std::vector<BearingOverride> bearings;
  std::vector<NuisanceSpec> nuisance;
};

DatasetConfig parse_dataset_config(const std::string& json_text);
DatasetConfig load_dataset_config(const std::filesystem::path& path);

// Generates every bearing and writes a femto_like tree (per-bearing waveform
// CSVs, dataset.json, ground_truth.json) so synthetic data flows through the
// same ingest path as real data.
void write_dataset(const DatasetConfig& cfg, const std::filesystem::path& out_dir);

}  // namespace fb::synth

#endif
