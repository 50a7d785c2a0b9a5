#ifndef FB_TYPES_HPP
#define FB_TYPES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fb {

enum class Axis { horizontal, vertical };

// One acquired vibration snapshot.
struct WaveformRecord {
  std::string bearing_id;
  std::string condition_id;
  int seq_index = 0;
  std::vector<double> samples;  // acceleration, g
  double sampling_rate_hz = 0.0;
  std::optional<std::string> fault_label;  // injected-fault sources only
  Axis axis = Axis::horizontal;
};

struct ManifestEntry {
  std::string path;
  std::string bearing_id;
  std::string condition_id;
  int seq_index = 0;
  double sampling_rate_hz = 0.0;
  std::optional<std::string> fault_label;
};

struct DatasetManifest {
  std::string dataset_id;
  int schema_version = 1;
  std::string layout;  // femto_like | xjtu_like | cwru_like
  std::vector<ManifestEntry> records;
  std::vector<std::string> rejects;   // unparseable entries, with reasons
  std::vector<std::string> warnings;
  std::size_t expected_waveform_len = 0;  // 0 = unchecked
  // Per-bearing failure type for run-to-failure sources (dataset-level
  // metadata; not the per-record injected fault_label).
  std::vector<std::pair<std::string, std::string>> failure_types;

  std::optional<std::string> failure_type_of(const std::string& bearing_id) const {
    for (const auto& [b, t] : failure_types) {
      if (b == bearing_id) return t;
    }
    return std::nullopt;
  }
};

enum class FeatureFamily { TIME, RFFT, STFT };

std::string family_name(FeatureFamily f);
FeatureFamily family_from_name(const std::string& name);

struct WindowSpec {
  std::size_t length = 2048;
  double overlap_fraction = 0.25;

  std::size_t hop() const;
};

// One windowed segment's feature vector plus provenance.
struct FeatureSample {
  std::string bearing_id;
  std::string condition_id;
  int seq_index = 0;
  int window_index = 0;
  double window_start_time_s = 0.0;
  FeatureFamily family = FeatureFamily::TIME;
  std::vector<double> values;
};

struct FeatureTable {
  FeatureFamily family = FeatureFamily::TIME;
  WindowSpec window;
  std::size_t stft_sub_len = 0;       // STFT only
  double stft_sub_overlap = 0.0;      // STFT only
  std::vector<std::string> feature_names;  // TIME only
  std::vector<FeatureSample> samples;
};

enum class Partition { train, val, test };

std::string partition_name(Partition p);
Partition partition_from_name(const std::string& name);

}  // namespace fb

#endif
