#ifndef FB_INGEST_HPP
#define FB_INGEST_HPP

#include <filesystem>
#include <string>

#include "types.hpp"

namespace fb::ingest {

// Directory layouts:
//   femto_like: root/<bearing_id>/acc_<seq>.csv, one sample per row, no header.
//   xjtu_like:  root/<condition>/<bearing>/<n>.csv, header naming the axes,
//               horizontal column retained.
//   cwru_like:  root/<rig>/<fault>/<diam>/<condition>.csv plus root/Normal/<condition>.csv,
//               one sample per row; bearing_id is the group path (Normal files
//               are one group per recording, e.g. "Normal/0").
// An optional root/dataset.json carries dataset_id, sampling_rate_hz,
// per-bearing fault labels (injected sources) and failure types (run-to-failure).
DatasetManifest scan_dataset(const std::filesystem::path& root, const std::string& layout);

WaveformRecord load_waveform(const ManifestEntry& entry, const DatasetManifest& manifest);

// All waveforms of a manifest, ordered (bearing_id, seq_index).
std::vector<WaveformRecord> load_all(const DatasetManifest& manifest);

// Anti-aliased integer-factor downsampling; the target rate must divide the
// record's rate. Output length is ceil(n / factor).
WaveformRecord downsample(const WaveformRecord& record, double target_rate_hz);

void save_manifest(const DatasetManifest& manifest, const std::filesystem::path& path);
DatasetManifest load_manifest(const std::filesystem::path& path);

// Writes a single-column waveform CSV (femto_like convention).
void save_waveform_csv(const std::filesystem::path& path, const std::vector<double>& samples);

}  // namespace fb::ingest

#endif
