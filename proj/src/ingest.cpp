#include "ingest.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>

#include "json.hpp"

#include "common.hpp"
#include "csvio.hpp"
#include "dsp.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace fb::ingest {

namespace {

struct DatasetMeta {
  std::string dataset_id;
  double sampling_rate_hz = 0.0;  // 0 = layout default
  std::size_t waveform_len = 0;   // 0 = unchecked
  std::map<std::string, std::string> fault_labels;   // injected sources
  std::map<std::string, std::string> failure_types;  // run-to-failure sources
};

DatasetMeta read_meta(const fs::path& root) {
  DatasetMeta meta;
  const fs::path meta_path = root / "dataset.json";
  if (!fs::exists(meta_path)) return meta;
  json j;
  try {
    j = json::parse(read_text_file(meta_path));
  } catch (const json::exception& e) {
    raise_parse("dataset.json: " + std::string(e.what()));
  }
  meta.dataset_id = j.value("dataset_id", "");
  meta.sampling_rate_hz = j.value("sampling_rate_hz", 0.0);
  meta.waveform_len = j.value("waveform_len", static_cast<std::size_t>(0));
  if (j.contains("fault_labels")) {
    for (auto& [k, v] : j.at("fault_labels").items()) meta.fault_labels[k] = v.get<std::string>();
  }
  if (j.contains("failure_types")) {
    for (auto& [k, v] : j.at("failure_types").items()) meta.failure_types[k] = v.get<std::string>();
  }
  return meta;
}

bool parse_uint(const std::string& s, long& out) {
  if (s.empty()) return false;
  long v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + (c - '0');
  }
  out = v;
  return true;
}

std::vector<fs::path> sorted_entries(const fs::path& dir, bool dirs_only) {
  std::vector<fs::path> out;
  std::error_code ec;
  for (const auto& e : fs::directory_iterator(dir, ec)) {
    if (dirs_only == e.is_directory()) out.push_back(e.path());
  }
  if (ec) raise_io("cannot read directory: " + dir.string());
  std::sort(out.begin(), out.end());
  return out;
}

std::string femto_condition(const std::string& bearing_id) {
  const auto pos = bearing_id.find('_');
  return pos == std::string::npos ? std::string("default") : bearing_id.substr(0, pos);
}

void scan_femto(const fs::path& root, const DatasetMeta& meta, DatasetManifest& m) {
  const double rate = meta.sampling_rate_hz > 0 ? meta.sampling_rate_hz : 25600.0;
  for (const auto& bdir : sorted_entries(root, true)) {
    const std::string bearing = bdir.filename().string();
    std::vector<std::pair<long, fs::path>> files;
    for (const auto& f : sorted_entries(bdir, false)) {
      const std::string name = f.filename().string();
      long seq = -1;
      bool ok = name.size() > 8 && name.rfind("acc_", 0) == 0 && name.ends_with(".csv") &&
                parse_uint(name.substr(4, name.size() - 8), seq);
      if (!ok) {
        m.rejects.push_back(f.string() + ": does not match acc_<seq>.csv");
        continue;
      }
      files.emplace_back(seq, f);
    }
    std::sort(files.begin(), files.end());
    std::set<long> seen;
    for (const auto& [seq, path] : files) {
      if (!seen.insert(seq).second) {
        m.rejects.push_back(path.string() + ": duplicate sequence index " + std::to_string(seq));
        continue;
      }
      ManifestEntry e;
      e.path = path.string();
      e.bearing_id = bearing;
      e.condition_id = femto_condition(bearing);
      e.seq_index = static_cast<int>(seq);
      e.sampling_rate_hz = rate;
      auto it = meta.fault_labels.find(bearing);
      if (it != meta.fault_labels.end()) e.fault_label = it->second;
      m.records.push_back(std::move(e));
    }
  }
}

void scan_xjtu(const fs::path& root, const DatasetMeta& meta, DatasetManifest& m) {
  const double rate = meta.sampling_rate_hz > 0 ? meta.sampling_rate_hz : 25600.0;
  for (const auto& cdir : sorted_entries(root, true)) {
    const std::string condition = cdir.filename().string();
    for (const auto& bdir : sorted_entries(cdir, true)) {
      std::string bearing = bdir.filename().string();
      if (bearing.rfind("Bearing", 0) == 0) bearing = bearing.substr(7);
      std::vector<std::pair<long, fs::path>> files;
      for (const auto& f : sorted_entries(bdir, false)) {
        const std::string name = f.filename().string();
        long n = -1;
        bool ok = name.ends_with(".csv") && name.size() > 4 &&
                  parse_uint(name.substr(0, name.size() - 4), n) && n >= 1;
        if (!ok) {
          m.rejects.push_back(f.string() + ": does not match <n>.csv with n >= 1");
          continue;
        }
        files.emplace_back(n, f);
      }
      std::sort(files.begin(), files.end());
      std::set<long> seen;
      for (const auto& [n, path] : files) {
        if (!seen.insert(n).second) {
          m.rejects.push_back(path.string() + ": duplicate sequence index " + std::to_string(n));
          continue;
        }
        ManifestEntry e;
        e.path = path.string();
        e.bearing_id = bearing;
        e.condition_id = condition;
        e.seq_index = static_cast<int>(n - 1);  // files are numbered from 1
        e.sampling_rate_hz = rate;
        m.records.push_back(std::move(e));
      }
    }
  }
}

std::string cwru_fault_name(const std::string& folder) {
  if (folder == "B") return "BALL";
  return folder;  // IR, OR kept verbatim
}

double cwru_rate(const std::string& rig, const DatasetMeta& meta) {
  if (rig.rfind("12k", 0) == 0) return 12000.0;
  if (rig.rfind("48k", 0) == 0) return 48000.0;
  return meta.sampling_rate_hz > 0 ? meta.sampling_rate_hz : 48000.0;
}

void scan_cwru(const fs::path& root, const DatasetMeta& meta, DatasetManifest& m) {
  for (const auto& rig_dir : sorted_entries(root, true)) {
    const std::string rig = rig_dir.filename().string();
    if (rig == "Normal") {
      // one group per recording so split tables can place them independently
      int seq = 0;
      for (const auto& f : sorted_entries(rig_dir, false)) {
        if (!f.filename().string().ends_with(".csv")) {
          m.rejects.push_back(f.string() + ": not a .csv file");
          continue;
        }
        ManifestEntry e;
        e.path = f.string();
        e.bearing_id = "Normal/" + f.stem().string();
        e.condition_id = f.stem().string();
        e.seq_index = seq++;
        e.sampling_rate_hz = cwru_rate(rig, meta);
        e.fault_label = "Normal";
        m.records.push_back(std::move(e));
      }
      continue;
    }
    for (const auto& fault_dir : sorted_entries(rig_dir, true)) {
      const std::string fault = fault_dir.filename().string();
      for (const auto& diam_dir : sorted_entries(fault_dir, true)) {
        const std::string diam = diam_dir.filename().string();
        const std::string bearing = rig + "/" + fault + "/" + diam;
        int seq = 0;
        for (const auto& f : sorted_entries(diam_dir, false)) {
          if (!f.filename().string().ends_with(".csv")) {
            m.rejects.push_back(f.string() + ": not a .csv file");
            continue;
          }
          ManifestEntry e;
          e.path = f.string();
          e.bearing_id = bearing;
          e.condition_id = f.stem().string();
          e.seq_index = seq++;
          e.sampling_rate_hz = cwru_rate(rig, meta);
          e.fault_label = cwru_fault_name(fault);
          m.records.push_back(std::move(e));
        }
      }
    }
  }
}

}  // namespace

DatasetManifest scan_dataset(const fs::path& root, const std::string& layout) {
  if (!fs::exists(root) || !fs::is_directory(root)) {
    raise_io("dataset root is not a readable directory: " + root.string());
  }
  const DatasetMeta meta = read_meta(root);
  DatasetManifest m;
  m.layout = layout;
  m.dataset_id = meta.dataset_id.empty() ? root.filename().string() : meta.dataset_id;
  for (const auto& [b, t] : meta.failure_types) m.failure_types.emplace_back(b, t);

  if (layout == "femto_like") {
    scan_femto(root, meta, m);
  } else if (layout == "xjtu_like") {
    scan_xjtu(root, meta, m);
  } else if (layout == "cwru_like") {
    scan_cwru(root, meta, m);
  } else {
    raise_invalid("unknown layout: " + layout + " (expected femto_like|xjtu_like|cwru_like)");
  }

  std::sort(m.records.begin(), m.records.end(), [](const ManifestEntry& a, const ManifestEntry& b) {
    if (a.bearing_id != b.bearing_id) return a.bearing_id < b.bearing_id;
    return a.seq_index < b.seq_index;
  });
  if (m.records.empty()) m.warnings.push_back("no recordings found under " + root.string());
  m.expected_waveform_len = meta.waveform_len;
  return m;
}

namespace {

std::vector<double> parse_single_column(const fs::path& path) {
  std::ifstream in(path);
  if (!in) raise_io("cannot open waveform: " + path.string());
  std::vector<double> samples;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || line == "\r") continue;
    double v;
    if (!parse_double(line, v) || !std::isfinite(v)) {
      raise_parse(path.string() + ": row " + std::to_string(row) + ": bad numeric field '" + line + "'");
    }
    samples.push_back(v);
  }
  return samples;
}

std::vector<double> parse_horizontal_column(const fs::path& path) {
  auto table = csv::read_file(path, true);
  int col = -1;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    std::string low;
    for (char c : table.header[i]) low.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (low.find("horizontal") != std::string::npos || low == "h") {
      col = static_cast<int>(i);
      break;
    }
  }
  if (col < 0) raise_parse(path.string() + ": no horizontal-axis column in header");
  std::vector<double> samples;
  samples.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& fields = table.rows[r];
    if (static_cast<int>(fields.size()) <= col) {
      raise_parse(path.string() + ": row " + std::to_string(r + 2) + ": missing column");
    }
    double v;
    if (!parse_double(fields[static_cast<std::size_t>(col)], v) || !std::isfinite(v)) {
      raise_parse(path.string() + ": row " + std::to_string(r + 2) + ": bad numeric field '" +
                  fields[static_cast<std::size_t>(col)] + "'");
    }
    samples.push_back(v);
  }
  return samples;
}

}  // namespace

WaveformRecord load_waveform(const ManifestEntry& entry, const DatasetManifest& manifest) {
  WaveformRecord rec;
  rec.bearing_id = entry.bearing_id;
  rec.condition_id = entry.condition_id;
  rec.seq_index = entry.seq_index;
  rec.sampling_rate_hz = entry.sampling_rate_hz;
  rec.fault_label = entry.fault_label;
  rec.axis = Axis::horizontal;
  if (manifest.layout == "xjtu_like") {
    rec.samples = parse_horizontal_column(entry.path);
  } else {
    rec.samples = parse_single_column(entry.path);
  }
  if (rec.samples.empty()) raise_parse(entry.path + ": empty waveform");
  if (manifest.expected_waveform_len > 0 && rec.samples.size() != manifest.expected_waveform_len) {
    raise_parse(entry.path + ": length mismatch, expected " +
                std::to_string(manifest.expected_waveform_len) + " samples, got " +
                std::to_string(rec.samples.size()));
  }
  return rec;
}

std::vector<WaveformRecord> load_all(const DatasetManifest& manifest) {
  std::vector<WaveformRecord> out(manifest.records.size());
  parallel_for(manifest.records.size(), thread_budget(), [&](std::size_t i) {
    out[i] = load_waveform(manifest.records[i], manifest);
  });
  return out;
}

WaveformRecord downsample(const WaveformRecord& record, double target_rate_hz) {
  if (!(target_rate_hz > 0.0)) raise_invalid("downsample: target rate must be positive");
  if (record.sampling_rate_hz == target_rate_hz) return record;
  const double ratio = record.sampling_rate_hz / target_rate_hz;
  const double rounded = std::round(ratio);
  if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9 * ratio) {
    raise_invalid("downsample: unsupported rate " + format_double(target_rate_hz) + " Hz (factor " +
                  format_double(ratio) + " is not a positive integer)");
  }
  WaveformRecord out = record;
  out.samples = dsp::decimate(record.samples, static_cast<std::size_t>(rounded));
  out.sampling_rate_hz = target_rate_hz;
  return out;
}

void save_manifest(const DatasetManifest& manifest, const fs::path& path) {
  json j;
  j["schema_version"] = manifest.schema_version;
  j["dataset_id"] = manifest.dataset_id;
  j["layout"] = manifest.layout;
  j["rejects"] = manifest.rejects;
  j["warnings"] = manifest.warnings;
  if (manifest.expected_waveform_len > 0) j["expected_waveform_len"] = manifest.expected_waveform_len;
  json types = json::object();
  for (const auto& [b, t] : manifest.failure_types) types[b] = t;
  j["failure_types"] = types;
  json records = json::array();
  for (const auto& e : manifest.records) {
    json r;
    r["path"] = e.path;
    r["bearing_id"] = e.bearing_id;
    r["condition_id"] = e.condition_id;
    r["seq_index"] = e.seq_index;
    r["sampling_rate_hz"] = e.sampling_rate_hz;
    if (e.fault_label) r["fault_label"] = *e.fault_label;
    records.push_back(std::move(r));
  }
  j["records"] = std::move(records);
  write_text_file(path, j.dump(2) + "\n");
}

DatasetManifest load_manifest(const fs::path& path) {
  json j;
  try {
    j = json::parse(read_text_file(path));
  } catch (const json::exception& e) {
    raise_parse("manifest " + path.string() + ": " + e.what());
  }
  DatasetManifest m;
  try {
    m.schema_version = j.at("schema_version").get<int>();
    m.dataset_id = j.value("dataset_id", "");
    m.layout = j.value("layout", "femto_like");
    if (j.contains("rejects")) m.rejects = j.at("rejects").get<std::vector<std::string>>();
    if (j.contains("warnings")) m.warnings = j.at("warnings").get<std::vector<std::string>>();
    m.expected_waveform_len = j.value("expected_waveform_len", static_cast<std::size_t>(0));
    if (j.contains("failure_types")) {
      for (auto& [k, v] : j.at("failure_types").items()) m.failure_types.emplace_back(k, v.get<std::string>());
    }
    for (const auto& r : j.at("records")) {
      ManifestEntry e;
      e.path = r.at("path").get<std::string>();
      e.bearing_id = r.at("bearing_id").get<std::string>();
      e.condition_id = r.value("condition_id", "default");
      e.seq_index = r.at("seq_index").get<int>();
      e.sampling_rate_hz = r.at("sampling_rate_hz").get<double>();
      if (r.contains("fault_label")) e.fault_label = r.at("fault_label").get<std::string>();
      m.records.push_back(std::move(e));
    }
  } catch (const json::exception& e) {
    raise_parse("manifest " + path.string() + ": " + e.what());
  }
  std::vector<std::string> missing;
  for (const auto& e : m.records) {
    if (!fs::exists(e.path)) missing.push_back(e.path);
  }
  if (!missing.empty()) {
    std::string msg = "manifest references missing files:";
    for (std::size_t i = 0; i < missing.size() && i < 5; ++i) msg += " " + missing[i];
    if (missing.size() > 5) msg += " (+" + std::to_string(missing.size() - 5) + " more)";
    raise_io(msg);
  }
  return m;
}

void save_waveform_csv(const fs::path& path, const std::vector<double>& samples) {
  std::string body;
  body.reserve(samples.size() * 12);
  for (double v : samples) {
    body += format_double(v);
    body.push_back('\n');
  }
  write_text_file(path, body);
}

}  // namespace fb::ingest
