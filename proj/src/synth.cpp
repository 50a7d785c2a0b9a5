#include "synth.hpp"

#include <cmath>

#include "json.hpp"

#include "common.hpp"
#include "ingest.hpp"
#include "rng.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace fb::synth {

std::string fault_name(FaultType f) {
  switch (f) {
    case FaultType::none: return "none";
    case FaultType::inner_race: return "inner_race";
    case FaultType::outer_race: return "outer_race";
    case FaultType::ball: return "ball";
    case FaultType::cage: return "cage";
    case FaultType::compound: return "compound";
  }
  return "?";
}

FaultType fault_from_name(const std::string& name) {
  if (name == "none") return FaultType::none;
  if (name == "inner_race") return FaultType::inner_race;
  if (name == "outer_race") return FaultType::outer_race;
  if (name == "ball") return FaultType::ball;
  if (name == "cage") return FaultType::cage;
  if (name == "compound") return FaultType::compound;
  raise_config("unknown fault type: " + name);
}

void SynthConfig::validate() const {
  if (!(shaft_hz > 0.0)) raise_config("shaft_hz must be positive");
  if (!(sampling_rate_hz > 0.0)) raise_config("sampling_rate_hz must be positive");
  if (!(fault_char_freq_hz > 0.0)) raise_config("fault_char_freq_hz must be positive");
  if (fault_char_freq_hz >= sampling_rate_hz / 2.0) {
    raise_config("fault_char_freq_hz must lie below the Nyquist rate");
  }
  if (!(resonance_hz > 0.0) || resonance_hz >= sampling_rate_hz / 2.0) {
    raise_config("resonance_hz must lie in (0, Nyquist)");
  }
  if (!(noise_sigma_g > 0.0)) raise_config("noise_sigma_g must be positive");
  if (n_waveforms == 0) raise_config("n_waveforms must be positive");
  if (waveform_len == 0) raise_config("waveform_len must be positive");
  if (degradation) {
    const auto& d = *degradation;
    if (!(d.onset_fraction > 0.0 && d.onset_fraction < 1.0)) {
      raise_config("degradation.onset_fraction must lie strictly between 0 and 1");
    }
    if (!(d.end_amplitude_g > 0.0)) raise_config("degradation.end_amplitude_g must be positive");
    if (!(d.start_fraction > 0.0 && d.start_fraction <= 1.0)) {
      raise_config("degradation.start_fraction must lie in (0, 1]");
    }
  }
}

namespace {

// One waveform. Impulse bursts are exponentially decaying sinusoids at the
// resonance carrier, repeated at the characteristic frequency with 1% period
// jitter. impulse_amp <= 0 disables the train.
std::vector<double> render_waveform(const SynthConfig& cfg, std::uint64_t waveform_index,
                                    double impulse_amp) {
  Rng rng = substream(cfg.seed, waveform_index);
  const std::size_t n = cfg.waveform_len;
  const double fs = cfg.sampling_rate_hz;
  std::vector<double> x(n);

  const double shaft_phase = rng.uniform(0.0, 2.0 * M_PI);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / fs;
    x[i] = cfg.shaft_amplitude_g * std::sin(2.0 * M_PI * cfg.shaft_hz * t + shaft_phase) +
           cfg.noise_sigma_g * rng.normal();
  }

  if (impulse_amp > 0.0 && cfg.fault_type != FaultType::none) {
    const double period = fs / cfg.fault_char_freq_hz;  // samples between impacts
    const double tau = 0.2 / cfg.fault_char_freq_hz;    // burst decay, seconds
    const std::size_t burst_len =
        std::min(n, static_cast<std::size_t>(std::ceil(5.0 * tau * fs)) + 1);
    double pos = rng.uniform(0.0, period);
    while (pos < static_cast<double>(n)) {
      const std::size_t start = static_cast<std::size_t>(pos);
      for (std::size_t k = 0; k < burst_len && start + k < n; ++k) {
        const double t = static_cast<double>(k) / fs;
        x[start + k] +=
            impulse_amp * std::exp(-t / tau) * std::sin(2.0 * M_PI * cfg.resonance_hz * t);
      }
      pos += period * (1.0 + 0.01 * (2.0 * rng.uniform() - 1.0));
    }
  }
  return x;
}

double degradation_amplitude(const Degradation& d, std::size_t i, std::size_t onset, std::size_t n) {
  if (i < onset) return 0.0;
  const double progress =
      static_cast<double>(i - onset + 1) / static_cast<double>(n - onset);  // (0, 1]
  const double start = d.start_fraction;
  double level;
  if (d.growth == Growth::linear) {
    level = start + (1.0 - start) * progress;
  } else {
    level = std::exp(std::log(start) * (1.0 - progress));  // start -> 1, exponential
  }
  return d.end_amplitude_g * level;
}

WaveformRecord make_record(const SynthConfig& cfg, std::size_t i, std::vector<double> samples) {
  WaveformRecord rec;
  rec.bearing_id = cfg.bearing_id;
  const auto pos = cfg.bearing_id.find('_');
  rec.condition_id = pos == std::string::npos ? "default" : cfg.bearing_id.substr(0, pos);
  rec.seq_index = static_cast<int>(i);
  rec.samples = std::move(samples);
  rec.sampling_rate_hz = cfg.sampling_rate_hz;
  rec.axis = Axis::horizontal;
  return rec;
}

}  // namespace

std::pair<std::vector<WaveformRecord>, GroundTruth> generate_run_to_failure(const SynthConfig& cfg) {
  cfg.validate();
  if (!cfg.degradation) raise_config("generate_run_to_failure requires a degradation block");
  const auto& d = *cfg.degradation;
  const std::size_t n = cfg.n_waveforms;
  const std::size_t onset =
      static_cast<std::size_t>(std::floor(d.onset_fraction * static_cast<double>(n)));

  std::vector<WaveformRecord> records(n);
  parallel_for(n, thread_budget(), [&](std::size_t i) {
    const double amp = degradation_amplitude(d, i, onset, n);
    records[i] = make_record(cfg, i, render_waveform(cfg, i, amp));
  });

  GroundTruth gt;
  gt.bearing_id = cfg.bearing_id;
  gt.onset_index = onset;
  gt.fault_type = cfg.fault_type;
  gt.fault_char_freq_hz = cfg.fault_char_freq_hz;
  return {std::move(records), std::move(gt)};
}

std::pair<std::vector<WaveformRecord>, GroundTruth> generate_injected(const SynthConfig& cfg) {
  cfg.validate();
  if (cfg.degradation) raise_config("generate_injected requires no degradation block");
  const double amp = cfg.fault_type == FaultType::none
                         ? 0.0
                         : cfg.noise_sigma_g * std::pow(10.0, cfg.impulse_snr_db / 20.0);

  std::vector<WaveformRecord> records(cfg.n_waveforms);
  parallel_for(cfg.n_waveforms, thread_budget(), [&](std::size_t i) {
    records[i] = make_record(cfg, i, render_waveform(cfg, i, amp));
    records[i].fault_label = cfg.fault_type == FaultType::none ? "Normal" : fault_name(cfg.fault_type);
  });

  GroundTruth gt;
  gt.bearing_id = cfg.bearing_id;
  gt.fault_type = cfg.fault_type;
  gt.fault_char_freq_hz = cfg.fault_char_freq_hz;
  return {std::move(records), std::move(gt)};
}

void add_bearing_nuisance(std::vector<WaveformRecord>& records, double nuisance_gain_db,
                          double nuisance_freq_hz) {
  if (std::isinf(nuisance_gain_db) && nuisance_gain_db < 0) return;
  const double amp = std::pow(10.0, nuisance_gain_db / 20.0);
  if (amp == 0.0) return;
  for (auto& rec : records) {
    if (!(nuisance_freq_hz > 0.0 && nuisance_freq_hz < rec.sampling_rate_hz / 2.0)) {
      raise_config("nuisance frequency must lie in (0, Nyquist)");
    }
    const double fs = rec.sampling_rate_hz;
    for (std::size_t i = 0; i < rec.samples.size(); ++i) {
      rec.samples[i] += amp * std::sin(2.0 * M_PI * nuisance_freq_hz * static_cast<double>(i) / fs);
    }
  }
}

namespace {

SynthConfig parse_synth_config(const json& j) {
  SynthConfig c;
  c.bearing_id = j.value("bearing_id", c.bearing_id);
  c.shaft_hz = j.value("shaft_hz", c.shaft_hz);
  c.shaft_amplitude_g = j.value("shaft_amplitude_g", c.shaft_amplitude_g);
  c.sampling_rate_hz = j.value("sampling_rate_hz", c.sampling_rate_hz);
  if (j.contains("fault_type")) c.fault_type = fault_from_name(j.at("fault_type").get<std::string>());
  c.fault_char_freq_hz = j.value("fault_char_freq_hz", c.fault_char_freq_hz);
  c.resonance_hz = j.value("resonance_hz", c.resonance_hz);
  c.impulse_snr_db = j.value("impulse_snr_db", c.impulse_snr_db);
  c.noise_sigma_g = j.value("noise_sigma_g", c.noise_sigma_g);
  c.n_waveforms = j.value("n_waveforms", c.n_waveforms);
  c.waveform_len = j.value("waveform_len", c.waveform_len);
  c.seed = j.value("seed", c.seed);
  if (j.contains("degradation") && !j.at("degradation").is_null()) {
    const auto& dj = j.at("degradation");
    Degradation d;
    d.onset_fraction = dj.value("onset_fraction", d.onset_fraction);
    const std::string g = dj.value("growth", std::string("linear"));
    if (g == "linear") {
      d.growth = Growth::linear;
    } else if (g == "exponential") {
      d.growth = Growth::exponential;
    } else {
      raise_config("degradation.growth must be linear or exponential");
    }
    d.end_amplitude_g = dj.value("end_amplitude_g", d.end_amplitude_g);
    d.start_fraction = dj.value("start_fraction", d.start_fraction);
    c.degradation = d;
  }
  return c;
}

}  // namespace

DatasetConfig parse_dataset_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    raise_config(std::string("synth config: ") + e.what());
  }
  DatasetConfig cfg;
  try {
    cfg.dataset_id = j.value("dataset_id", cfg.dataset_id);
    cfg.run_to_failure = j.value("run_to_failure", cfg.run_to_failure);
    cfg.base = parse_synth_config(j.value("base", json::object()));
    if (j.contains("bearings")) {
      for (const auto& bj : j.at("bearings")) {
        BearingOverride b;
        b.bearing_id = bj.at("bearing_id").get<std::string>();
        if (bj.contains("seed")) b.seed = bj.at("seed").get<std::uint64_t>();
        if (bj.contains("fault_type")) b.fault_type = fault_from_name(bj.at("fault_type").get<std::string>());
        if (bj.contains("fault_char_freq_hz")) b.fault_char_freq_hz = bj.at("fault_char_freq_hz").get<double>();
        if (bj.contains("impulse_snr_db")) b.impulse_snr_db = bj.at("impulse_snr_db").get<double>();
        if (bj.contains("end_amplitude_g")) b.end_amplitude_g = bj.at("end_amplitude_g").get<double>();
        cfg.bearings.push_back(std::move(b));
      }
    }
    if (cfg.bearings.empty()) cfg.bearings.push_back(BearingOverride{cfg.base.bearing_id, {}, {}, {}, {}, {}});
    if (j.contains("nuisance")) {
      for (const auto& nj : j.at("nuisance")) {
        NuisanceSpec n;
        n.bearing_id = nj.at("bearing_id").get<std::string>();
        n.gain_db = nj.value("gain_db", n.gain_db);
        n.freq_hz = nj.at("freq_hz").get<double>();
        cfg.nuisance.push_back(std::move(n));
      }
    }
  } catch (const json::exception& e) {
    raise_config(std::string("synth config: ") + e.what());
  }
  return cfg;
}

DatasetConfig load_dataset_config(const fs::path& path) {
  return parse_dataset_config(read_text_file(path));
}

namespace {

SynthConfig apply_override(const SynthConfig& base, const BearingOverride& o, std::size_t index) {
  SynthConfig c = base;
  c.bearing_id = o.bearing_id;
  // Per-bearing seed defaults to a substream of the base seed so bearings
  // differ but the whole dataset stays a function of one seed.
  std::uint64_t sm = base.seed ^ (0x517cc1b727220a95ull + index);
  c.seed = o.seed ? *o.seed : splitmix64(sm);
  if (o.fault_type) c.fault_type = *o.fault_type;
  if (o.fault_char_freq_hz) c.fault_char_freq_hz = *o.fault_char_freq_hz;
  if (o.impulse_snr_db) c.impulse_snr_db = *o.impulse_snr_db;
  if (o.end_amplitude_g && c.degradation) c.degradation->end_amplitude_g = *o.end_amplitude_g;
  return c;
}

}  // namespace

void write_dataset(const DatasetConfig& cfg, const fs::path& out_dir) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);

  json meta;
  meta["schema_version"] = 1;
  meta["dataset_id"] = cfg.dataset_id;
  meta["sampling_rate_hz"] = cfg.base.sampling_rate_hz;
  meta["waveform_len"] = cfg.base.waveform_len;
  json fault_labels = json::object();
  json failure_types = json::object();
  json truth = json::object();

  for (std::size_t bi = 0; bi < cfg.bearings.size(); ++bi) {
    const SynthConfig bc = apply_override(cfg.base, cfg.bearings[bi], bi);
    auto [records, gt] = cfg.run_to_failure ? generate_run_to_failure(bc) : generate_injected(bc);
    for (const auto& n : cfg.nuisance) {
      if (n.bearing_id == bc.bearing_id) add_bearing_nuisance(records, n.gain_db, n.freq_hz);
    }
    const fs::path bdir = out_dir / bc.bearing_id;
    fs::create_directories(bdir, ec);
    for (const auto& rec : records) {
      char name[32];
      std::snprintf(name, sizeof(name), "acc_%05d.csv", rec.seq_index);
      ingest::save_waveform_csv(bdir / name, rec.samples);
    }
    if (cfg.run_to_failure) {
      if (bc.fault_type != FaultType::none) failure_types[bc.bearing_id] = fault_name(bc.fault_type);
    } else {
      fault_labels[bc.bearing_id] = records.front().fault_label.value_or("Normal");
    }
    json t;
    t["fault_type"] = fault_name(gt.fault_type);
    t["fault_char_freq_hz"] = gt.fault_char_freq_hz;
    if (gt.onset_index) t["onset_index"] = *gt.onset_index;
    t["seed"] = bc.seed;
    truth[bc.bearing_id] = std::move(t);
  }

  if (!fault_labels.empty()) meta["fault_labels"] = fault_labels;
  if (!failure_types.empty()) meta["failure_types"] = failure_types;
  write_text_file(out_dir / "dataset.json", meta.dump(2) + "\n");

  json gt_doc;
  gt_doc["dataset_id"] = cfg.dataset_id;
  gt_doc["bearings"] = truth;
  write_text_file(out_dir / "ground_truth.json", gt_doc.dump(2) + "\n");
}

}  // namespace fb::synth
