#include "types.hpp"

#include <cmath>

#include "common.hpp"

namespace fb {

std::string family_name(FeatureFamily f) {
  switch (f) {
    case FeatureFamily::TIME: return "TIME";
    case FeatureFamily::RFFT: return "RFFT";
    case FeatureFamily::STFT: return "STFT";
  }
  return "?";
}

FeatureFamily family_from_name(const std::string& name) {
  std::string up;
  for (char c : name) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (up == "TIME") return FeatureFamily::TIME;
  if (up == "RFFT") return FeatureFamily::RFFT;
  if (up == "STFT") return FeatureFamily::STFT;
  raise_invalid("unknown feature family: " + name);
}

std::size_t WindowSpec::hop() const {
  if (length == 0) raise_invalid("window length must be positive");
  if (!(overlap_fraction >= 0.0 && overlap_fraction < 1.0)) {
    raise_invalid("overlap fraction must lie in [0, 1)");
  }
  const double h = std::round(static_cast<double>(length) * (1.0 - overlap_fraction));
  if (h < 1.0) raise_invalid("window hop must be >= 1 sample");
  return static_cast<std::size_t>(h);
}

std::string partition_name(Partition p) {
  switch (p) {
    case Partition::train: return "train";
    case Partition::val: return "val";
    case Partition::test: return "test";
  }
  return "?";
}

Partition partition_from_name(const std::string& name) {
  if (name == "train") return Partition::train;
  if (name == "val") return Partition::val;
  if (name == "test") return Partition::test;
  raise_invalid("unknown partition: " + name);
}

}  // namespace fb
