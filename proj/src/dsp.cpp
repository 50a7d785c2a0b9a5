#include "dsp.hpp"

#include <cmath>

#include "common.hpp"

namespace fb::dsp {

namespace {
double sinc(double x) {
  if (std::abs(x) < 1e-12) return 1.0;
  return std::sin(M_PI * x) / (M_PI * x);
}
}  // namespace

std::vector<double> design_lowpass(double cutoff_fraction, std::size_t taps) {
  if (!(cutoff_fraction > 0.0 && cutoff_fraction < 0.5)) {
    raise_invalid("design_lowpass: cutoff must lie in (0, 0.5) of the sampling rate");
  }
  if (taps < 3 || taps % 2 == 0) raise_invalid("design_lowpass: taps must be odd and >= 3");
  std::vector<double> h(taps);
  const double mid = static_cast<double>(taps - 1) / 2.0;
  for (std::size_t i = 0; i < taps; ++i) {
    const double t = static_cast<double>(i) - mid;
    const double window = 0.54 - 0.46 * std::cos(2.0 * M_PI * static_cast<double>(i) /
                                                 static_cast<double>(taps - 1));
    h[i] = 2.0 * cutoff_fraction * sinc(2.0 * cutoff_fraction * t) * window;
  }
  double sum = 0.0;
  for (double v : h) sum += v;
  for (double& v : h) v /= sum;
  return h;
}

std::vector<double> filter_aligned(std::span<const double> x, std::span<const double> taps) {
  const std::size_t n = x.size();
  const std::size_t t = taps.size();
  if (t % 2 == 0) raise_invalid("filter_aligned: even tap count");
  const std::ptrdiff_t half = static_cast<std::ptrdiff_t>(t - 1) / 2;
  std::vector<double> y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t k = 0; k < t; ++k) {
      const std::ptrdiff_t j = static_cast<std::ptrdiff_t>(i) + half - static_cast<std::ptrdiff_t>(k);
      if (j >= 0 && j < static_cast<std::ptrdiff_t>(n)) acc += taps[k] * x[static_cast<std::size_t>(j)];
    }
    y[i] = acc;
  }
  return y;
}

std::vector<double> decimate(std::span<const double> x, std::size_t factor, std::size_t taps) {
  if (factor == 0) raise_invalid("decimate: zero factor");
  if (factor == 1) return std::vector<double>(x.begin(), x.end());
  // cutoff at 0.8x the new Nyquist, expressed as a fraction of the old rate
  const double cutoff = 0.8 * 0.5 / static_cast<double>(factor);
  const auto h = design_lowpass(cutoff, taps);
  const auto filtered = filter_aligned(x, h);
  std::vector<double> out;
  out.reserve((x.size() + factor - 1) / factor);
  for (std::size_t i = 0; i < filtered.size(); i += factor) out.push_back(filtered[i]);
  return out;
}

}  // namespace fb::dsp
