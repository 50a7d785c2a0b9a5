#ifndef FB_DSP_HPP
#define FB_DSP_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace fb::dsp {

// Linear-phase lowpass FIR, windowed-sinc (Hamming), unity DC gain.
// cutoff is a fraction of the sampling rate in (0, 0.5); taps must be odd.
std::vector<double> design_lowpass(double cutoff_fraction, std::size_t taps);

// Zero-phase application: output aligned with the input (group delay of
// (taps-1)/2 compensated), zero padding at the signal boundaries.
std::vector<double> filter_aligned(std::span<const double> x, std::span<const double> taps);

// Anti-aliased decimation by an integer factor. Output sample i equals the
// filtered signal at input index i*factor, so the output length is
// ceil(N / factor). factor == 1 returns the input unchanged (no filtering).
std::vector<double> decimate(std::span<const double> x, std::size_t factor, std::size_t taps = 127);

}  // namespace fb::dsp

#endif
