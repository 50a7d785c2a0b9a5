#ifndef FB_FFT_HPP
#define FB_FFT_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace fb::fft {

using cplx = std::complex<double>;

// In-place forward/inverse transform. Radix-2 for power-of-two sizes,
// Bluestein otherwise. Inverse includes the 1/n factor.
void transform(std::vector<cplx>& data, bool inverse);

std::vector<cplx> forward(std::span<const double> x);

// One-sided spectrum, n/2 + 1 complex bins of the unscaled DFT.
std::vector<cplx> rfft(std::span<const double> x);

}  // namespace fb::fft

#endif
