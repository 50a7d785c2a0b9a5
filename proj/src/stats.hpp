#ifndef FB_STATS_HPP
#define FB_STATS_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace fb::stats {

double mean(std::span<const double> x);
// Population (1/n) central moments are used throughout.
double variance(std::span<const double> x);
double stddev(std::span<const double> x);
double skewness(std::span<const double> x);        // 0 when variance ~ 0
double excess_kurtosis(std::span<const double> x); // Fisher convention, 0 when variance ~ 0

double normal_cdf(double z);
// Inverse standard-normal CDF (Acklam's rational approximation plus one
// Halley refinement step; |rel err| well below 1e-12 over (0,1)).
double normal_quantile(double p);

// Shapiro-Wilk W statistic (Royston's AS R94 coefficient approximation).
// Values of n above `cap` are reduced to a deterministic subsample drawn with
// the fixed seed below, so the feature is a pure function of the window.
inline constexpr std::size_t kShapiroSubsampleCap = 512;
inline constexpr unsigned long long kShapiroSubsampleSeed = 0x5a17u;
double shapiro_w(std::span<const double> x);

// Spearman rank correlation (average ranks on ties).
double spearman(std::span<const double> a, std::span<const double> b);

}  // namespace fb::stats

#endif
