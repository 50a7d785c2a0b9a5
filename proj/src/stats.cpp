#include "stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "common.hpp"
#include "rng.hpp"

namespace fb::stats {

double mean(std::span<const double> x) {
  if (x.empty()) return 0.0;
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

double variance(std::span<const double> x) {
  if (x.empty()) return 0.0;
  const double m = mean(x);
  double s = 0.0;
  for (double v : x) s += (v - m) * (v - m);
  return s / static_cast<double>(x.size());
}

double stddev(std::span<const double> x) { return std::sqrt(variance(x)); }

namespace {
constexpr double kTinyVar = 1e-24;

double central_moment(std::span<const double> x, int k) {
  const double m = mean(x);
  double s = 0.0;
  for (double v : x) s += std::pow(v - m, k);
  return s / static_cast<double>(x.size());
}
}  // namespace

double skewness(std::span<const double> x) {
  const double v = variance(x);
  if (v < kTinyVar) return 0.0;
  return central_moment(x, 3) / std::pow(v, 1.5);
}

double excess_kurtosis(std::span<const double> x) {
  const double v = variance(x);
  if (v < kTinyVar) return 0.0;
  return central_moment(x, 4) / (v * v) - 3.0;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) raise_invalid("normal_quantile: p must lie in (0,1)");

  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
                             1.383577518672690e+02,  -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
                             6.680131188771972e+01,  -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
                             -2.549732539343734e+00, 4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
                             3.754408661907416e+00};
  const double p_low = 0.02425;
  double x;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - p_low) {
    const double q = p - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  // One Halley step against the exact CDF.
  const double e = normal_cdf(x) - p;
  const double u = e * std::sqrt(2.0 * M_PI) * std::exp(x * x / 2.0);
  x = x - u / (1.0 + x * u / 2.0);
  return x;
}

namespace {

// Polynomial in x with ascending powers starting at x^1.
double poly1(const double* coef, int terms, double x) {
  double r = 0.0;
  double xp = 1.0;
  for (int i = 0; i < terms; ++i) {
    xp *= x;
    r += coef[i] * xp;
  }
  return r;
}

// Royston's AS R94 approximation of the Shapiro-Wilk coefficients.
double shapiro_w_sorted(const std::vector<double>& x) {
  const std::size_t n = x.size();
  const double nn = static_cast<double>(n);

  std::vector<double> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m[i] = normal_quantile((static_cast<double>(i + 1) - 0.375) / (nn + 0.25));
  }
  double ssq = 0.0;
  for (double v : m) ssq += v * v;
  const double norm = std::sqrt(ssq);

  static const double c1[5] = {0.221157, -0.147981, -2.071190, 4.434685, -2.706056};
  static const double c2[5] = {0.042981, -0.293762, -1.752461, 5.682633, -3.582633};

  std::vector<double> a(n, 0.0);
  if (n == 3) {
    a[2] = std::sqrt(0.5);
    a[0] = -a[2];
  } else {
    const double rsn = 1.0 / std::sqrt(nn);
    const double a_n = m[n - 1] / norm + poly1(c1, 5, rsn);
    double phi;
    if (n > 5) {
      const double a_n1 = m[n - 2] / norm + poly1(c2, 5, rsn);
      a[n - 1] = a_n;
      a[n - 2] = a_n1;
      phi = (ssq - 2.0 * m[n - 1] * m[n - 1] - 2.0 * m[n - 2] * m[n - 2]) /
            (1.0 - 2.0 * a_n * a_n - 2.0 * a_n1 * a_n1);
      const double sphi = std::sqrt(phi);
      for (std::size_t i = 2; i + 2 < n; ++i) a[i] = m[i] / sphi;
      a[0] = -a[n - 1];
      a[1] = -a[n - 2];
    } else {
      a[n - 1] = a_n;
      phi = (ssq - 2.0 * m[n - 1] * m[n - 1]) / (1.0 - 2.0 * a_n * a_n);
      const double sphi = std::sqrt(phi);
      for (std::size_t i = 1; i + 1 < n; ++i) a[i] = m[i] / sphi;
      a[0] = -a[n - 1];
    }
  }

  const double xbar = mean(std::span<const double>(x.data(), x.size()));
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    num += a[i] * x[i];
    den += (x[i] - xbar) * (x[i] - xbar);
  }
  if (den < 1e-24) return 0.0;
  const double w = num * num / den;
  return std::clamp(w, 0.0, 1.0);
}

}  // namespace

double shapiro_w(std::span<const double> x) {
  if (x.size() < 3) raise_invalid("shapiro_w: need at least 3 samples");
  std::vector<double> v;
  if (x.size() <= kShapiroSubsampleCap) {
    v.assign(x.begin(), x.end());
  } else {
    // Deterministic subsample without replacement (partial Fisher-Yates).
    std::vector<std::size_t> idx(x.size());
    std::iota(idx.begin(), idx.end(), 0);
    Rng rng(kShapiroSubsampleSeed);
    v.reserve(kShapiroSubsampleCap);
    for (std::size_t i = 0; i < kShapiroSubsampleCap; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng.below(idx.size() - i));
      std::swap(idx[i], idx[j]);
      v.push_back(x[idx[i]]);
    }
  }
  std::sort(v.begin(), v.end());
  return shapiro_w_sorted(v);
}

double spearman(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.size() < 2) raise_invalid("spearman: need two equal-length series");
  auto ranks = [](std::span<const double> x) {
    const std::size_t n = x.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return x[i] < x[j]; });
    std::vector<double> r(n);
    std::size_t i = 0;
    while (i < n) {
      std::size_t j = i;
      while (j + 1 < n && x[order[j + 1]] == x[order[i]]) ++j;
      const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
      for (std::size_t k = i; k <= j; ++k) r[order[k]] = avg;
      i = j + 1;
    }
    return r;
  };
  auto ra = ranks(a);
  auto rb = ranks(b);
  const double ma = mean(ra);
  const double mb = mean(rb);
  double cov = 0.0, va = 0.0, vb = 0.0;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    cov += (ra[i] - ma) * (rb[i] - mb);
    va += (ra[i] - ma) * (ra[i] - ma);
    vb += (rb[i] - mb) * (rb[i] - mb);
  }
  if (va < 1e-24 || vb < 1e-24) return 0.0;
  return cov / std::sqrt(va * vb);
}

}  // namespace fb::stats
