// Numeric support: log2-space arithmetic for probability bounds and adaptive
// Simpson quadrature used by the claim checkers and test oracles.

#ifndef RSS_QUADRATURE_HPP
#define RSS_QUADRATURE_HPP

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

namespace rss {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log2(2^a + 2^b), stable for widely separated exponents.
inline double log2_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = a > b ? a : b;
  const double lo = a > b ? b : a;
  return hi + std::log1p(std::exp2(lo - hi)) * std::numbers::log2e;
}

// log2(2^a - 2^b) for a > b; -inf when the difference underflows to <= 0.
inline double log2_sub(double a, double b) {
  if (b == kNegInf) return a;
  if (!(a > b)) return kNegInf;
  const double r = -std::expm1((b - a) * std::numbers::ln2);  // 1 - 2^(b-a)
  if (!(r > 0.0)) return kNegInf;
  return a + std::log2(r);
}

// P(X in [lo, hi]) for X ~ N(mean, sigma^2), via erf.
inline double normal_box_prob(double lo, double hi, double mean = 0.0, double sigma = 1.0) {
  const double inv = 1.0 / (sigma * std::numbers::sqrt2);
  return 0.5 * (std::erf((hi - mean) * inv) - std::erf((lo - mean) * inv));
}

inline double normal_pdf(double x, double mean = 0.0, double sigma = 1.0) {
  const double t = (x - mean) / sigma;
  return std::exp(-0.5 * t * t) / (sigma * std::sqrt(2.0 * std::numbers::pi));
}

// Adaptive Simpson on [a, b]: the interval is first split into min_panels
// equal panels, each refined recursively to abs_tol (spread across panels).
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol = 1e-12, int min_panels = 16);

}  // namespace rss

#endif  // RSS_QUADRATURE_HPP
