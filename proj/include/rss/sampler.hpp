// Random input generation: standard and affine Gaussian matrices, containment
// mixtures, and binary truncation. Every sampler is a pure function of
// (shape, parameters, seed).

#ifndef RSS_SAMPLER_HPP
#define RSS_SAMPLER_HPP

#include <cstdint>
#include <span>

#include "rss/core.hpp"

namespace rss {

// n x d matrix of i.i.d. standard normal entries.
SampleMatrix sample_standard_normal(long n, int d, std::uint64_t seed);

// Entrywise mean + sigma * (standard normal draw with the same seed), so the
// sigma=1, mean=0 case coincides bit for bit with sample_standard_normal.
SampleMatrix sample_affine_normal(long n, int d, std::span<const double> mean, double sigma,
                                  std::uint64_t seed);

// Row mixture: with probability p an affine Gaussian row, otherwise an
// outlier row. The inner rows coincide bit for bit with the affine draw of
// the same seed, so p=1 reproduces sample_affine_normal exactly. Which rows
// were inner draws is recorded in inner_rows for test introspection.
SampleMatrix sample_containment(long n, int d, const ContainmentSpec& spec, std::uint64_t seed);

// Number of binary places kept by quantize: floor(log2(1/delta)).
int truncation_bits(double delta);

// Truncates every entry toward zero at b = truncation_bits(delta) binary
// places: xq = trunc(x * 2^b) / 2^b. The entrywise error is strictly below
// 2^-b (equal to delta when delta is a power of two).
SampleMatrix quantize(const SampleMatrix& m, double delta);

}  // namespace rss

#endif  // RSS_SAMPLER_HPP
