#include "rss/sampler.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rss/rng.hpp"

namespace rss {

namespace {

// Derived-stream ids for containment sampling. The inner Gaussian entries
// come from the bare seed so that p=1 reproduces the affine draw exactly.
constexpr std::uint64_t kMaskStream = 1;
constexpr std::uint64_t kOutlierStream = 2;

void fill_standard_normal(std::vector<double>& out, std::uint64_t seed) {
  GaussianSampler g(seed);
  for (auto& v : out) v = g.next();
}

void outlier_row(double* row, int d, const ContainmentSpec& spec, GaussianSampler& g) {
  switch (spec.outlier) {
    case OutlierKind::uniform_box:
      for (int j = 0; j < d; ++j) row[j] = (2.0 * g.uniform() - 1.0) * spec.outlier_scale;
      break;
    case OutlierKind::point_mass:
      for (int j = 0; j < d; ++j) row[j] = spec.outlier_point[j];
      break;
    case OutlierKind::heavy_tail:
      // Cauchy with the given scale.
      for (int j = 0; j < d; ++j) {
        row[j] = spec.outlier_scale * std::tan(std::numbers::pi * (g.uniform() - 0.5));
      }
      break;
  }
}

}  // namespace

SampleMatrix sample_standard_normal(long n, int d, std::uint64_t seed) {
  if (n < 1 || d < 1) throw std::invalid_argument("sample_standard_normal: n and d must be >= 1");
  SampleMatrix m;
  m.n = n;
  m.d = d;
  m.seed = seed;
  m.tag.kind = DistKind::standard_normal;
  m.values.resize(static_cast<std::size_t>(n) * d);
  fill_standard_normal(m.values, seed);
  return m;
}

SampleMatrix sample_affine_normal(long n, int d, std::span<const double> mean, double sigma,
                                  std::uint64_t seed) {
  if (!(sigma > 0.0)) throw std::invalid_argument("sample_affine_normal: sigma must be positive");
  if (!mean.empty() && mean.size() != static_cast<std::size_t>(d)) {
    throw std::invalid_argument("sample_affine_normal: mean dimension mismatch");
  }
  SampleMatrix m = sample_standard_normal(n, d, seed);
  m.tag.kind = DistKind::affine_normal;
  m.tag.sigma = sigma;
  m.tag.mean.assign(mean.begin(), mean.end());
  if (m.tag.mean.empty()) m.tag.mean.assign(d, 0.0);
  for (long i = 0; i < n; ++i) {
    double* row = m.values.data() + static_cast<std::size_t>(i) * d;
    for (int j = 0; j < d; ++j) row[j] = m.tag.mean[j] + sigma * row[j];
  }
  return m;
}

SampleMatrix sample_containment(long n, int d, const ContainmentSpec& spec, std::uint64_t seed) {
  const auto issues = spec.validate(d);
  if (!issues.empty()) {
    throw std::invalid_argument("sample_containment: invalid spec field '" + issues.front().field +
                                "': " + issues.front().reason);
  }
  std::vector<double> mean = spec.inner_mean;
  if (mean.empty()) mean.assign(d, 0.0);
  SampleMatrix m = sample_affine_normal(n, d, mean, spec.inner_sigma, seed);
  m.tag.kind = DistKind::containment;
  m.tag.containment = spec;
  m.inner_rows.assign(n, 1);

  Xoshiro256pp mask_rng(derive_seed(seed, kMaskStream));
  const std::uint64_t outlier_base = derive_seed(seed, kOutlierStream);
  for (long i = 0; i < n; ++i) {
    if (mask_rng.next_double() < spec.p) continue;
    m.inner_rows[i] = 0;
    GaussianSampler g(derive_seed(outlier_base, static_cast<std::uint64_t>(i)));
    outlier_row(m.values.data() + static_cast<std::size_t>(i) * d, d, spec, g);
  }
  return m;
}

int truncation_bits(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
  return static_cast<int>(std::floor(std::log2(1.0 / delta)));
}

SampleMatrix quantize(const SampleMatrix& m, double delta) {
  const int b = truncation_bits(delta);
  const double scale = std::exp2(b);
  SampleMatrix q = m;
  q.tag = DistributionTag{};
  q.tag.kind = DistKind::quantized;
  q.tag.source_kind = m.tag.kind;
  q.tag.delta = delta;
  for (auto& v : q.values) v = std::trunc(v * scale) / scale;
  return q;
}

}  // namespace rss
