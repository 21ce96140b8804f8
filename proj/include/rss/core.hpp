// Shared domain types: problem parameters, targets, sample matrices, and
// max-norm geometry helpers. All types are immutable value types once built
// and safe to share across threads.

#ifndef RSS_CORE_HPP
#define RSS_CORE_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rss {

// One reason a parameter tuple was rejected, machine readable.
struct ParamIssue {
  std::string field;
  std::string reason;
};

// Parameter tuple (d, n, epsilon, alpha) for a subset-sum approximation
// instance. Derived integer quantities are recomputed on every call, never
// stored, so they cannot go stale.
struct ProblemParams {
  int d = 1;
  long n = 1;
  double epsilon = 0.5;
  double alpha = 1.0 / 6.0;

  // floor(alpha * n): the common size of every subset in a family.
  long subset_size() const { return static_cast<long>(std::floor(alpha * static_cast<double>(n))); }

  // floor(2 * alpha^2 * n): the pairwise intersection cap for families.
  long intersection_cap() const {
    return static_cast<long>(std::floor(2.0 * alpha * alpha * static_cast<double>(n)));
  }

  // Validates the tuple; empty result means valid.
  static std::vector<ParamIssue> validate(int d, long n, double epsilon, double alpha);

  // Validating factory; throws std::invalid_argument naming the first bad field.
  static ProblemParams checked(int d, long n, double epsilon, double alpha);
};

enum class TargetRange { unit_cube, lambda_range };

// A point to approximate, together with the box it is declared to lie in.
struct Target {
  std::vector<double> z;
  TargetRange range = TargetRange::unit_cube;
  double halfwidth = 1.0;      // lambda_range only
  std::vector<double> shift;   // optional center shift, lambda_range only

  std::vector<ParamIssue> validate() const;
};

// Chebyshev distance. Throws std::invalid_argument on dimension mismatch.
double linf_distance(std::span<const double> a, std::span<const double> b);

enum class DistKind { standard_normal, affine_normal, containment, quantized };
enum class OutlierKind { uniform_box, point_mass, heavy_tail };

// Mixture distribution whose density dominates p times an affine Gaussian:
// each row is an inner N(inner_mean, inner_sigma^2 I) draw with probability p,
// otherwise an outlier draw from the selected family.
struct ContainmentSpec {
  double p = 1.0;
  std::vector<double> inner_mean;  // empty means origin
  double inner_sigma = 1.0;
  OutlierKind outlier = OutlierKind::uniform_box;
  double outlier_scale = 1.0;        // box halfwidth or heavy-tail scale
  std::vector<double> outlier_point; // point_mass location

  std::vector<ParamIssue> validate(int d) const;
};

// Provenance of a sample matrix: which distribution produced it and with
// which parameters. `kind` is the discriminant; the other fields are only
// meaningful for the kinds that use them.
struct DistributionTag {
  DistKind kind = DistKind::standard_normal;
  std::vector<double> mean;  // affine_normal
  double sigma = 1.0;        // affine_normal
  ContainmentSpec containment;
  DistKind source_kind = DistKind::standard_normal;  // quantized
  double delta = 0.0;                                // quantized
};

// n x d row-major sample with recorded seed and provenance. Regenerating
// with the same seed and tag reproduces identical values bit for bit.
struct SampleMatrix {
  long n = 0;
  int d = 0;
  std::uint64_t seed = 0;
  DistributionTag tag;
  std::vector<double> values;       // n * d, row major
  std::vector<std::uint8_t> inner_rows;  // containment only: 1 = inner draw

  const double* row(long i) const { return values.data() + static_cast<std::size_t>(i) * d; }
  double at(long i, int j) const { return values[static_cast<std::size_t>(i) * d + j]; }
  std::span<const double> row_span(long i) const { return {row(i), static_cast<std::size_t>(d)}; }
};

}  // namespace rss

#endif  // RSS_CORE_HPP
