#include "rss/core.hpp"

#include <algorithm>
#include <cmath>

namespace rss {

std::vector<ParamIssue> ProblemParams::validate(int d, long n, double epsilon, double alpha) {
  std::vector<ParamIssue> issues;
  if (d < 1) issues.push_back({"d", "dimension must be a positive integer"});
  if (n < 1) issues.push_back({"n", "sample count must be a positive integer"});
  if (!(epsilon > 0.0 && epsilon < 1.0)) issues.push_back({"epsilon", "must lie in (0, 1)"});
  if (!(alpha > 0.0 && alpha < 0.5)) issues.push_back({"alpha", "must lie in (0, 1/2)"});
  if (issues.empty()) {
    const long subset = static_cast<long>(std::floor(alpha * static_cast<double>(n)));
    if (subset < 1) issues.push_back({"alpha", "floor(alpha*n) must be at least 1"});
  }
  return issues;
}

ProblemParams ProblemParams::checked(int d, long n, double epsilon, double alpha) {
  const auto issues = validate(d, n, epsilon, alpha);
  if (!issues.empty()) {
    throw std::invalid_argument("invalid parameter '" + issues.front().field +
                                "': " + issues.front().reason);
  }
  return ProblemParams{d, n, epsilon, alpha};
}

std::vector<ParamIssue> Target::validate() const {
  std::vector<ParamIssue> issues;
  const double h = range == TargetRange::unit_cube ? 1.0 : halfwidth;
  if (range == TargetRange::lambda_range && !(halfwidth > 0.0)) {
    issues.push_back({"halfwidth", "must be positive"});
    return issues;
  }
  if (!shift.empty() && shift.size() != z.size()) {
    issues.push_back({"shift", "dimension mismatch with z"});
    return issues;
  }
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double c = shift.empty() ? 0.0 : shift[i];
    if (!(std::abs(z[i] - c) <= h)) {
      issues.push_back({"z", "coordinate " + std::to_string(i) + " outside declared range"});
      break;
    }
  }
  return issues;
}

double linf_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("linf_distance: dimension mismatch (" + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()) + ")");
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

std::vector<ParamIssue> ContainmentSpec::validate(int d) const {
  std::vector<ParamIssue> issues;
  if (!(p > 0.0 && p <= 1.0)) issues.push_back({"p", "must lie in (0, 1]"});
  if (!(inner_sigma > 0.0)) issues.push_back({"inner_sigma", "must be positive"});
  if (!inner_mean.empty() && inner_mean.size() != static_cast<std::size_t>(d)) {
    issues.push_back({"inner_mean", "dimension mismatch"});
  }
  if (!std::isfinite(outlier_scale)) issues.push_back({"outlier_scale", "must be finite"});
  if (outlier == OutlierKind::point_mass) {
    if (outlier_point.size() != static_cast<std::size_t>(d)) {
      issues.push_back({"outlier_point", "dimension mismatch"});
    }
  } else if (!(outlier_scale > 0.0)) {
    issues.push_back({"outlier_scale", "must be positive"});
  }
  return issues;
}

}  // namespace rss
