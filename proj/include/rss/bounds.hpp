// Closed-form bounds on subset-sum hit probabilities, moments of the hit
// count, success guarantees and required sample sizes, evaluated in log2
// space (probabilities) or linear scale (sample sizes, error bounds).
//
// Hypothesis violations never abort evaluation: every conditional bound is
// returned together with a hypothesis check so that out-of-regime parameter
// sweeps stay possible.

#ifndef RSS_BOUNDS_HPP
#define RSS_BOUNDS_HPP

#include <cmath>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rss/core.hpp"

namespace rss {

// Proof-derived default for the universal constant in the sample-size bound.
inline const double kDefaultC = 144.0 / std::log2(1.5);

// Constants of the wide-range generalisation (they are pinned separately
// from kDefaultC; the two bounds use different amplification bookkeeping).
inline const double kGeneralizedC = 17.0 * 144.0;
inline const double kGeneralizedDelta = 288.0 / std::log2(1.5);

struct LogBoundPair {
  double lower;  // log2
  double upper;  // log2
};

struct HypothesisFlag {
  bool satisfied = true;
  double margin = 0.0;  // min relative slack over the conditions; negative if violated
  std::vector<std::string> failed_conditions;
};

struct LogBoundValue {
  double log2_value;
  HypothesisFlag hypothesis;
};

// Bounds on P(X in B_inf(z, epsilon)) for X ~ N(0, sigma2*I_d), valid for
// every z in [-1,1]^d:
//   upper = d*log2(2 eps) - (d/2)*log2(2 pi sigma2)
//   lower = upper - (2d/sigma2)*log2(e)
LogBoundPair log_cube_prob_bounds(int d, double sigma2, double epsilon);

// Expectation sandwich for the family hit count: cube bounds at
// sigma2 = subset_size, shifted by log2_family_size.
LogBoundPair log_expectation_bounds(const ProblemParams& p, double log2_family_size);

// Upper bound on the joint hit probability of two subsets at the
// intersection cap:
//   2d*log2(2 eps) - d*log2(2 pi alpha n) - (d/2)*log2(1 - 4 alpha^2)
// Hypotheses: alpha <= 1/6 and n >= 81/(alpha(1-2alpha)).
LogBoundValue log_joint_upper(const ProblemParams& p);

// Lower bound on the joint hit probability at intersection ceil(alpha^2*n/2):
//   2d*log2(2 eps) - d*log2(2 pi alpha n) - (d/2)*log2(1 - alpha^2/4)
//     - (3d/(alpha n))*log2(e)
// With range_halfwidth > 1 the last exponent becomes -3*lambda^2*d/alpha for
// lambda = range_halfwidth/sqrt(n). Hypotheses: alpha < 1/2 and
// n >= 10/(alpha(2-alpha)); the wide-range form further expects lambda > 1.
LogBoundValue log_joint_lower(const ProblemParams& p,
                              std::optional<double> range_halfwidth = std::nullopt);

struct VarianceBound {
  double log2_value;
  bool degenerate_bracket = false;  // bracket underflowed to <= 0
  HypothesisFlag hypothesis;
};

// Variance upper bound: log-sum-exp of the pair term
//   (2 eps)^{2d} |C|^2 / (2 pi alpha n)^d * [(1-4a^2)^{-d/2} - e^{-4d/(an)}]
// and the single-subset term (2 eps)^d |C| / (2 pi alpha n)^{d/2}, with the
// bracket computed as a stable log-space difference.
VarianceBound log_variance_upper(const ProblemParams& p, double log2_family_size);

struct ChebyshevCheck {
  bool guaranteed = false;
  long long required_n = 0;                 // ceil of the sample-size condition
  double required_log2_family_size = 0.0;   // alpha^2*n/6
  HypothesisFlag hypothesis;
};

// Conditions under which P(at least one family member hits) >= 1/3:
// alpha <= 1/(6 sqrt(d)), log2|C| >= alpha^2 n/6, pairwise intersections
// within the cap (assumed, not checked here), and
// n >= 144 d / alpha^2 * (log2(1/eps) + log2 d + log2(1/alpha)).
ChebyshevCheck chebyshev_check(const ProblemParams& p, double log2_family_size);

// The sample-size threshold of the single-target guarantee (ceil).
long long required_n_single(int d, double alpha, double epsilon);

// ceil(C * d^2/alpha^2 * log2(1/eps) * (log2(1/eps) + log2 d + log2(1/alpha)))
long long required_n_full(int d, double alpha, double epsilon, double C_const = kDefaultC);

// log2 of the probability that the all-targets coverage property fails:
//   d*log2(1/eps) - n / (C * (d/alpha^2) * (log2(1/eps)+log2 d+log2(1/alpha)))
double failure_log2_prob(long n, int d, double alpha, double epsilon, double C_const = kDefaultC);

struct MainRequirement {
  long long n = 0;
  double leading_constant = 0.0;  // 36*C: coefficient of d^3 log(1/eps)(log(1/eps)+...)
  long long subset_size = 0;      // floor(n / (6 sqrt(d)))
};

// required_n_full instantiated at alpha = 1/(6 sqrt(d)).
MainRequirement required_n_main(int d, double epsilon, double C_const = kDefaultC);

struct GeneralizedRange {
  double lambda = 0.0;       // (1/2) sqrt(alpha/(17 d))
  double halfwidth = 0.0;    // sigma * lambda * sqrt(n_effective)
  std::vector<double> center_shift;  // subset_size * mean vector
  long long subset_size = 0;
  double n_effective = 0.0;  // n, or p*n/2 for the containment variant
};

// Target-box geometry of the wide-range guarantee for affine Gaussian input.
GeneralizedRange generalized_range(const ProblemParams& p, double sigma,
                                   std::span<const double> mean);

// Containment variant: n replaced by p*n/2.
GeneralizedRange generalized_range_containment(const ProblemParams& p, double sigma,
                                               std::span<const double> mean, double containment_p);

// Worst-case max-norm error after quantizing inputs and target at delta=2eps.
double discrete_error_bound(long n, double epsilon);

struct BoundEntry {
  double value = 0.0;
  bool log2_scale = false;
};

struct BoundReport {
  ProblemParams params;
  double log2_family_size = 0.0;
  std::map<std::string, BoundEntry> entries;
  std::map<std::string, HypothesisFlag> hypothesis_flags;
};

// Evaluates every bound for one parameter tuple.
BoundReport make_bound_report(const ProblemParams& p, double log2_family_size,
                              double C_const = kDefaultC);

}  // namespace rss

#endif  // RSS_BOUNDS_HPP
