// Monte Carlo harness: estimates the probabilistic quantities that the
// bounds module bounds, with confidence intervals and verdicts, plus the
// numeric spot checks of the auxiliary inequalities.
//
// Every estimate carries stderr and a CI halfwidth of 4 standard errors;
// verdicts always compare CI-adjusted estimates against bounds, never raw
// point estimates. Experiment output is a pure function of (parameters,
// seed), independent of the worker count.

#ifndef RSS_EXPERIMENTS_HPP
#define RSS_EXPERIMENTS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rss/bounds.hpp"
#include "rss/core.hpp"
#include "rss/family.hpp"
#include "rss/search.hpp"

namespace rss {

enum class Verdict { within, above_upper, below_lower, hypotheses_unmet };

std::string verdict_name(Verdict v);

struct TrialSummary {
  std::string experiment;
  std::map<std::string, double> params;
  long trials = 0;
  double estimate = 0.0;
  double std_error = 0.0;
  double ci_halfwidth = 0.0;  // 4 * std_error
  std::optional<double> bound_lower;  // linear scale
  std::optional<double> bound_upper;  // linear scale
  Verdict verdict = Verdict::within;
};

// Frequency of a size-subset_size Gaussian subset sum landing in
// B_inf(z, epsilon), sampled directly as N(0, subset_size * I_d); verdict
// against the cube probability bounds at sigma2 = subset_size.
TrialSummary estimate_single_subset_prob(int d, long subset_size, double epsilon,
                                         std::span<const double> z, long trials,
                                         std::uint64_t seed, int workers = 1);

// Resamples the full matrix per trial and counts family hits; returns
// (mean summary vs the expectation sandwich, variance summary vs the
// variance upper bound).
std::pair<TrialSummary, TrialSummary> estimate_moments(const ProblemParams& p,
                                                       const SubsetFamily& fam,
                                                       std::span<const double> z, long trials,
                                                       std::uint64_t seed, int workers = 1);

// Joint hit frequency of two subsets with the given intersection size,
// sampled via the decomposition into shared and disjoint Gaussian parts
// (sigma_shared^2 = intersection, sigma_own^2 = subset_size - intersection).
// Verdict against the joint upper bound when intersection equals the cap,
// against the joint lower bound when it equals ceil(alpha^2 n / 2).
TrialSummary estimate_joint_prob(int d, long n, double alpha, double epsilon, long intersection,
                                 std::span<const double> z, long trials, std::uint64_t seed,
                                 int workers = 1);

// Frequency of full grid coverage over fresh matrices.
TrialSummary estimate_coverage_prob(const ProblemParams& p, Engine engine, long trials,
                                    std::uint64_t seed, const CoverOptions& opts = {},
                                    int workers = 1);

enum class SweepAxis { n, epsilon, alpha, d };
enum class SweepExperiment { coverage, single_subset };

SweepAxis sweep_axis_from_name(const std::string& name);

// Runs one experiment per grid value along the chosen axis, with derived
// seeds; output ordered as the grid.
std::vector<TrialSummary> sweep(SweepAxis axis, std::span<const double> grid,
                                const ProblemParams& base, long trials, std::uint64_t seed,
                                SweepExperiment experiment = SweepExperiment::coverage,
                                std::optional<Engine> engine = std::nullopt, int workers = 1);

struct ClaimCheckReport {
  std::string claim_id;
  long draws = 0;
  long violations = 0;
  double worst_margin = 0.0;  // max relative excess of LHS over RHS (negative = slack)
  std::map<std::string, std::pair<double, double>> parameter_ranges;
};

// Checks the auxiliary inequalities on random hypothesis-respecting draws,
// by direct formula evaluation or adaptive quadrature. A violation is a
// relative excess beyond 1e-9.
std::vector<ClaimCheckReport> verify_appendix_claims(long draws, std::uint64_t seed,
                                                     int quadrature_points = 32, int workers = 1);

}  // namespace rss

#endif  // RSS_EXPERIMENTS_HPP
