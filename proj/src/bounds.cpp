#include "rss/bounds.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

#include "rss/quadrature.hpp"

namespace rss {

namespace {

constexpr double kLog2E = std::numbers::log2e;
constexpr double kTau = 2.0 * std::numbers::pi;

// Relative slack of "value <= limit" (positive when satisfied).
double slack_le(double value, double limit) {
  return (limit - value) / std::max(std::abs(limit), 1e-300);
}

// Relative slack of "value >= limit".
double slack_ge(double value, double limit) { return slack_le(limit, value); }

void add_condition(HypothesisFlag& flag, const std::string& name, double slack) {
  flag.margin = std::min(flag.margin, slack);
  if (slack < 0.0) {
    flag.satisfied = false;
    flag.failed_conditions.push_back(name);
  }
}

HypothesisFlag make_flag() {
  HypothesisFlag f;
  f.margin = std::numeric_limits<double>::infinity();
  return f;
}

}  // namespace

LogBoundPair log_cube_prob_bounds(int d, double sigma2, double epsilon) {
  if (!(sigma2 > 0.0)) throw std::invalid_argument("log_cube_prob_bounds: sigma2 must be positive");
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("log_cube_prob_bounds: epsilon must lie in (0, 1)");
  }
  const double upper = d * std::log2(2.0 * epsilon) - 0.5 * d * std::log2(kTau * sigma2);
  const double lower = upper - (2.0 * d / sigma2) * kLog2E;
  return {lower, upper};
}

LogBoundPair log_expectation_bounds(const ProblemParams& p, double log2_family_size) {
  const auto cube = log_cube_prob_bounds(p.d, static_cast<double>(p.subset_size()), p.epsilon);
  return {cube.lower + log2_family_size, cube.upper + log2_family_size};
}

LogBoundValue log_joint_upper(const ProblemParams& p) {
  const double an = p.alpha * static_cast<double>(p.n);
  LogBoundValue out;
  out.hypothesis = make_flag();
  add_condition(out.hypothesis, "alpha <= 1/6", slack_le(p.alpha, 1.0 / 6.0));
  add_condition(out.hypothesis, "n >= 81/(alpha*(1-2*alpha))",
                slack_ge(static_cast<double>(p.n), 81.0 / (p.alpha * (1.0 - 2.0 * p.alpha))));
  out.log2_value = 2.0 * p.d * std::log2(2.0 * p.epsilon) - p.d * std::log2(kTau * an) -
                   0.5 * p.d * std::log2(1.0 - 4.0 * p.alpha * p.alpha);
  return out;
}

LogBoundValue log_joint_lower(const ProblemParams& p, std::optional<double> range_halfwidth) {
  const double an = p.alpha * static_cast<double>(p.n);
  LogBoundValue out;
  out.hypothesis = make_flag();
  add_condition(out.hypothesis, "alpha < 1/2", slack_le(p.alpha, 0.5));
  add_condition(out.hypothesis, "n >= 10/(alpha*(2-alpha))",
                slack_ge(static_cast<double>(p.n), 10.0 / (p.alpha * (2.0 - p.alpha))));
  double exponent_log2 = -(3.0 * p.d / an) * kLog2E;
  if (range_halfwidth && *range_halfwidth > 1.0) {
    const double lambda = *range_halfwidth / std::sqrt(static_cast<double>(p.n));
    add_condition(out.hypothesis, "range scale lambda > 1", slack_ge(lambda, 1.0));
    exponent_log2 = -(3.0 * lambda * lambda * p.d / p.alpha) * kLog2E;
  }
  out.log2_value = 2.0 * p.d * std::log2(2.0 * p.epsilon) - p.d * std::log2(kTau * an) -
                   0.5 * p.d * std::log2(1.0 - 0.25 * p.alpha * p.alpha) + exponent_log2;
  return out;
}

VarianceBound log_variance_upper(const ProblemParams& p, double log2_family_size) {
  const double an = p.alpha * static_cast<double>(p.n);
  VarianceBound out;
  out.hypothesis = make_flag();
  add_condition(out.hypothesis, "alpha <= 1/6", slack_le(p.alpha, 1.0 / 6.0));
  add_condition(out.hypothesis, "n >= 81/(alpha*(1-2*alpha))",
                slack_ge(static_cast<double>(p.n), 81.0 / (p.alpha * (1.0 - 2.0 * p.alpha))));

  const double bracket_hi = -0.5 * p.d * std::log2(1.0 - 4.0 * p.alpha * p.alpha);
  const double bracket_lo = -(4.0 * p.d / an) * kLog2E;
  const double bracket = log2_sub(bracket_hi, bracket_lo);
  const double pair_term = 2.0 * p.d * std::log2(2.0 * p.epsilon) + 2.0 * log2_family_size -
                           p.d * std::log2(kTau * an) + bracket;
  const double single_term = p.d * std::log2(2.0 * p.epsilon) + log2_family_size -
                             0.5 * p.d * std::log2(kTau * an);
  if (log2_family_size <= 0.0) {
    // single subset: the pair sum is empty
    out.log2_value = single_term;
  } else if (bracket == kNegInf) {
    out.degenerate_bracket = true;
    out.log2_value = single_term;
  } else {
    out.log2_value = log2_add(pair_term, single_term);
  }
  return out;
}

long long required_n_single(int d, double alpha, double epsilon) {
  const double sum_logs =
      std::log2(1.0 / epsilon) + std::log2(static_cast<double>(d)) + std::log2(1.0 / alpha);
  return static_cast<long long>(std::ceil(144.0 * d / (alpha * alpha) * sum_logs));
}

ChebyshevCheck chebyshev_check(const ProblemParams& p, double log2_family_size) {
  ChebyshevCheck out;
  out.hypothesis = make_flag();
  const double sum_logs =
      std::log2(1.0 / p.epsilon) + std::log2(static_cast<double>(p.d)) + std::log2(1.0 / p.alpha);
  const double n_threshold = 144.0 * p.d / (p.alpha * p.alpha) * sum_logs;
  out.required_n = static_cast<long long>(std::ceil(n_threshold));
  out.required_log2_family_size = p.alpha * p.alpha * static_cast<double>(p.n) / 6.0;

  add_condition(out.hypothesis, "alpha <= 1/(6*sqrt(d))",
                slack_le(p.alpha, 1.0 / (6.0 * std::sqrt(static_cast<double>(p.d)))));
  add_condition(out.hypothesis, "log2_family_size >= alpha^2*n/6",
                slack_ge(log2_family_size, out.required_log2_family_size));
  add_condition(out.hypothesis, "n >= 144*d/alpha^2*(log2(1/eps)+log2(d)+log2(1/alpha))",
                slack_ge(static_cast<double>(p.n), n_threshold));
  out.guaranteed = out.hypothesis.satisfied;
  return out;
}

long long required_n_full(int d, double alpha, double epsilon, double C_const) {
  if (!(C_const > 0.0)) throw std::invalid_argument("required_n_full: C_const must be positive");
  const double le = std::log2(1.0 / epsilon);
  const double sum_logs = le + std::log2(static_cast<double>(d)) + std::log2(1.0 / alpha);
  const double v = C_const * static_cast<double>(d) * d / (alpha * alpha) * le * sum_logs;
  return static_cast<long long>(std::ceil(v));
}

double failure_log2_prob(long n, int d, double alpha, double epsilon, double C_const) {
  const double le = std::log2(1.0 / epsilon);
  const double sum_logs = le + std::log2(static_cast<double>(d)) + std::log2(1.0 / alpha);
  return d * le - static_cast<double>(n) / (C_const * (d / (alpha * alpha)) * sum_logs);
}

MainRequirement required_n_main(int d, double epsilon, double C_const) {
  const double alpha = 1.0 / (6.0 * std::sqrt(static_cast<double>(d)));
  MainRequirement out;
  out.n = required_n_full(d, alpha, epsilon, C_const);
  out.leading_constant = 36.0 * C_const;
  out.subset_size = static_cast<long long>(
      std::floor(static_cast<double>(out.n) / (6.0 * std::sqrt(static_cast<double>(d)))));
  return out;
}

namespace {

GeneralizedRange range_impl(const ProblemParams& p, double sigma, std::span<const double> mean,
                            double n_effective) {
  if (!(sigma > 0.0)) throw std::invalid_argument("generalized_range: sigma must be positive");
  GeneralizedRange out;
  out.lambda = 0.5 * std::sqrt(p.alpha / (17.0 * static_cast<double>(p.d)));
  out.halfwidth = sigma * out.lambda * std::sqrt(n_effective);
  out.n_effective = n_effective;
  out.subset_size = static_cast<long long>(std::floor(p.alpha * n_effective));
  out.center_shift.assign(static_cast<std::size_t>(p.d), 0.0);
  for (std::size_t j = 0; j < mean.size() && j < out.center_shift.size(); ++j) {
    out.center_shift[j] = static_cast<double>(out.subset_size) * mean[j];
  }
  return out;
}

}  // namespace

GeneralizedRange generalized_range(const ProblemParams& p, double sigma,
                                   std::span<const double> mean) {
  return range_impl(p, sigma, mean, static_cast<double>(p.n));
}

GeneralizedRange generalized_range_containment(const ProblemParams& p, double sigma,
                                               std::span<const double> mean, double containment_p) {
  if (!(containment_p > 0.0 && containment_p <= 1.0)) {
    throw std::invalid_argument("generalized_range_containment: p must lie in (0, 1]");
  }
  return range_impl(p, sigma, mean, containment_p * static_cast<double>(p.n) / 2.0);
}

double discrete_error_bound(long n, double epsilon) {
  return 2.0 * epsilon * (static_cast<double>(n) + 1.0);
}

BoundReport make_bound_report(const ProblemParams& p, double log2_family_size, double C_const) {
  BoundReport r;
  r.params = p;
  r.log2_family_size = log2_family_size;

  const auto cube = log_cube_prob_bounds(p.d, static_cast<double>(p.subset_size()), p.epsilon);
  r.entries["cube_prob_lower"] = {cube.lower, true};
  r.entries["cube_prob_upper"] = {cube.upper, true};

  const auto expectation = log_expectation_bounds(p, log2_family_size);
  r.entries["expectation_lower"] = {expectation.lower, true};
  r.entries["expectation_upper"] = {expectation.upper, true};

  const auto ju = log_joint_upper(p);
  r.entries["joint_upper"] = {ju.log2_value, true};
  r.hypothesis_flags["joint_upper"] = ju.hypothesis;

  const auto jl = log_joint_lower(p);
  r.entries["joint_lower"] = {jl.log2_value, true};
  r.hypothesis_flags["joint_lower"] = jl.hypothesis;

  const auto var = log_variance_upper(p, log2_family_size);
  r.entries["variance_upper"] = {var.log2_value, true};
  r.hypothesis_flags["variance_upper"] = var.hypothesis;
  r.entries["variance_bracket_degenerate"] = {var.degenerate_bracket ? 1.0 : 0.0, false};

  const auto cheb = chebyshev_check(p, log2_family_size);
  r.entries["chebyshev_guaranteed"] = {cheb.guaranteed ? 1.0 : 0.0, false};
  r.entries["required_n_single"] = {static_cast<double>(cheb.required_n), false};
  r.entries["required_log2_family_size"] = {cheb.required_log2_family_size, true};
  r.hypothesis_flags["chebyshev"] = cheb.hypothesis;

  r.entries["required_n_full"] =
      {static_cast<double>(required_n_full(p.d, p.alpha, p.epsilon, C_const)), false};
  r.entries["failure_prob"] = {failure_log2_prob(p.n, p.d, p.alpha, p.epsilon, C_const), true};

  const auto main_req = required_n_main(p.d, p.epsilon, C_const);
  r.entries["required_n_main"] = {static_cast<double>(main_req.n), false};
  r.entries["main_subset_size"] = {static_cast<double>(main_req.subset_size), false};
  r.entries["main_leading_constant"] = {main_req.leading_constant, false};

  const auto range = generalized_range(p, 1.0, {});
  r.entries["generalized_lambda"] = {range.lambda, false};
  r.entries["generalized_halfwidth"] = {range.halfwidth, false};

  r.entries["discrete_error_bound"] = {discrete_error_bound(p.n, p.epsilon), false};
  r.entries["subset_size"] = {static_cast<double>(p.subset_size()), false};
  r.entries["intersection_cap"] = {static_cast<double>(p.intersection_cap()), false};
  return r;
}

}  // namespace rss
