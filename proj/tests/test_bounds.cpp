#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "rss/bounds.hpp"
#include "rss/quadrature.hpp"
#include "rss/rng.hpp"

using namespace rss;

namespace {

// Quadrature oracle for P(N(0, sigma2 I_d) in B_inf(z, eps)): product of
// per-coordinate integrals of the density, no erf shortcut.
double box_prob_quadrature(int d, double sigma2, double epsilon, const std::vector<double>& z) {
  const double sigma = std::sqrt(sigma2);
  double prob = 1.0;
  for (int j = 0; j < d; ++j) {
    const double p = integrate_adaptive(
        [&](double x) { return normal_pdf(x, 0.0, sigma); }, z[static_cast<std::size_t>(j)] - epsilon,
        z[static_cast<std::size_t>(j)] + epsilon, 1e-14, 32);
    prob *= p;
  }
  return prob;
}

}  // namespace

TEST_CASE("log2 add/sub helpers") {
  CHECK(log2_add(0.0, 0.0) == doctest::Approx(1.0));            // 1 + 1 = 2
  CHECK(log2_add(3.0, kNegInf) == 3.0);
  CHECK(log2_sub(1.0, 0.0) == doctest::Approx(0.0));            // 2 - 1 = 1
  CHECK(log2_sub(0.0, 0.0) == kNegInf);
  CHECK(log2_add(-1074.0, -1074.0) == doctest::Approx(-1073.0));
}

TEST_CASE("cube probability bounds match the frozen example") {
  const auto b = log_cube_prob_bounds(1, 1.0, 0.1);
  CHECK(b.upper == doctest::Approx(-3.64767615962).epsilon(1e-9));
  CHECK(b.lower == doctest::Approx(-6.5330662414).epsilon(1e-9));
}

TEST_CASE("cube bounds sandwich the quadrature oracle at z in {0, +-1}") {
  for (const double sigma2 : {1.0, 2.0, 9.0}) {
    for (const double eps : {0.1, 0.4}) {
      const auto b = log_cube_prob_bounds(1, sigma2, eps);
      for (const double z : {0.0, 1.0, -1.0}) {
        const double p = box_prob_quadrature(1, sigma2, eps, {z});
        CHECK(std::exp2(b.lower) <= p * (1.0 + 1e-12));
        CHECK(p <= std::exp2(b.upper) * (1.0 + 1e-12));
      }
    }
  }
  // d = 2 at a corner target
  const auto b2 = log_cube_prob_bounds(2, 4.0, 0.3);
  const double p2 = box_prob_quadrature(2, 4.0, 0.3, {1.0, -1.0});
  CHECK(std::exp2(b2.lower) <= p2);
  CHECK(p2 <= std::exp2(b2.upper));
}

TEST_CASE("cube bounds tensorize over dimensions") {
  const auto b1 = log_cube_prob_bounds(1, 3.0, 0.2);
  const auto b2 = log_cube_prob_bounds(2, 3.0, 0.2);
  CHECK(b2.upper == doctest::Approx(2.0 * b1.upper).epsilon(1e-12));
  CHECK(b2.lower == doctest::Approx(2.0 * b1.lower).epsilon(1e-12));
}

TEST_CASE("doubling epsilon adds exactly d to both log2 bounds") {
  for (const int d : {1, 3}) {
    const auto a = log_cube_prob_bounds(d, 5.0, 0.1);
    const auto b = log_cube_prob_bounds(d, 5.0, 0.2);
    CHECK(b.upper - a.upper == doctest::Approx(static_cast<double>(d)).epsilon(1e-12));
    CHECK(b.lower - a.lower == doctest::Approx(static_cast<double>(d)).epsilon(1e-12));
  }
}

TEST_CASE("expectation bounds reduce and shift correctly") {
  const ProblemParams p{1, 729, 0.5, 1.0 / 6.0};
  const auto single = log_expectation_bounds(p, 0.0);
  const auto cube = log_cube_prob_bounds(1, 121.0, 0.5);
  CHECK(single.upper == cube.upper);
  CHECK(single.lower == cube.lower);

  const auto at64 = log_expectation_bounds(p, 6.0);
  CHECK(at64.upper == doctest::Approx(1.21482031663).epsilon(1e-9));
  const auto at128 = log_expectation_bounds(p, 7.0);
  CHECK(at128.upper - at64.upper == doctest::Approx(1.0));
  CHECK(at128.lower - at64.lower == doctest::Approx(1.0));
}

TEST_CASE("joint upper bound matches the frozen example and its hypotheses") {
  const ProblemParams p{1, 729, 0.5, 1.0 / 6.0};
  const auto ju = log_joint_upper(p);
  CHECK(ju.log2_value == doctest::Approx(-9.49134613236).epsilon(1e-9));
  CHECK(ju.hypothesis.satisfied);

  const ProblemParams small{1, 100, 0.5, 1.0 / 6.0};  // n < 81/(alpha(1-2alpha)) = 729
  const auto bad = log_joint_upper(small);
  CHECK_FALSE(bad.hypothesis.satisfied);
  CHECK(bad.hypothesis.failed_conditions.size() == 1);
  CHECK(std::isfinite(bad.log2_value));  // still computed for exploration
}

TEST_CASE("joint upper tends to twice the single-subset bound as alpha -> 0") {
  const ProblemParams p{1, 10000000, 0.5, 1e-3};
  const auto ju = log_joint_upper(p);
  const auto cube = log_cube_prob_bounds(1, p.alpha * static_cast<double>(p.n), p.epsilon);
  CHECK(std::abs(ju.log2_value - 2.0 * cube.upper) < 1e-4);
}

TEST_CASE("joint upper dominates twice the single-subset lower bound") {
  for (const int d : {1, 2, 3}) {
    for (const double alpha : {0.1, 1.0 / 6.0}) {
      for (const double eps : {0.1, 0.5}) {
        const long n = static_cast<long>(std::ceil(81.0 / (alpha * (1 - 2 * alpha)))) + 50;
        const ProblemParams p{d, n, eps, alpha};
        const auto ju = log_joint_upper(p);
        const auto cube = log_cube_prob_bounds(d, static_cast<double>(p.subset_size()), eps);
        CHECK(ju.log2_value >= 2.0 * cube.lower);
      }
    }
  }
}

TEST_CASE("joint lower bound matches the frozen example") {
  const ProblemParams p{1, 33, 0.3, 1.0 / 6.0};
  const auto jl = log_joint_lower(p);
  CHECK(jl.log2_value == doctest::Approx(-7.36675667187).epsilon(1e-9));
  CHECK(jl.hypothesis.satisfied);
}

TEST_CASE("joint lower tends to twice the single-subset upper bound as alpha -> 0") {
  const ProblemParams p{1, 10000000, 0.5, 1e-3};
  const auto jl = log_joint_lower(p);
  const auto cube = log_cube_prob_bounds(1, p.alpha * static_cast<double>(p.n), p.epsilon);
  CHECK(std::abs(jl.log2_value - 2.0 * cube.upper) < 1e-3);
}

TEST_CASE("joint lower stays below joint upper when both hypotheses hold") {
  for (const int d : {1, 2, 3}) {
    for (const double alpha : {0.1, 1.0 / 6.0}) {
      for (const double eps : {0.1, 0.5}) {
        const long n = static_cast<long>(std::ceil(81.0 / (alpha * (1 - 2 * alpha)))) + 11;
        const ProblemParams p{d, n, eps, alpha};
        const auto ju = log_joint_upper(p);
        const auto jl = log_joint_lower(p);
        REQUIRE(ju.hypothesis.satisfied);
        REQUIRE(jl.hypothesis.satisfied);
        CHECK(jl.log2_value <= ju.log2_value);
      }
    }
  }
}

TEST_CASE("wide-range joint lower switches the exponent") {
  const ProblemParams p{1, 100, 0.3, 1.0 / 6.0};
  const double halfwidth = 2.0 * std::sqrt(100.0);  // lambda = 2
  const auto wide = log_joint_lower(p, halfwidth);
  const double lambda = 2.0;
  const double expected = 2.0 * std::log2(2.0 * p.epsilon) -
                          std::log2(2.0 * std::numbers::pi * p.alpha * 100.0) -
                          0.5 * std::log2(1.0 - p.alpha * p.alpha / 4.0) -
                          (3.0 * lambda * lambda / p.alpha) * std::numbers::log2e;
  CHECK(wide.log2_value == doctest::Approx(expected).epsilon(1e-12));
  CHECK(wide.hypothesis.satisfied);

  // halfwidth below sqrt(n) violates the wide-range hypothesis
  const auto bad = log_joint_lower(p, 5.0);
  CHECK_FALSE(bad.hypothesis.satisfied);
}

TEST_CASE("variance bound: frozen value, single-subset reduction, monotonicity") {
  const ProblemParams p{1, 729, 0.5, 1.0 / 6.0};
  const auto v = log_variance_upper(p, 6.0);
  CHECK_FALSE(v.degenerate_bracket);
  CHECK(v.log2_value == doctest::Approx(1.4934262855468).epsilon(1e-9));

  // |C| = 1: the pair sum is empty, only the Bernoulli term remains, and it
  // is bounded by the single-subset upper probability
  const auto v1 = log_variance_upper(p, 0.0);
  const auto cube = log_cube_prob_bounds(1, static_cast<double>(p.subset_size()), p.epsilon);
  const double single_term = std::log2(2.0 * p.epsilon) -
                             0.5 * std::log2(2.0 * std::numbers::pi * p.alpha * 729.0);
  CHECK(v1.log2_value == doctest::Approx(single_term).epsilon(1e-12));
  CHECK(v1.log2_value <= cube.upper);

  double prev = -1e300;
  for (const double eps : {0.05, 0.1, 0.2, 0.4, 0.8}) {
    const ProblemParams q{1, 729, eps, 1.0 / 6.0};
    const auto ve = log_variance_upper(q, 6.0);
    CHECK(ve.log2_value >= prev);
    prev = ve.log2_value;
  }
}

TEST_CASE("chebyshev check at the threshold scale") {
  const ProblemParams p{1, 18585, 0.5, 1.0 / 6.0};
  const auto c = chebyshev_check(p, 87.0);
  CHECK(c.required_n == 18585);
  CHECK(c.required_log2_family_size == doctest::Approx(86.0417).epsilon(1e-4));
  CHECK(c.guaranteed);

  const auto too_small_family = chebyshev_check(p, 80.0);
  CHECK_FALSE(too_small_family.guaranteed);

  const ProblemParams short_n{1, 18584, 0.5, 1.0 / 6.0};
  CHECK_FALSE(chebyshev_check(short_n, 87.0).guaranteed);
}

TEST_CASE("chebyshev check names the failed condition") {
  const ProblemParams p{1, 100000, 0.5, 0.2};
  const auto c = chebyshev_check(p, 1000.0);
  CHECK_FALSE(c.guaranteed);
  REQUIRE_FALSE(c.hypothesis.failed_conditions.empty());
  CHECK(c.hypothesis.failed_conditions.front() == "alpha <= 1/(6*sqrt(d))");
}

TEST_CASE("required sample sizes and failure probability") {
  CHECK(kDefaultC == doctest::Approx(246.169675).epsilon(1e-6));
  CHECK(required_n_single(1, 1.0 / 6.0, 0.5) == 18585);
  CHECK(required_n_full(1, 1.0 / 6.0, 0.5) == 31771);

  double prev = 1e300;
  for (long n = 1000; n <= 64000; n *= 2) {
    const double f = failure_log2_prob(n, 1, 1.0 / 6.0, 0.5);
    CHECK(f < prev);
    prev = f;
  }
}

TEST_CASE("main-form requirement instantiates alpha = 1/(6 sqrt(d))") {
  const auto main1 = required_n_main(1, 0.5);
  CHECK(main1.n == required_n_full(1, 1.0 / 6.0, 0.5));
  CHECK(main1.leading_constant == doctest::Approx(36.0 * kDefaultC));
  CHECK(main1.subset_size == static_cast<long long>(std::floor(main1.n / 6.0)));

  // the d^3 leading factor: reconstruct the bound from the d^3 form
  for (const int d : {2, 3, 5}) {
    const double alpha = 1.0 / (6.0 * std::sqrt(static_cast<double>(d)));
    const double le = std::log2(2.0);  // epsilon = 1/2
    const double sum = le + std::log2(static_cast<double>(d)) + std::log2(1.0 / alpha);
    const double direct = 36.0 * kDefaultC * d * d * d * le * sum;
    const auto got = required_n_main(d, 0.5);
    CHECK(static_cast<double>(got.n) == doctest::Approx(direct).epsilon(1e-9));
  }

  // squaring the epsilon exponent roughly quadruples the requirement
  const double ratio = static_cast<double>(required_n_main(1, std::exp2(-80)).n) /
                       static_cast<double>(required_n_main(1, std::exp2(-40)).n);
  CHECK(ratio > 3.7);
  CHECK(ratio < 4.0);
}

TEST_CASE("generalized target range") {
  const ProblemParams p{1, 612, 0.5, 1.0 / 6.0};
  const auto r = generalized_range(p, 1.0, {});
  CHECK(r.lambda == doctest::Approx(0.04950737715).epsilon(1e-9));
  CHECK(r.halfwidth == doctest::Approx(0.5 * std::sqrt(6.0)).epsilon(1e-12));
  CHECK(r.center_shift == std::vector<double>{0.0});

  const std::vector<double> mean{2.0};
  const auto shifted = generalized_range(p, 1.0, mean);
  CHECK(shifted.center_shift[0] == doctest::Approx(static_cast<double>(p.subset_size()) * 2.0));

  // containment with p=1 equals the affine case at half the sample count
  const auto cont = generalized_range_containment(p, 1.0, mean, 1.0);
  const ProblemParams half{1, 306, 0.5, 1.0 / 6.0};
  const auto affine_half = generalized_range(half, 1.0, mean);
  CHECK(cont.halfwidth == doctest::Approx(affine_half.halfwidth));
  CHECK(cont.subset_size == affine_half.subset_size);
}

TEST_CASE("discrete error bound") {
  CHECK(discrete_error_bound(9, 0.05) == doctest::Approx(1.0));
  CHECK(discrete_error_bound(0, 0.3) == doctest::Approx(0.6));
}

TEST_CASE("log-space values agree with direct linear evaluation to 1e-10") {
  Xoshiro256pp rng(404);
  for (int rep = 0; rep < 200; ++rep) {
    const int d = 1 + static_cast<int>(rng.next_below(4));
    const double alpha = 0.05 + 0.11 * rng.next_double();
    const long n = 700 + static_cast<long>(rng.next_below(2000));
    const double eps = 0.05 + 0.9 * rng.next_double();
    const ProblemParams p{d, n, eps, alpha};
    const double an = alpha * static_cast<double>(n);
    const double tau = 2.0 * std::numbers::pi;

    const auto cube = log_cube_prob_bounds(d, an, eps);
    const double lin_upper = std::pow(2.0 * eps, d) / std::pow(tau * an, 0.5 * d);
    CHECK(std::exp2(cube.upper) == doctest::Approx(lin_upper).epsilon(1e-10));
    CHECK(std::exp2(cube.lower) ==
          doctest::Approx(lin_upper * std::exp(-2.0 * d / an)).epsilon(1e-10));

    const auto ju = log_joint_upper(p);
    const double lin_joint = std::pow(2.0 * eps, 2 * d) / std::pow(tau * an, d) *
                             std::pow(1.0 - 4.0 * alpha * alpha, -0.5 * d);
    CHECK(std::exp2(ju.log2_value) == doctest::Approx(lin_joint).epsilon(1e-10));

    const double lfs = 1.0 + 9.0 * rng.next_double();
    const auto vb = log_variance_upper(p, lfs);
    const double size = std::exp2(lfs);
    const double bracket = std::pow(1.0 - 4.0 * alpha * alpha, -0.5 * d) -
                           std::exp(-4.0 * d / an);
    const double lin_var = std::pow(2.0 * eps, 2 * d) * size * size / std::pow(tau * an, d) *
                               bracket +
                           std::pow(2.0 * eps, d) * size / std::pow(tau * an, 0.5 * d);
    if (!vb.degenerate_bracket) {
      CHECK(std::exp2(vb.log2_value) == doctest::Approx(lin_var).epsilon(1e-10));
    }
  }
}

TEST_CASE("bound report carries entries, scales and flags") {
  const ProblemParams p{1, 729, 0.5, 1.0 / 6.0};
  const auto rep = make_bound_report(p, 6.0);
  CHECK(rep.entries.at("expectation_upper").log2_scale);
  CHECK_FALSE(rep.entries.at("required_n_single").log2_scale);
  CHECK(rep.entries.at("required_n_single").value == 18585.0);
  CHECK(rep.entries.at("subset_size").value == 121.0);
  CHECK(rep.entries.at("intersection_cap").value == 40.0);
  CHECK(rep.hypothesis_flags.at("joint_upper").satisfied);
  CHECK(rep.entries.at("expectation_lower").value <= rep.entries.at("expectation_upper").value);
}
