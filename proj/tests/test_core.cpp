#include <doctest.h>

#include <cmath>
#include <vector>

#include "rss/core.hpp"
#include "rss/rng.hpp"

using namespace rss;

TEST_CASE("parameter validation rejects exactly the bad tuples") {
  CHECK(ProblemParams::validate(1, 100, 0.5, 0.1).empty());
  CHECK(ProblemParams::validate(0, 100, 0.5, 0.1).front().field == "d");
  CHECK(ProblemParams::validate(1, 0, 0.5, 0.1).front().field == "n");
  CHECK(ProblemParams::validate(1, 100, 0.0, 0.1).front().field == "epsilon");
  CHECK(ProblemParams::validate(1, 100, 1.0, 0.1).front().field == "epsilon");
  CHECK(ProblemParams::validate(1, 100, 0.5, 0.5).front().field == "alpha");
  CHECK(ProblemParams::validate(1, 100, 0.5, 0.0).front().field == "alpha");
  // floor(alpha*n) = 0
  CHECK(ProblemParams::validate(1, 5, 0.5, 0.1).front().field == "alpha");
  CHECK_THROWS_AS(ProblemParams::checked(1, 100, 2.0, 0.1), std::invalid_argument);
}

TEST_CASE("derived sizes use floor and are never stale") {
  const ProblemParams p{1, 729, 0.5, 1.0 / 6.0};
  CHECK(p.subset_size() == 121);
  CHECK(p.intersection_cap() == 40);

  const ProblemParams q{1, 600, 0.5, 0.1};
  CHECK(q.subset_size() == 60);
  CHECK(q.intersection_cap() == 12);
}

TEST_CASE("floor property: subset_size <= alpha*n < subset_size + 1") {
  Xoshiro256pp rng(31);
  for (int i = 0; i < 2000; ++i) {
    const long n = 2 + static_cast<long>(rng.next_below(100000));
    const double alpha = 0.01 + 0.48 * rng.next_double();
    const ProblemParams p{1, n, 0.5, alpha};
    const double prod = alpha * static_cast<double>(n);
    if (p.subset_size() < 1) continue;
    CHECK(static_cast<double>(p.subset_size()) <= prod);
    CHECK(prod < static_cast<double>(p.subset_size()) + 1.0);
    const double cap_prod = 2.0 * alpha * alpha * static_cast<double>(n);
    CHECK(static_cast<double>(p.intersection_cap()) <= cap_prod);
    CHECK(cap_prod < static_cast<double>(p.intersection_cap()) + 1.0);
  }
}

TEST_CASE("linf distance basics") {
  const std::vector<double> a{0.0, 0.0};
  CHECK(linf_distance(a, a) == 0.0);
  const std::vector<double> b{0.3, -0.5};
  CHECK(linf_distance(a, b) == doctest::Approx(0.5));
  const std::vector<double> c{1.0};
  CHECK_THROWS_AS(linf_distance(a, c), std::invalid_argument);
}

TEST_CASE("linf vs euclidean norm ordering on random pairs") {
  Xoshiro256pp rng(77);
  for (int rep = 0; rep < 500; ++rep) {
    const int d = 1 + static_cast<int>(rng.next_below(6));
    std::vector<double> a(d), b(d);
    for (int j = 0; j < d; ++j) {
      a[j] = 4.0 * rng.next_double() - 2.0;
      b[j] = 4.0 * rng.next_double() - 2.0;
    }
    const double linf = linf_distance(a, b);
    double e2 = 0.0;
    for (int j = 0; j < d; ++j) e2 += (a[j] - b[j]) * (a[j] - b[j]);
    const double euclid = std::sqrt(e2);
    CHECK(linf <= euclid + 1e-15);
    CHECK(euclid <= std::sqrt(static_cast<double>(d)) * linf + 1e-15);
  }
}

TEST_CASE("target range validation") {
  Target t;
  t.z = {0.5, -0.5};
  CHECK(t.validate().empty());
  t.z = {1.5, 0.0};
  CHECK_FALSE(t.validate().empty());

  Target wide;
  wide.z = {3.0};
  wide.range = TargetRange::lambda_range;
  wide.halfwidth = 4.0;
  CHECK(wide.validate().empty());
  wide.halfwidth = 2.0;
  CHECK_FALSE(wide.validate().empty());

  Target shifted;
  shifted.z = {10.2};
  shifted.range = TargetRange::lambda_range;
  shifted.halfwidth = 1.0;
  shifted.shift = {10.0};
  CHECK(shifted.validate().empty());
}
