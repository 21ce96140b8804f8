// Acceptance suite: one pass/fail line per criterion, each checked at its
// stated tolerance. Exit code is the number of failed criteria.
//
// The asymptotic guarantees are not reachable at desk scale (the required
// sample counts start around 2*10^4 even in one dimension), so the criteria
// are property checks at surrogate scales with explicit confidence
// intervals: Monte Carlo estimates must stay on the right side of every
// closed-form bound within 4 standard errors.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "rss/bounds.hpp"
#include "rss/experiments.hpp"
#include "rss/family.hpp"
#include "rss/nne.hpp"
#include "rss/quadrature.hpp"
#include "rss/rng.hpp"
#include "rss/sampler.hpp"
#include "rss/search.hpp"
#include "rss/walks.hpp"

using namespace rss;

namespace {

constexpr int kWorkers = 4;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

double now_seconds() {
  using Clock = std::chrono::steady_clock;
  static const Clock::time_point t0 = Clock::now();
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// 1. Single-subset probability estimates sandwiched by the cube bounds.
Outcome criterion_single_subset_sandwich() {
  Outcome out;
  Xoshiro256pp rng(20240001);
  int done = 0;
  while (done < 20) {
    const int d = 1 + static_cast<int>(rng.next_below(3));
    const long subset_size = 2 + static_cast<long>(rng.next_below(199));
    const double eps = 0.05 + 0.45 * rng.next_double();
    // keep tuples resolvable at 1e5 trials: lower bound at least 1e-3
    const auto bounds = log_cube_prob_bounds(d, static_cast<double>(subset_size), eps);
    if (std::exp2(bounds.lower) < 1e-3) continue;
    std::vector<double> z(static_cast<std::size_t>(d));
    for (auto& v : z) v = 2.0 * rng.next_double() - 1.0;

    const TrialSummary s = estimate_single_subset_prob(
        d, subset_size, eps, z, 100000, derive_seed(111, static_cast<std::uint64_t>(done)),
        kWorkers);
    if (s.verdict != Verdict::within) {
      out.fail("tuple " + std::to_string(done) + " verdict " + verdict_name(s.verdict) +
               " (estimate " + fmt(s.estimate) + ", bounds [" + fmt(*s.bound_lower) + ", " +
               fmt(*s.bound_upper) + "], ci " + fmt(s.ci_halfwidth) + ")");
    }
    ++done;
  }
  return out;
}

// 2. Family hit-count mean inside the expectation sandwich, variance below
//    the second-moment bound.
Outcome criterion_moment_sandwich() {
  Outcome out;
  const ProblemParams p{1, 729, 0.5, 1.0 / 6.0};
  const SubsetFamily fam = build_family(p.n, p.alpha, 64, 20240002);
  const std::vector<double> z{0.0};
  const auto [mean_s, var_s] = estimate_moments(p, fam, z, 100000, 20240003, kWorkers);
  if (mean_s.verdict != Verdict::within) {
    out.fail("mean " + fmt(mean_s.estimate) + " outside [" + fmt(*mean_s.bound_lower) + ", " +
             fmt(*mean_s.bound_upper) + "] +- " + fmt(mean_s.ci_halfwidth));
  }
  if (var_s.verdict != Verdict::within) {
    out.fail("variance " + fmt(var_s.estimate) + " above " + fmt(*var_s.bound_upper) + " +- " +
             fmt(var_s.ci_halfwidth));
  }
  out.detail = "mean " + fmt(mean_s.estimate) + " in [" + fmt(*mean_s.bound_lower) + ", " +
               fmt(*mean_s.bound_upper) + "], var " + fmt(var_s.estimate) + " <= " +
               fmt(*var_s.bound_upper);
  return out;
}

// 3. Joint hit frequency bracketed between the two intersection regimes.
Outcome criterion_joint_bracketing() {
  Outcome out;
  const std::vector<double> z{0.0};
  const TrialSummary upper =
      estimate_joint_prob(1, 729, 1.0 / 6.0, 0.5, 40, z, 1000000, 20240004, kWorkers);
  if (upper.verdict == Verdict::above_upper) {
    out.fail("upper regime: estimate " + fmt(upper.estimate) + " above bound " +
             fmt(*upper.bound_upper) + " beyond ci " + fmt(upper.ci_halfwidth));
  }
  const TrialSummary lower =
      estimate_joint_prob(1, 33, 1.0 / 6.0, 0.3, 1, z, 1000000, 20240005, kWorkers);
  if (lower.verdict == Verdict::below_lower) {
    out.fail("lower regime: estimate " + fmt(lower.estimate) + " below bound " +
             fmt(*lower.bound_lower) + " beyond ci " + fmt(lower.ci_halfwidth));
  }
  out.detail = "upper " + fmt(upper.estimate) + " <= " + fmt(*upper.bound_upper) + " + " +
               fmt(upper.ci_halfwidth) + ", lower " + fmt(lower.estimate) + " >= " +
               fmt(*lower.bound_lower) + " - " + fmt(lower.ci_halfwidth);
  return out;
}

// 4. Low-intersection family construction at (n=200, alpha=0.1, size=10).
Outcome criterion_family_construction() {
  Outcome out;
  const long builds = 100;
  const long k = 10;
  const double alpha = 0.1;
  const long n = 200;
  long attempts = 0;
  for (long s = 0; s < builds; ++s) {
    SubsetFamily fam;
    try {
      fam = build_family(n, alpha, k, derive_seed(20240006, static_cast<std::uint64_t>(s)));
    } catch (const FamilyBuildError&) {
      out.fail("build " + std::to_string(s) + " exhausted its attempts");
      continue;
    }
    attempts += fam.build_stats.attempts;
    const auto check = validate_family(fam);
    if (!check.ok) out.fail("build " + std::to_string(s) + " failed validation: " + check.detail);
    if (fam.member_size != 20 || fam.certified_max_intersection > 4) {
      out.fail("build " + std::to_string(s) + " shape off");
    }
  }
  const double restart_rate =
      static_cast<double>(attempts - builds) / static_cast<double>(attempts);
  const double union_bound = (k * (k - 1) / 2.0) * std::exp(-alpha * alpha * n / 3.0);
  const double ci = 4.0 * std::sqrt(0.25 / static_cast<double>(attempts));
  if (restart_rate > union_bound + ci) {
    out.fail("restart rate " + fmt(restart_rate) + " above the union bound " + fmt(union_bound));
  }
  out.detail = "100 builds valid, restart rate " + fmt(restart_rate) + " vs bound " +
               fmt(std::min(union_bound, 1.0)) + " (vacuous at these parameters)";
  return out;
}

// 5. Exhaustive and meet-in-the-middle agree on 500 random instances.
Outcome criterion_engine_equivalence() {
  Outcome out;
  Xoshiro256pp rng(20240007);
  int found_cases = 0;
  for (int rep = 0; rep < 500; ++rep) {
    const int d = 1 + static_cast<int>(rng.next_below(3));
    const long n = 6 + static_cast<long>(rng.next_below(15));  // 6..20
    const SampleMatrix m =
        sample_standard_normal(n, d, derive_seed(20240008, static_cast<std::uint64_t>(rep)));
    std::vector<double> z(static_cast<std::size_t>(d));
    for (auto& v : z) v = 4.0 * (2.0 * rng.next_double() - 1.0);
    const double eps = rep % 4 == 0 ? 0.002 : 0.02 + 0.38 * rng.next_double();

    const SearchResult ex = enumerate_exhaustive(m, z, eps);
    const SearchResult mim = meet_in_middle(m, z, eps);
    if (ex.found != mim.found) {
      out.fail("instance " + std::to_string(rep) + ": found flags differ");
      continue;
    }
    if (ex.found) {
      ++found_cases;
      if (ex.error > eps || mim.error > eps) {
        out.fail("instance " + std::to_string(rep) + ": hit beyond tolerance");
      }
    } else if (std::abs(ex.error - mim.error) > 1e-12) {
      out.fail("instance " + std::to_string(rep) + ": minimal errors differ by " +
               fmt(std::abs(ex.error - mim.error)));
    }
  }
  out.detail = "500 instances, " + std::to_string(found_cases) + " with hits";
  return out;
}

// 6. Coverage success frequency nondecreasing in n, reaching 0.95 at n=64.
Outcome criterion_coverage_monotonicity() {
  Outcome out;
  const std::vector<long> ns{4, 8, 16, 32, 64};
  std::vector<TrialSummary> runs;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const ProblemParams p{1, ns[i], 0.25, 0.26};
    const Engine engine = ns[i] <= 20 ? Engine::exhaustive : Engine::frontier;
    runs.push_back(estimate_coverage_prob(p, engine, 200,
                                          derive_seed(20240009, static_cast<std::uint64_t>(i)),
                                          {}, kWorkers));
  }
  std::string freq = "frequencies";
  for (std::size_t i = 0; i < runs.size(); ++i) {
    freq += " " + fmt(runs[i].estimate);
    if (i == 0) continue;
    const double se_diff = std::sqrt(runs[i].std_error * runs[i].std_error +
                                     runs[i - 1].std_error * runs[i - 1].std_error);
    if (runs[i].estimate < runs[i - 1].estimate - 4.0 * se_diff) {
      out.fail("frequency dropped from n=" + std::to_string(ns[i - 1]) + " to n=" +
               std::to_string(ns[i]));
    }
  }
  if (runs.back().estimate < 0.95) {
    out.fail("frequency at n=64 is " + fmt(runs.back().estimate) + " < 0.95");
  }
  out.detail = freq;
  return out;
}

// 7. Zero violations of the auxiliary inequalities on 1e4 draws each.
Outcome criterion_claim_checks() {
  Outcome out;
  const auto reports = verify_appendix_claims(10000, 20240010, 32, kWorkers);
  std::string margins = "worst margins";
  for (const auto& r : reports) {
    margins += " " + r.claim_id + "=" + fmt(r.worst_margin);
    if (r.violations != 0) {
      out.fail(r.claim_id + ": " + std::to_string(r.violations) + " violations, worst margin " +
               fmt(r.worst_margin));
    }
  }
  out.detail = margins;
  return out;
}

// 8. Genotype search equals the flattened subset-sum engine bit for bit.
Outcome criterion_nne_faithfulness() {
  Outcome out;
  Xoshiro256pp rng(20240011);
  int successes = 0;
  for (int rep = 0; rep < 100; ++rep) {
    const GeneBank bank =
        sample_genes(20, 1, 2, derive_seed(20240012, static_cast<std::uint64_t>(rep)));
    NetTensor target;
    target.layers = 1;
    target.width = 2;
    target.entries.resize(4);
    for (auto& v : target.entries) v = 2.0 * rng.next_double() - 1.0;
    const double eps = 0.1 + 0.3 * rng.next_double();

    const GenotypeResult res = find_genotype(bank, target, eps, Engine::meet_in_middle);
    const SearchResult raw = meet_in_middle(bank_as_matrix(bank), target.entries, 2.0 * eps);
    if (res.found != raw.found || res.max_entry_error != raw.error ||
        res.raw.subset != raw.subset) {
      out.fail("pair " + std::to_string(rep) + ": reduction mismatch");
      continue;
    }
    if (!res.found) continue;
    ++successes;
    const NetTensor approx = genotype_tensor(bank, res.genotype);
    double err = 0.0;
    for (std::size_t k = 0; k < approx.entries.size(); ++k) {
      err = std::max(err, std::abs(approx.entries[k] - target.entries[k]));
    }
    if (!(err < 2.0 * eps)) {
      out.fail("pair " + std::to_string(rep) + ": recomputed error " + fmt(err) +
               " not below " + fmt(2.0 * eps));
    }
  }
  out.detail = std::to_string(successes) + "/100 pairs approximable at their tolerance";
  return out;
}

// 9. Quantized instances keep the discrete error bound, exactly.
Outcome criterion_discrete_bound() {
  Outcome out;
  const double eps = 0.25;  // delta = 2*eps = 0.5, a power of two
  Xoshiro256pp rng(20240013);
  int done = 0;
  while (done < 50) {
    const long n = 16;
    const SampleMatrix m =
        sample_standard_normal(n, 1, derive_seed(20240014, static_cast<std::uint64_t>(done)));
    // target near a random subset sum, so the continuous search succeeds
    double base = 0.0;
    for (long i = 0; i < n; ++i) {
      if (rng.next() & 1) base += m.at(i, 0);
    }
    const std::vector<double> z{base + (2.0 * rng.next_double() - 1.0) * 0.4};
    const SearchResult cont = enumerate_exhaustive(m, z, 2.0 * eps);
    if (!cont.found) continue;  // criterion quantifies over found instances
    ++done;

    const SampleMatrix q = quantize(m, 2.0 * eps);
    double quantized_sum = 0.0;
    for (const auto i : cont.subset) quantized_sum += q.at(i, 0);
    const double err_q = std::abs(z[0] - quantized_sum);
    if (!(err_q <= discrete_error_bound(n, eps))) {
      out.fail("instance " + std::to_string(done) + ": quantized error " + fmt(err_q) +
               " above " + fmt(discrete_error_bound(n, eps)));
    }
  }
  out.detail = "50 found instances within 2*eps*(n+1) = " + fmt(discrete_error_bound(16, eps));
  return out;
}

// 10. Walk frontier equals brute-force subset sums; dedup within t*cell.
Outcome criterion_walk_equivalence() {
  Outcome out;
  const int t = 16;
  const SampleMatrix m = sample_standard_normal(t, 1, 20240015);
  WalkFrontier f = make_frontier(1);
  for (int i = 0; i < t; ++i) f = step(f, m.row_span(i));

  std::vector<double> brute;
  brute.reserve(std::size_t{1} << t);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask) {
    double s = 0.0;
    for (int i = 0; i < t; ++i) {
      if ((mask >> i) & 1) s += m.at(i, 0);
    }
    brute.push_back(s);
  }
  std::sort(brute.begin(), brute.end());
  brute.erase(std::unique(brute.begin(), brute.end()), brute.end());
  if (f.size() != brute.size()) {
    out.fail("frontier size " + std::to_string(f.size()) + " vs brute " +
             std::to_string(brute.size()));
  } else {
    for (std::size_t i = 0; i < brute.size(); ++i) {
      if (f.points[i] != brute[i]) {
        out.fail("frontier point " + std::to_string(i) + " differs");
        break;
      }
    }
  }

  const double cell = 1e-3;
  const std::vector<std::vector<double>> targets{{0.3}, {-0.7}};
  const WalkTrajectory exact = run_walk(1, t, 20240016, 0.0, targets);
  const WalkTrajectory dedup = run_walk(1, t, 20240016, cell, targets);
  for (std::size_t k = 0; k < targets.size(); ++k) {
    for (int i = 0; i < t; ++i) {
      const double de = dedup.min_distance[k][static_cast<std::size_t>(i)];
      const double ex = exact.min_distance[k][static_cast<std::size_t>(i)];
      if (de < ex - 1e-15 || de > ex + (i + 1) * cell + 1e-15) {
        out.fail("dedup distance out of band at step " + std::to_string(i + 1));
      }
    }
  }
  out.detail = "exact frontier of " + std::to_string(f.size()) + " points matches brute force";
  return out;
}

struct Criterion {
  const char* name;
  Outcome (*fn)();
  double budget_seconds;  // 0 = no stated budget
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"single-subset bound sandwich (20 tuples, 1e5 trials)", criterion_single_subset_sandwich,
       60.0},
      {"moment sandwich at n=729, |C|=64, 1e5 trials", criterion_moment_sandwich, 300.0},
      {"joint probability bracketing, 1e6 trials", criterion_joint_bracketing, 600.0},
      {"family construction, 100 builds at (200, 0.1, 10)", criterion_family_construction, 0.0},
      {"engine equivalence on 500 instances", criterion_engine_equivalence, 0.0},
      {"coverage monotone in n with 0.95 at n=64", criterion_coverage_monotonicity, 0.0},
      {"auxiliary inequality checks, 1e4 draws each", criterion_claim_checks, 300.0},
      {"genotype reduction faithfulness, 100 pairs", criterion_nne_faithfulness, 0.0},
      {"discrete quantization bound, 50 instances", criterion_discrete_bound, 0.0},
      {"walk frontier equivalence and dedup band", criterion_walk_equivalence, 0.0},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const double t0 = now_seconds();
    Outcome out = criteria[i].fn();
    const double elapsed = now_seconds() - t0;
    if (criteria[i].budget_seconds > 0.0 && elapsed > criteria[i].budget_seconds) {
      out.fail("runtime " + fmt(elapsed) + "s over the budget of " +
               fmt(criteria[i].budget_seconds) + "s");
    }
    std::printf("[%s] %2zu. %s (%.1fs)%s%s\n", out.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].name, elapsed, out.detail.empty() ? "" : " — ",
                out.detail.c_str());
    if (!out.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures;
}
