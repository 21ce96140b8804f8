#include "rss/family.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "rss/rng.hpp"

namespace rss {

namespace {

// Partial Fisher-Yates over a virtual array: only touched positions are
// materialized, so memory is O(m).
std::vector<std::int32_t> draw_subset(long n, long m, Xoshiro256pp& rng) {
  std::unordered_map<long, long> swapped;
  swapped.reserve(static_cast<std::size_t>(2 * m));
  std::vector<std::int32_t> out;
  out.reserve(static_cast<std::size_t>(m));
  for (long i = 0; i < m; ++i) {
    const long j = i + static_cast<long>(rng.next_below(static_cast<std::uint64_t>(n - i)));
    auto ji = swapped.find(j);
    const long vj = ji == swapped.end() ? j : ji->second;
    auto ii = swapped.find(i);
    const long vi = ii == swapped.end() ? i : ii->second;
    swapped[j] = vi;
    out.push_back(static_cast<std::int32_t>(vj));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

long intersection_size(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  long count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

std::vector<std::int32_t> sample_uniform_subset(long n, long m, std::uint64_t seed) {
  if (m < 0 || m > n) throw std::invalid_argument("sample_uniform_subset: need 0 <= m <= n");
  Xoshiro256pp rng(seed);
  return draw_subset(n, m, rng);
}

SubsetFamily build_family(long n, double alpha, long requested_size, std::uint64_t seed,
                          long max_attempts) {
  if (requested_size < 1) throw std::invalid_argument("build_family: requested_size must be >= 1");
  if (!(alpha > 0.0 && alpha < 0.5)) {
    throw std::invalid_argument("build_family: alpha must lie in (0, 1/2)");
  }
  const long m = static_cast<long>(std::floor(alpha * static_cast<double>(n)));
  if (m < 1) throw std::invalid_argument("build_family: floor(alpha*n) must be >= 1");
  const long cap = static_cast<long>(std::floor(2.0 * alpha * alpha * static_cast<double>(n)));

  SubsetFamily best;
  long best_max = -1;
  long rejected_pairs = 0;

  for (long attempt = 0; attempt < max_attempts; ++attempt) {
    Xoshiro256pp rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    SubsetFamily fam;
    fam.n = n;
    fam.member_size = m;
    fam.subsets.reserve(static_cast<std::size_t>(requested_size));
    for (long i = 0; i < requested_size; ++i) fam.subsets.push_back(draw_subset(n, m, rng));

    long max_int = 0;
    long violations = 0;
    for (std::size_t i = 0; i < fam.subsets.size(); ++i) {
      for (std::size_t j = i + 1; j < fam.subsets.size(); ++j) {
        const long s = intersection_size(fam.subsets[i], fam.subsets[j]);
        max_int = std::max(max_int, s);
        if (s > cap) ++violations;
      }
    }
    rejected_pairs += violations;
    if (violations == 0) {
      fam.certified_max_intersection = max_int;
      fam.build_stats.attempts = attempt + 1;
      fam.build_stats.rejected_pairs = rejected_pairs;
      return fam;
    }
    if (best_max < 0 || max_int < best_max) {
      best_max = max_int;
      best = std::move(fam);
      best.certified_max_intersection = max_int;
    }
  }

  best.build_stats.attempts = max_attempts;
  best.build_stats.rejected_pairs = rejected_pairs;
  throw FamilyBuildError(
      "build_family: intersection cap " + std::to_string(cap) + " not achieved in " +
          std::to_string(max_attempts) + " attempts (" + std::to_string(rejected_pairs) +
          " violating pairs seen); parameters are likely outside the low-intersection regime",
      std::move(best));
}

FamilyCheck validate_family(const SubsetFamily& f) {
  FamilyCheck check;
  check.ok = true;
  for (std::size_t i = 0; i < f.subsets.size(); ++i) {
    const auto& s = f.subsets[i];
    if (static_cast<long>(s.size()) != f.member_size) {
      return {false, 0, std::nullopt, "subset " + std::to_string(i) + " has wrong size"};
    }
    if (!std::is_sorted(s.begin(), s.end()) ||
        std::adjacent_find(s.begin(), s.end()) != s.end()) {
      return {false, 0, std::nullopt, "subset " + std::to_string(i) + " not sorted/unique"};
    }
    if (!s.empty() && (s.front() < 0 || s.back() >= f.n)) {
      return {false, 0, std::nullopt, "subset " + std::to_string(i) + " index out of range"};
    }
  }
  for (std::size_t i = 0; i < f.subsets.size(); ++i) {
    for (std::size_t j = i + 1; j < f.subsets.size(); ++j) {
      const long s = intersection_size(f.subsets[i], f.subsets[j]);
      if (s > check.max_intersection_found) {
        check.max_intersection_found = s;
      }
      if (s > f.certified_max_intersection && !check.offending_pair) {
        check.ok = false;
        check.offending_pair = {static_cast<int>(i), static_cast<int>(j)};
        check.detail = "pair intersects in " + std::to_string(s) + " > certified " +
                       std::to_string(f.certified_max_intersection);
      }
      if (s == f.member_size && i != j) {
        check.ok = false;
        if (!check.offending_pair) {
          check.offending_pair = {static_cast<int>(i), static_cast<int>(j)};
          check.detail = "duplicate subsets";
        }
      }
    }
  }
  return check;
}

std::pair<std::vector<std::int32_t>, std::vector<std::int32_t>> pair_with_intersection(
    long n, double alpha, long k, std::uint64_t seed) {
  const long m = static_cast<long>(std::floor(alpha * static_cast<double>(n)));
  if (m < 1) throw std::invalid_argument("pair_with_intersection: floor(alpha*n) must be >= 1");
  if (k < 0 || k > m) throw std::invalid_argument("pair_with_intersection: need 0 <= k <= m");
  if (2 * m - k > n) {
    throw std::invalid_argument("pair_with_intersection: infeasible, 2m - k exceeds n");
  }
  Xoshiro256pp rng(seed);
  std::vector<std::int32_t> s = draw_subset(n, m, rng);

  // Shared part: uniform k-subset of S.
  std::vector<std::int32_t> shared_pos = draw_subset(m, k, rng);
  std::vector<std::int32_t> t;
  t.reserve(static_cast<std::size_t>(m));
  for (auto p : shared_pos) t.push_back(s[static_cast<std::size_t>(p)]);

  // Remainder: uniform (m-k)-subset of [n] \ S.
  std::vector<std::int32_t> complement;
  complement.reserve(static_cast<std::size_t>(n - m));
  std::size_t si = 0;
  for (long v = 0; v < n; ++v) {
    if (si < s.size() && s[si] == v) {
      ++si;
    } else {
      complement.push_back(static_cast<std::int32_t>(v));
    }
  }
  std::vector<std::int32_t> rest_pos = draw_subset(n - m, m - k, rng);
  for (auto p : rest_pos) t.push_back(complement[static_cast<std::size_t>(p)]);
  std::sort(t.begin(), t.end());
  return {std::move(s), std::move(t)};
}

}  // namespace rss
