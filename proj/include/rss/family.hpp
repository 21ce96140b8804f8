// Families of equal-size subsets of [n] with certified small pairwise
// intersections, built by uniform sampling with verification and full
// restarts. Subsets are stored 0-based and sorted; serialization uses
// 1-based indices.

#ifndef RSS_FAMILY_HPP
#define RSS_FAMILY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rss {

struct SubsetFamily {
  long n = 0;
  long member_size = 0;
  std::vector<std::vector<std::int32_t>> subsets;
  long certified_max_intersection = 0;  // verified max over all pairs
  struct BuildStats {
    long attempts = 0;
    long rejected_pairs = 0;
  } build_stats;

  long size() const { return static_cast<long>(subsets.size()); }
};

struct FamilyCheck {
  bool ok = false;
  long max_intersection_found = 0;
  std::optional<std::pair<int, int>> offending_pair;
  std::string detail;
};

// Raised when max_attempts full restarts were exhausted without meeting the
// intersection cap; carries the best attempt seen and violation statistics.
class FamilyBuildError : public std::runtime_error {
 public:
  FamilyBuildError(const std::string& msg, SubsetFamily best)
      : std::runtime_error(msg), best_family_(std::move(best)) {}
  const SubsetFamily& best_family() const { return best_family_; }

 private:
  SubsetFamily best_family_;
};

// |a intersect b| for sorted index sets.
long intersection_size(std::span<const std::int32_t> a, std::span<const std::int32_t> b);

// Uniform random size-m subset of {0, ..., n-1}, sorted (partial
// Fisher-Yates, exact uniformity).
std::vector<std::int32_t> sample_uniform_subset(long n, long m, std::uint64_t seed);

// Draws requested_size uniform subsets of size floor(alpha*n) and restarts
// with a fresh derived seed whenever any pair intersects in more than
// floor(2*alpha^2*n) elements, up to max_attempts restarts. Requires
// alpha in (0, 1/2) with floor(alpha*n) >= 1.
SubsetFamily build_family(long n, double alpha, long requested_size, std::uint64_t seed,
                          long max_attempts = 1000);

// Recomputes every pairwise intersection by brute force and re-checks sizes,
// sortedness, ranges and duplicates.
FamilyCheck validate_family(const SubsetFamily& f);

// Two uniform size-floor(alpha*n) subsets with intersection exactly k.
// Requires 0 <= k <= m and 2m - k <= n.
std::pair<std::vector<std::int32_t>, std::vector<std::int32_t>> pair_with_intersection(
    long n, double alpha, long k, std::uint64_t seed);

}  // namespace rss

#endif  // RSS_FAMILY_HPP
