// Exact subset-sum search and hit counting in d dimensions.
//
// Engines:
//   exhaustive      Gray-code walk over all subsets (or one cardinality),
//                   one row add/subtract per step, n <= 30.
//   meet_in_middle  half-subset enumeration with a spatial hash grid of cell
//                   width 2*epsilon, n <= 44; exact also for the best
//                   near-miss via expanding-ring search.
//   frontier        branching-frontier engine for d = 1 coverage queries at
//                   any n, with grid deduplication (see cover_grid).
//
// Tie-breaking is deterministic: exhaustive returns the first hit in
// Gray-code order; meet-in-the-middle returns the hit with the smallest
// second-half mask at the first first-half subset that admits one. Both
// engines recompute the returned sum exactly from the selected rows.

#ifndef RSS_SEARCH_HPP
#define RSS_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rss/core.hpp"
#include "rss/family.hpp"

namespace rss {

enum class Engine { exhaustive, meet_in_middle, frontier };

struct SearchResult {
  bool found = false;
  std::vector<std::int32_t> subset;  // sorted, 0-based
  std::vector<double> achieved;      // exact sum of the selected rows
  double error = 0.0;                // linf_distance(z, achieved)
  Engine engine = Engine::exhaustive;
  struct Stats {
    std::uint64_t candidates_examined = 0;
    double wall_time_s = 0.0;
  } stats;
};

// Walks all subsets (or all of the given cardinality) in Gray-code order,
// maintaining a running sum re-anchored every 2^16 steps. Returns the first
// subset within epsilon, else found=false with the minimum-error subset.
SearchResult enumerate_exhaustive(const SampleMatrix& m, std::span<const double> z, double epsilon,
                                  std::optional<int> cardinality = std::nullopt);

// Exact count of family members whose sum lands in B_inf(z, epsilon).
long count_hits(const SampleMatrix& m, const SubsetFamily& fam, std::span<const double> z,
                double epsilon);

struct MimOptions {
  std::size_t memory_budget_bytes = std::size_t{2} << 30;
};

SearchResult meet_in_middle(const SampleMatrix& m, std::span<const double> z, double epsilon,
                            std::optional<int> cardinality = std::nullopt,
                            const MimOptions& opts = {});

struct CoverOptions {
  std::size_t grid_budget = std::size_t{1} << 20;      // max grid points
  std::size_t frontier_budget = std::size_t{1} << 22;  // max frontier points
  double frontier_dedup_cell = 0.0;                    // 0 = choose automatically
};

struct CoverageReport {
  double grid_step = 0.0;  // 2*epsilon
  long total_points = 0;
  long covered_points = 0;
  std::optional<std::vector<double>> first_uncovered;
  std::vector<double> per_point_errors;  // row-major over the d-fold product of axis
  std::vector<double> axis;              // center coordinates along one axis

  bool fully_covered() const { return covered_points == total_points; }
  double max_error() const;
};

// Grid of centers at spacing 2*epsilon covering [-h, h]^d; each center is
// searched with tolerance epsilon. Full coverage certifies that every
// z in [-h, h]^d is 2*epsilon-approximable.
CoverageReport cover_grid(const SampleMatrix& m, double epsilon, Engine engine,
                          double range_halfwidth = 1.0, const CoverOptions& opts = {});

// Picks exhaustive for small n, meet-in-the-middle up to its guard, and (for
// coverage at d = 1) the frontier engine beyond that.
Engine auto_engine(long n, int d, bool coverage);

}  // namespace rss

#endif  // RSS_SEARCH_HPP
