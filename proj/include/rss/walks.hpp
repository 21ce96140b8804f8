// Branching nondeterministic walk: at each step every reachable point both
// stays and moves by the step vector, so after t steps the frontier is
// exactly the set of subset sums of the first t steps. A grid deduplication
// (keep the lexicographically least point per cell) controls the blowup;
// every exact reachable point stays within t*dedup_cell (max-norm) of a
// retained representative.

#ifndef RSS_WALKS_HPP
#define RSS_WALKS_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace rss {

struct WalkFrontier {
  int d = 1;
  int t = 0;
  double dedup_cell = 0.0;  // 0 = exact (only identical points collapse)
  std::vector<double> points;  // size() * d, ordered by (cell, point) lexicographically

  std::size_t size() const { return points.empty() ? 0 : points.size() / d; }
  std::span<const double> point(std::size_t i) const {
    return {points.data() + i * d, static_cast<std::size_t>(d)};
  }
};

class WalkBudgetError : public std::runtime_error {
 public:
  WalkBudgetError(const std::string& msg, WalkFrontier frontier)
      : std::runtime_error(msg), frontier_(std::move(frontier)) {}
  const WalkFrontier& frontier() const { return frontier_; }

 private:
  WalkFrontier frontier_;
};

// Frontier at t = 0: the origin only.
WalkFrontier make_frontier(int d, double dedup_cell = 0.0);

// New frontier = old union (old + x), deduplicated. Throws WalkBudgetError
// (carrying the pre-step frontier) if the result would exceed the budget.
WalkFrontier step(const WalkFrontier& f, std::span<const double> x,
                  std::size_t budget = std::size_t{1} << 24);

// Minimum max-norm distance from the frontier to a target.
double min_distance(const WalkFrontier& f, std::span<const double> target);

struct WalkTrajectory {
  std::vector<std::size_t> frontier_size;          // per step 1..steps
  std::vector<std::vector<double>> min_distance;   // [target][step]
};

// Runs `steps` standard normal steps from the given seed, tracking the
// per-step frontier size and min distance to each target.
WalkTrajectory run_walk(int d, int steps, std::uint64_t seed, double dedup_cell,
                        const std::vector<std::vector<double>>& targets,
                        std::size_t budget = std::size_t{1} << 24);

}  // namespace rss

#endif  // RSS_WALKS_HPP
