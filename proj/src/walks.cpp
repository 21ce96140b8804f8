#include "rss/walks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "rss/core.hpp"
#include "rss/sampler.hpp"

namespace rss {

namespace {

// (cell, point) lexicographic order; with dedup_cell = 0 the cell comparison
// degenerates to the point comparison.
struct PointOrder {
  const std::vector<double>& pts;
  int d;
  double cell;

  long long cell_of(double v) const { return static_cast<long long>(std::floor(v / cell)); }

  bool operator()(std::uint32_t a, std::uint32_t b) const {
    const double* pa = pts.data() + static_cast<std::size_t>(a) * d;
    const double* pb = pts.data() + static_cast<std::size_t>(b) * d;
    if (cell > 0.0) {
      for (int j = 0; j < d; ++j) {
        const long long ca = cell_of(pa[j]);
        const long long cb = cell_of(pb[j]);
        if (ca != cb) return ca < cb;
      }
    }
    for (int j = 0; j < d; ++j) {
      if (pa[j] != pb[j]) return pa[j] < pb[j];
    }
    return false;
  }

  bool same_cell(std::uint32_t a, std::uint32_t b) const {
    const double* pa = pts.data() + static_cast<std::size_t>(a) * d;
    const double* pb = pts.data() + static_cast<std::size_t>(b) * d;
    for (int j = 0; j < d; ++j) {
      if (cell > 0.0) {
        if (cell_of(pa[j]) != cell_of(pb[j])) return false;
      } else if (pa[j] != pb[j]) {
        return false;
      }
    }
    return true;
  }
};

}  // namespace

WalkFrontier make_frontier(int d, double dedup_cell) {
  if (d < 1) throw std::invalid_argument("make_frontier: d must be >= 1");
  if (dedup_cell < 0.0) throw std::invalid_argument("make_frontier: dedup_cell must be >= 0");
  WalkFrontier f;
  f.d = d;
  f.dedup_cell = dedup_cell;
  f.points.assign(static_cast<std::size_t>(d), 0.0);
  return f;
}

WalkFrontier step(const WalkFrontier& f, std::span<const double> x, std::size_t budget) {
  if (x.size() != static_cast<std::size_t>(f.d)) {
    throw std::invalid_argument("walk step: vector dimension mismatch");
  }
  const std::size_t count = f.size();
  if (2 * count > budget) {
    throw WalkBudgetError("walk step: frontier of " + std::to_string(2 * count) +
                              " points would exceed the budget of " + std::to_string(budget) +
                              "; use a larger dedup_cell",
                          f);
  }

  std::vector<double> cand;
  cand.reserve(2 * count * f.d);
  cand.insert(cand.end(), f.points.begin(), f.points.end());
  for (std::size_t i = 0; i < count; ++i) {
    const double* p = f.points.data() + i * f.d;
    for (int j = 0; j < f.d; ++j) cand.push_back(p[j] + x[j]);
  }

  std::vector<std::uint32_t> order(2 * count);
  std::iota(order.begin(), order.end(), 0u);
  const PointOrder cmp{cand, f.d, f.dedup_cell};
  std::sort(order.begin(), order.end(), cmp);

  WalkFrontier out;
  out.d = f.d;
  out.t = f.t + 1;
  out.dedup_cell = f.dedup_cell;
  out.points.reserve(cand.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0 && cmp.same_cell(order[i - 1], order[i])) continue;
    const double* p = cand.data() + static_cast<std::size_t>(order[i]) * f.d;
    out.points.insert(out.points.end(), p, p + f.d);
  }
  return out;
}

double min_distance(const WalkFrontier& f, std::span<const double> target) {
  if (target.size() != static_cast<std::size_t>(f.d)) {
    throw std::invalid_argument("walk min_distance: target dimension mismatch");
  }
  double best = std::numeric_limits<double>::infinity();
  const std::size_t count = f.size();
  for (std::size_t i = 0; i < count; ++i) {
    const double* p = f.points.data() + i * f.d;
    double e = 0.0;
    for (int j = 0; j < f.d; ++j) e = std::max(e, std::abs(p[j] - target[j]));
    best = std::min(best, e);
  }
  return best;
}

WalkTrajectory run_walk(int d, int steps, std::uint64_t seed, double dedup_cell,
                        const std::vector<std::vector<double>>& targets, std::size_t budget) {
  const SampleMatrix m = sample_standard_normal(steps, d, seed);
  WalkTrajectory traj;
  traj.frontier_size.reserve(static_cast<std::size_t>(steps));
  traj.min_distance.assign(targets.size(), {});
  WalkFrontier f = make_frontier(d, dedup_cell);
  for (int t = 0; t < steps; ++t) {
    f = step(f, m.row_span(t), budget);
    traj.frontier_size.push_back(f.size());
    for (std::size_t k = 0; k < targets.size(); ++k) {
      traj.min_distance[k].push_back(min_distance(f, targets[k]));
    }
  }
  return traj;
}

}  // namespace rss
