#include "rss/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace rss {

namespace {

constexpr long kExhaustiveGuard = 30;
constexpr long kMimGuard = 44;
constexpr std::uint64_t kReanchorPeriod = std::uint64_t{1} << 16;
constexpr double kInf = std::numeric_limits<double>::infinity();

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<std::int32_t> mask_to_subset(std::uint64_t mask, int offset = 0) {
  std::vector<std::int32_t> out;
  while (mask) {
    out.push_back(std::countr_zero(mask) + offset);
    mask &= mask - 1;
  }
  return out;
}

std::vector<double> exact_row_sum(const SampleMatrix& m, std::span<const std::int32_t> subset) {
  std::vector<double> s(m.d, 0.0);
  for (auto i : subset) {
    const double* row = m.row(i);
    for (int j = 0; j < m.d; ++j) s[j] += row[j];
  }
  return s;
}

double linf_err(std::span<const double> z, std::span<const double> sum) {
  double e = 0.0;
  for (std::size_t j = 0; j < z.size(); ++j) e = std::max(e, std::abs(z[j] - sum[j]));
  return e;
}

void check_target_dim(const SampleMatrix& m, std::span<const double> z, const char* who) {
  if (z.size() != static_cast<std::size_t>(m.d)) {
    throw std::invalid_argument(std::string(who) + ": target dimension mismatch");
  }
}

// Mixes a d-tuple of cell coordinates into one hash. Collisions are harmless:
// every candidate still passes an exact distance test.
std::uint64_t cell_hash(const long long* c, int d) {
  std::uint64_t h = 0x9E3779B97F4A7C15ULL;
  for (int j = 0; j < d; ++j) {
    std::uint64_t x = static_cast<std::uint64_t>(c[j]) + 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    x ^= x >> 31;
    h = (h ^ x) * 0x2545F4914F6CDD1DULL;
  }
  return h;
}

// Horowitz-Sahni style solver with a spatial hash of second-half sums.
// Built once per (matrix, epsilon, cardinality); solve() may be called for
// many targets (coverage grids reuse one table).
class MimSolver {
 public:
  MimSolver(const SampleMatrix& m, double epsilon, std::optional<int> cardinality,
            const MimOptions& opts)
      : m_(m), eps_(epsilon), card_(cardinality), cell_w_(2.0 * epsilon) {
    if (m_.n > kMimGuard) {
      throw std::invalid_argument("meet_in_middle: n = " + std::to_string(m_.n) +
                                  " exceeds the guard (" + std::to_string(kMimGuard) + ")");
    }
    if (card_ && (*card_ < 0 || *card_ > m_.n)) {
      throw std::invalid_argument("meet_in_middle: cardinality out of range");
    }
    if (!(epsilon > 0.0)) throw std::invalid_argument("meet_in_middle: epsilon must be positive");
    n_a_ = (m_.n + 1) / 2;
    n_b_ = m_.n - n_a_;
    const std::size_t count = std::size_t{1} << n_b_;
    const std::size_t estimate = count * (sizeof(double) * m_.d + 2 * sizeof(std::uint32_t)) * 2;
    if (estimate > opts.memory_budget_bytes) {
      throw std::invalid_argument("meet_in_middle: estimated table memory " +
                                  std::to_string(estimate) + " bytes exceeds budget of " +
                                  std::to_string(opts.memory_budget_bytes));
    }
    build();
  }

  SearchResult solve(std::span<const double> z) const {
    check_target_dim(m_, z, "meet_in_middle");
    const auto t0 = Clock::now();
    SearchResult res;
    res.engine = Engine::meet_in_middle;

    if (auto hit = hit_pass(z, res.stats.candidates_examined)) {
      res.found = true;
      res.subset = assemble(hit->first, hit->second);
      res.achieved = exact_row_sum(m_, res.subset);
      res.error = linf_err(z, res.achieved);
      res.stats.wall_time_s = seconds_since(t0);
      return res;
    }

    const auto [a_mask, b_mask] = best_pass(z, res.stats.candidates_examined);
    res.found = false;
    res.subset = assemble(a_mask, b_mask);
    res.achieved = exact_row_sum(m_, res.subset);
    res.error = linf_err(z, res.achieved);
    res.stats.wall_time_s = seconds_since(t0);
    return res;
  }

 private:
  void build() {
    const int d = m_.d;
    const std::uint64_t total = std::uint64_t{1} << n_b_;
    sums_.assign(static_cast<std::size_t>(total) * d, 0.0);
    cell_min_.assign(d, std::numeric_limits<long long>::max());
    cell_max_.assign(d, std::numeric_limits<long long>::min());
    buckets_.reserve(static_cast<std::size_t>(total));

    std::vector<double> run(d, 0.0);
    std::uint64_t mask = 0;
    for (std::uint64_t k = 0;; ++k) {
      double* dst = &sums_[static_cast<std::size_t>(mask) * d];
      std::copy(run.begin(), run.end(), dst);
      long long cell[64];
      for (int j = 0; j < d; ++j) {
        cell[j] = static_cast<long long>(std::floor(run[j] / cell_w_));
        cell_min_[j] = std::min(cell_min_[j], cell[j]);
        cell_max_[j] = std::max(cell_max_[j], cell[j]);
      }
      buckets_[cell_hash(cell, d)].push_back(static_cast<std::uint32_t>(mask));

      if (k + 1 == total) break;
      const int b = std::countr_zero(k + 1);
      mask ^= std::uint64_t{1} << b;
      const bool added = (mask >> b) & 1;
      const double* row = m_.row(n_a_ + b);
      for (int j = 0; j < d; ++j) run[j] += added ? row[j] : -row[j];
      if ((k + 1) % kReanchorPeriod == 0) reanchor(run, mask);
    }
  }

  void reanchor(std::vector<double>& run, std::uint64_t mask) const {
    std::fill(run.begin(), run.end(), 0.0);
    std::uint64_t mm = mask;
    while (mm) {
      const int i = std::countr_zero(mm);
      const double* row = m_.row(n_a_ + i);
      for (int j = 0; j < m_.d; ++j) run[j] += row[j];
      mm &= mm - 1;
    }
  }

  std::vector<std::int32_t> assemble(std::uint64_t a_mask, std::uint64_t b_mask) const {
    auto subset = mask_to_subset(a_mask, 0);
    auto tail = mask_to_subset(b_mask, static_cast<int>(n_a_));
    subset.insert(subset.end(), tail.begin(), tail.end());
    return subset;
  }

  // Walks first-half subsets in Gray order, invoking fn(mask, popcount, sum).
  template <class Fn>
  void walk_first_half(Fn&& fn) const {
    const int d = m_.d;
    const std::uint64_t total = std::uint64_t{1} << n_a_;
    std::vector<double> run(d, 0.0);
    std::uint64_t mask = 0;
    int pop = 0;
    for (std::uint64_t k = 0;; ++k) {
      if (!fn(mask, pop, run)) return;
      if (k + 1 == total) break;
      const int b = std::countr_zero(k + 1);
      mask ^= std::uint64_t{1} << b;
      const bool added = (mask >> b) & 1;
      pop += added ? 1 : -1;
      const double* row = m_.row(b);
      for (int j = 0; j < d; ++j) run[j] += added ? row[j] : -row[j];
      if ((k + 1) % kReanchorPeriod == 0) {
        std::fill(run.begin(), run.end(), 0.0);
        std::uint64_t mm = mask;
        while (mm) {
          const int i = std::countr_zero(mm);
          const double* r = m_.row(i);
          for (int j = 0; j < d; ++j) run[j] += r[j];
          mm &= mm - 1;
        }
      }
    }
  }

  bool popcount_ok(int a_pop, std::uint32_t b_mask) const {
    if (!card_) return true;
    return a_pop + std::popcount(b_mask) == *card_;
  }

  bool need_feasible(int a_pop) const {
    if (!card_) return true;
    const int need = *card_ - a_pop;
    return need >= 0 && need <= static_cast<int>(n_b_);
  }

  // First pass: box probes only; returns the first (A, B) hit in scan order.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> hit_pass(std::span<const double> z,
                                                                  std::uint64_t& examined) const {
    const int d = m_.d;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> hit;
    walk_first_half([&](std::uint64_t a_mask, int pop, const std::vector<double>& a_sum) {
      if (!need_feasible(pop)) return true;
      double q[64];
      long long lo[64], hi[64], cell[64];
      for (int j = 0; j < d; ++j) {
        q[j] = z[j] - a_sum[j];
        lo[j] = static_cast<long long>(std::floor((q[j] - eps_) / cell_w_));
        hi[j] = static_cast<long long>(std::floor((q[j] + eps_) / cell_w_));
        cell[j] = lo[j];
      }
      std::optional<std::uint32_t> best_b;
      for (;;) {
        const auto it = buckets_.find(cell_hash(cell, d));
        if (it != buckets_.end()) {
          for (const std::uint32_t b_mask : it->second) {
            if (!popcount_ok(pop, b_mask)) continue;
            ++examined;
            const double* bs = &sums_[static_cast<std::size_t>(b_mask) * d];
            double e = 0.0;
            for (int j = 0; j < d; ++j) e = std::max(e, std::abs(q[j] - bs[j]));
            if (e <= eps_ && (!best_b || b_mask < *best_b)) best_b = b_mask;
          }
        }
        int j = 0;
        while (j < d && cell[j] == hi[j]) {
          cell[j] = lo[j];
          ++j;
        }
        if (j == d) break;
        ++cell[j];
      }
      if (best_b) {
        // exact recheck of the assembled subset
        const auto subset = assemble(a_mask, *best_b);
        const auto sum = exact_row_sum(m_, subset);
        if (linf_err(z, sum) <= eps_) {
          hit = {a_mask, *best_b};
          return false;
        }
      }
      return true;
    });
    return hit;
  }

  // Second pass: exact minimum-error pair via expanding-ring search.
  std::pair<std::uint64_t, std::uint64_t> best_pass(std::span<const double> z,
                                                    std::uint64_t& examined) const {
    const int d = m_.d;
    double best_err = kInf;
    std::uint64_t best_a = 0;
    std::uint64_t best_b = 0;
    walk_first_half([&](std::uint64_t a_mask, int pop, const std::vector<double>& a_sum) {
      if (!need_feasible(pop)) return true;
      double q[64];
      long long c0[64];
      long long max_ring = 0;
      for (int j = 0; j < d; ++j) {
        q[j] = z[j] - a_sum[j];
        c0[j] = static_cast<long long>(std::floor(q[j] / cell_w_));
        max_ring = std::max(max_ring, std::max(c0[j] - cell_min_[j], cell_max_[j] - c0[j]));
      }
      for (long long r = 0; r <= max_ring; ++r) {
        if (static_cast<double>(r - 1) * cell_w_ >= best_err) break;
        scan_ring(c0, r, pop, q, examined, best_err, a_mask, best_a, best_b);
      }
      return true;
    });
    return {best_a, best_b};
  }

  void scan_cell(const long long* cell, int pop, const double* q, std::uint64_t& examined,
                 double& best_err, std::uint64_t a_mask, std::uint64_t& best_a,
                 std::uint64_t& best_b) const {
    const auto it = buckets_.find(cell_hash(cell, m_.d));
    if (it == buckets_.end()) return;
    for (const std::uint32_t b_mask : it->second) {
      if (!popcount_ok(pop, b_mask)) continue;
      ++examined;
      const double* bs = &sums_[static_cast<std::size_t>(b_mask) * m_.d];
      double e = 0.0;
      for (int j = 0; j < m_.d; ++j) e = std::max(e, std::abs(q[j] - bs[j]));
      if (e < best_err) {
        best_err = e;
        best_a = a_mask;
        best_b = b_mask;
      }
    }
  }

  // All cells at Chebyshev distance exactly r from c0.
  void scan_ring(const long long* c0, long long r, int pop, const double* q,
                 std::uint64_t& examined, double& best_err, std::uint64_t a_mask,
                 std::uint64_t& best_a, std::uint64_t& best_b) const {
    const int d = m_.d;
    long long cell[64];
    if (r == 0) {
      std::copy(c0, c0 + d, cell);
      scan_cell(cell, pop, q, examined, best_err, a_mask, best_a, best_b);
      return;
    }
    long long off[64];
    std::fill(off, off + d, -r);
    for (;;) {
      bool on_ring = false;
      for (int j = 0; j < d; ++j) on_ring |= (off[j] == -r || off[j] == r);
      if (on_ring) {
        for (int j = 0; j < d; ++j) cell[j] = c0[j] + off[j];
        scan_cell(cell, pop, q, examined, best_err, a_mask, best_a, best_b);
      }
      int j = 0;
      while (j < d && off[j] == r) {
        off[j] = -r;
        ++j;
      }
      if (j == d) break;
      ++off[j];
    }
  }

  const SampleMatrix& m_;
  double eps_;
  std::optional<int> card_;
  double cell_w_;
  long n_a_ = 0;
  long n_b_ = 0;
  std::vector<double> sums_;  // second-half sums, indexed by mask
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets_;
  std::vector<long long> cell_min_, cell_max_;
};

// Branching-frontier subset sums for d = 1: the set of all prefix subset
// sums, grid-deduplicated (keep the smallest point per cell) and pruned to a
// window from which the target band is still reachable. Every true subset
// sum within the band stays within n*dedup_cell of a retained point.
std::vector<double> frontier_sums_1d(const SampleMatrix& m, double keep_halfwidth,
                                     double dedup_cell, std::size_t budget) {
  const long n = m.n;
  std::vector<double> suffix(static_cast<std::size_t>(n) + 1, 0.0);
  for (long t = n - 1; t >= 0; --t) suffix[t] = suffix[t + 1] + std::abs(m.at(t, 0));
  const double slack = dedup_cell * static_cast<double>(n);

  std::vector<double> pts{0.0};
  std::vector<double> merged;
  for (long t = 0; t < n; ++t) {
    const double x = m.at(t, 0);
    const double window = keep_halfwidth + suffix[t + 1] + slack;
    merged.clear();
    merged.reserve(2 * pts.size());
    std::size_t i = 0, j = 0;
    long long last_cell = 0;
    bool have_last = false;
    auto emit = [&](double v) {
      if (std::abs(v) > window) return;
      if (dedup_cell > 0.0) {
        const long long cell = static_cast<long long>(std::floor(v / dedup_cell));
        if (have_last && cell == last_cell) return;
        last_cell = cell;
        have_last = true;
      } else if (!merged.empty() && v == merged.back()) {
        return;
      }
      merged.push_back(v);
    };
    while (i < pts.size() || j < pts.size()) {
      const double a = i < pts.size() ? pts[i] : kInf;
      const double b = j < pts.size() ? pts[j] + x : kInf;
      if (a <= b) {
        emit(a);
        ++i;
      } else {
        emit(b);
        ++j;
      }
    }
    if (merged.size() > budget) {
      throw std::runtime_error("frontier engine: " + std::to_string(merged.size()) +
                               " points exceed the budget of " + std::to_string(budget) +
                               "; use a larger dedup cell");
    }
    pts.swap(merged);
  }
  return pts;
}

double nearest_distance_sorted(const std::vector<double>& pts, double z) {
  auto it = std::lower_bound(pts.begin(), pts.end(), z);
  double best = kInf;
  if (it != pts.end()) best = std::min(best, std::abs(*it - z));
  if (it != pts.begin()) best = std::min(best, std::abs(*(it - 1) - z));
  return best;
}

}  // namespace

SearchResult enumerate_exhaustive(const SampleMatrix& m, std::span<const double> z, double epsilon,
                                  std::optional<int> cardinality) {
  check_target_dim(m, z, "enumerate_exhaustive");
  if (m.n > kExhaustiveGuard) {
    throw std::invalid_argument("enumerate_exhaustive: n = " + std::to_string(m.n) +
                                " exceeds the guard (" + std::to_string(kExhaustiveGuard) +
                                "); use meet_in_middle");
  }
  if (cardinality && (*cardinality < 0 || *cardinality > m.n)) {
    throw std::invalid_argument("enumerate_exhaustive: cardinality out of range");
  }
  const auto t0 = Clock::now();
  SearchResult res;
  res.engine = Engine::exhaustive;

  const int d = m.d;
  const std::uint64_t total = std::uint64_t{1} << m.n;
  std::vector<double> sum(d, 0.0);
  std::uint64_t mask = 0;
  int pop = 0;
  double best_err = kInf;
  std::uint64_t best_mask = 0;

  for (std::uint64_t k = 0;; ++k) {
    if (!cardinality || pop == *cardinality) {
      ++res.stats.candidates_examined;
      double e = 0.0;
      for (int j = 0; j < d; ++j) e = std::max(e, std::abs(z[j] - sum[j]));
      if (e < best_err) {
        best_err = e;
        best_mask = mask;
      }
      if (e <= epsilon) {
        res.subset = mask_to_subset(mask);
        res.achieved = exact_row_sum(m, res.subset);
        res.error = linf_err(z, res.achieved);
        if (res.error <= epsilon) {
          res.found = true;
          res.stats.wall_time_s = seconds_since(t0);
          return res;
        }
      }
    }
    if (k + 1 == total) break;
    const int b = std::countr_zero(k + 1);
    mask ^= std::uint64_t{1} << b;
    const bool added = (mask >> b) & 1;
    pop += added ? 1 : -1;
    const double* row = m.row(b);
    for (int j = 0; j < d; ++j) sum[j] += added ? row[j] : -row[j];
    if ((k + 1) % kReanchorPeriod == 0) {
      std::fill(sum.begin(), sum.end(), 0.0);
      std::uint64_t mm = mask;
      while (mm) {
        const int i = std::countr_zero(mm);
        const double* r = m.row(i);
        for (int j = 0; j < d; ++j) sum[j] += r[j];
        mm &= mm - 1;
      }
    }
  }

  res.found = false;
  res.subset = mask_to_subset(best_mask);
  res.achieved = exact_row_sum(m, res.subset);
  res.error = linf_err(z, res.achieved);
  res.stats.wall_time_s = seconds_since(t0);
  return res;
}

long count_hits(const SampleMatrix& m, const SubsetFamily& fam, std::span<const double> z,
                double epsilon) {
  check_target_dim(m, z, "count_hits");
  if (fam.n != m.n) throw std::invalid_argument("count_hits: family and matrix disagree on n");
  long hits = 0;
  std::vector<double> sum(m.d, 0.0);
  for (const auto& subset : fam.subsets) {
    std::fill(sum.begin(), sum.end(), 0.0);
    for (const auto i : subset) {
      const double* row = m.row(i);
      for (int j = 0; j < m.d; ++j) sum[j] += row[j];
    }
    if (linf_err(z, sum) <= epsilon) ++hits;
  }
  return hits;
}

SearchResult meet_in_middle(const SampleMatrix& m, std::span<const double> z, double epsilon,
                            std::optional<int> cardinality, const MimOptions& opts) {
  return MimSolver(m, epsilon, cardinality, opts).solve(z);
}

double CoverageReport::max_error() const {
  double m = 0.0;
  for (const double e : per_point_errors) m = std::max(m, e);
  return m;
}

Engine auto_engine(long n, int d, bool coverage) {
  if (n <= 20) return Engine::exhaustive;
  if (n <= kMimGuard) return Engine::meet_in_middle;
  if (coverage && d == 1) return Engine::frontier;
  throw std::invalid_argument("no exact engine available for n = " + std::to_string(n) +
                              " at d = " + std::to_string(d));
}

CoverageReport cover_grid(const SampleMatrix& m, double epsilon, Engine engine,
                          double range_halfwidth, const CoverOptions& opts) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("cover_grid: epsilon must be positive");
  if (!(range_halfwidth > 0.0)) {
    throw std::invalid_argument("cover_grid: range_halfwidth must be positive");
  }
  const int d = m.d;
  const long per_axis = static_cast<long>(std::ceil(range_halfwidth / epsilon));
  const double total_d = std::pow(static_cast<double>(per_axis), d);
  if (total_d > static_cast<double>(opts.grid_budget)) {
    throw std::invalid_argument("cover_grid: grid needs " + std::to_string(total_d) +
                                " points, over the budget of " + std::to_string(opts.grid_budget));
  }

  CoverageReport rep;
  rep.grid_step = 2.0 * epsilon;
  rep.total_points = static_cast<long>(total_d);
  rep.axis.resize(per_axis);
  for (long i = 0; i < per_axis; ++i) {
    rep.axis[i] = std::min(-range_halfwidth + (2 * i + 1) * epsilon, range_halfwidth - epsilon);
  }
  rep.per_point_errors.reserve(static_cast<std::size_t>(rep.total_points));

  std::optional<MimSolver> mim;
  std::vector<double> frontier;
  if (engine == Engine::meet_in_middle) {
    mim.emplace(m, epsilon, std::nullopt, MimOptions{});
  } else if (engine == Engine::frontier) {
    if (d != 1) throw std::invalid_argument("cover_grid: frontier engine supports d = 1 only");
    double cell = opts.frontier_dedup_cell;
    if (cell <= 0.0 && m.n > 21) cell = 0.1 * epsilon / static_cast<double>(m.n);
    frontier = frontier_sums_1d(m, range_halfwidth + epsilon, cell, opts.frontier_budget);
  }

  std::vector<long> idx(d, 0);
  std::vector<double> center(d, 0.0);
  for (long p = 0; p < rep.total_points; ++p) {
    for (int j = 0; j < d; ++j) center[j] = rep.axis[static_cast<std::size_t>(idx[j])];
    double err;
    bool covered;
    if (engine == Engine::frontier) {
      err = nearest_distance_sorted(frontier, center[0]);
      covered = err <= epsilon;
    } else {
      const SearchResult r = engine == Engine::meet_in_middle
                                 ? mim->solve(center)
                                 : enumerate_exhaustive(m, center, epsilon);
      err = r.error;
      covered = r.found;
    }
    rep.per_point_errors.push_back(err);
    if (covered) {
      ++rep.covered_points;
    } else if (!rep.first_uncovered) {
      rep.first_uncovered = center;
    }
    int j = d - 1;
    while (j >= 0 && ++idx[j] == per_axis) idx[j--] = 0;
  }
  return rep;
}

}  // namespace rss
