#include "starsolve/solve.hpp"

#include <chrono>
#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace starsolve {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

StarSolution star_similar_kernel(const SimilarInstance& inst, std::size_t root,
                                 const NearestNeighbor& nn) {
  const MetricSpace& space = inst.space();
  const std::size_t n = inst.n();
  const auto& root_set = inst.set(root);

  // Root choice: score each root candidate by the sum of per-set nearest
  // distances; keep the first strict minimum.
  std::uint32_t best_pos = 0;
  double best_total = std::numeric_limits<double>::infinity();
  for (std::uint32_t pos = 0; pos < root_set.size(); ++pos) {
    double total = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == root) continue;
      total += nn.nearest(space, root_set[pos], inst.set(j)).distance;
    }
    if (total < best_total) {
      best_total = total;
      best_pos = pos;
    }
  }

  // Every other position best-responds to the chosen root element.
  Assignment x(n);
  x[root] = best_pos;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == root) continue;
    x[j] = static_cast<std::uint32_t>(nn.nearest(space, root_set[best_pos], inst.set(j)).index);
  }
  return {root, std::move(x), 0.0};
}

// Per-solve lookup tables: label-pair distances already halved and node
// costs already divided by n, exactly the terms of the star objective.
struct LabelingTables {
  std::vector<double> half_dist;    // k*k
  std::vector<double> scaled_cost;  // n*k
};

LabelingTables build_labeling_tables(const LabelingInstance& inst) {
  const std::size_t n = inst.n();
  const std::size_t k = inst.k();
  const double dn = static_cast<double>(n);
  LabelingTables t;
  t.half_dist.resize(k * k);
  for (std::uint32_t a = 0; a < k; ++a)
    for (std::uint32_t b = 0; b < k; ++b)
      t.half_dist[a * k + b] = inst.space().distance(a, b) / 2.0;
  t.scaled_cost.resize(n * k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::uint32_t l = 0; l < k; ++l)
      t.scaled_cost[i * k + l] = inst.cost(i, l) / dn;
  return t;
}

StarSolution star_labeling_kernel(const LabelingInstance& inst, std::size_t root,
                                  const LabelingTables& t) {
  const std::size_t n = inst.n();
  const std::size_t k = inst.k();
  const auto& root_labels = inst.allowed_labels(root);

  std::uint32_t best_label = root_labels[0];
  double best_total = std::numeric_limits<double>::infinity();
  for (std::uint32_t a : root_labels) {
    double total = t.scaled_cost[root * k + a];
    for (std::size_t j = 0; j < n; ++j) {
      if (j == root) continue;
      double inner = std::numeric_limits<double>::infinity();
      for (std::uint32_t b : inst.allowed_labels(j)) {
        const double v = t.scaled_cost[j * k + b] + t.half_dist[a * k + b];
        if (v < inner) inner = v;
      }
      total += inner;
    }
    if (total < best_total) {
      best_total = total;
      best_label = a;
    }
  }

  Assignment x(n);
  x[root] = best_label;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == root) continue;
    std::uint32_t pick = inst.allowed_labels(j)[0];
    double best = std::numeric_limits<double>::infinity();
    for (std::uint32_t b : inst.allowed_labels(j)) {
      const double v = t.scaled_cost[j * k + b] + t.half_dist[best_label * k + b];
      if (v < best) {
        best = v;
        pick = b;
      }
    }
    x[j] = pick;
  }
  return {root, std::move(x), 0.0};
}

int resolve_threads(int threads) {
  if (threads < 0) throw std::invalid_argument("threads must be >= 0");
#ifdef _OPENMP
  return threads == 0 ? omp_get_max_threads() : threads;
#else
  return 1;
#endif
}

// Runs `n` independent per-root kernels, serially or across OpenMP threads.
// Each root writes only its own slot, so the result does not depend on the
// schedule.
template <typename Kernel>
void for_each_root(std::size_t n, int threads, std::vector<StarSolution>& out, Kernel&& kernel) {
  const int t = resolve_threads(threads);
  if (t == 1) {
    for (std::size_t r = 0; r < n; ++r) out[r] = kernel(r);
    return;
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(t)
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(n); ++r)
    out[static_cast<std::size_t>(r)] = kernel(static_cast<std::size_t>(r));
#else
  for (std::size_t r = 0; r < n; ++r) out[r] = kernel(r);
#endif
}

template <typename FullValue>
SolveReport select_best_root(std::vector<StarSolution>&& stars, FullValue&& full_value) {
  std::size_t best = 0;
  for (std::size_t r = 1; r < stars.size(); ++r)
    if (stars[r].star_value < stars[best].star_value) best = r;
  SolveReport report;
  report.root = best;
  report.assignment = std::move(stars[best].assignment);
  report.star_value = stars[best].star_value;
  report.objective = full_value(report.assignment);
  report.per_root_star_values.reserve(stars.size());
  for (const auto& s : stars) report.per_root_star_values.push_back(s.star_value);
  return report;
}

}  // namespace

StarSolution solve_star_similar(const SimilarInstance& inst, std::size_t root,
                                const NearestNeighbor* nn) {
  if (root >= inst.n()) throw std::out_of_range("root index out of range");
  LinearScan scan;
  StarSolution s = star_similar_kernel(inst, root, nn ? *nn : scan);
  s.star_value = similar_star_objective(inst, root, s.assignment);
  return s;
}

SolveReport solve_similar(const SimilarInstance& inst, const SolveOptions& opts,
                          SolveStats* stats) {
  LinearScan scan;
  const NearestNeighbor& nn = opts.nn ? *opts.nn : scan;
  const std::size_t n = inst.n();
  std::vector<StarSolution> stars(n);

  const auto t0 = Clock::now();
  for_each_root(n, opts.threads, stars, [&](std::size_t r) {
    StarSolution s = star_similar_kernel(inst, r, nn);
    s.star_value = similar_star_objective(inst, r, s.assignment);
    return s;
  });
  const double star_seconds = seconds_since(t0);

  const auto t1 = Clock::now();
  SolveReport report = select_best_root(
      std::move(stars), [&](const Assignment& x) { return similar_objective(inst, x); });
  if (stats) {
    stats->star_stage_seconds = star_seconds;
    stats->selection_seconds = seconds_since(t1);
  }
  return report;
}

StarSolution solve_star_labeling(const LabelingInstance& inst, std::size_t root) {
  if (root >= inst.n()) throw std::out_of_range("root index out of range");
  const LabelingTables tables = build_labeling_tables(inst);
  StarSolution s = star_labeling_kernel(inst, root, tables);
  s.star_value = labeling_star_objective(inst, root, s.assignment);
  return s;
}

SolveReport solve_labeling(const LabelingInstance& inst, const SolveOptions& opts,
                           SolveStats* stats) {
  const std::size_t n = inst.n();
  const LabelingTables tables = build_labeling_tables(inst);
  std::vector<StarSolution> stars(n);

  const auto t0 = Clock::now();
  for_each_root(n, opts.threads, stars, [&](std::size_t r) {
    StarSolution s = star_labeling_kernel(inst, r, tables);
    s.star_value = labeling_star_objective(inst, r, s.assignment);
    return s;
  });
  const double star_seconds = seconds_since(t0);

  const auto t1 = Clock::now();
  SolveReport report = select_best_root(
      std::move(stars), [&](const Assignment& x) { return labeling_objective(inst, x); });
  if (stats) {
    stats->star_stage_seconds = star_seconds;
    stats->selection_seconds = seconds_since(t1);
  }
  return report;
}

LabelingInstance reduce_similar_to_labeling(const SimilarInstance& inst) {
  const std::size_t n = inst.n();
  std::vector<ElementId> members;
  std::vector<std::uint32_t> label_of(inst.space().size(), UINT32_MAX);
  for (std::size_t i = 0; i < n; ++i)
    for (ElementId e : inst.set(i))
      if (label_of[e] == UINT32_MAX) {
        label_of[e] = static_cast<std::uint32_t>(members.size());
        members.push_back(e);
      }
  const std::size_t k = members.size();
  std::vector<std::vector<bool>> masks(n, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < n; ++i)
    for (ElementId e : inst.set(i)) masks[i][label_of[e]] = true;
  auto space = std::make_shared<SubsetSpace>(inst.space_ptr(), std::move(members));
  return LabelingInstance(std::move(space), n, std::vector<double>(n * k, 0.0),
                          std::move(masks));
}

}  // namespace starsolve
