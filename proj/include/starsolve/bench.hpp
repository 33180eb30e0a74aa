#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "starsolve/io.hpp"

namespace starsolve {

struct BenchPoint {
  std::size_t n = 0;
  std::size_t k = 0;
  double median_seconds = 0.0;
  std::vector<double> rep_seconds;  // sorted
  double objective = 0.0;           // solver output, keeps the runs honest
};

struct BenchOptions {
  Family family = Family::RandomMetric;
  std::vector<std::size_t> n_list{50, 100, 200, 400};
  std::vector<std::size_t> k_list{10};
  std::uint64_t seed = 1;
  int reps = 5;     // timed repetitions; one extra warm-up run is discarded
  int threads = 1;
};

struct SlopeFit {
  std::size_t fixed = 0;  // the k (for n-scaling) or n (for k-scaling) held fixed
  double slope = 0.0;
};

struct BenchReport {
  BenchOptions options;
  std::vector<BenchPoint> points;               // grid in (k, n) order
  std::vector<SlopeFit> slope_vs_n;             // one fit per k with >= 2 n values
  std::vector<SlopeFit> slope_vs_k;             // one fit per n with >= 2 k values
};

/// Least-squares slope of log(t) against log(x).
double fit_loglog_slope(std::span<const std::pair<double, double>> points);

/// Median wall time of solve_similar over `reps` runs after one warm-up.
double time_solve_similar(const SimilarInstance& inst, int threads, int reps,
                          std::vector<double>* rep_seconds = nullptr, double* objective = nullptr);

/// Generates one similar-elements instance per grid cell (fixed set size k)
/// and times the solver on it.
BenchReport run_bench(const BenchOptions& options);

}  // namespace starsolve
