#pragma once

#include <cstddef>
#include <vector>

#include "starsolve/instance.hpp"
#include "starsolve/nearest.hpp"
#include "starsolve/objective.hpp"

namespace starsolve {

/// Optimal solution of one star subproblem: the root's choice is made first
/// (one dynamic-programming step over the root's candidates, each scored by
/// the sum of per-neighbor minima), then every non-root position picks its
/// best response to the root. All ties break to the smallest index.
struct StarSolution {
  std::size_t root;
  Assignment assignment;
  double star_value;  // star objective re-evaluated on `assignment`
};

/// Result of solving all n star subproblems and keeping the best root.
struct SolveReport {
  std::size_t root;                         // selected root (smallest on ties)
  Assignment assignment;                    // the selected star's assignment
  double star_value;                        // min of per_root_star_values
  double objective;                         // full objective of `assignment`;
                                            // guaranteed <= 2x the exact optimum
  std::vector<double> per_root_star_values; // one entry per root
};

struct SolveStats {
  double star_stage_seconds = 0.0;  // all n per-root DPs
  double selection_seconds = 0.0;   // argmin over roots + final evaluation
};

struct SolveOptions {
  /// 1 = serial, 0 = one thread per hardware core, otherwise that many
  /// OpenMP threads across the independent per-root subproblems. The report
  /// is bit-identical for every setting.
  int threads = 1;
  /// Nearest-neighbor backend for the similar-elements DP; null = linear scan.
  const NearestNeighbor* nn = nullptr;
};

StarSolution solve_star_similar(const SimilarInstance& inst, std::size_t root,
                                const NearestNeighbor* nn = nullptr);

/// 2-approximation for the similar elements problem: solves the n star
/// subproblems (O(n k^2) each via linear-scan nearest neighbor) and returns
/// the root with the smallest star value. O(n^2 k^2) total.
SolveReport solve_similar(const SimilarInstance& inst, const SolveOptions& opts = {},
                          SolveStats* stats = nullptr);

StarSolution solve_star_labeling(const LabelingInstance& inst, std::size_t root);

/// 2-approximation for metric labeling on the complete graph; same per-root
/// DP and root selection, with node costs scaled by 1/n and edge terms by
/// 1/2 inside each star subproblem. O(n^2 k^2) total.
SolveReport solve_labeling(const LabelingInstance& inst, const SolveOptions& opts = {},
                           SolveStats* stats = nullptr);

/// Casts a similar-elements instance as a labeling instance: the label set
/// is the deduplicated union of the sets (first-occurrence order), node
/// costs are zero, and node i's mask permits exactly the labels of S_i. A
/// labeling assignment's objective is exactly half the similar objective of
/// the corresponding element choices.
LabelingInstance reduce_similar_to_labeling(const SimilarInstance& inst);

}  // namespace starsolve
