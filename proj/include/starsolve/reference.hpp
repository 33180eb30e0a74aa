#pragma once

#include "starsolve/solve.hpp"

namespace starsolve::reference {

// Single-threaded, allocation-light transcriptions of the star DP and root
// selection, with no distance caching and no nearest-neighbor indirection.
// Kept as the baseline the optimized/parallel kernels are tested and
// benchmarked against; results are bit-identical to the production solvers.

StarSolution solve_star_similar(const SimilarInstance& inst, std::size_t root);
SolveReport solve_similar(const SimilarInstance& inst);

StarSolution solve_star_labeling(const LabelingInstance& inst, std::size_t root);
SolveReport solve_labeling(const LabelingInstance& inst);

}  // namespace starsolve::reference
