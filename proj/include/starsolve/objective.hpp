#pragma once

#include <cstddef>

#include "starsolve/instance.hpp"

namespace starsolve {

/// Similar-elements objective: the sum of d(x_i, x_j) over all ordered pairs
/// i != j. Every unordered pair is counted twice; the value equals 2x the
/// unordered-pair sum and that is the convention reported everywhere in this
/// library. Validates the assignment.
double similar_objective(const SimilarInstance& inst, const Assignment& x);

/// Star objective rooted at `root`: sum over j != root of d(x_root, x_j).
/// Summing this over all roots reproduces similar_objective.
double similar_star_objective(const SimilarInstance& inst, std::size_t root,
                              const Assignment& x);

/// Labeling objective: sum of node costs plus the sum of d(x_i, x_j) over
/// unordered pairs {i, j} (the complete graph's edges, each counted once).
double labeling_objective(const LabelingInstance& inst, const Assignment& x);

/// Star objective rooted at `root`: sum of m_i(x_i)/n over all nodes plus
/// sum over j != root of d(x_root, x_j)/2. Summing over all roots
/// reproduces labeling_objective.
double labeling_star_objective(const LabelingInstance& inst, std::size_t root,
                               const Assignment& x);

}  // namespace starsolve
