#pragma once

#include <cstdint>
#include <stdexcept>

#include "starsolve/instance.hpp"

namespace starsolve {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// Thrown when the assignment count exceeds the enumeration budget. The
/// oracle refuses instead of approximating.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExactResult {
  Assignment assignment;    // first minimizer in lexicographic index order
  double objective;
  std::uint64_t enumerated; // product of the per-position candidate counts
};

/// Number of assignments exact_similar would enumerate, saturating at
/// 2^64 - 1.
std::uint64_t assignment_count(const SimilarInstance& inst);
std::uint64_t assignment_count(const LabelingInstance& inst);

/// Exhaustive minimization of the similar-elements objective. Ground truth
/// for approximation-ratio tests; deliberately brute force.
ExactResult exact_similar(const SimilarInstance& inst, std::uint64_t budget = kDefaultBudget);

/// Exhaustive minimization of the labeling objective under masks.
ExactResult exact_labeling(const LabelingInstance& inst, std::uint64_t budget = kDefaultBudget);

}  // namespace starsolve
