#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "starsolve/metric.hpp"

namespace starsolve {

enum class MetricViolation : int {
  NonzeroDiagonal = 0,
  Asymmetry = 1,
  NegativeEntry = 2,
  TriangleInequality = 3,
};

const char* to_string(MetricViolation kind);

/// One concrete axiom violation. `i`, `j` identify the offending entry;
/// `via` is the intermediate element for triangle violations (unused
/// otherwise). `lhs > rhs` (or != for asymmetry) is the failed comparison.
struct ViolationWitness {
  MetricViolation kind;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t via = 0;
  double lhs = 0.0;
  double rhs = 0.0;
};

std::string describe(const ViolationWitness& w);

struct MetricVerdict {
  std::vector<ViolationWitness> witnesses;  // capped; first witness per violated axiom always kept
  std::array<std::size_t, 4> counts_by_kind{};
  bool truncated = false;

  bool valid() const { return witnesses.empty(); }
  std::size_t count(MetricViolation kind) const {
    return counts_by_kind[static_cast<int>(kind)];
  }
};

/// Exhaustive O(u^3) check of the four metric axioms: zero diagonal,
/// symmetry, non-negativity, triangle inequality. Comparisons are exact.
MetricVerdict validate_metric(const MatrixSpace& space, std::size_t max_witnesses = 64);

}  // namespace starsolve
