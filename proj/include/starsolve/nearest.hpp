#pragma once

#include <cstddef>
#include <span>

#include "starsolve/metric.hpp"

namespace starsolve {

struct NearestResult {
  std::size_t index;  // position within the candidate list
  double distance;
};

/// Candidate minimizing d(query, .), smallest index on ties, by linear scan.
/// Throws std::invalid_argument on an empty candidate list.
NearestResult nearest_allowed(const MetricSpace& space, ElementId query,
                              std::span<const ElementId> candidates);

/// The query the similar-elements star DP spends its time on. The default is
/// the linear scan above; a sublinear structure (kd-tree, cover tree, ...)
/// can be swapped in behind this interface without touching the solver.
/// Implementations must be exact, deterministic and thread-safe.
class NearestNeighbor {
 public:
  virtual ~NearestNeighbor() = default;
  virtual NearestResult nearest(const MetricSpace& space, ElementId query,
                                std::span<const ElementId> candidates) const = 0;
};

class LinearScan final : public NearestNeighbor {
 public:
  NearestResult nearest(const MetricSpace& space, ElementId query,
                        std::span<const ElementId> candidates) const override {
    return nearest_allowed(space, query, candidates);
  }
};

}  // namespace starsolve
