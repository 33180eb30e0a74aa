#include "starsolve/nearest.hpp"

#include <stdexcept>

namespace starsolve {

NearestResult nearest_allowed(const MetricSpace& space, ElementId query,
                              std::span<const ElementId> candidates) {
  if (candidates.empty()) throw std::invalid_argument("nearest_allowed: empty candidate list");
  NearestResult best{0, space.distance(query, candidates[0])};
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const double d = space.distance(query, candidates[i]);
    if (d < best.distance) best = {i, d};
  }
  return best;
}

}  // namespace starsolve
