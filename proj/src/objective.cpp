#include "starsolve/objective.hpp"

#include <stdexcept>

namespace starsolve {

double similar_objective(const SimilarInstance& inst, const Assignment& x) {
  inst.check_assignment(x);
  const MetricSpace& space = inst.space();
  const std::size_t n = inst.n();
  double unordered = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const ElementId ei = inst.set(i)[x[i]];
    for (std::size_t j = i + 1; j < n; ++j)
      unordered += space.distance(ei, inst.set(j)[x[j]]);
  }
  return 2.0 * unordered;
}

double similar_star_objective(const SimilarInstance& inst, std::size_t root,
                              const Assignment& x) {
  inst.check_assignment(x);
  if (root >= inst.n()) throw std::out_of_range("root index out of range");
  const MetricSpace& space = inst.space();
  const ElementId er = inst.set(root)[x[root]];
  double sum = 0.0;
  for (std::size_t j = 0; j < inst.n(); ++j) {
    if (j == root) continue;
    sum += space.distance(er, inst.set(j)[x[j]]);
  }
  return sum;
}

double labeling_objective(const LabelingInstance& inst, const Assignment& x) {
  inst.check_assignment(x);
  const MetricSpace& space = inst.space();
  const std::size_t n = inst.n();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += inst.cost(i, x[i]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) sum += space.distance(x[i], x[j]);
  return sum;
}

double labeling_star_objective(const LabelingInstance& inst, std::size_t root,
                               const Assignment& x) {
  inst.check_assignment(x);
  if (root >= inst.n()) throw std::out_of_range("root index out of range");
  const MetricSpace& space = inst.space();
  const std::size_t n = inst.n();
  const double dn = static_cast<double>(n);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += inst.cost(i, x[i]) / dn;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == root) continue;
    sum += space.distance(x[root], x[j]) / 2.0;
  }
  return sum;
}

}  // namespace starsolve
