#include "starsolve/reference.hpp"

#include <limits>
#include <stdexcept>

namespace starsolve::reference {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

SolveReport finish(const std::vector<StarSolution>& stars, std::size_t best, double objective) {
  SolveReport report;
  report.root = best;
  report.assignment = stars[best].assignment;
  report.star_value = stars[best].star_value;
  report.objective = objective;
  for (const auto& s : stars) report.per_root_star_values.push_back(s.star_value);
  return report;
}

}  // namespace

StarSolution solve_star_similar(const SimilarInstance& inst, std::size_t root) {
  if (root >= inst.n()) throw std::out_of_range("root index out of range");
  const MetricSpace& space = inst.space();
  const std::size_t n = inst.n();
  const auto& root_set = inst.set(root);

  std::uint32_t best_pos = 0;
  double best_total = kInf;
  for (std::uint32_t pos = 0; pos < root_set.size(); ++pos) {
    double total = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == root) continue;
      double nearest = kInf;
      for (ElementId e : inst.set(j)) {
        const double d = space.distance(root_set[pos], e);
        if (d < nearest) nearest = d;
      }
      total += nearest;
    }
    if (total < best_total) {
      best_total = total;
      best_pos = pos;
    }
  }

  Assignment x(n);
  x[root] = best_pos;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == root) continue;
    const auto& set_j = inst.set(j);
    std::uint32_t pick = 0;
    double nearest = kInf;
    for (std::uint32_t pos = 0; pos < set_j.size(); ++pos) {
      const double d = space.distance(root_set[best_pos], set_j[pos]);
      if (d < nearest) {
        nearest = d;
        pick = pos;
      }
    }
    x[j] = pick;
  }
  const double value = similar_star_objective(inst, root, x);
  return {root, std::move(x), value};
}

SolveReport solve_similar(const SimilarInstance& inst) {
  const std::size_t n = inst.n();
  std::vector<StarSolution> stars;
  stars.reserve(n);
  for (std::size_t r = 0; r < n; ++r) stars.push_back(solve_star_similar(inst, r));
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r)
    if (stars[r].star_value < stars[best].star_value) best = r;
  return finish(stars, best, similar_objective(inst, stars[best].assignment));
}

StarSolution solve_star_labeling(const LabelingInstance& inst, std::size_t root) {
  if (root >= inst.n()) throw std::out_of_range("root index out of range");
  const MetricSpace& space = inst.space();
  const std::size_t n = inst.n();
  const double dn = static_cast<double>(n);

  std::uint32_t best_label = inst.allowed_labels(root)[0];
  double best_total = kInf;
  for (std::uint32_t a : inst.allowed_labels(root)) {
    double total = inst.cost(root, a) / dn;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == root) continue;
      double inner = kInf;
      for (std::uint32_t b : inst.allowed_labels(j)) {
        const double v = inst.cost(j, b) / dn + space.distance(a, b) / 2.0;
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
    double best = kInf;
    for (std::uint32_t b : inst.allowed_labels(j)) {
      const double v = inst.cost(j, b) / dn + space.distance(best_label, b) / 2.0;
      if (v < best) {
        best = v;
        pick = b;
      }
    }
    x[j] = pick;
  }
  const double value = labeling_star_objective(inst, root, x);
  return {root, std::move(x), value};
}

SolveReport solve_labeling(const LabelingInstance& inst) {
  const std::size_t n = inst.n();
  std::vector<StarSolution> stars;
  stars.reserve(n);
  for (std::size_t r = 0; r < n; ++r) stars.push_back(solve_star_labeling(inst, r));
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r)
    if (stars[r].star_value < stars[best].star_value) best = r;
  return finish(stars, best, labeling_objective(inst, stars[best].assignment));
}

}  // namespace starsolve::reference
