#include "starsolve/exact.hpp"

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace starsolve {

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<std::uint64_t>::max() / b)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

void check_budget(std::uint64_t count, std::uint64_t budget) {
  if (count <= budget) return;
  std::string shown = count == std::numeric_limits<std::uint64_t>::max()
                          ? std::string("more than 2^64 - 1")
                          : std::to_string(count);
  throw BudgetExceeded("exact enumeration needs " + shown + " assignments, budget is " +
                       std::to_string(budget));
}

// Distance access for the inner enumeration loop. Matrix spaces are already
// lookups; for other spaces the distances between the elements actually used
// are computed once into a dense table, provided it stays small. Either way
// the doubles are exactly the space's outputs.
class DistanceLookup {
 public:
  DistanceLookup(const MetricSpace& space, std::span<const std::vector<ElementId>> id_lists)
      : space_(space) {
    static constexpr std::size_t kMaxTableEntries = 4'000'000;
    if (dynamic_cast<const MatrixSpace*>(&space) != nullptr) return;
    std::vector<bool> used(space.size(), false);
    for (const auto& list : id_lists)
      for (ElementId e : list) used[e] = true;
    std::vector<ElementId> ids;
    for (std::size_t e = 0; e < used.size(); ++e)
      if (used[e]) ids.push_back(static_cast<ElementId>(e));
    const std::size_t m = ids.size();
    if (m * m > kMaxTableEntries) return;
    compact_.assign(space.size(), 0);
    for (std::size_t i = 0; i < m; ++i) compact_[ids[i]] = static_cast<std::uint32_t>(i);
    table_.resize(m * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) table_[i * m + j] = space.distance(ids[i], ids[j]);
    width_ = m;
  }

  double operator()(ElementId a, ElementId b) const {
    if (width_ == 0) return space_.distance(a, b);
    return table_[static_cast<std::size_t>(compact_[a]) * width_ + compact_[b]];
  }

 private:
  const MetricSpace& space_;
  std::vector<std::uint32_t> compact_;
  std::vector<double> table_;
  std::size_t width_ = 0;
};

// Enumerates all choice tuples in lexicographic order (position 0 most
// significant) and keeps the first strict minimum of `value`.
template <typename Value>
ExactResult enumerate_min(std::span<const std::size_t> sizes, std::uint64_t count, Value&& value) {
  const std::size_t n = sizes.size();
  Assignment x(n, 0);
  Assignment best_x = x;
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t it = 0; it < count; ++it) {
    const double v = value(x);
    if (v < best) {
      best = v;
      best_x = x;
    }
    // odometer increment, least-significant digit last
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++x[pos] < sizes[pos]) break;
      x[pos] = 0;
    }
  }
  return {std::move(best_x), best, count};
}

}  // namespace

std::uint64_t assignment_count(const SimilarInstance& inst) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < inst.n(); ++i) count = sat_mul(count, inst.set(i).size());
  return count;
}

std::uint64_t assignment_count(const LabelingInstance& inst) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < inst.n(); ++i)
    count = sat_mul(count, inst.allowed_labels(i).size());
  return count;
}

ExactResult exact_similar(const SimilarInstance& inst, std::uint64_t budget) {
  const std::uint64_t count = assignment_count(inst);
  check_budget(count, budget);
  const std::size_t n = inst.n();
  const DistanceLookup dist(inst.space(), inst.sets());
  std::vector<std::size_t> sizes(n);
  for (std::size_t i = 0; i < n; ++i) sizes[i] = inst.set(i).size();

  // Same pair order as similar_objective, so values agree bit for bit.
  auto value = [&](const Assignment& x) {
    double unordered = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const ElementId ei = inst.set(i)[x[i]];
      for (std::size_t j = i + 1; j < n; ++j) unordered += dist(ei, inst.set(j)[x[j]]);
    }
    return 2.0 * unordered;
  };
  return enumerate_min(sizes, count, value);
}

ExactResult exact_labeling(const LabelingInstance& inst, std::uint64_t budget) {
  const std::uint64_t count = assignment_count(inst);
  check_budget(count, budget);
  const std::size_t n = inst.n();
  std::vector<std::vector<ElementId>> allowed;
  allowed.reserve(n);
  for (std::size_t i = 0; i < n; ++i) allowed.push_back(inst.allowed_labels(i));
  const DistanceLookup dist(inst.space(), allowed);
  std::vector<std::size_t> sizes(n);
  for (std::size_t i = 0; i < n; ++i) sizes[i] = allowed[i].size();

  // Candidate tuples index the per-node allowed lists; the result is mapped
  // back to label ids. Allowed lists ascend, so enumeration order is
  // lexicographic over labels as well.
  auto value = [&](const Assignment& x) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += inst.cost(i, allowed[i][x[i]]);
    for (std::size_t i = 0; i < n; ++i) {
      const ElementId li = allowed[i][x[i]];
      for (std::size_t j = i + 1; j < n; ++j) sum += dist(li, allowed[j][x[j]]);
    }
    return sum;
  };
  ExactResult result = enumerate_min(sizes, count, value);
  for (std::size_t i = 0; i < n; ++i) result.assignment[i] = allowed[i][result.assignment[i]];
  return result;
}

}  // namespace starsolve
