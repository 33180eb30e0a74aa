#include "starsolve/validate.hpp"

#include <sstream>

namespace starsolve {

const char* to_string(MetricViolation kind) {
  switch (kind) {
    case MetricViolation::NonzeroDiagonal: return "nonzero-diagonal";
    case MetricViolation::Asymmetry: return "asymmetry";
    case MetricViolation::NegativeEntry: return "negative-entry";
    case MetricViolation::TriangleInequality: return "triangle-inequality";
  }
  return "?";
}

std::string describe(const ViolationWitness& w) {
  std::ostringstream os;
  os << to_string(w.kind) << " at ";
  switch (w.kind) {
    case MetricViolation::NonzeroDiagonal:
      os << "(" << w.i << "," << w.i << "): d=" << w.lhs;
      break;
    case MetricViolation::Asymmetry:
      os << "(" << w.i << "," << w.j << "): " << w.lhs << " != " << w.rhs;
      break;
    case MetricViolation::NegativeEntry:
      os << "(" << w.i << "," << w.j << "): " << w.lhs << " < 0";
      break;
    case MetricViolation::TriangleInequality:
      os << "(" << w.i << "," << w.j << ") via " << w.via << ": " << w.lhs << " > " << w.rhs;
      break;
  }
  return os.str();
}

MetricVerdict validate_metric(const MatrixSpace& space, std::size_t max_witnesses) {
  const std::size_t u = space.size();
  MetricVerdict verdict;
  auto record = [&](ViolationWitness w) {
    auto& count = verdict.counts_by_kind[static_cast<int>(w.kind)];
    // Keep the first witness of each kind even past the cap.
    if (verdict.witnesses.size() < max_witnesses || count == 0)
      verdict.witnesses.push_back(w);
    else
      verdict.truncated = true;
    ++count;
  };

  for (std::size_t i = 0; i < u; ++i) {
    if (space.at(i, i) != 0.0)
      record({MetricViolation::NonzeroDiagonal, i, i, 0, space.at(i, i), 0.0});
  }
  for (std::size_t i = 0; i < u; ++i)
    for (std::size_t j = i + 1; j < u; ++j)
      if (space.at(i, j) != space.at(j, i))
        record({MetricViolation::Asymmetry, i, j, 0, space.at(i, j), space.at(j, i)});
  for (std::size_t i = 0; i < u; ++i)
    for (std::size_t j = 0; j < u; ++j)
      if (space.at(i, j) < 0.0)
        record({MetricViolation::NegativeEntry, i, j, 0, space.at(i, j), 0.0});
  for (std::size_t i = 0; i < u; ++i)
    for (std::size_t j = 0; j < u; ++j) {
      if (j == i) continue;
      const double dij = space.at(i, j);
      for (std::size_t via = 0; via < u; ++via) {
        if (via == i || via == j) continue;
        const double detour = space.at(i, via) + space.at(via, j);
        if (dij > detour)
          record({MetricViolation::TriangleInequality, i, j, via, dij, detour});
      }
    }
  return verdict;
}

}  // namespace starsolve
