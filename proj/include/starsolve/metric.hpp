#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace starsolve {

/// Identifies an element of a metric space: a row of an explicit distance
/// matrix, an interned point, or an interned string.
using ElementId = std::uint32_t;

enum class PointMetric { L1, L2, Linf };

const char* to_string(PointMetric m);
PointMetric point_metric_from_string(std::string_view s);

/// Unit-cost edit distance (insert, delete, substitute) between byte strings.
std::size_t levenshtein(std::string_view a, std::string_view b);

/// A universe of elements with a pairwise distance. Implementations are
/// immutable once an instance references them and safe to query from any
/// number of threads.
class MetricSpace {
 public:
  virtual ~MetricSpace() = default;

  /// Number of addressable elements.
  virtual std::size_t size() const = 0;

  /// Distance between two elements. Throws std::out_of_range if either id
  /// is >= size().
  virtual double distance(ElementId a, ElementId b) const = 0;
};

/// Explicit u x u distance matrix; elements are row indices 0..u-1.
/// The constructor only enforces shape and finiteness; the metric axioms
/// are checked separately (see validate.hpp).
class MatrixSpace final : public MetricSpace {
 public:
  explicit MatrixSpace(const std::vector<std::vector<double>>& rows);
  MatrixSpace(std::size_t universe, std::vector<double> flat_row_major);

  std::size_t size() const override { return universe_; }
  double distance(ElementId a, ElementId b) const override;

  /// Unchecked lookup.
  double at(std::size_t i, std::size_t j) const { return d_[i * universe_ + j]; }

 private:
  std::size_t universe_;
  std::vector<double> d_;  // row-major
};

/// Points in R^dim under an Lp metric. Points are interned: identical
/// coordinate vectors share one id.
class PointSpace final : public MetricSpace {
 public:
  PointSpace(std::size_t dimension, PointMetric metric);

  /// Registers a point and returns its id; returns the existing id for an
  /// exact duplicate. Throws std::invalid_argument on dimension mismatch or
  /// non-finite coordinates.
  ElementId intern(std::span<const double> coords);

  std::span<const double> point(ElementId id) const;
  std::size_t dimension() const { return dim_; }
  PointMetric metric() const { return metric_; }

  std::size_t size() const override { return count_; }
  double distance(ElementId a, ElementId b) const override;

 private:
  std::size_t dim_;
  PointMetric metric_;
  std::size_t count_ = 0;
  std::vector<double> coords_;  // count_ * dim_
  std::map<std::vector<double>, ElementId> index_;
};

/// Byte strings under Levenshtein distance, interned like PointSpace.
class StringSpace final : public MetricSpace {
 public:
  ElementId intern(std::string_view s);
  const std::string& str(ElementId id) const;

  std::size_t size() const override { return strings_.size(); }
  double distance(ElementId a, ElementId b) const override;

 private:
  std::vector<std::string> strings_;
  std::map<std::string, ElementId, std::less<>> index_;
};

/// A subset of another space, re-indexed 0..members-1. Element i of the
/// subset is element member(i) of the base space. Used to restrict a metric
/// to a label set without copying distances.
class SubsetSpace final : public MetricSpace {
 public:
  SubsetSpace(std::shared_ptr<const MetricSpace> base, std::vector<ElementId> members);

  const MetricSpace& base() const { return *base_; }
  std::shared_ptr<const MetricSpace> base_ptr() const { return base_; }
  ElementId member(ElementId id) const;

  std::size_t size() const override { return members_.size(); }
  double distance(ElementId a, ElementId b) const override;

 private:
  std::shared_ptr<const MetricSpace> base_;
  std::vector<ElementId> members_;
};

}  // namespace starsolve
