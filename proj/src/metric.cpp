#include "starsolve/metric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace starsolve {

const char* to_string(PointMetric m) {
  switch (m) {
    case PointMetric::L1: return "l1";
    case PointMetric::L2: return "l2";
    case PointMetric::Linf: return "linf";
  }
  return "?";
}

PointMetric point_metric_from_string(std::string_view s) {
  if (s == "l1") return PointMetric::L1;
  if (s == "l2") return PointMetric::L2;
  if (s == "linf") return PointMetric::Linf;
  throw std::invalid_argument("unknown point metric '" + std::string(s) + "'");
}

std::size_t levenshtein(std::string_view a, std::string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  // row[j] = distance between a[0..i) and b[0..j)
  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i + 1;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::size_t sub = diag + (a[i] != b[j] ? 1 : 0);
      diag = row[j + 1];
      row[j + 1] = std::min({row[j + 1] + 1, row[j] + 1, sub});
    }
  }
  return row.back();
}

namespace {

[[noreturn]] void throw_id_range(ElementId id, std::size_t size) {
  throw std::out_of_range("element id " + std::to_string(id) + " out of range (space size " +
                          std::to_string(size) + ")");
}

void check_ids(ElementId a, ElementId b, std::size_t size) {
  if (a >= size) throw_id_range(a, size);
  if (b >= size) throw_id_range(b, size);
}

}  // namespace

MatrixSpace::MatrixSpace(const std::vector<std::vector<double>>& rows) {
  universe_ = rows.size();
  if (universe_ == 0) throw std::invalid_argument("distance matrix must be non-empty");
  d_.reserve(universe_ * universe_);
  for (const auto& row : rows) {
    if (row.size() != universe_)
      throw std::invalid_argument("distance matrix must be square");
    d_.insert(d_.end(), row.begin(), row.end());
  }
  for (double v : d_)
    if (!std::isfinite(v)) throw std::invalid_argument("distance matrix entries must be finite");
}

MatrixSpace::MatrixSpace(std::size_t universe, std::vector<double> flat_row_major)
    : universe_(universe), d_(std::move(flat_row_major)) {
  if (universe_ == 0) throw std::invalid_argument("distance matrix must be non-empty");
  if (d_.size() != universe_ * universe_)
    throw std::invalid_argument("distance matrix must be square");
  for (double v : d_)
    if (!std::isfinite(v)) throw std::invalid_argument("distance matrix entries must be finite");
}

double MatrixSpace::distance(ElementId a, ElementId b) const {
  check_ids(a, b, universe_);
  return d_[static_cast<std::size_t>(a) * universe_ + b];
}

PointSpace::PointSpace(std::size_t dimension, PointMetric metric)
    : dim_(dimension), metric_(metric) {
  if (dim_ == 0) throw std::invalid_argument("point dimension must be positive");
}

ElementId PointSpace::intern(std::span<const double> coords) {
  if (coords.size() != dim_)
    throw std::invalid_argument("point has " + std::to_string(coords.size()) +
                                " coordinates, space dimension is " + std::to_string(dim_));
  for (double v : coords)
    if (!std::isfinite(v)) throw std::invalid_argument("point coordinates must be finite");
  std::vector<double> key(coords.begin(), coords.end());
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  auto id = static_cast<ElementId>(count_);
  coords_.insert(coords_.end(), coords.begin(), coords.end());
  ++count_;
  index_.emplace(std::move(key), id);
  return id;
}

std::span<const double> PointSpace::point(ElementId id) const {
  if (id >= count_) throw_id_range(id, count_);
  return {coords_.data() + static_cast<std::size_t>(id) * dim_, dim_};
}

double PointSpace::distance(ElementId a, ElementId b) const {
  check_ids(a, b, count_);
  const double* pa = coords_.data() + static_cast<std::size_t>(a) * dim_;
  const double* pb = coords_.data() + static_cast<std::size_t>(b) * dim_;
  switch (metric_) {
    case PointMetric::L1: {
      double s = 0.0;
      for (std::size_t c = 0; c < dim_; ++c) s += std::abs(pa[c] - pb[c]);
      return s;
    }
    case PointMetric::L2: {
      double s = 0.0;
      for (std::size_t c = 0; c < dim_; ++c) {
        double diff = pa[c] - pb[c];
        s += diff * diff;
      }
      return std::sqrt(s);
    }
    case PointMetric::Linf: {
      double s = 0.0;
      for (std::size_t c = 0; c < dim_; ++c) s = std::max(s, std::abs(pa[c] - pb[c]));
      return s;
    }
  }
  return 0.0;
}

ElementId StringSpace::intern(std::string_view s) {
  auto it = index_.find(s);
  if (it != index_.end()) return it->second;
  auto id = static_cast<ElementId>(strings_.size());
  strings_.emplace_back(s);
  index_.emplace(strings_.back(), id);
  return id;
}

const std::string& StringSpace::str(ElementId id) const {
  if (id >= strings_.size()) throw_id_range(id, strings_.size());
  return strings_[id];
}

double StringSpace::distance(ElementId a, ElementId b) const {
  check_ids(a, b, strings_.size());
  return static_cast<double>(levenshtein(strings_[a], strings_[b]));
}

SubsetSpace::SubsetSpace(std::shared_ptr<const MetricSpace> base, std::vector<ElementId> members)
    : base_(std::move(base)), members_(std::move(members)) {
  if (!base_) throw std::invalid_argument("subset space needs a base space");
  if (members_.empty()) throw std::invalid_argument("subset space must be non-empty");
  for (ElementId m : members_)
    if (m >= base_->size()) throw_id_range(m, base_->size());
}

ElementId SubsetSpace::member(ElementId id) const {
  if (id >= members_.size()) throw_id_range(id, members_.size());
  return members_[id];
}

double SubsetSpace::distance(ElementId a, ElementId b) const {
  check_ids(a, b, members_.size());
  return base_->distance(members_[a], members_[b]);
}

}  // namespace starsolve
