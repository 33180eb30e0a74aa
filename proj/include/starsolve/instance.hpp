#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "starsolve/metric.hpp"

namespace starsolve {

/// One chosen index per position: for a similar-elements instance entry i is
/// a position within set i; for a labeling instance it is a label id.
using Assignment = std::vector<std::uint32_t>;

/// n non-empty finite subsets of a metric space. The goal is to pick one
/// element per set so the picks are mutually close.
class SimilarInstance {
 public:
  SimilarInstance(std::shared_ptr<const MetricSpace> space,
                  std::vector<std::vector<ElementId>> sets);

  std::size_t n() const { return sets_.size(); }
  /// Largest set size (the k in the O(n^2 k^2) solver bound).
  std::size_t max_set_size() const { return max_set_size_; }
  const std::vector<ElementId>& set(std::size_t i) const;
  const std::vector<std::vector<ElementId>>& sets() const { return sets_; }

  /// Element chosen by position `pos` of set `i`.
  ElementId element(std::size_t i, std::uint32_t pos) const;

  const MetricSpace& space() const { return *space_; }
  const std::shared_ptr<const MetricSpace>& space_ptr() const { return space_; }

  /// Throws std::invalid_argument unless `x` has length n with every entry a
  /// valid position.
  void check_assignment(const Assignment& x) const;

 private:
  std::shared_ptr<const MetricSpace> space_;
  std::vector<std::vector<ElementId>> sets_;
  std::size_t max_set_size_ = 0;
};

/// Metric labeling on the (implicit) complete graph over n nodes: a label
/// set carrying a metric, a non-negative cost per (node, label), and an
/// optional per-node mask of permitted labels.
class LabelingInstance {
 public:
  /// `node_costs` is n*k row-major. `masks`, when non-empty, has n rows of k
  /// booleans, each row with at least one true entry.
  LabelingInstance(std::shared_ptr<const MetricSpace> label_space, std::size_t num_nodes,
                   std::vector<double> node_costs,
                   std::vector<std::vector<bool>> masks = {});

  std::size_t n() const { return num_nodes_; }
  std::size_t k() const { return k_; }

  double cost(std::size_t node, std::uint32_t label) const {
    return node_costs_[node * k_ + label];
  }
  const std::vector<double>& costs_flat() const { return node_costs_; }

  bool has_masks() const { return !masks_.empty(); }
  const std::vector<std::vector<bool>>& masks() const { return masks_; }
  bool allowed(std::size_t node, std::uint32_t label) const;
  /// Permitted labels of a node, ascending. All labels when unmasked.
  const std::vector<ElementId>& allowed_labels(std::size_t node) const;

  const MetricSpace& space() const { return *space_; }
  const std::shared_ptr<const MetricSpace>& space_ptr() const { return space_; }

  /// Throws std::invalid_argument unless `x` has length n and every entry is
  /// an in-range, mask-permitted label.
  void check_assignment(const Assignment& x) const;

 private:
  std::shared_ptr<const MetricSpace> space_;
  std::size_t num_nodes_;
  std::size_t k_;
  std::vector<double> node_costs_;
  std::vector<std::vector<bool>> masks_;              // empty when unmasked
  std::vector<std::vector<ElementId>> allowed_;       // one ascending row per node
};

}  // namespace starsolve
