#include "starsolve/instance.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace starsolve {

SimilarInstance::SimilarInstance(std::shared_ptr<const MetricSpace> space,
                                 std::vector<std::vector<ElementId>> sets)
    : space_(std::move(space)), sets_(std::move(sets)) {
  if (!space_) throw std::invalid_argument("instance needs a metric space");
  if (sets_.empty()) throw std::invalid_argument("instance needs at least one set");
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (sets_[i].empty())
      throw std::invalid_argument("set " + std::to_string(i) + " is empty");
    for (ElementId e : sets_[i])
      if (e >= space_->size())
        throw std::invalid_argument("set " + std::to_string(i) + " references element " +
                                    std::to_string(e) + " outside the space");
    max_set_size_ = std::max(max_set_size_, sets_[i].size());
  }
}

const std::vector<ElementId>& SimilarInstance::set(std::size_t i) const {
  if (i >= sets_.size()) throw std::out_of_range("set index out of range");
  return sets_[i];
}

ElementId SimilarInstance::element(std::size_t i, std::uint32_t pos) const {
  const auto& s = set(i);
  if (pos >= s.size()) throw std::out_of_range("position out of range for set");
  return s[pos];
}

void SimilarInstance::check_assignment(const Assignment& x) const {
  if (x.size() != sets_.size())
    throw std::invalid_argument("assignment length " + std::to_string(x.size()) +
                                " does not match instance size " + std::to_string(sets_.size()));
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] >= sets_[i].size())
      throw std::invalid_argument("assignment entry " + std::to_string(i) + " = " +
                                  std::to_string(x[i]) + " exceeds set size " +
                                  std::to_string(sets_[i].size()));
}

LabelingInstance::LabelingInstance(std::shared_ptr<const MetricSpace> label_space,
                                   std::size_t num_nodes, std::vector<double> node_costs,
                                   std::vector<std::vector<bool>> masks)
    : space_(std::move(label_space)),
      num_nodes_(num_nodes),
      node_costs_(std::move(node_costs)),
      masks_(std::move(masks)) {
  if (!space_) throw std::invalid_argument("instance needs a label space");
  k_ = space_->size();
  if (num_nodes_ == 0) throw std::invalid_argument("instance needs at least one node");
  if (node_costs_.size() != num_nodes_ * k_)
    throw std::invalid_argument("node_costs must have n*k entries");
  for (double c : node_costs_)
    if (!(c >= 0.0) || !std::isfinite(c))
      throw std::invalid_argument("node costs must be non-negative and finite");
  if (!masks_.empty() && masks_.size() != num_nodes_)
    throw std::invalid_argument("masks must have one row per node");
  allowed_.resize(num_nodes_);
  for (std::size_t i = 0; i < num_nodes_; ++i) {
    auto& row = allowed_[i];
    if (masks_.empty()) {
      row.resize(k_);
      for (std::size_t l = 0; l < k_; ++l) row[l] = static_cast<ElementId>(l);
    } else {
      if (masks_[i].size() != k_)
        throw std::invalid_argument("mask row " + std::to_string(i) + " must have k entries");
      for (std::size_t l = 0; l < k_; ++l)
        if (masks_[i][l]) row.push_back(static_cast<ElementId>(l));
      if (row.empty())
        throw std::invalid_argument("mask row " + std::to_string(i) + " permits no label");
    }
  }
}

bool LabelingInstance::allowed(std::size_t node, std::uint32_t label) const {
  if (node >= num_nodes_ || label >= k_) return false;
  return masks_.empty() || masks_[node][label];
}

const std::vector<ElementId>& LabelingInstance::allowed_labels(std::size_t node) const {
  if (node >= num_nodes_) throw std::out_of_range("node index out of range");
  return allowed_[node];
}

void LabelingInstance::check_assignment(const Assignment& x) const {
  if (x.size() != num_nodes_)
    throw std::invalid_argument("assignment length " + std::to_string(x.size()) +
                                " does not match node count " + std::to_string(num_nodes_));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] >= k_)
      throw std::invalid_argument("assignment entry " + std::to_string(i) + " = " +
                                  std::to_string(x[i]) + " is not a label (k = " +
                                  std::to_string(k_) + ")");
    if (!masks_.empty() && !masks_[i][x[i]])
      throw std::invalid_argument("assignment entry " + std::to_string(i) + " = " +
                                  std::to_string(x[i]) + " violates the node's mask");
  }
}

}  // namespace starsolve
