#include "ccp/dataset.hpp"

#include <stdexcept>
#include <string>

namespace ccp {

LabeledDataset::LabeledDataset(std::size_t dimensionality, std::size_t alphabet_size)
    : dim_(dimensionality), alphabet_size_(alphabet_size) {
  if (dimensionality == 0) throw std::invalid_argument("dataset dimensionality must be positive");
  if (alphabet_size < 2) throw std::invalid_argument("label alphabet needs at least two labels");
}

void LabeledDataset::add(std::span<const double> features, Label label) {
  add(features, label, labels_.size());
}

void LabeledDataset::add(std::span<const double> features, Label label, std::size_t row_id) {
  if (features.size() != dim_) {
    throw std::invalid_argument("feature vector has " + std::to_string(features.size()) +
                                " entries, dataset dimensionality is " + std::to_string(dim_));
  }
  if (label < 0 || static_cast<std::size_t>(label) >= alphabet_size_) {
    throw std::invalid_argument("label " + std::to_string(label) + " outside alphabet of size " +
                                std::to_string(alphabet_size_));
  }
  features_.insert(features_.end(), features.begin(), features.end());
  labels_.push_back(label);
  row_ids_.push_back(row_id);
}

LabeledDataset LabeledDataset::subset(std::span<const std::size_t> indices) const {
  LabeledDataset out(dim_, alphabet_size_);
  for (std::size_t i : indices) {
    if (i >= size()) throw std::invalid_argument("subset index out of range");
    out.add(features(i), labels_[i], row_ids_[i]);
  }
  return out;
}

}  // namespace ccp
