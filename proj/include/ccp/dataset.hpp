#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ccp {

// Label encoded as an index into the dataset's ordered label alphabet.
// Binary problems use {0, 1} with 1 = the positive (spam) class.
using Label = int;

// One object handed to a scoring rule. `row_id` is the example's identity
// (the source row index from ingestion); external score tables key on it.
struct FeatureView {
  std::span<const double> values;
  std::size_t row_id = 0;
};

// Ordered collection of labeled examples with a fixed dimensionality and a
// finite label alphabet. Immutable once filled; safe to share across threads.
class LabeledDataset {
 public:
  LabeledDataset(std::size_t dimensionality, std::size_t alphabet_size);

  // Appends one example. Throws std::invalid_argument on dimension mismatch
  // or a label outside the alphabet. The default row id is the running index.
  void add(std::span<const double> features, Label label);
  void add(std::span<const double> features, Label label, std::size_t row_id);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  std::size_t dimensionality() const { return dim_; }
  std::size_t alphabet_size() const { return alphabet_size_; }

  std::span<const double> features(std::size_t i) const {
    return {features_.data() + i * dim_, dim_};
  }
  Label label(std::size_t i) const { return labels_[i]; }
  std::size_t row_id(std::size_t i) const { return row_ids_[i]; }
  FeatureView view(std::size_t i) const { return {features(i), row_ids_[i]}; }
  const std::vector<Label>& labels() const { return labels_; }

  // New dataset holding the given rows in the given order; row ids travel
  // with their rows.
  LabeledDataset subset(std::span<const std::size_t> indices) const;

 private:
  std::size_t dim_;
  std::size_t alphabet_size_;
  std::vector<double> features_;  // row-major, size() * dim_
  std::vector<Label> labels_;
  std::vector<std::size_t> row_ids_;
};

}  // namespace ccp
