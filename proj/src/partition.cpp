#include "ccp/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ccp/rng.hpp"

namespace ccp {

namespace {

std::vector<std::size_t> shuffled_indices(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> indices(n);
  std::iota(indices.begin(), indices.end(), std::size_t{0});
  Rng rng(seed);
  rng.shuffle(indices);
  return indices;
}

}  // namespace

void validate_partition(const FoldPartition& partition) {
  if (partition.folds.empty()) throw std::invalid_argument("partition has no folds");
  std::vector<char> seen(partition.num_indices, 0);
  std::size_t covered = 0;
  std::size_t min_size = partition.num_indices, max_size = 0;
  for (const auto& fold : partition.folds) {
    if (fold.empty()) throw std::invalid_argument("partition contains an empty fold");
    min_size = std::min(min_size, fold.size());
    max_size = std::max(max_size, fold.size());
    for (std::size_t i : fold) {
      if (i >= partition.num_indices) throw std::invalid_argument("fold index out of range");
      if (seen[i]) throw std::invalid_argument("folds are not disjoint");
      seen[i] = 1;
      ++covered;
    }
  }
  if (covered != partition.num_indices) throw std::invalid_argument("folds do not cover all indices");
  if (max_size - min_size > 1) throw std::invalid_argument("fold sizes differ by more than one");
}

FoldPartition make_folds(std::size_t num_indices, std::size_t num_folds, std::uint64_t seed) {
  if (num_folds < 2 || num_folds > num_indices) {
    throw std::invalid_argument("fold count " + std::to_string(num_folds) +
                                " must satisfy 2 <= K <= " + std::to_string(num_indices));
  }
  FoldPartition out;
  out.num_indices = num_indices;
  out.seed = seed;
  out.folds.resize(num_folds);
  const auto indices = shuffled_indices(num_indices, seed);
  for (std::size_t pos = 0; pos < indices.size(); ++pos) {
    out.folds[pos % num_folds].push_back(indices[pos]);
  }
  for (auto& fold : out.folds) std::sort(fold.begin(), fold.end());
  return out;
}

SplitPartition make_split(std::size_t num_indices, std::pair<std::size_t, std::size_t> ratio,
                          std::uint64_t seed) {
  if (num_indices < 2) throw std::invalid_argument("split needs at least two examples");
  if (ratio.first == 0 || ratio.second == 0) throw std::invalid_argument("ratio parts must be positive");
  const double share = static_cast<double>(ratio.first) /
                       static_cast<double>(ratio.first + ratio.second);
  auto train = static_cast<std::size_t>(std::llround(static_cast<double>(num_indices) * share));
  train = std::clamp<std::size_t>(train, 1, num_indices - 1);

  SplitPartition out;
  out.seed = seed;
  const auto indices = shuffled_indices(num_indices, seed);
  out.proper_training.assign(indices.begin(), indices.begin() + train);
  out.calibration.assign(indices.begin() + train, indices.end());
  std::sort(out.proper_training.begin(), out.proper_training.end());
  std::sort(out.calibration.begin(), out.calibration.end());
  return out;
}

std::pair<LabeledDataset, LabeledDataset> shuffle_and_split(const LabeledDataset& data,
                                                            std::size_t train_size,
                                                            std::uint64_t seed) {
  if (train_size < 1 || train_size >= data.size()) {
    throw std::invalid_argument("train_size " + std::to_string(train_size) +
                                " must lie in [1, " + std::to_string(data.size()) + ")");
  }
  const auto indices = shuffled_indices(data.size(), seed);
  const std::span<const std::size_t> all(indices);
  return {data.subset(all.first(train_size)), data.subset(all.subspan(train_size))};
}

}  // namespace ccp
