#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ccp/dataset.hpp"

namespace ccp {

// Partition of {0, ..., num_indices-1} into folds of near-equal size
// (any two fold sizes differ by at most one). Regenerating with the same
// (num_indices, K, seed) yields the identical partition.
struct FoldPartition {
  std::size_t num_indices = 0;
  std::vector<std::vector<std::size_t>> folds;  // each sorted ascending
  std::uint64_t seed = 0;

  std::size_t num_folds() const { return folds.size(); }
};

// Throws std::invalid_argument if the folds are not disjoint, non-empty,
// covering, and balanced (max - min fold size <= 1).
void validate_partition(const FoldPartition& partition);

// Shuffles indices with the seed, then deals them round-robin into K folds,
// which guarantees the balance invariant by construction.
FoldPartition make_folds(std::size_t num_indices, std::size_t num_folds, std::uint64_t seed);

// Two-part split into a proper training set and a calibration set.
struct SplitPartition {
  std::vector<std::size_t> proper_training;  // sorted ascending
  std::vector<std::size_t> calibration;      // sorted ascending
  std::uint64_t seed = 0;
};

// |proper_training| = round(l * a / (a + b)), clamped so both parts are
// non-empty. The 2:1 default matches the standard proper-training /
// calibration proportion.
SplitPartition make_split(std::size_t num_indices, std::pair<std::size_t, std::size_t> ratio,
                          std::uint64_t seed);

// Deterministic shuffle of the dataset followed by a prefix/suffix split.
// The two parts together are a permutation of the input.
std::pair<LabeledDataset, LabeledDataset> shuffle_and_split(const LabeledDataset& data,
                                                            std::size_t train_size,
                                                            std::uint64_t seed);

}  // namespace ccp
