#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "decomp/types.hpp"

namespace decomp {

/// A partition of {0, ..., n-1}, stored as a restricted growth string:
/// block ids are assigned in order of each block's least member, so two
/// partitions are equal iff their label vectors are equal.
class Partition {
 public:
  Partition() = default;

  static Partition zero(std::size_t n);
  static Partition one(std::size_t n);

  /// Canonicalizes arbitrary labels (equal label = same block).
  static Partition from_labels(std::span<const std::uint32_t> labels);
  /// Throws InputError unless `blocks` is a disjoint cover of 0..n-1.
  static Partition from_blocks(std::size_t n,
                               const std::vector<std::vector<State>>& blocks);

  std::size_t element_count() const noexcept { return labels_.size(); }
  std::size_t block_count() const noexcept { return block_count_; }
  std::uint32_t block_of(State q) const { return labels_[q]; }
  bool same_block(State p, State q) const { return labels_[p] == labels_[q]; }
  bool is_zero() const noexcept { return block_count_ == labels_.size(); }
  bool is_one() const noexcept { return block_count_ <= 1; }

  const std::vector<std::uint32_t>& labels() const noexcept { return labels_; }
  /// Blocks in canonical order, members ascending.
  std::vector<std::vector<State>> blocks() const;

  bool operator==(const Partition&) const = default;
  std::strong_ordering operator<=>(const Partition& other) const {
    return labels_ <=> other.labels_;
  }

 private:
  std::vector<std::uint32_t> labels_;
  std::size_t block_count_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

// Lattice operations. All throw InputError when the partitions are over
// different element counts.
Partition meet(const Partition& a, const Partition& b);
Partition join(const Partition& a, const Partition& b);
/// a ⪯ b: every block of a lies inside a block of b.
bool leq(const Partition& a, const Partition& b);

/// The partition whose blocks are the fibres of `image` (q ~ p iff image[q] == image[p]).
Partition kernel(std::span<const std::uint32_t> image);

}  // namespace decomp
