#include "decomp/partition.hpp"

#include <string>
#include <unordered_map>

#include "decomp/errors.hpp"
#include "decomp/union_find.hpp"

namespace decomp {
namespace {

void require_same_size(const Partition& a, const Partition& b) {
  if (a.element_count() != b.element_count()) {
    throw InputError("partitions are over different state sets (" +
                     std::to_string(a.element_count()) + " vs " +
                     std::to_string(b.element_count()) + " states)");
  }
}

}  // namespace

Partition Partition::zero(std::size_t n) {
  Partition p;
  p.labels_.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.labels_[i] = static_cast<std::uint32_t>(i);
  p.block_count_ = n;
  return p;
}

Partition Partition::one(std::size_t n) {
  Partition p;
  p.labels_.assign(n, 0);
  p.block_count_ = n == 0 ? 0 : 1;
  return p;
}

Partition Partition::from_labels(std::span<const std::uint32_t> labels) {
  Partition p;
  p.labels_.resize(labels.size());
  std::unordered_map<std::uint32_t, std::uint32_t> renumber;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] =
        renumber.try_emplace(labels[i], static_cast<std::uint32_t>(renumber.size()));
    p.labels_[i] = it->second;
  }
  p.block_count_ = renumber.size();
  return p;
}

Partition Partition::from_blocks(std::size_t n,
                                 const std::vector<std::vector<State>>& blocks) {
  std::vector<std::uint32_t> labels(n, kNoState);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw InputError("partition has an empty block");
    for (State q : blocks[b]) {
      if (q >= n) throw InputError("partition block names an unknown state");
      if (labels[q] != kNoState) throw InputError("partition blocks overlap");
      labels[q] = static_cast<std::uint32_t>(b);
    }
  }
  for (auto l : labels) {
    if (l == kNoState) throw InputError("partition blocks do not cover every state");
  }
  return from_labels(labels);
}

std::vector<std::vector<State>> Partition::blocks() const {
  std::vector<std::vector<State>> out(block_count_);
  for (State q = 0; q < labels_.size(); ++q) out[labels_[q]].push_back(q);
  return out;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = p.element_count();
  for (auto l : p.labels()) h = h * 1000003u ^ l;
  return h;
}

Partition meet(const Partition& a, const Partition& b) {
  require_same_size(a, b);
  const std::size_t n = a.element_count();
  std::vector<std::uint32_t> labels(n);
  const auto stride = static_cast<std::uint32_t>(b.block_count());
  for (State q = 0; q < n; ++q) labels[q] = a.block_of(q) * stride + b.block_of(q);
  return Partition::from_labels(labels);
}

Partition join(const Partition& a, const Partition& b) {
  require_same_size(a, b);
  const std::size_t n = a.element_count();
  DisjointSets sets(n);
  std::vector<State> first_a(a.block_count(), kNoState);
  std::vector<State> first_b(b.block_count(), kNoState);
  for (State q = 0; q < n; ++q) {
    auto& fa = first_a[a.block_of(q)];
    if (fa == kNoState) fa = q; else sets.unite(fa, q);
    auto& fb = first_b[b.block_of(q)];
    if (fb == kNoState) fb = q; else sets.unite(fb, q);
  }
  return Partition::from_labels(sets.labels());
}

bool leq(const Partition& a, const Partition& b) {
  require_same_size(a, b);
  std::vector<std::uint32_t> target(a.block_count(), kNoState);
  for (State q = 0; q < a.element_count(); ++q) {
    auto& t = target[a.block_of(q)];
    if (t == kNoState) t = b.block_of(q);
    else if (t != b.block_of(q)) return false;
  }
  return true;
}

Partition kernel(std::span<const std::uint32_t> image) {
  return Partition::from_labels(image);
}

}  // namespace decomp
