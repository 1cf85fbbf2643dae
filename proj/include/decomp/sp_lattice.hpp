#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "decomp/dfa.hpp"
#include "decomp/partition.hpp"

namespace decomp {

/// True iff p ≡ q implies δ(p,a) ≡ δ(q,a) for every symbol a.
bool is_sp(const Dfa& a, const Partition& pi);

/// The finest S.P. partition that puts p and t in one block (the "atom"
/// generated by the pair). Congruence closure over union-find.
Partition min_sp_merging(const Dfa& a, State p, State t);

/// {F, K − F}; a single block when F is empty or all of K.
Partition acceptance_partition(const Dfa& a);

/// All S.P. partitions of one automaton, closed under join and meet.
///
/// Elements are listed finest first: by block count descending, then by
/// canonical labels. Element 0 is always the zero partition and the last
/// element is always the one-block partition. Atoms are kept per unordered
/// state pair (p < t) so callers can trace which merges produced an element.
class SpLattice {
 public:
  SpLattice(std::vector<Partition> elements, std::map<std::pair<State, State>, Partition> atoms,
            std::uint64_t dfa_fingerprint);

  const std::vector<Partition>& elements() const noexcept { return elements_; }
  const std::map<std::pair<State, State>, Partition>& atoms() const noexcept { return atoms_; }
  std::uint64_t dfa_fingerprint() const noexcept { return fingerprint_; }
  std::size_t size() const noexcept { return elements_.size(); }

  bool contains(const Partition& p) const;
  std::optional<std::size_t> index_of(const Partition& p) const;

  /// Indices of elements that are ⪰ elements()[i] (including i itself).
  std::vector<std::size_t> upper_set(std::size_t i) const;

  bool is_join_closed() const;
  bool is_meet_closed() const;

 private:
  std::vector<Partition> elements_;
  std::map<std::pair<State, State>, Partition> atoms_;
  std::uint64_t fingerprint_;
};

/// Builds the lattice as the join-closure of {0} and every atom.
SpLattice sp_lattice(const Dfa& a);

/// Choice of blocks (canonical block indices) from two partitions whose
/// unions intersect exactly in the accepting set.
struct SeparationWitness {
  std::vector<std::uint32_t> blocks1;
  std::vector<std::uint32_t> blocks2;
  bool operator==(const SeparationWitness&) const = default;
};

/// Any witness must include every block that meets F, and including only
/// those blocks gives the smallest possible intersection; so the candidate
/// "blocks meeting F" on both sides decides the question exactly.
std::optional<SeparationWitness> separates_finals(const Partition& p1, const Partition& p2,
                                                  const std::vector<bool>& finals);

/// x·(y+z) = x·y + x·z for all elements.
bool is_distributive(const SpLattice& lattice);

}  // namespace decomp
