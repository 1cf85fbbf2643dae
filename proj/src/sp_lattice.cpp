#include "decomp/sp_lattice.hpp"

#include <algorithm>
#include <unordered_map>

#include "decomp/errors.hpp"
#include "decomp/union_find.hpp"

namespace decomp {

bool is_sp(const Dfa& a, const Partition& pi) {
  if (pi.element_count() != a.state_count()) {
    throw InputError("partition size does not match automaton '" + a.name() + "'");
  }
  std::vector<State> rep(pi.block_count(), kNoState);
  for (State q = 0; q < a.state_count(); ++q) {
    State& r = rep[pi.block_of(q)];
    if (r == kNoState) {
      r = q;
      continue;
    }
    for (Symbol s = 0; s < a.symbol_count(); ++s) {
      if (!pi.same_block(a.next(q, s), a.next(r, s))) return false;
    }
  }
  return true;
}

Partition min_sp_merging(const Dfa& a, State p, State t) {
  if (p >= a.state_count() || t >= a.state_count()) throw InputError("state index out of range");
  DisjointSets sets(a.state_count());
  std::vector<std::pair<State, State>> pending{{p, t}};
  while (!pending.empty()) {
    auto [x, y] = pending.back();
    pending.pop_back();
    if (!sets.unite(x, y)) continue;
    for (Symbol s = 0; s < a.symbol_count(); ++s) pending.emplace_back(a.next(x, s), a.next(y, s));
  }
  return Partition::from_labels(sets.labels());
}

Partition acceptance_partition(const Dfa& a) {
  std::vector<std::uint32_t> labels(a.state_count());
  for (State q = 0; q < a.state_count(); ++q) labels[q] = a.is_accepting(q) ? 1 : 0;
  return Partition::from_labels(labels);
}

namespace {

bool finest_first(const Partition& x, const Partition& y) {
  if (x.block_count() != y.block_count()) return x.block_count() > y.block_count();
  return x < y;
}

}  // namespace

SpLattice::SpLattice(std::vector<Partition> elements,
                     std::map<std::pair<State, State>, Partition> atoms,
                     std::uint64_t dfa_fingerprint)
    : elements_(std::move(elements)), atoms_(std::move(atoms)), fingerprint_(dfa_fingerprint) {
  std::sort(elements_.begin(), elements_.end(), finest_first);
}

std::optional<std::size_t> SpLattice::index_of(const Partition& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p, finest_first);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

bool SpLattice::contains(const Partition& p) const { return index_of(p).has_value(); }

std::vector<std::size_t> SpLattice::upper_set(std::size_t i) const {
  std::vector<std::size_t> out;
  const auto& x = elements_.at(i);
  // Coarser partitions have no more blocks, so they sit at or after i.
  for (std::size_t j = i; j < elements_.size(); ++j) {
    if (leq(x, elements_[j])) out.push_back(j);
  }
  return out;
}

bool SpLattice::is_join_closed() const {
  for (const auto& x : elements_) {
    for (const auto& y : elements_) {
      if (!contains(join(x, y))) return false;
    }
  }
  return true;
}

bool SpLattice::is_meet_closed() const {
  for (const auto& x : elements_) {
    for (const auto& y : elements_) {
      if (!contains(meet(x, y))) return false;
    }
  }
  return true;
}

SpLattice sp_lattice(const Dfa& a) {
  const std::size_t n = a.state_count();
  std::map<std::pair<State, State>, Partition> atoms;
  std::vector<Partition> distinct_atoms;
  std::unordered_map<Partition, bool, PartitionHash> atom_seen;
  for (State p = 0; p < n; ++p) {
    for (State t = p + 1; t < n; ++t) {
      auto atom = min_sp_merging(a, p, t);
      if (atom_seen.emplace(atom, true).second) distinct_atoms.push_back(atom);
      atoms.emplace(std::pair{p, t}, std::move(atom));
    }
  }

  // Every element is a join of atoms, so joining each new element with
  // every atom reaches the whole lattice.
  std::unordered_map<Partition, bool, PartitionHash> seen;
  std::vector<Partition> elements{Partition::zero(n)};
  seen.emplace(elements.front(), true);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& atom : distinct_atoms) {
      Partition j = join(elements[head], atom);
      if (seen.emplace(j, true).second) elements.push_back(std::move(j));
    }
  }
  return SpLattice(std::move(elements), std::move(atoms), a.fingerprint());
}

std::optional<SeparationWitness> separates_finals(const Partition& p1, const Partition& p2,
                                                  const std::vector<bool>& finals) {
  if (p1.element_count() != p2.element_count() || finals.size() != p1.element_count()) {
    throw InputError("separation check over mismatched state sets");
  }
  const std::size_t n = finals.size();
  std::vector<bool> use1(p1.block_count(), false);
  std::vector<bool> use2(p2.block_count(), false);
  for (State q = 0; q < n; ++q) {
    if (finals[q]) {
      use1[p1.block_of(q)] = true;
      use2[p2.block_of(q)] = true;
    }
  }
  for (State q = 0; q < n; ++q) {
    if (!finals[q] && use1[p1.block_of(q)] && use2[p2.block_of(q)]) return std::nullopt;
  }
  SeparationWitness w;
  for (std::uint32_t b = 0; b < use1.size(); ++b) {
    if (use1[b]) w.blocks1.push_back(b);
  }
  for (std::uint32_t b = 0; b < use2.size(); ++b) {
    if (use2[b]) w.blocks2.push_back(b);
  }
  return w;
}

bool is_distributive(const SpLattice& lattice) {
  const auto& e = lattice.elements();
  for (const auto& x : e) {
    for (std::size_t j = 0; j < e.size(); ++j) {
      for (std::size_t k = j + 1; k < e.size(); ++k) {
        if (meet(x, join(e[j], e[k])) != join(meet(x, e[j]), meet(x, e[k]))) return false;
      }
    }
  }
  return true;
}

}  // namespace decomp
