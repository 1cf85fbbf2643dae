#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "decomp/decomposition.hpp"
#include "decomp/dfa.hpp"
#include "decomp/partition.hpp"
#include "decomp/sp_lattice.hpp"

// Brute-force ground truth, written against the definitions rather than the
// lattice machinery so the two can be cross-checked.
namespace decomp::oracle {

/// Upper bound on states for brute_sp_partitions (Bell(9) = 21147).
inline constexpr std::size_t kMaxBruteStates = 9;
/// Estimated candidate count above which certify_undecomposable refuses.
inline constexpr std::uint64_t kMaxCandidates = 100'000'000;
/// Largest block count handled by separates_finals_exhaustive (2^20 subsets per side).
inline constexpr std::size_t kMaxSeparationBlocks = 20;

struct SearchBudget {
  std::size_t max_states_1 = 1;
  std::size_t max_states_2 = 1;
  /// Enumerate one representative per isomorphism class (BFS-canonical,
  /// initial state 0, every state reachable).
  bool canonical_only = true;
};

/// Every partition of the state set with the substitution property, checked
/// pairwise from the definition. Throws ContractError above kMaxBruteStates.
std::vector<Partition> brute_sp_partitions(const Dfa& a);

/// All partitions of {0..n-1} as restricted growth strings, in lexicographic order.
std::vector<Partition> all_partitions(std::size_t n);

/// Subset-by-subset search for a separation witness. Throws
/// ContractError when either partition has more than kMaxSeparationBlocks blocks.
std::optional<SeparationWitness> separates_finals_exhaustive(const Partition& p1,
                                                             const Partition& p2,
                                                             const std::vector<bool>& finals);

/// Upper bound on the number of candidate pairs certify_undecomposable
/// examines: sum over k <= max1, l <= max2 of c(k)·c(l), where
/// c(k) = k^(s·k)·k (·2^k when accepting sets are enumerated, i.e. for AI).
/// With canonical_only, c(k) = ceil(k^(s·k) / (k-1)!) (·2^k for AI).
/// Saturates at UINT64_MAX.
std::uint64_t estimate_search_space(std::size_t alphabet_size, const SearchBudget& budget,
                                    Kind kind);

/// Candidate automata with exactly `states` states over `alphabet`, in
/// canonical table order. Accepting sets are enumerated only when
/// `with_accepting` is set; otherwise nothing accepts.
std::vector<Dfa> enumerate_candidates(std::size_t states, const std::vector<std::string>& alphabet,
                                      bool canonical_only, bool with_accepting);

struct Certificate {
  /// True when no candidate pair verified.
  bool exhausted = false;
  std::uint64_t examined = 0;
  std::uint64_t estimate = 0;
  std::size_t effective_max_1 = 0;
  std::size_t effective_max_2 = 0;
  std::optional<Decomposition> counterexample;
};

/// Searches for a nontrivial `kind` decomposition (AI, SI or wAI) among all
/// candidate pairs within the budget. Candidate sizes are capped at
/// |K| − 1. Returns the first verified pair in (k, l, table) order, or an
/// exhaustion certificate. Throws BudgetError when the estimate exceeds
/// kMaxCandidates and ContractError for SB/ASB.
Certificate certify_undecomposable(Kind kind, const Dfa& a, const SearchBudget& budget);

}  // namespace decomp::oracle
