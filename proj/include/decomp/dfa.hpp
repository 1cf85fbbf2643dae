#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "decomp/partition.hpp"
#include "decomp/types.hpp"

namespace decomp {

/// A complete deterministic finite automaton. States and symbols carry
/// names for I/O but every algorithm works on dense indices. Instances are
/// immutable once constructed.
class Dfa {
 public:
  /// `delta` is row-major: delta[q * alphabet.size() + a]. Throws InputError
  /// on duplicate or malformed names, out-of-range targets, or an empty
  /// state set or alphabet.
  Dfa(std::string name, std::vector<std::string> states,
      std::vector<std::string> alphabet, std::vector<State> delta,
      State initial, std::vector<bool> accepting);

  const std::string& name() const noexcept { return name_; }
  std::size_t state_count() const noexcept { return states_.size(); }
  std::size_t symbol_count() const noexcept { return alphabet_.size(); }
  const std::vector<std::string>& state_names() const noexcept { return states_; }
  const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
  const std::string& state_name(State q) const { return states_[q]; }
  const std::string& symbol_name(Symbol a) const { return alphabet_[a]; }

  State next(State q, Symbol a) const { return delta_[q * alphabet_.size() + a]; }
  const std::vector<State>& table() const noexcept { return delta_; }
  State initial() const noexcept { return initial_; }
  bool is_accepting(State q) const { return accepting_[q]; }
  const std::vector<bool>& accepting() const noexcept { return accepting_; }
  std::size_t accepting_count() const;

  std::optional<State> find_state(std::string_view name) const;
  std::optional<Symbol> find_symbol(std::string_view name) const;
  /// Throws InputError for unknown names.
  State state(std::string_view name) const;
  Symbol symbol(std::string_view name) const;

  /// Splits text into symbols: whitespace-separated tokens when the text
  /// contains whitespace, one symbol per character otherwise.
  Word word(std::string_view text) const;
  std::string spell(std::span<const Symbol> w) const;

  Dfa renamed(std::string name) const;
  /// Stable within a build; used to tie lattices and reports to their input.
  std::uint64_t fingerprint() const;

  bool operator==(const Dfa&) const = default;

 private:
  std::string name_;
  std::vector<std::string> states_;
  std::vector<std::string> alphabet_;
  std::vector<State> delta_;
  State initial_;
  std::vector<bool> accepting_;
};

/// Assembles a Dfa from names. build() throws InputError on missing or
/// conflicting transitions or a missing initial state.
class DfaBuilder {
 public:
  DfaBuilder(std::string name, std::vector<std::string> states,
             std::vector<std::string> alphabet);

  DfaBuilder& transition(std::string_view from, std::string_view symbol,
                         std::string_view to);
  DfaBuilder& initial(std::string_view state);
  DfaBuilder& accept(std::string_view state);
  Dfa build() const;

 private:
  std::size_t index_of_state(std::string_view s) const;
  std::size_t index_of_symbol(std::string_view s) const;

  std::string name_;
  std::vector<std::string> states_;
  std::vector<std::string> alphabet_;
  std::vector<State> delta_;
  State initial_ = kNoState;
  std::vector<bool> accepting_;
};

/// Total map from the states of one automaton to another; kNoState marks
/// states outside the map's meaningful domain (unreachable ones for minimize).
struct StateMap {
  std::vector<State> image;

  State operator()(State q) const { return image[q]; }
  bool defined(State q) const { return image[q] != kNoState; }
};

struct MinimizeResult {
  Dfa dfa;
  StateMap map;
};

struct StateTriple {
  State q;
  State p1;
  State p2;
  bool operator==(const StateTriple&) const = default;
  auto operator<=>(const StateTriple&) const = default;
};

/// δ(from, w). Throws InputError if w contains a symbol index out of range.
State run(const Dfa& a, std::span<const Symbol> w);
State run(const Dfa& a, State from, std::span<const Symbol> w);
bool accepts(const Dfa& a, std::span<const Symbol> w);
/// Convenience overloads that tokenize with Dfa::word.
State run(const Dfa& a, std::string_view w);
bool accepts(const Dfa& a, std::string_view w);

/// Reachable states in BFS order from the initial state over the ordered alphabet.
std::vector<State> reachable_states(const Dfa& a);
bool all_reachable(const Dfa& a);
/// Drops unreachable states, keeping the relative order of the rest.
Dfa trim(const Dfa& a);

/// Minimal DFA for L(a) over the same alphabet. States are named by their
/// members joined with '+', ordered by least member. map sends every
/// reachable state of a to its class; unreachable states map to kNoState.
MinimizeResult minimize(const Dfa& a);

/// Throws InputError unless b's alphabet equals `alphabet` as a set; returns
/// b with its symbols reordered to match.
Dfa align_alphabet(const Dfa& b, const std::vector<std::string>& alphabet);

/// Product automaton with accepting set F1 × F2. States are named "(p;q)".
Dfa parallel_connection(const Dfa& a1, const Dfa& a2);

/// A shortest word on which a and b disagree, or nullopt when L(a) = L(b).
std::optional<Word> distinguishing_word(const Dfa& a, const Dfa& b);
bool equivalent(const Dfa& a, const Dfa& b);

/// {(δ(q0,w), δ1(q1,w), δ2(q2,w)) : w ∈ Σ*} in BFS discovery order.
std::vector<StateTriple> reachable_triples(const Dfa& a, const Dfa& a1, const Dfa& a2);

/// The quotient automaton on the blocks of an S.P. partition.
/// `accepting_blocks` holds block indices. Throws ContractError if pi is not
/// S.P. for a, InputError on size mismatches.
Dfa quotient(const Dfa& a, const Partition& pi,
             std::span<const std::uint32_t> accepting_blocks);

/// Name of a partition block: member names joined with '+'.
std::string block_name(const Dfa& a, const std::vector<State>& block);

/// BFS renumbering of the reachable part; two automata are isomorphic
/// (names ignored) iff their canonical forms have equal tables, initial
/// and accepting vectors.
Dfa canonical_form(const Dfa& a);
bool isomorphic(const Dfa& a, const Dfa& b);

}  // namespace decomp
