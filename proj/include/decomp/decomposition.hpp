#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "decomp/dfa.hpp"
#include "decomp/partition.hpp"
#include "decomp/sp_lattice.hpp"

namespace decomp {

enum class Kind { AI, SI, WAI, SB, ASB };

std::string_view to_string(Kind kind);
/// Accepts "ai", "si", "wai", "sb", "asb" in any case.
std::optional<Kind> parse_kind(std::string_view text);

using StatePair = std::pair<State, State>;

/// SB/ASB witness: the injective α sending each state of A to a state pair.
struct Embedding {
  std::vector<StatePair> alpha;
};

/// SI witness: β over all of K1 × K2 (row-major), q0 off the reachable pairs.
struct PairMap {
  std::size_t width = 0;  // |K2|
  std::vector<State> beta;
  State at(State p1, State p2) const { return beta[p1 * width + p2]; }
};

/// wAI witness: the relation R ⊆ K1 × K2 (row-major).
struct PairRelation {
  std::size_t width = 0;
  std::vector<bool> holds;
  bool at(State p1, State p2) const { return holds[p1 * width + p2]; }
};

/// AI decompositions carry at most a separation certificate.
using Witness = std::variant<std::monostate, Embedding, PairMap, PairRelation, SeparationWitness>;

/// "none", "alpha", "beta", "relation" or "separation".
std::string_view witness_kind(const Witness& w);

struct Decomposition {
  Kind kind;
  Dfa a1;
  Dfa a2;
  Witness witness;
  std::optional<std::pair<Partition, Partition>> source_partitions;
};

/// Outcome of verify(): either a certified decomposition or a refusal
/// naming what broke, usually with a word that exhibits it.
struct Verdict {
  std::optional<Decomposition> decomposition;
  std::string reason;
  std::optional<Word> counterexample;

  explicit operator bool() const noexcept { return decomposition.has_value(); }
};

/// Checks whether (a1, a2) is a `kind` decomposition of `a`.
///
/// Every kind is decided by a breadth-first walk over the reachable triples
/// (δ(q0,w), δ1(q1,w), δ2(q2,w)):
///  - AI: acceptance of q agrees with acceptance of (p1, p2) on every triple.
///  - SI: every reachable pair meets exactly one state of a.
///  - wAI: every reachable pair meets states of one acceptance status only.
///  - SB: reachable pairs and states of a are in bijection (α and its inverse β).
///  - ASB: SB, and α(q) ∈ F1 × F2 exactly when q ∈ F.
///
/// Throws InputError on alphabet mismatch, and for every kind except AI when
/// `a` has unreachable states.
Verdict verify(Kind kind, const Dfa& a, const Dfa& a1, const Dfa& a2);

struct ReportEntry {
  Decomposition decomposition;
  bool nontrivial = false;
  bool perfect = false;
  bool redundant = false;
};

struct DecompositionReport {
  std::uint64_t dfa_fingerprint = 0;
  Kind kind = Kind::SB;
  std::size_t dfa_states = 0;
  std::vector<ReportEntry> entries;
};

// Enumerations over unordered pairs of S.P. partitions. Entries are oriented
// so |K1| <= |K2| and sorted by (|K1|, |K2|, partitions).

/// Pairs of nontrivial S.P. partitions with π1·π2 = 0; quotients accept nothing.
DecompositionReport decompose_sb(const Dfa& a);
DecompositionReport decompose_sb(const Dfa& a, const SpLattice& lattice);
/// As decompose_sb, restricted to pairs that separate the final states.
DecompositionReport decompose_asb(const Dfa& a);
DecompositionReport decompose_asb(const Dfa& a, const SpLattice& lattice);
/// Pairs that separate the final states (meet unrestricted). An empty result
/// only means the sufficient condition found nothing.
DecompositionReport decompose_ai_sufficient(const Dfa& a);
DecompositionReport decompose_ai_sufficient(const Dfa& a, const SpLattice& lattice);
/// Pairs with π1·π2 ⪯ {F, K−F}; R(D1, D2) iff D1 ∩ D2 ⊆ F.
DecompositionReport decompose_wai_sufficient(const Dfa& a);
DecompositionReport decompose_wai_sufficient(const Dfa& a, const SpLattice& lattice);
/// Dispatch on kind (SB, ASB, AI, WAI). Throws ContractError for SI.
DecompositionReport decompose(Kind kind, const Dfa& a);

/// Whether some strictly coarser pair of S.P. partitions still satisfies the
/// kind's defining condition (meet 0 for SB; meet 0 and separation for ASB;
/// separation for AI; meet ⪯ {F, K−F} for wAI). Throws ContractError when
/// the decomposition has no source partitions or is of kind SI.
bool is_redundant(const Dfa& a, const Decomposition& d);
bool is_redundant(const Dfa& a, const SpLattice& lattice, const Decomposition& d);

/// Pushes an SB decomposition of `a` (built from partitions) down to
/// minimize(a) through the partitions ρ + πi, where ρ is the kernel of the
/// minimization map. Requires a distributive S.P. lattice and no
/// unreachable states; throws ContractError / InputError otherwise.
Decomposition project_to_minimal(const Dfa& a, const Decomposition& d);

/// Re-verifies an AI, SI or wAI decomposition against minimize(a). For SI
/// the returned β is the composition of the minimization map with d's β.
/// Throws ContractError if d does not verify against a, InternalError if the
/// transfer fails.
Decomposition transfer_to_minimal(Kind kind, const Dfa& a, const Decomposition& d);

}  // namespace decomp
