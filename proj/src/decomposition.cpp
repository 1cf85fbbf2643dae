#include "decomp/decomposition.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

#include "decomp/errors.hpp"

namespace decomp {

std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::AI: return "AI";
    case Kind::SI: return "SI";
    case Kind::WAI: return "wAI";
    case Kind::SB: return "SB";
    case Kind::ASB: return "ASB";
  }
  return "?";
}

std::optional<Kind> parse_kind(std::string_view text) {
  std::string lower;
  for (char c : text) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "ai") return Kind::AI;
  if (lower == "si") return Kind::SI;
  if (lower == "wai") return Kind::WAI;
  if (lower == "sb") return Kind::SB;
  if (lower == "asb") return Kind::ASB;
  return std::nullopt;
}

std::string_view witness_kind(const Witness& w) {
  struct Name {
    std::string_view operator()(const std::monostate&) const { return "none"; }
    std::string_view operator()(const Embedding&) const { return "alpha"; }
    std::string_view operator()(const PairMap&) const { return "beta"; }
    std::string_view operator()(const PairRelation&) const { return "relation"; }
    std::string_view operator()(const SeparationWitness&) const { return "separation"; }
  };
  return std::visit(Name{}, w);
}

namespace {

// Breadth-first exploration of reachable triples with parent links, so any
// triple can be explained by the word that reaches it.
class TripleWalk {
 public:
  TripleWalk(const Dfa& a, const Dfa& a1, const Dfa& a2)
      : n1_(a1.state_count()), n2_(a2.state_count()) {
    std::vector<bool> seen(a.state_count() * n1_ * n2_, false);
    auto code = [&](const StateTriple& t) { return (t.q * n1_ + t.p1) * n2_ + t.p2; };
    order_.push_back({a.initial(), a1.initial(), a2.initial()});
    parent_.push_back(0);
    via_.push_back(0);
    seen[code(order_[0])] = true;
    for (std::size_t head = 0; head < order_.size(); ++head) {
      const StateTriple cur = order_[head];
      for (Symbol s = 0; s < a.symbol_count(); ++s) {
        StateTriple nxt{a.next(cur.q, s), a1.next(cur.p1, s), a2.next(cur.p2, s)};
        if (!seen[code(nxt)]) {
          seen[code(nxt)] = true;
          order_.push_back(nxt);
          parent_.push_back(head);
          via_.push_back(s);
        }
      }
    }
  }

  const std::vector<StateTriple>& triples() const { return order_; }
  std::size_t pair_code(const StateTriple& t) const { return t.p1 * n2_ + t.p2; }

  Word word_to(std::size_t index) const {
    Word w;
    for (std::size_t i = index; i != 0; i = parent_[i]) w.push_back(via_[i]);
    std::reverse(w.begin(), w.end());
    return w;
  }

 private:
  std::size_t n1_;
  std::size_t n2_;
  std::vector<StateTriple> order_;
  std::vector<std::size_t> parent_;
  std::vector<Symbol> via_;
};

std::string quoted(const Dfa& a, const Word& w) {
  return w.empty() ? std::string("the empty word") : "'" + a.spell(w) + "'";
}

std::string pair_name(const Dfa& a1, const Dfa& a2, State p1, State p2) {
  return "(" + a1.state_name(p1) + ", " + a2.state_name(p2) + ")";
}

Verdict refuse(std::string reason, std::optional<Word> w = std::nullopt) {
  Verdict v;
  v.reason = std::move(reason);
  v.counterexample = std::move(w);
  return v;
}

Verdict check(Kind kind, const Dfa& a, const Dfa& b1, const Dfa& b2) {
  const Dfa a1 = align_alphabet(b1, a.alphabet());
  const Dfa a2 = align_alphabet(b2, a.alphabet());
  if (kind != Kind::AI && !all_reachable(a)) {
    throw InputError(std::string(to_string(kind)) + " verification requires an automaton without "
                     "unreachable states; '" + a.name() + "' has some");
  }
  const TripleWalk walk(a, a1, a2);
  const auto& triples = walk.triples();
  const std::size_t pairs = a1.state_count() * a2.state_count();

  if (kind == Kind::AI) {
    for (std::size_t i = 0; i < triples.size(); ++i) {
      const auto& t = triples[i];
      if (a.is_accepting(t.q) != (a1.is_accepting(t.p1) && a2.is_accepting(t.p2))) {
        Word w = walk.word_to(i);
        return refuse("L(A) differs from L(A1) ∩ L(A2) on " + quoted(a, w), w);
      }
    }
    return Verdict{Decomposition{kind, a1, a2, std::monostate{}, std::nullopt}, {}, std::nullopt};
  }

  if (kind == Kind::WAI) {
    std::vector<int> pair_accepts(pairs, -1);
    std::vector<std::size_t> first(pairs, 0);
    for (std::size_t i = 0; i < triples.size(); ++i) {
      const auto& t = triples[i];
      const auto c = walk.pair_code(t);
      const int acc = a.is_accepting(t.q) ? 1 : 0;
      if (pair_accepts[c] == -1) {
        pair_accepts[c] = acc;
        first[c] = i;
      } else if (pair_accepts[c] != acc) {
        Word w = walk.word_to(i);
        return refuse("pair " + pair_name(a1, a2, t.p1, t.p2) + " is reached by " +
                          quoted(a, walk.word_to(first[c])) + " and " + quoted(a, w) +
                          ", which A decides differently",
                      w);
      }
    }
    PairRelation r{a2.state_count(), std::vector<bool>(pairs, false)};
    for (std::size_t c = 0; c < pairs; ++c) r.holds[c] = pair_accepts[c] == 1;
    return Verdict{Decomposition{kind, a1, a2, std::move(r), std::nullopt}, {}, std::nullopt};
  }

  // SI, SB, ASB: the pair must determine the state.
  std::vector<State> pair_state(pairs, kNoState);
  std::vector<std::size_t> first(pairs, 0);
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const auto& t = triples[i];
    const auto c = walk.pair_code(t);
    if (pair_state[c] == kNoState) {
      pair_state[c] = t.q;
      first[c] = i;
    } else if (pair_state[c] != t.q) {
      Word w = walk.word_to(i);
      return refuse("pair " + pair_name(a1, a2, t.p1, t.p2) + " is reached by " +
                        quoted(a, walk.word_to(first[c])) + " (state " +
                        a.state_name(pair_state[c]) + ") and by " + quoted(a, w) + " (state " +
                        a.state_name(t.q) + ")",
                    w);
    }
  }

  if (kind == Kind::SI) {
    PairMap beta{a2.state_count(), std::vector<State>(pairs, a.initial())};
    for (std::size_t c = 0; c < pairs; ++c) {
      if (pair_state[c] != kNoState) beta.beta[c] = pair_state[c];
    }
    return Verdict{Decomposition{kind, a1, a2, std::move(beta), std::nullopt}, {}, std::nullopt};
  }

  // SB, ASB: and the state must determine the pair.
  std::vector<StatePair> alpha(a.state_count(), {kNoState, kNoState});
  std::vector<std::size_t> first_state(a.state_count(), 0);
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const auto& t = triples[i];
    if (alpha[t.q].first == kNoState) {
      alpha[t.q] = {t.p1, t.p2};
      first_state[t.q] = i;
    } else if (alpha[t.q] != StatePair{t.p1, t.p2}) {
      Word w = walk.word_to(i);
      return refuse("state " + a.state_name(t.q) + " is reached with pair " +
                        pair_name(a1, a2, alpha[t.q].first, alpha[t.q].second) + " by " +
                        quoted(a, walk.word_to(first_state[t.q])) + " and with pair " +
                        pair_name(a1, a2, t.p1, t.p2) + " by " + quoted(a, w),
                    w);
    }
  }

  if (kind == Kind::ASB) {
    for (State q = 0; q < a.state_count(); ++q) {
      const auto [p1, p2] = alpha[q];
      if (a.is_accepting(q) != (a1.is_accepting(p1) && a2.is_accepting(p2))) {
        Word w = walk.word_to(first_state[q]);
        return refuse("state " + a.state_name(q) + (a.is_accepting(q) ? " is" : " is not") +
                          " accepting but its image " + pair_name(a1, a2, p1, p2) +
                          (a.is_accepting(q) ? " is not" : " is"),
                      w);
      }
    }
  }
  return Verdict{Decomposition{kind, a1, a2, Embedding{std::move(alpha)}, std::nullopt}, {},
                 std::nullopt};
}

// ---- enumeration over the S.P. lattice ----

bool pair_condition(Kind kind, const Dfa& a, const Partition& acc_partition, const Partition& x,
                    const Partition& y) {
  switch (kind) {
    case Kind::SB: return meet(x, y).is_zero();
    case Kind::ASB:
      return meet(x, y).is_zero() && separates_finals(x, y, a.accepting()).has_value();
    case Kind::AI: return separates_finals(x, y, a.accepting()).has_value();
    case Kind::WAI: return leq(meet(x, y), acc_partition);
    case Kind::SI: break;
  }
  throw ContractError("SI decompositions are not enumerated from partition pairs");
}

std::vector<std::uint32_t> accepting_blocks_or_empty(const std::optional<SeparationWitness>& sep,
                                                     bool first) {
  if (!sep) return {};
  return first ? sep->blocks1 : sep->blocks2;
}

Decomposition build_from_partitions(Kind kind, const Dfa& a, const Partition& p1,
                                    const Partition& p2) {
  std::optional<SeparationWitness> sep;
  if (kind == Kind::ASB || kind == Kind::AI) sep = separates_finals(p1, p2, a.accepting());
  Dfa a1 = quotient(a, p1, accepting_blocks_or_empty(sep, true)).renamed(a.name() + ".1");
  Dfa a2 = quotient(a, p2, accepting_blocks_or_empty(sep, false)).renamed(a.name() + ".2");

  Witness witness;
  switch (kind) {
    case Kind::SB:
    case Kind::ASB: {
      Embedding e;
      for (State q = 0; q < a.state_count(); ++q) e.alpha.emplace_back(p1.block_of(q), p2.block_of(q));
      witness = std::move(e);
      break;
    }
    case Kind::AI: witness = *sep; break;
    case Kind::WAI: {
      PairRelation r{p2.block_count(),
                     std::vector<bool>(p1.block_count() * p2.block_count(), true)};
      for (State q = 0; q < a.state_count(); ++q) {
        if (!a.is_accepting(q)) r.holds[p1.block_of(q) * r.width + p2.block_of(q)] = false;
      }
      witness = std::move(r);
      break;
    }
    case Kind::SI: throw ContractError("SI decompositions are not built from partition pairs");
  }
  return Decomposition{kind, std::move(a1), std::move(a2), std::move(witness),
                       std::pair{p1, p2}};
}

bool is_top(const SpLattice& lattice, std::size_t i) { return lattice.elements()[i].is_one(); }

class RedundancyOracle {
 public:
  RedundancyOracle(Kind kind, const Dfa& a, const SpLattice& lattice)
      : kind_(kind), a_(a), lattice_(lattice), acc_(acceptance_partition(a)),
        uppers_(lattice.size()) {}

  bool redundant(std::size_t i, std::size_t j) {
    for (auto u : upper(i)) {
      if (is_top(lattice_, u)) continue;
      for (auto v : upper(j)) {
        if ((u == i && v == j) || is_top(lattice_, v)) continue;
        if (pair_condition(kind_, a_, acc_, lattice_.elements()[u], lattice_.elements()[v])) {
          return true;
        }
      }
    }
    return false;
  }

 private:
  const std::vector<std::size_t>& upper(std::size_t i) {
    if (uppers_[i].empty()) uppers_[i] = lattice_.upper_set(i);
    return uppers_[i];
  }

  Kind kind_;
  const Dfa& a_;
  const SpLattice& lattice_;
  Partition acc_;
  std::vector<std::vector<std::size_t>> uppers_;
};

void orient(Decomposition& d, const std::string& base) {
  if (d.a1.state_count() <= d.a2.state_count()) return;
  std::swap(d.a1, d.a2);
  d.a1 = d.a1.renamed(base + ".1");
  d.a2 = d.a2.renamed(base + ".2");
  if (d.source_partitions) std::swap(d.source_partitions->first, d.source_partitions->second);
  if (auto* e = std::get_if<Embedding>(&d.witness)) {
    for (auto& p : e->alpha) std::swap(p.first, p.second);
  } else if (auto* s = std::get_if<SeparationWitness>(&d.witness)) {
    std::swap(s->blocks1, s->blocks2);
  } else if (auto* r = std::get_if<PairRelation>(&d.witness)) {
    const std::size_t rows = r->holds.size() / r->width;
    PairRelation t{rows, std::vector<bool>(r->holds.size(), false)};
    for (std::size_t x = 0; x < rows; ++x) {
      for (std::size_t y = 0; y < r->width; ++y) t.holds[y * rows + x] = r->holds[x * r->width + y];
    }
    *r = std::move(t);
  }
}

DecompositionReport enumerate(Kind kind, const Dfa& a, const SpLattice& lattice) {
  if (lattice.dfa_fingerprint() != a.fingerprint()) {
    throw ContractError("S.P. lattice was built for a different automaton");
  }
  DecompositionReport report;
  report.dfa_fingerprint = a.fingerprint();
  report.kind = kind;
  report.dfa_states = a.state_count();

  const auto& e = lattice.elements();
  const Partition acc = acceptance_partition(a);
  // Meet-0 pairs are necessarily distinct; the sufficient conditions allow π1 = π2.
  const bool allow_equal = kind == Kind::AI || kind == Kind::WAI;
  RedundancyOracle redundancy(kind, a, lattice);
  const std::size_t n = a.state_count();

  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i].is_zero() || e[i].is_one()) continue;
    for (std::size_t j = allow_equal ? i : i + 1; j < e.size(); ++j) {
      if (e[j].is_zero() || e[j].is_one()) continue;
      if (!pair_condition(kind, a, acc, e[i], e[j])) continue;
      ReportEntry entry{build_from_partitions(kind, a, e[i], e[j])};
      entry.redundant = redundancy.redundant(i, j);
      orient(entry.decomposition, a.name());
      const std::size_t k1 = entry.decomposition.a1.state_count();
      const std::size_t k2 = entry.decomposition.a2.state_count();
      entry.nontrivial = k1 < n && k2 < n;
      entry.perfect = k1 * k2 == n;
      report.entries.push_back(std::move(entry));
    }
  }
  std::sort(report.entries.begin(), report.entries.end(),
            [](const ReportEntry& x, const ReportEntry& y) {
              auto key = [](const Decomposition& d) {
                return std::make_tuple(d.a1.state_count(), d.a2.state_count(),
                                     d.source_partitions);
              };
              return key(x.decomposition) < key(y.decomposition);
            });
  return report;
}

}  // namespace

Verdict verify(Kind kind, const Dfa& a, const Dfa& a1, const Dfa& a2) {
  return check(kind, a, a1, a2);
}

DecompositionReport decompose_sb(const Dfa& a) { return decompose_sb(a, sp_lattice(a)); }
DecompositionReport decompose_sb(const Dfa& a, const SpLattice& l) {
  return enumerate(Kind::SB, a, l);
}
DecompositionReport decompose_asb(const Dfa& a) { return decompose_asb(a, sp_lattice(a)); }
DecompositionReport decompose_asb(const Dfa& a, const SpLattice& l) {
  return enumerate(Kind::ASB, a, l);
}
DecompositionReport decompose_ai_sufficient(const Dfa& a) {
  return decompose_ai_sufficient(a, sp_lattice(a));
}
DecompositionReport decompose_ai_sufficient(const Dfa& a, const SpLattice& l) {
  return enumerate(Kind::AI, a, l);
}
DecompositionReport decompose_wai_sufficient(const Dfa& a) {
  return decompose_wai_sufficient(a, sp_lattice(a));
}
DecompositionReport decompose_wai_sufficient(const Dfa& a, const SpLattice& l) {
  return enumerate(Kind::WAI, a, l);
}

DecompositionReport decompose(Kind kind, const Dfa& a) {
  if (kind == Kind::SI) {
    throw ContractError("SI decompositions have no partition-based enumeration; use verify");
  }
  return enumerate(kind, a, sp_lattice(a));
}

bool is_redundant(const Dfa& a, const Decomposition& d) { return is_redundant(a, sp_lattice(a), d); }

bool is_redundant(const Dfa& a, const SpLattice& lattice, const Decomposition& d) {
  if (!d.source_partitions) {
    throw ContractError("redundancy is only defined for decompositions built from S.P. partitions");
  }
  if (d.kind == Kind::SI) throw ContractError("redundancy is not defined for SI decompositions");
  auto i = lattice.index_of(d.source_partitions->first);
  auto j = lattice.index_of(d.source_partitions->second);
  if (!i || !j) throw ContractError("source partitions are not S.P. partitions of the automaton");
  RedundancyOracle oracle(d.kind, a, lattice);
  return oracle.redundant(*i, *j);
}

Decomposition project_to_minimal(const Dfa& a, const Decomposition& d) {
  if ((d.kind != Kind::SB && d.kind != Kind::ASB) || !d.source_partitions) {
    throw ContractError("projection needs an SB decomposition built from S.P. partitions");
  }
  if (!all_reachable(a)) {
    throw InputError("projection requires an automaton without unreachable states");
  }
  const auto& [pi1, pi2] = *d.source_partitions;
  if (!is_sp(a, pi1) || !is_sp(a, pi2) || !meet(pi1, pi2).is_zero()) {
    throw ContractError("source partitions do not form an SB decomposition of the automaton");
  }
  if (!is_distributive(sp_lattice(a))) {
    throw ContractError("the S.P. lattice of '" + a.name() +
                        "' is not distributive, so the decomposition need not project onto "
                        "the minimal automaton");
  }
  const MinimizeResult m = minimize(a);
  const Partition rho = kernel(m.map.image);
  auto project = [&](const Partition& pi) {
    const Partition coarse = join(rho, pi);
    std::vector<std::uint32_t> labels(m.dfa.state_count(), 0);
    for (State q = 0; q < a.state_count(); ++q) labels[m.map(q)] = coarse.block_of(q);
    return Partition::from_labels(labels);
  };
  const Partition q1 = project(pi1);
  const Partition q2 = project(pi2);
  if (!meet(q1, q2).is_zero()) {
    throw InternalError("projected partitions do not meet in 0 despite a distributive lattice");
  }
  return build_from_partitions(Kind::SB, m.dfa, q1, q2);
}

Decomposition transfer_to_minimal(Kind kind, const Dfa& a, const Decomposition& d) {
  if (kind != Kind::AI && kind != Kind::SI && kind != Kind::WAI) {
    throw ContractError("only AI, SI and wAI decompositions transfer to the minimal automaton");
  }
  Verdict original = check(kind, a, d.a1, d.a2);
  if (!original) {
    throw ContractError("decomposition does not verify against '" + a.name() +
                        "': " + original.reason);
  }
  const MinimizeResult m = minimize(a);
  Verdict moved = check(kind, m.dfa, d.a1, d.a2);
  if (!moved) {
    throw InternalError("decomposition failed to transfer to the minimal automaton: " + moved.reason);
  }
  if (kind != Kind::SI) return std::move(*moved.decomposition);

  // β' = f ∘ β must agree with the β found directly on every reachable pair.
  const auto& beta = std::get<PairMap>(original.decomposition->witness);
  const auto& direct = std::get<PairMap>(moved.decomposition->witness);
  PairMap composed{beta.width, std::vector<State>(beta.beta.size())};
  for (std::size_t c = 0; c < beta.beta.size(); ++c) composed.beta[c] = m.map(beta.beta[c]);
  for (const auto& t : reachable_triples(m.dfa, moved.decomposition->a1, moved.decomposition->a2)) {
    if (composed.at(t.p1, t.p2) != t.q || direct.at(t.p1, t.p2) != t.q) {
      throw InternalError("composed state map disagrees with the minimal automaton");
    }
  }
  Decomposition out = std::move(*moved.decomposition);
  out.witness = std::move(composed);
  return out;
}

}  // namespace decomp
