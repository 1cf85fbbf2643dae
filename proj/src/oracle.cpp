#include "decomp/oracle.hpp"

#include <limits>
#include <string>

#include "decomp/errors.hpp"

namespace decomp::oracle {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t x, std::uint64_t y) {
  if (x != 0 && y > kSaturated / x) return kSaturated;
  return x * y;
}

std::uint64_t sat_add(std::uint64_t x, std::uint64_t y) {
  return y > kSaturated - x ? kSaturated : x + y;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) out = sat_mul(out, base);
  return out;
}

std::uint64_t per_size(std::uint64_t k, std::uint64_t s, bool canonical, bool with_accepting) {
  if (k == 0) return 0;
  std::uint64_t tables = sat_pow(k, s * k);
  std::uint64_t count;
  if (canonical) {
    std::uint64_t fact = 1;
    for (std::uint64_t i = 2; i < k; ++i) fact = sat_mul(fact, i);
    count = tables == kSaturated ? kSaturated : (tables + fact - 1) / fact;
  } else {
    count = sat_mul(tables, k);
  }
  return with_accepting ? sat_mul(count, sat_pow(2, k)) : count;
}

// Visits states in BFS order; the table is canonical iff discovery order
// is 0, 1, 2, ... and every state is discovered.
bool is_canonical_table(const std::vector<State>& table, std::size_t n, std::size_t s) {
  State next_new = 1;
  for (State q = 0; q < n; ++q) {
    if (q >= next_new) return false;
    for (std::size_t a = 0; a < s; ++a) {
      State t = table[q * s + a];
      if (t == next_new) ++next_new;
      else if (t > next_new) return false;
    }
  }
  return next_new == n;
}

}  // namespace

std::vector<Partition> all_partitions(std::size_t n) {
  std::vector<Partition> out;
  if (n == 0) return out;
  std::vector<std::uint32_t> rgs(n, 0);
  std::vector<std::uint32_t> max_prefix(n, 0);  // max of rgs[0..i-1]
  for (;;) {
    out.push_back(Partition::from_labels(rgs));
    // Increment the rightmost position that may still grow.
    std::size_t i = n;
    while (i-- > 1) {
      if (rgs[i] <= max_prefix[i]) break;
    }
    if (i == 0) break;
    ++rgs[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      max_prefix[j] = std::max(max_prefix[j - 1], rgs[j - 1]);
    }
  }
  return out;
}

std::vector<Partition> brute_sp_partitions(const Dfa& a) {
  const std::size_t n = a.state_count();
  if (n > kMaxBruteStates) {
    throw ContractError("brute-force S.P. enumeration is limited to " +
                        std::to_string(kMaxBruteStates) + " states");
  }
  std::vector<Partition> out;
  for (auto& pi : all_partitions(n)) {
    bool ok = true;
    for (State p = 0; p < n && ok; ++p) {
      for (State q = p + 1; q < n && ok; ++q) {
        if (pi.block_of(p) != pi.block_of(q)) continue;
        for (Symbol s = 0; s < a.symbol_count() && ok; ++s) {
          ok = pi.block_of(a.next(p, s)) == pi.block_of(a.next(q, s));
        }
      }
    }
    if (ok) out.push_back(std::move(pi));
  }
  return out;
}

std::optional<SeparationWitness> separates_finals_exhaustive(const Partition& p1,
                                                             const Partition& p2,
                                                             const std::vector<bool>& finals) {
  const std::size_t b1 = p1.block_count();
  const std::size_t b2 = p2.block_count();
  if (b1 > kMaxSeparationBlocks || b2 > kMaxSeparationBlocks) {
    throw ContractError("exhaustive separation search is limited to " +
                        std::to_string(kMaxSeparationBlocks) + " blocks");
  }
  const std::size_t n = finals.size();
  for (std::uint64_t m1 = 0; m1 < (std::uint64_t{1} << b1); ++m1) {
    for (std::uint64_t m2 = 0; m2 < (std::uint64_t{1} << b2); ++m2) {
      bool ok = true;
      for (State q = 0; q < n && ok; ++q) {
        const bool in = ((m1 >> p1.block_of(q)) & 1U) && ((m2 >> p2.block_of(q)) & 1U);
        ok = in == finals[q];
      }
      if (!ok) continue;
      SeparationWitness w;
      for (std::uint32_t b = 0; b < b1; ++b) {
        if ((m1 >> b) & 1U) w.blocks1.push_back(b);
      }
      for (std::uint32_t b = 0; b < b2; ++b) {
        if ((m2 >> b) & 1U) w.blocks2.push_back(b);
      }
      return w;
    }
  }
  return std::nullopt;
}

std::uint64_t estimate_search_space(std::size_t alphabet_size, const SearchBudget& budget,
                                    Kind kind) {
  const bool acc = kind == Kind::AI;
  std::uint64_t side1 = 0;
  std::uint64_t side2 = 0;
  for (std::size_t k = 1; k <= budget.max_states_1; ++k) {
    side1 = sat_add(side1, per_size(k, alphabet_size, budget.canonical_only, acc));
  }
  for (std::size_t l = 1; l <= budget.max_states_2; ++l) {
    side2 = sat_add(side2, per_size(l, alphabet_size, budget.canonical_only, acc));
  }
  return sat_mul(side1, side2);
}

std::vector<Dfa> enumerate_candidates(std::size_t states, const std::vector<std::string>& alphabet,
                                      bool canonical_only, bool with_accepting) {
  std::vector<Dfa> out;
  if (states == 0) return out;
  const std::size_t s = alphabet.size();
  const std::size_t cells = states * s;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < states; ++i) names.push_back("c" + std::to_string(i));
  const std::string name = "cand" + std::to_string(states);

  std::vector<State> table(cells, 0);
  for (;;) {
    if (!canonical_only || is_canonical_table(table, states, s)) {
      const std::size_t initials = canonical_only ? 1 : states;
      for (State init = 0; init < initials; ++init) {
        const std::uint64_t masks = with_accepting ? (std::uint64_t{1} << states) : 1;
        for (std::uint64_t m = 0; m < masks; ++m) {
          std::vector<bool> acc(states);
          for (std::size_t q = 0; q < states; ++q) acc[q] = ((m >> q) & 1U) != 0;
          out.emplace_back(name, names, alphabet, table, init, std::move(acc));
        }
      }
    }
    // Odometer over the table, last cell fastest.
    std::size_t i = cells;
    while (i > 0) {
      --i;
      if (++table[i] < states) break;
      table[i] = 0;
      if (i == 0) return out;
    }
    if (cells == 0) return out;
  }
}

Certificate certify_undecomposable(Kind kind, const Dfa& a, const SearchBudget& budget) {
  if (kind != Kind::AI && kind != Kind::SI && kind != Kind::WAI) {
    throw ContractError("the exhaustive oracle handles AI, SI and wAI only");
  }
  if (budget.max_states_1 < 1 || budget.max_states_2 < 1) {
    throw InputError("search budget must allow at least one state per automaton");
  }
  Certificate cert;
  const std::size_t cap = a.state_count() - 1;  // nontrivial: strictly fewer states
  SearchBudget effective = budget;
  effective.max_states_1 = std::min(budget.max_states_1, cap);
  effective.max_states_2 = std::min(budget.max_states_2, cap);
  cert.effective_max_1 = effective.max_states_1;
  cert.effective_max_2 = effective.max_states_2;
  cert.estimate = estimate_search_space(a.symbol_count(), effective, kind);
  if (cert.estimate > kMaxCandidates) {
    throw BudgetError("search space estimate " + std::to_string(cert.estimate) +
                          " exceeds the feasibility bound of " + std::to_string(kMaxCandidates),
                      cert.estimate);
  }

  const bool with_accepting = kind == Kind::AI;
  std::vector<std::vector<Dfa>> by_size(std::max(effective.max_states_1, effective.max_states_2) + 1);
  for (std::size_t k = 1; k < by_size.size(); ++k) {
    by_size[k] = enumerate_candidates(k, a.alphabet(), budget.canonical_only, with_accepting);
  }
  for (std::size_t k = 1; k <= effective.max_states_1; ++k) {
    for (std::size_t l = 1; l <= effective.max_states_2; ++l) {
      for (const auto& c1 : by_size[k]) {
        for (const auto& c2 : by_size[l]) {
          ++cert.examined;
          Verdict v = verify(kind, a, c1, c2);
          if (v) {
            cert.counterexample = std::move(v.decomposition);
            return cert;
          }
        }
      }
    }
  }
  cert.exhausted = true;
  return cert;
}

}  // namespace decomp::oracle
