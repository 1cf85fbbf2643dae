#pragma once

// Shared helpers for the unit and acceptance tests. Everything here is
// written from first principles so it can act as an independent check of
// the library.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "decomp/dfa.hpp"

namespace decomp::testing {

/// Uniform random complete DFA: every transition target, the initial state
/// and each accepting bit are drawn independently.
inline Dfa random_dfa(std::mt19937_64& rng, std::size_t states, std::size_t symbols,
                      const std::string& name = "rand") {
  std::vector<std::string> names, alphabet;
  for (std::size_t i = 0; i < states; ++i) names.push_back("s" + std::to_string(i));
  for (std::size_t i = 0; i < symbols; ++i) alphabet.push_back(std::string(1, char('a' + i)));
  std::uniform_int_distribution<State> target(0, static_cast<State>(states - 1));
  std::bernoulli_distribution coin(0.4);
  std::vector<State> delta(states * symbols);
  for (auto& t : delta) t = target(rng);
  std::vector<bool> accepting(states);
  for (std::size_t i = 0; i < states; ++i) accepting[i] = coin(rng);
  return Dfa(name, names, alphabet, delta, target(rng), accepting);
}

/// Random DFA restricted to the part reachable from its initial state.
inline Dfa random_reachable_dfa(std::mt19937_64& rng, std::size_t max_states,
                                std::size_t symbols) {
  std::uniform_int_distribution<std::size_t> size(1, max_states);
  return trim(random_dfa(rng, size(rng), symbols));
}

/// All words over `symbols` letters of length <= max_len, shortest first.
inline std::vector<Word> all_words(std::size_t symbols, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (Symbol a = 0; a < symbols; ++a) {
        Word w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

inline State step(const Dfa& a, State q, const Word& w) {
  for (Symbol s : w) q = a.next(q, s);
  return q;
}

/// Two states are distinguishable iff the pair graph reaches a pair with
/// different acceptance; plain BFS over state pairs.
inline bool distinguishable(const Dfa& a, State p, State q) {
  const std::size_t n = a.state_count();
  std::vector<bool> seen(n * n);
  std::vector<std::pair<State, State>> queue{{p, q}};
  seen[p * n + q] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto [x, y] = queue[i];
    if (a.is_accepting(x) != a.is_accepting(y)) return true;
    for (Symbol s = 0; s < a.symbol_count(); ++s) {
      const State nx = a.next(x, s), ny = a.next(y, s);
      if (!seen[nx * n + ny]) {
        seen[nx * n + ny] = true;
        queue.emplace_back(nx, ny);
      }
    }
  }
  return false;
}

/// Minimal means: every state reachable and every pair of states distinguishable.
inline bool is_minimal_bruteforce(const Dfa& a) {
  std::vector<bool> seen(a.state_count());
  std::vector<State> stack{a.initial()};
  seen[a.initial()] = true;
  while (!stack.empty()) {
    const State q = stack.back();
    stack.pop_back();
    for (Symbol s = 0; s < a.symbol_count(); ++s) {
      if (!seen[a.next(q, s)]) {
        seen[a.next(q, s)] = true;
        stack.push_back(a.next(q, s));
      }
    }
  }
  for (bool s : seen) {
    if (!s) return false;
  }
  for (State p = 0; p < a.state_count(); ++p) {
    for (State q = p + 1; q < a.state_count(); ++q) {
      if (!distinguishable(a, p, q)) return false;
    }
  }
  return true;
}

/// Agreement of two languages on every word up to `max_len`.
inline bool same_on_words(const Dfa& a, const Dfa& b, std::size_t max_len) {
  for (const Word& w : all_words(a.symbol_count(), max_len)) {
    if (accepts(a, w) != accepts(b, w)) return false;
  }
  return true;
}

}  // namespace decomp::testing
