#include "decomp/dfa.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#include "decomp/errors.hpp"
#include "decomp/sp_lattice.hpp"

namespace decomp {
namespace {

bool has_space(std::string_view s) {
  return std::any_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

void check_token(std::string_view what, std::string_view s, std::string_view forbidden) {
  if (s.empty()) throw InputError(std::string(what) + " name is empty");
  if (has_space(s) || s.find_first_of(forbidden) != std::string_view::npos) {
    throw InputError(std::string(what) + " name '" + std::string(s) +
                     "' contains whitespace or one of \"" + std::string(forbidden) + "\"");
  }
}

void check_distinct(std::string_view what, const std::vector<std::string>& names) {
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) {
      throw InputError("duplicate " + std::string(what) + " '" + n + "'");
    }
  }
}

template <typename T>
std::optional<std::uint32_t> index_in(const std::vector<T>& v, std::string_view s) {
  auto it = std::find(v.begin(), v.end(), s);
  if (it == v.end()) return std::nullopt;
  return static_cast<std::uint32_t>(it - v.begin());
}

}  // namespace

Dfa::Dfa(std::string name, std::vector<std::string> states,
         std::vector<std::string> alphabet, std::vector<State> delta, State initial,
         std::vector<bool> accepting)
    : name_(std::move(name)),
      states_(std::move(states)),
      alphabet_(std::move(alphabet)),
      delta_(std::move(delta)),
      initial_(initial),
      accepting_(std::move(accepting)) {
  check_token("automaton", name_, "#");
  if (states_.empty()) throw InputError("automaton '" + name_ + "' has no states");
  if (alphabet_.empty()) throw InputError("automaton '" + name_ + "' has an empty alphabet");
  for (const auto& s : states_) check_token("state", s, ",|{}#");
  for (const auto& s : alphabet_) check_token("symbol", s, "#");
  check_distinct("state", states_);
  check_distinct("symbol", alphabet_);
  if (delta_.size() != states_.size() * alphabet_.size()) {
    throw InputError("transition table of '" + name_ + "' is not total");
  }
  for (State t : delta_) {
    if (t >= states_.size()) throw InputError("transition target out of range in '" + name_ + "'");
  }
  if (initial_ >= states_.size()) throw InputError("initial state out of range in '" + name_ + "'");
  if (accepting_.size() != states_.size()) {
    throw InputError("accepting vector of '" + name_ + "' has the wrong size");
  }
}

std::size_t Dfa::accepting_count() const {
  return static_cast<std::size_t>(std::count(accepting_.begin(), accepting_.end(), true));
}

std::optional<State> Dfa::find_state(std::string_view name) const {
  return index_in(states_, name);
}

std::optional<Symbol> Dfa::find_symbol(std::string_view name) const {
  return index_in(alphabet_, name);
}

State Dfa::state(std::string_view name) const {
  if (auto q = find_state(name)) return *q;
  throw InputError("unknown state '" + std::string(name) + "' in '" + name_ + "'");
}

Symbol Dfa::symbol(std::string_view name) const {
  if (auto a = find_symbol(name)) return *a;
  throw InputError("symbol '" + std::string(name) + "' is not in the alphabet of '" + name_ + "'");
}

Word Dfa::word(std::string_view text) const {
  Word w;
  if (has_space(text)) {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
      if (j > i) w.push_back(symbol(text.substr(i, j - i)));
      i = j;
    }
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) w.push_back(symbol(text.substr(i, 1)));
  }
  return w;
}

std::string Dfa::spell(std::span<const Symbol> w) const {
  bool single = std::all_of(alphabet_.begin(), alphabet_.end(),
                            [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single && i > 0) out += ' ';
    out += alphabet_.at(w[i]);
  }
  return out;
}

Dfa Dfa::renamed(std::string name) const {
  Dfa copy = *this;
  check_token("automaton", name, "#");
  copy.name_ = std::move(name);
  return copy;
}

std::uint64_t Dfa::fingerprint() const {
  std::string blob;
  for (const auto& s : states_) blob += s + '\x1f';
  blob += '\x1e';
  for (const auto& s : alphabet_) blob += s + '\x1f';
  blob += '\x1e';
  for (State t : delta_) blob += std::to_string(t) + ',';
  blob += '\x1e' + std::to_string(initial_) + '\x1e';
  for (bool f : accepting_) blob += f ? '1' : '0';
  return std::hash<std::string>{}(blob);
}

DfaBuilder::DfaBuilder(std::string name, std::vector<std::string> states,
                       std::vector<std::string> alphabet)
    : name_(std::move(name)),
      states_(std::move(states)),
      alphabet_(std::move(alphabet)),
      delta_(states_.size() * alphabet_.size(), kNoState),
      accepting_(states_.size(), false) {
  check_distinct("state", states_);
  check_distinct("symbol", alphabet_);
}

std::size_t DfaBuilder::index_of_state(std::string_view s) const {
  if (auto i = index_in(states_, s)) return *i;
  throw InputError("unknown state '" + std::string(s) + "'");
}

std::size_t DfaBuilder::index_of_symbol(std::string_view s) const {
  if (auto i = index_in(alphabet_, s)) return *i;
  throw InputError("unknown symbol '" + std::string(s) + "'");
}

DfaBuilder& DfaBuilder::transition(std::string_view from, std::string_view symbol,
                                   std::string_view to) {
  auto slot = index_of_state(from) * alphabet_.size() + index_of_symbol(symbol);
  auto target = static_cast<State>(index_of_state(to));
  if (delta_[slot] != kNoState && delta_[slot] != target) {
    throw InputError("conflicting transitions for (" + std::string(from) + ", " +
                     std::string(symbol) + ")");
  }
  delta_[slot] = target;
  return *this;
}

DfaBuilder& DfaBuilder::initial(std::string_view state) {
  initial_ = static_cast<State>(index_of_state(state));
  return *this;
}

DfaBuilder& DfaBuilder::accept(std::string_view state) {
  accepting_[index_of_state(state)] = true;
  return *this;
}

Dfa DfaBuilder::build() const {
  for (std::size_t i = 0; i < delta_.size(); ++i) {
    if (delta_[i] == kNoState) {
      throw InputError("missing transition for (" + states_[i / alphabet_.size()] + ", " +
                       alphabet_[i % alphabet_.size()] + ")");
    }
  }
  if (initial_ == kNoState) throw InputError("no initial state");
  return Dfa(name_, states_, alphabet_, delta_, initial_, accepting_);
}

State run(const Dfa& a, State from, std::span<const Symbol> w) {
  State q = from;
  for (Symbol s : w) {
    if (s >= a.symbol_count()) throw InputError("symbol index out of range");
    q = a.next(q, s);
  }
  return q;
}

State run(const Dfa& a, std::span<const Symbol> w) { return run(a, a.initial(), w); }

bool accepts(const Dfa& a, std::span<const Symbol> w) { return a.is_accepting(run(a, w)); }

State run(const Dfa& a, std::string_view w) { return run(a, a.word(w)); }

bool accepts(const Dfa& a, std::string_view w) { return accepts(a, a.word(w)); }

std::vector<State> reachable_states(const Dfa& a) {
  std::vector<bool> seen(a.state_count(), false);
  std::vector<State> order{a.initial()};
  seen[a.initial()] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Symbol s = 0; s < a.symbol_count(); ++s) {
      State t = a.next(order[head], s);
      if (!seen[t]) {
        seen[t] = true;
        order.push_back(t);
      }
    }
  }
  return order;
}

bool all_reachable(const Dfa& a) { return reachable_states(a).size() == a.state_count(); }

namespace {

// Restricts a to `keep` (ascending, closed under transitions).
Dfa restrict_to(const Dfa& a, const std::vector<State>& keep) {
  std::vector<State> index(a.state_count(), kNoState);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<State>(i);
  std::vector<std::string> names;
  std::vector<State> delta;
  std::vector<bool> acc;
  for (State q : keep) {
    names.push_back(a.state_name(q));
    acc.push_back(a.is_accepting(q));
    for (Symbol s = 0; s < a.symbol_count(); ++s) delta.push_back(index[a.next(q, s)]);
  }
  return Dfa(a.name(), std::move(names), a.alphabet(), std::move(delta), index[a.initial()],
             std::move(acc));
}

std::vector<State> sorted_reachable(const Dfa& a) {
  auto r = reachable_states(a);
  std::sort(r.begin(), r.end());
  return r;
}

}  // namespace

Dfa trim(const Dfa& a) {
  if (all_reachable(a)) return a;
  return restrict_to(a, sorted_reachable(a));
}

MinimizeResult minimize(const Dfa& a) {
  const auto keep = sorted_reachable(a);
  const Dfa t = keep.size() == a.state_count() ? a : restrict_to(a, keep);
  const std::size_t n = t.state_count();
  const std::size_t k = t.symbol_count();

  // Moore refinement: split by acceptance, then by successor blocks until stable.
  std::vector<std::uint32_t> labels(n);
  for (State q = 0; q < n; ++q) labels[q] = t.is_accepting(q) ? 1 : 0;
  auto current = Partition::from_labels(labels);
  for (;;) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> signature_ids;
    for (State q = 0; q < n; ++q) {
      std::vector<std::uint32_t> sig;
      sig.reserve(k + 1);
      sig.push_back(current.block_of(q));
      for (Symbol s = 0; s < k; ++s) sig.push_back(current.block_of(t.next(q, s)));
      auto [it, _] = signature_ids.try_emplace(std::move(sig),
                                                static_cast<std::uint32_t>(signature_ids.size()));
      labels[q] = it->second;
    }
    auto refined = Partition::from_labels(labels);
    if (refined.block_count() == current.block_count()) break;
    current = std::move(refined);
  }

  std::vector<std::uint32_t> accepting_blocks;
  std::vector<bool> marked(current.block_count(), false);
  for (State q = 0; q < n; ++q) {
    if (t.is_accepting(q) && !marked[current.block_of(q)]) {
      marked[current.block_of(q)] = true;
      accepting_blocks.push_back(current.block_of(q));
    }
  }
  Dfa result = quotient(t, current, accepting_blocks);

  StateMap map{std::vector<State>(a.state_count(), kNoState)};
  for (std::size_t i = 0; i < keep.size(); ++i) map.image[keep[i]] = current.block_of(static_cast<State>(i));
  return {std::move(result), std::move(map)};
}

Dfa align_alphabet(const Dfa& b, const std::vector<std::string>& alphabet) {
  if (b.alphabet() == alphabet) return b;
  if (alphabet.size() != b.symbol_count()) {
    throw InputError("alphabet mismatch between automata ('" + b.name() + "')");
  }
  std::vector<Symbol> source(alphabet.size());
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    auto s = b.find_symbol(alphabet[i]);
    if (!s) throw InputError("alphabet mismatch: '" + b.name() + "' lacks symbol '" + alphabet[i] + "'");
    source[i] = *s;
  }
  std::vector<State> delta;
  delta.reserve(b.table().size());
  for (State q = 0; q < b.state_count(); ++q) {
    for (Symbol s = 0; s < alphabet.size(); ++s) delta.push_back(b.next(q, source[s]));
  }
  return Dfa(b.name(), b.state_names(), alphabet, std::move(delta), b.initial(), b.accepting());
}

Dfa parallel_connection(const Dfa& a1, const Dfa& b2) {
  const Dfa a2 = align_alphabet(b2, a1.alphabet());
  const std::size_t n2 = a2.state_count();
  std::vector<std::string> names;
  std::vector<State> delta;
  std::vector<bool> acc;
  for (State p = 0; p < a1.state_count(); ++p) {
    for (State q = 0; q < n2; ++q) {
      names.push_back("(" + a1.state_name(p) + ";" + a2.state_name(q) + ")");
      acc.push_back(a1.is_accepting(p) && a2.is_accepting(q));
      for (Symbol s = 0; s < a1.symbol_count(); ++s) {
        delta.push_back(static_cast<State>(a1.next(p, s) * n2 + a2.next(q, s)));
      }
    }
  }
  return Dfa(a1.name() + "||" + a2.name(), std::move(names), a1.alphabet(), std::move(delta),
             static_cast<State>(a1.initial() * n2 + a2.initial()), std::move(acc));
}

std::optional<Word> distinguishing_word(const Dfa& a, const Dfa& other) {
  const Dfa b = align_alphabet(other, a.alphabet());
  const std::size_t nb = b.state_count();
  const std::size_t total = a.state_count() * nb;
  std::vector<std::uint32_t> parent(total, kNoState);
  std::vector<Symbol> via(total, 0);
  const auto start = static_cast<std::uint32_t>(a.initial() * nb + b.initial());
  parent[start] = start;
  std::vector<std::uint32_t> queue{start};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto cur = queue[head];
    const State p = cur / nb;
    const State q = cur % nb;
    if (a.is_accepting(p) != b.is_accepting(q)) {
      Word w;
      for (auto x = cur; x != start; x = parent[x]) w.push_back(via[x]);
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (Symbol s = 0; s < a.symbol_count(); ++s) {
      const auto nxt = static_cast<std::uint32_t>(a.next(p, s) * nb + b.next(q, s));
      if (parent[nxt] == kNoState) {
        parent[nxt] = cur;
        via[nxt] = s;
        queue.push_back(nxt);
      }
    }
  }
  return std::nullopt;
}

bool equivalent(const Dfa& a, const Dfa& b) { return !distinguishing_word(a, b).has_value(); }

std::vector<StateTriple> reachable_triples(const Dfa& a, const Dfa& b1, const Dfa& b2) {
  const Dfa a1 = align_alphabet(b1, a.alphabet());
  const Dfa a2 = align_alphabet(b2, a.alphabet());
  const std::size_t n1 = a1.state_count();
  const std::size_t n2 = a2.state_count();
  auto code = [&](const StateTriple& t) { return (t.q * n1 + t.p1) * n2 + t.p2; };
  std::vector<bool> seen(a.state_count() * n1 * n2, false);
  std::vector<StateTriple> order{{a.initial(), a1.initial(), a2.initial()}};
  seen[code(order[0])] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const StateTriple cur = order[head];
    for (Symbol s = 0; s < a.symbol_count(); ++s) {
      StateTriple nxt{a.next(cur.q, s), a1.next(cur.p1, s), a2.next(cur.p2, s)};
      if (!seen[code(nxt)]) {
        seen[code(nxt)] = true;
        order.push_back(nxt);
      }
    }
  }
  return order;
}

std::string block_name(const Dfa& a, const std::vector<State>& block) {
  std::string out;
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i > 0) out += '+';
    out += a.state_name(block[i]);
  }
  return out;
}

Dfa quotient(const Dfa& a, const Partition& pi, std::span<const std::uint32_t> accepting_blocks) {
  if (pi.element_count() != a.state_count()) {
    throw InputError("partition size does not match automaton '" + a.name() + "'");
  }
  if (!is_sp(a, pi)) {
    throw ContractError("partition does not have the substitution property for '" + a.name() + "'");
  }
  const auto blocks = pi.blocks();
  std::vector<std::string> names;
  std::vector<State> delta;
  for (const auto& b : blocks) {
    names.push_back(block_name(a, b));
    for (Symbol s = 0; s < a.symbol_count(); ++s) delta.push_back(pi.block_of(a.next(b.front(), s)));
  }
  std::vector<bool> acc(blocks.size(), false);
  for (auto b : accepting_blocks) {
    if (b >= blocks.size()) throw InputError("accepting block index out of range");
    acc[b] = true;
  }
  return Dfa(a.name(), std::move(names), a.alphabet(), std::move(delta), pi.block_of(a.initial()),
             std::move(acc));
}

Dfa canonical_form(const Dfa& a) {
  const auto order = reachable_states(a);
  std::vector<State> index(a.state_count(), kNoState);
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = static_cast<State>(i);
  std::vector<std::string> names;
  std::vector<State> delta;
  std::vector<bool> acc;
  for (std::size_t i = 0; i < order.size(); ++i) {
    names.push_back(std::to_string(i));
    acc.push_back(a.is_accepting(order[i]));
    for (Symbol s = 0; s < a.symbol_count(); ++s) delta.push_back(index[a.next(order[i], s)]);
  }
  return Dfa(a.name(), std::move(names), a.alphabet(), std::move(delta), 0, std::move(acc));
}

bool isomorphic(const Dfa& a, const Dfa& b) {
  if (a.symbol_count() != b.symbol_count()) return false;
  Dfa cb = canonical_form(align_alphabet(b, a.alphabet()));
  Dfa ca = canonical_form(a);
  return ca.table() == cb.table() && ca.accepting() == cb.accepting();
}

}  // namespace decomp
