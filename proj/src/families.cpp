#include "decomp/families.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "decomp/errors.hpp"

namespace decomp {
namespace {

std::string grid_name(int i, int j) { return "q" + std::to_string(i) + "_" + std::to_string(j); }

void require(bool ok, const std::string& message) {
  if (!ok) throw InputError(message);
}

int param(const std::optional<int>& v, const char* name, const std::string& family) {
  if (!v) throw InputError("family '" + family + "' needs --" + name);
  return *v;
}

}  // namespace

Dfa gen_ln(int n) {
  require(n >= 1, "ln needs n >= 1");
  std::vector<std::string> states;
  for (int i = 0; i < n; ++i) states.push_back("s" + std::to_string(i));
  DfaBuilder b("ln_" + std::to_string(n), states, {"a"});
  for (int i = 0; i < n; ++i) b.transition(states[i], "a", states[std::min(i + 1, n - 1)]);
  return b.initial(states.front()).accept(states.back()).build();
}

Dfa gen_lkl(int k, int l) {
  require(k >= 2 && l >= 2, "lkl needs k, l >= 2");
  std::vector<std::string> states;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < l; ++j) states.push_back(grid_name(i, j));
  }
  DfaBuilder b("lkl_" + std::to_string(k) + "_" + std::to_string(l), states, {"a", "b"});
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < l; ++j) {
      b.transition(grid_name(i, j), "a", grid_name((i + 1) % k, j));
      b.transition(grid_name(i, j), "b", grid_name(i, (j + 1) % l));
    }
  }
  return b.initial(grid_name(0, 0)).accept(grid_name(0, 0)).build();
}

Dfa gen_grid(int r, int s) {
  require(r >= 2 && s >= 2, "grid needs r, s >= 2");
  std::vector<std::string> states;
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < s; ++j) states.push_back(grid_name(i, j));
  }
  DfaBuilder b("grid_" + std::to_string(r) + "_" + std::to_string(s), states, {"a", "b"});
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < s; ++j) {
      b.transition(grid_name(i, j), "a", grid_name(std::min(i + 1, r - 1), j));
      b.transition(grid_name(i, j), "b", grid_name(i, std::min(j + 1, s - 1)));
    }
  }
  return b.initial(grid_name(0, 0)).accept(grid_name(r - 1, s - 1)).build();
}

Dfa gen_k_extension(const Dfa& a, int k, std::optional<std::string> fresh_symbol) {
  require(k >= 1, "k-extension needs k >= 1");
  std::string c;
  if (fresh_symbol) {
    require(!a.find_symbol(*fresh_symbol), "symbol '" + *fresh_symbol + "' is already in the alphabet");
    c = *fresh_symbol;
  } else {
    for (char ch = 'c'; ch <= 'z' && c.empty(); ++ch) {
      if (!a.find_symbol(std::string(1, ch))) c = std::string(1, ch);
    }
    require(!c.empty(), "no fresh symbol available for the k-extension");
  }

  std::string prefix = "p";
  auto clashes = [&] {
    for (int i = 0; i < k; ++i) {
      if (a.find_state(prefix + std::to_string(i))) return true;
    }
    return false;
  };
  while (clashes()) prefix += "'";

  std::vector<std::string> states = a.state_names();
  std::vector<std::string> chain;
  for (int i = 0; i < k; ++i) chain.push_back(prefix + std::to_string(i));
  states.insert(states.end(), chain.begin(), chain.end());
  std::vector<std::string> alphabet = a.alphabet();
  alphabet.push_back(c);

  DfaBuilder b(a.name() + "_ext" + std::to_string(k), states, alphabet);
  for (State q = 0; q < a.state_count(); ++q) {
    for (Symbol s = 0; s < a.symbol_count(); ++s) {
      b.transition(a.state_name(q), a.symbol_name(s), a.state_name(a.next(q, s)));
    }
    b.transition(a.state_name(q), c, a.state_name(q));
    if (a.is_accepting(q)) b.accept(a.state_name(q));
  }
  for (int i = 0; i < k; ++i) {
    for (const auto& sym : a.alphabet()) b.transition(chain[i], sym, chain[i]);
    b.transition(chain[i], c, i + 1 < k ? chain[i + 1] : a.state_name(a.initial()));
  }
  return b.initial(chain.front()).build();
}

Example31 gen_example31() {
  DfaBuilder m("example31_min", {"a0", "a1", "b0", "b1", "R"}, {"a", "b"});
  m.transition("a0", "a", "a1").transition("a0", "b", "b1");
  m.transition("a1", "a", "a0").transition("a1", "b", "R");
  m.transition("b1", "a", "R").transition("b1", "b", "b0");
  m.transition("b0", "a", "R").transition("b0", "b", "b1");
  m.transition("R", "a", "R").transition("R", "b", "R");
  m.initial("a0").accept("a0").accept("b0");

  DfaBuilder p("example31_prime", {"a0", "a1", "b0", "b1", "R0", "R1"}, {"a", "b"});
  p.transition("a0", "a", "a1").transition("a0", "b", "b1");
  p.transition("a1", "a", "a0").transition("a1", "b", "R1");
  p.transition("b1", "a", "R1").transition("b1", "b", "b0");
  p.transition("b0", "a", "R0").transition("b0", "b", "b1");
  p.transition("R1", "a", "R1").transition("R1", "b", "R0");
  p.transition("R0", "a", "R0").transition("R0", "b", "R1");
  p.initial("a0").accept("a0").accept("b0");

  Dfa prime = p.build();
  auto part = [&](std::vector<std::vector<std::string>> names) {
    std::vector<std::vector<State>> blocks;
    for (const auto& block : names) {
      std::vector<State> ids;
      for (const auto& n : block) ids.push_back(prime.state(n));
      blocks.push_back(std::move(ids));
    }
    return Partition::from_blocks(prime.state_count(), blocks);
  };
  Partition pi1 = part({{"a0"}, {"a1"}, {"b0", "b1"}, {"R0", "R1"}});
  Partition pi2 = part({{"a0", "a1", "b0", "R0"}, {"b1", "R1"}});
  return {m.build(), std::move(prime), std::move(pi1), std::move(pi2)};
}

A4b4Triple gen_a4b4_triple() {
  const std::vector<std::string> ab{"a", "b"};

  DfaBuilder l("a4b4", {"A0", "A1", "A2", "A3", "B1", "B2", "B3", "B0", "D"}, ab);
  for (int i = 0; i < 4; ++i) {
    const std::string ai = "A" + std::to_string(i);
    l.transition(ai, "a", "A" + std::to_string((i + 1) % 4));
    l.transition(ai, "b", i == 0 ? "B1" : "D");
    const std::string bi = "B" + std::to_string(i);
    l.transition(bi, "a", "D");
    l.transition(bi, "b", "B" + std::to_string((i + 1) % 4));
  }
  l.transition("D", "a", "D").transition("D", "b", "D");
  l.initial("A0").accept("B0");

  DfaBuilder l1("a4b4_L1", {"A0", "A1", "A2", "A3", "B", "D"}, ab);
  for (int i = 0; i < 4; ++i) {
    const std::string ai = "A" + std::to_string(i);
    l1.transition(ai, "a", "A" + std::to_string((i + 1) % 4));
    l1.transition(ai, "b", i == 0 ? "B" : "D");
  }
  l1.transition("B", "a", "D").transition("B", "b", "B");
  l1.transition("D", "a", "D").transition("D", "b", "D");
  l1.initial("A0").accept("B");

  DfaBuilder l2("a4b4_L2", {"C0", "C1", "C2", "C3"}, ab);
  for (int i = 0; i < 4; ++i) {
    const std::string ci = "C" + std::to_string(i);
    l2.transition(ci, "a", ci);
    l2.transition(ci, "b", "C" + std::to_string((i + 1) % 4));
  }
  l2.initial("C0").accept("C0");

  return {minimize(l.build()).dfa, minimize(l1.build()).dfa, minimize(l2.build()).dfa};
}

Dfa gen_sb_not_asb() {
  std::vector<std::string> states;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 5; ++j) states.push_back(grid_name(i, j));
  }
  DfaBuilder b("sb_not_asb", states, {"a", "b", "c"});
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 5; ++j) {
      b.transition(grid_name(i, j), "a", grid_name((i + 1) % 3, j));
      b.transition(grid_name(i, j), "b", grid_name(i, (j + 1) % 5));
      b.transition(grid_name(i, j), "c", grid_name(i, j));
    }
  }
  return b.initial(grid_name(0, 0)).accept(grid_name(0, 0)).accept(grid_name(2, 4)).build();
}

Dfa generate(const FamilySpec& spec) {
  const auto& f = spec.family;
  if (f == "ln") return gen_ln(param(spec.n, "n", f));
  if (f == "lkl") return gen_lkl(param(spec.k, "k", f), param(spec.l, "l", f));
  if (f == "grid") return gen_grid(param(spec.r, "r", f), param(spec.s, "s", f));
  if (f == "kext") {
    return gen_k_extension(gen_grid(param(spec.r, "r", f), param(spec.s, "s", f)),
                           param(spec.k, "k", f));
  }
  if (f == "example31_min") return gen_example31().minimal;
  if (f == "example31_prime") return gen_example31().prime;
  if (f == "a4b4_triple") {
    auto t = gen_a4b4_triple();
    if (spec.part.empty() || spec.part == "a") return t.a;
    if (spec.part == "a1") return t.a1;
    if (spec.part == "a2") return t.a2;
    throw InputError("a4b4_triple part must be a, a1 or a2");
  }
  if (f == "sb_not_asb") return gen_sb_not_asb();
  throw InputError("unknown family '" + f + "'");
}

}  // namespace decomp
