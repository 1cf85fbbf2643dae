// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.
// Usage: decomp_acceptance <fixtures-dir>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "decomp/cli.hpp"
#include "decomp/decomposition.hpp"
#include "decomp/families.hpp"
#include "decomp/oracle.hpp"
#include "decomp/sp_lattice.hpp"
#include "decomp/text_format.hpp"
#include "test_support.hpp"

using namespace decomp;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Check {
  bool ok = true;
  std::vector<std::string> notes;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

struct CliResult {
  int code;
  std::string out;
};

CliResult cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str()};
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

using Sizes = std::vector<std::pair<std::size_t, std::size_t>>;

Sizes nonredundant_sizes(const DecompositionReport& r) {
  Sizes out;
  for (const auto& e : r.entries) {
    if (!e.redundant && e.nontrivial) {
      out.emplace_back(e.decomposition.a1.state_count(), e.decomposition.a2.state_count());
    }
  }
  return out;
}

std::string str(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// ---------------------------------------------------------------------------

Check ac1() {
  Check c;
  for (auto [r, s] : {std::pair{2, 2}, {2, 3}, {3, 3}, {3, 5}}) {
    const std::string dfa =
        cli({"gen", "--family", "grid", "--r", std::to_string(r), "--s", std::to_string(s)}).out;
    for (const char* kind : {"sb", "asb"}) {
      const auto start = Clock::now();
      const CliResult res =
          cli({"decompose", "--kind", kind, "--nonredundant", "--format", "json"}, dfa);
      const double t = seconds_since(start);
      const std::string tag = std::string(kind) + " grid" + str(r, s);
      c.require(res.code == 0, tag + ": exit " + std::to_string(res.code));
      c.require(t < 5.0, tag + ": " + std::to_string(t) + " s");
      const auto j = nlohmann::json::parse(res.out);
      const auto& d = j["decompositions"];
      c.require(d.size() == 1, tag + ": " + std::to_string(d.size()) + " entries");
      if (d.size() == 1) {
        c.require(d[0]["a1_states"] == r && d[0]["a2_states"] == s, tag + ": wrong sizes");
      }
    }
  }
  return c;
}

Check ac2() {
  Check c;
  const auto start = Clock::now();
  for (int r = 2; r <= 3; ++r)
    for (int s = 2; s <= 3; ++s)
      for (int k = 1; k <= 2; ++k) {
        const Dfa a = gen_k_extension(gen_grid(r, s), k);
        const std::string tag = "kext(" + std::to_string(r) + "," + std::to_string(s) + "," +
                                std::to_string(k) + ")";
        const std::size_t n = static_cast<std::size_t>(k + r * s);
        c.require(a.state_count() == n, tag + ": state count");
        c.require(minimize(a).dfa.state_count() == n, tag + ": not minimal");
        const SpLattice lattice = sp_lattice(a);
        // Reports list the smaller factor first.
        const auto lo = static_cast<std::size_t>(k + std::min(r, s));
        const auto hi = static_cast<std::size_t>(k + std::max(r, s));
        const Sizes expected{{lo, hi}};
        c.require(nonredundant_sizes(decompose_sb(a, lattice)) == expected, tag + ": SB");
        c.require(nonredundant_sizes(decompose_asb(a, lattice)) == expected, tag + ": ASB");
      }
  const double t = seconds_since(start);
  c.require(t < 30.0, "total " + std::to_string(t) + " s");
  return c;
}

Check ac3() {
  Check c;
  const std::string ln4 = cli({"gen", "--family", "ln", "--n", "4"}).out;
  const auto start = Clock::now();
  const CliResult res = cli({"oracle", "--kind", "wai", "--max1", "3", "--max2", "3"}, ln4);
  const double t = seconds_since(start);
  c.require(res.code == 1, "exit " + std::to_string(res.code));
  c.require(res.out.find("no nontrivial wAI decomposition") == 0, "no certificate text");
  c.require(t < 60.0, std::to_string(t) + " s");
  return c;
}

Check ac4() {
  Check c;
  const Dfa a = gen_lkl(3, 5);
  bool found = false;
  for (const auto& e : decompose_asb(a).entries) {
    const auto& d = e.decomposition;
    if (e.perfect && d.a1.state_count() == 3 && d.a2.state_count() == 5) {
      found = true;
      c.require(static_cast<bool>(verify(Kind::ASB, a, d.a1, d.a2)), "perfect entry fails verify");
    }
  }
  c.require(found, "no perfect (3,5) entry");
  return c;
}

Check ac5() {
  Check c;
  const A4b4Triple t = gen_a4b4_triple();
  c.require(decompose_sb(t.a).entries.empty(), "SB report not empty");
  c.require(static_cast<bool>(verify(Kind::AI, t.a, t.a1, t.a2)), "AI verify failed");
  c.require(static_cast<bool>(verify(Kind::SI, t.a, t.a1, t.a2)), "SI verify failed");
  c.require(t.a1.state_count() < t.a.state_count(), "A1 not smaller");
  c.require(t.a2.state_count() < t.a.state_count(), "A2 not smaller");
  return c;
}

Check ac6() {
  Check c;
  const Example31 ex = gen_example31();
  c.require(decompose_sb(ex.minimal).entries.empty(), "minimal automaton has SB entries");
  bool found = false;
  for (const auto& e : decompose_asb(ex.prime).entries) {
    const auto& src = e.decomposition.source_partitions;
    if (!src) continue;
    const bool ours = (src->first == ex.pi1 && src->second == ex.pi2) ||
                      (src->first == ex.pi2 && src->second == ex.pi1);
    if (!ours) continue;
    found = true;
    const auto& d = e.decomposition;
    c.require(d.a1.state_count() == 2 && d.a2.state_count() == 4,
              "sizes " + str(d.a1.state_count(), d.a2.state_count()));
    c.require(d.a1.state_count() < ex.minimal.state_count() &&
                  d.a2.state_count() < ex.minimal.state_count(),
              "factors not smaller than the minimal automaton");
  }
  c.require(found, "no entry from the given partitions");
  return c;
}

Check ac7() {
  Check c;
  const Dfa a = gen_sb_not_asb();
  c.require(!decompose_sb(a).entries.empty(), "SB report empty");
  c.require(decompose_asb(a).entries.empty(), "ASB report not empty");
  return c;
}

Check ac8() {
  Check c;
  std::mt19937_64 rng(20240808);
  std::uniform_int_distribution<std::size_t> size(1, 6);
  int mismatches = 0;
  for (int i = 0; i < 200; ++i) {
    const Dfa a = decomp::testing::random_dfa(rng, size(rng), 2);
    const auto brute = oracle::brute_sp_partitions(a);
    const SpLattice lattice = sp_lattice(a);
    const auto& elems = lattice.elements();
    if (std::set<Partition>(brute.begin(), brute.end()) !=
        std::set<Partition>(elems.begin(), elems.end())) {
      ++mismatches;
    }
  }
  c.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  return c;
}

// Candidate factor pairs for a DFA: quotients by random pairs of lattice
// elements with random accepting blocks, plus small random automata.
std::vector<std::pair<Dfa, Dfa>> candidate_pairs(const Dfa& a, const SpLattice& lattice,
                                                 std::mt19937_64& rng) {
  std::vector<std::pair<Dfa, Dfa>> out;
  const auto& el = lattice.elements();
  std::uniform_int_distribution<std::size_t> pick(0, el.size() - 1);
  std::bernoulli_distribution coin(0.5);
  auto random_quotient = [&](const Partition& pi, bool canonical) {
    std::vector<std::uint32_t> acc;
    for (std::uint32_t b = 0; b < pi.block_count(); ++b) {
      bool meets_f = false;
      for (State q = 0; q < a.state_count(); ++q) {
        if (pi.block_of(q) == b && a.is_accepting(q)) meets_f = true;
      }
      if (canonical ? meets_f : coin(rng)) acc.push_back(b);
    }
    return quotient(a, pi, acc);
  };
  for (int i = 0; i < 6; ++i) {
    const bool canonical = i % 2 == 0;
    out.emplace_back(random_quotient(el[pick(rng)], canonical), random_quotient(el[pick(rng)], canonical));
  }
  for (int i = 0; i < 3; ++i) {
    out.emplace_back(decomp::testing::random_dfa(rng, 1 + i, a.symbol_count()),
                     decomp::testing::random_dfa(rng, 1 + (i + 1) % 3, a.symbol_count()));
  }
  return out;
}

Check ac9() {
  Check c;
  std::mt19937_64 rng(19990101);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  int violations = 0, pairs = 0, sb_seen = 0, ai_seen = 0, perfect_seen = 0;
  auto fail = [&](const std::string& what) {
    ++violations;
    if (c.notes.size() < 5) c.notes.push_back(what);
  };
  for (int i = 0; i < 300; ++i) {
    // Odd instances are products of two random factors, so that SB and
    // perfect decompositions actually occur.
    std::optional<std::pair<Dfa, Dfa>> factors;
    Dfa a = trim(decomp::testing::random_dfa(rng, size(rng), 2));
    if (i % 2 == 1) {
      std::uniform_int_distribution<std::size_t> small(2, 4);
      const std::size_t k = small(rng);
      const std::size_t l = k == 2 ? small(rng) : 2;
      factors.emplace(decomp::testing::random_dfa(rng, k, 2), decomp::testing::random_dfa(rng, l, 2));
      a = trim(parallel_connection(factors->first, factors->second));
    }
    const bool minimal = minimize(a).dfa.state_count() == a.state_count();
    const SpLattice lattice = sp_lattice(a);
    auto candidates = candidate_pairs(a, lattice, rng);
    if (factors) candidates.push_back(*factors);

    // SB ⇒ SI on every enumerated SB decomposition.
    for (const auto& e : decompose_sb(a, lattice).entries) {
      ++sb_seen;
      if (!verify(Kind::SI, a, e.decomposition.a1, e.decomposition.a2)) fail("SB without SI");
    }

    for (const auto& [a1, a2] : candidates) {
      ++pairs;
      const bool ai = static_cast<bool>(verify(Kind::AI, a, a1, a2));
      const bool si = static_cast<bool>(verify(Kind::SI, a, a1, a2));
      const bool wai = static_cast<bool>(verify(Kind::WAI, a, a1, a2));
      const bool sb = static_cast<bool>(verify(Kind::SB, a, a1, a2));
      const bool asb = static_cast<bool>(verify(Kind::ASB, a, a1, a2));
      ai_seen += ai;
      if (sb && !si) fail("SB without SI");
      if (minimal && ai && !si) fail("minimal AI without SI");
      if (asb != (sb && ai)) fail("ASB differs from SB and AI");
      if (si && !wai) fail("SI without wAI");
      if (ai && !wai) fail("AI without wAI");
      if (a1.state_count() * a2.state_count() == a.state_count()) {
        ++perfect_seen;
        if (si != sb) fail("perfect SI and SB disagree");
      }
      const std::pair<Kind, bool> transfers[] = {{Kind::AI, ai}, {Kind::SI, si}, {Kind::WAI, wai}};
      for (const auto& [kind, holds] : transfers) {
        if (!holds) continue;
        Verdict v = verify(kind, a, a1, a2);
        try {
          const Decomposition moved = transfer_to_minimal(kind, a, *v.decomposition);
          if (!verify(kind, minimize(a).dfa, moved.a1, moved.a2)) fail("transfer fails to verify");
        } catch (const std::exception& e) {
          fail(std::string("transfer threw: ") + e.what());
        }
      }
    }
  }
  c.require(violations == 0, std::to_string(violations) + " violations");
  c.notes.push_back(std::to_string(pairs) + " pairs, " + std::to_string(sb_seen) + " SB entries, " +
                    std::to_string(ai_seen) + " AI pairs, " + std::to_string(perfect_seen) +
                    " perfect-size pairs");
  c.require(sb_seen > 0 && ai_seen > 0 && perfect_seen > 0, "a property was never exercised");
  return c;
}

struct ExitCase {
  std::vector<std::string> args;
  std::string input;
  int expected;
};

Check ac10(const fs::path& fixtures) {
  Check c;
  const nlohmann::json manifest = nlohmann::json::parse(read_file(fixtures / "fixtures.json"));
  std::size_t files = 0;
  for (const auto& f : manifest) {
    const std::string name = f["file"];
    const std::string text = read_file(fixtures / name);
    std::vector<std::string> args{"gen"};
    for (const auto& [k, v] : f["gen"].items()) {
      args.push_back("--" + k);
      args.push_back(v.is_string() ? v.get<std::string>() : std::to_string(v.get<int>()));
    }
    c.require(cli(args).out == text, name + ": gen output differs");
    try {
      c.require(print_dfa(parse_dfa(text)) == text, name + ": round trip differs");
    } catch (const std::exception& e) {
      c.require(false, name + ": " + e.what());
    }
    if (f.value("minimal", false)) {
      c.require(cli({"minimize"}, text).out == print_dfa(minimize(parse_dfa(text)).dfa),
                name + ": minimize output");
      c.require(canonical_form(parse_dfa(cli({"minimize"}, text).out)) ==
                    canonical_form(parse_dfa(text)),
                name + ": minimize changed a minimal automaton");
    }
    ++files;
  }
  c.require(files >= 10, "only " + std::to_string(files) + " fixtures");

  const std::string amin = read_file(fixtures / "example31_min.dfa");
  const std::string grid35 = read_file(fixtures / "grid_3_5.dfa");
  const std::string ln4 = read_file(fixtures / "ln_4.dfa");
  const std::string a = (fixtures / "a4b4.dfa").string();
  const std::string a1 = (fixtures / "a4b4_a1.dfa").string();
  const std::string a2 = (fixtures / "a4b4_a2.dfa").string();
  const std::vector<ExitCase> cases{
      {{"decompose", "--kind", "sb", "--nonredundant"}, grid35, 0},
      {{"decompose", "--kind", "sb"}, amin, 1},
      {{"decompose", "--kind", "asb"}, read_file(fixtures / "sb_not_asb.dfa"), 1},
      {{"verify", "--kind", "ai", a, a1, a2}, "", 0},
      {{"verify", "--kind", "si", a, a1, a2}, "", 0},
      {{"verify", "--kind", "sb", a, a1, a2}, "", 1},
      {{"oracle", "--kind", "wai", "--max1", "2", "--max2", "2"}, ln4, 1},
      {{"oracle", "--kind", "ai", "--max1", "14", "--max2", "14", "--no-canonical"}, grid35, 3},
      {{"lattice"}, amin, 0},
      {{"dot"}, amin, 0},
      {{"minimize"}, "dfa broken\n", 2},
      {{"decompose", "--kind", "nope"}, amin, 2},
      {{"gen", "--family", "unknown"}, "", 2},
      {{"--help"}, "", 0},
  };
  for (const auto& ec : cases) {
    const int got = cli(ec.args, ec.input).code;
    std::string cmd;
    for (const auto& s : ec.args) cmd += " " + s;
    c.require(got == ec.expected, "decomp" + cmd + ": exit " + std::to_string(got) +
                                      " (expected " + std::to_string(ec.expected) + ")");
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: decomp_acceptance <fixtures-dir>\n";
    return 2;
  }
  const fs::path fixtures = argv[1];
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"AC-1 grid automata: unique nonredundant SB/ASB decomposition", ac1},
      {"AC-2 k-extensions: unique nonredundant decomposition (k+r, k+s)", ac2},
      {"AC-3 threshold language: wAI exhaustion certificate", ac3},
      {"AC-4 residue automaton: perfect (3,5) ASB decomposition", ac4},
      {"AC-5 a4b4: AI and SI without SB", ac5},
      {"AC-6 even a-b language: SB-free minimal automaton, (2,4) ASB on the split-sink automaton", ac6},
      {"AC-7 mod-3/mod-5 union: SB but not ASB", ac7},
      {"AC-8 brute-force S.P. partitions equal the lattice", ac8},
      {"AC-9 theorem suite on random automata", ac9},
      {"AC-10 round trip and exit codes on fixtures", [&] { return ac10(fixtures); }},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = Clock::now();
    Check c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.notes.push_back(std::string("exception: ") + e.what());
    }
    const double t = seconds_since(start);
    failed += !c.ok;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (c.ok ? "PASS " : "FAIL ") << name << " [" << t << " s]";
    for (const auto& n : c.notes) line << "; " << n;
    std::cout << line.str() << "\n";
  }
  std::cout << (10 - failed) << "/10 criteria passed\n";
  return failed == 0 ? 0 : 1;
}
