#include <doctest.h>

#include <random>
#include <string>

#include "decomp/errors.hpp"
#include "decomp/families.hpp"
#include "decomp/text_format.hpp"
#include "test_support.hpp"

using namespace decomp;

namespace {

std::string error_of(std::string_view text) {
  try {
    parse_dfa_document(text, "t.dfa");
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("smallest document") {
  const Dfa a = parse_dfa(
      "dfa ln_1\n"
      "alphabet a\n"
      "states s0\n"
      "initial s0\n"
      "accepting s0\n"
      "trans s0 a s0\n"
      "end\n");
  CHECK(a.state_count() == 1);
  CHECK(a == gen_ln(1));
}

TEST_CASE("print format") {
  CHECK(print_dfa(gen_ln(2)) ==
        "dfa ln_2\n"
        "alphabet a\n"
        "states s0 s1\n"
        "initial s0\n"
        "accepting s1\n"
        "trans s0 a s1\n"
        "trans s1 a s1\n"
        "end\n");
  CHECK(count(print_dfa(gen_lkl(2, 2)), "\ntrans ") == 8);
}

TEST_CASE("comments, blank lines and an empty accepting set") {
  const Dfa a = parse_dfa(
      "# leading comment\n"
      "\n"
      "dfa x   # trailing\n"
      "alphabet a b\n"
      "states p q\n"
      "initial q\n"
      "accepting\n"
      "trans p a q\ntrans p b p\ntrans q a p\ntrans q b q\n"
      "end\n"
      "# after end\n");
  CHECK(a.accepting_count() == 0);
  CHECK(a.state_name(a.initial()) == "q");
  CHECK(print_dfa(a).find("accepting\n") != std::string::npos);
}

TEST_CASE("parse errors carry line numbers") {
  const std::string head = "dfa x\nalphabet a b\nstates p q\ninitial p\naccepting q\n";
  CHECK(error_of(head + "trans p a q\ntrans p b p\ntrans q a p\nend\n") ==
        "t.dfa:9: automaton is not complete: missing transition for (q, b)");
  CHECK(error_of(head + "trans p a q\ntrans p a p\n").find("t.dfa:7: duplicate transition") == 0);
  CHECK(error_of(head + "trans p z q\n").find("t.dfa:6: unknown symbol 'z'") == 0);
  CHECK(error_of(head + "trans p a r\n").find("t.dfa:6: unknown state 'r'") == 0);
  CHECK(error_of("dfa x\nalphabet a\nstates p\naccepting p\ntrans p a p\nend\n").find("initial") !=
        std::string::npos);
  CHECK(error_of(head + "trans p a q\ntrans p b p\ntrans q a p\ntrans q b q\n").find("end") !=
        std::string::npos);
  CHECK(error_of("dfa x\nbogus line\n").find("t.dfa:2:") == 0);
}

TEST_CASE("round trip on fixtures and random automata") {
  const Example31 ex = gen_example31();
  const A4b4Triple t = gen_a4b4_triple();
  for (const Dfa& a : {gen_ln(4), gen_lkl(3, 5), gen_grid(2, 2), gen_k_extension(gen_grid(2, 3), 2),
                       ex.minimal, ex.prime, t.a, t.a1, t.a2, gen_sb_not_asb()}) {
    const std::string text = print_dfa(a);
    CHECK(parse_dfa(text) == a);
    CHECK(print_dfa(parse_dfa(text)) == text);
  }
  std::mt19937_64 rng(500);
  for (int iter = 0; iter < 500; ++iter) {
    const Dfa a = decomp::testing::random_dfa(rng, 1 + iter % 9, 1 + iter % 3);
    CHECK(parse_dfa(print_dfa(a)) == a);
  }
}

TEST_CASE("partition literals") {
  const Example31 ex = gen_example31();
  CHECK(format_partition(ex.prime, ex.pi1) == "{a0|a1|b0,b1|R0,R1}");
  CHECK(parse_partition(ex.prime, "{a0,a1,b0,R0|b1,R1}") == ex.pi2);
  CHECK(parse_partition(ex.prime, " b1 , R1 | a0,a1,b0,R0 ") == ex.pi2);
  CHECK_THROWS_AS(parse_partition(ex.prime, "{a0|a1}"), InputError);
  CHECK_THROWS_AS(parse_partition(ex.prime, "{a0,zz|a1,b0,b1,R0,R1}"), InputError);
}

TEST_CASE("DOT export") {
  const Dfa all = gen_ln(1);
  const std::string one = export_dot(all);
  CHECK(count(one, "doublecircle") == 1);
  CHECK(one.find("__start -> ") != std::string::npos);

  const Example31 ex = gen_example31();
  const std::string clustered = export_dot(ex.prime, &ex.pi1);
  CHECK(count(clustered, "subgraph cluster_") == 4);
  CHECK(count(export_dot(ex.prime), "subgraph") == 0);
}
