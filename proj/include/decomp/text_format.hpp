#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "decomp/dfa.hpp"
#include "decomp/partition.hpp"

namespace decomp {

// Line-oriented DFA format ('#' starts a comment, tokens are
// whitespace-separated):
//
//   dfa <name>
//   alphabet <sym>+
//   states <state>+
//   initial <state>
//   accepting <state>*
//   trans <state> <sym> <state>     (one per state/symbol pair)
//   end

/// A parsed DFA together with where each part came from.
struct DfaDocument {
  Dfa dfa;
  std::string source;
  std::size_t header_line = 0;
  std::size_t end_line = 0;
  /// Line of the `trans` entry for cell q * |alphabet| + a.
  std::vector<std::size_t> transition_lines;
};

/// Throws InputError "<source>:<line>: <message>" on syntax errors, unknown
/// states or symbols, duplicate or missing transitions, and missing headers.
DfaDocument parse_dfa_document(std::string_view text, std::string source = "<input>");
Dfa parse_dfa(std::string_view text);

/// Canonical text: header lines, then transitions state-major in alphabet order.
std::string print_dfa(const Dfa& a);

/// Graphviz digraph. The initial state gets an edge from a point node,
/// accepting states are double circles, and a given partition is drawn as
/// one cluster per block.
std::string export_dot(const Dfa& a, const Partition* highlight = nullptr);

/// `{a0,a1|b0,R0}`: '|' separates blocks, ',' separates states. The braces
/// are optional when parsing.
std::string format_partition(const Dfa& a, const Partition& pi);
Partition parse_partition(const Dfa& a, std::string_view literal);

}  // namespace decomp
