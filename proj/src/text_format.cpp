#include "decomp/text_format.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "decomp/errors.hpp"

namespace decomp {
namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string join_tokens(const std::vector<std::string>& v, std::size_t from = 0) {
  std::string out;
  for (std::size_t i = from; i < v.size(); ++i) {
    if (i > from) out += ' ';
    out += v[i];
  }
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, std::string source) : text_(text), source_(std::move(source)) {}

  DfaDocument parse() {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text_.size() && !done_) {
      std::size_t eol = text_.find('\n', pos);
      if (eol == std::string_view::npos) eol = text_.size();
      std::string_view line = text_.substr(pos, eol - pos);
      pos = eol + 1;
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      auto toks = tokenize(line);
      if (toks.empty()) continue;
      handle(line_no, toks);
    }
    if (!done_) fail(line_no, "missing 'end'");
    // Anything after `end` other than blanks and comments is an error.
    for (std::size_t rest_line = end_line_ + 1; pos <= text_.size(); ++rest_line) {
      std::size_t eol = text_.find('\n', pos);
      if (eol == std::string_view::npos) eol = text_.size();
      std::string_view line = text_.substr(pos, eol - pos);
      pos = eol + 1;
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      if (!tokenize(line).empty()) fail(rest_line, "content after 'end'");
    }
    return finish();
  }

 private:
  [[noreturn]] void fail(std::size_t line, const std::string& msg) const {
    throw InputError(source_ + ":" + std::to_string(line) + ": " + msg);
  }

  void expect_count(std::size_t line, const std::vector<std::string>& t, std::size_t min,
                    std::size_t max) const {
    if (t.size() - 1 < min || t.size() - 1 > max) {
      fail(line, "wrong number of arguments for '" + t[0] + "'");
    }
  }

  void handle(std::size_t line, const std::vector<std::string>& t) {
    const std::string& kw = t[0];
    if (header_line_ == 0) {
      if (kw != "dfa") fail(line, "expected 'dfa <name>' first");
      expect_count(line, t, 1, 1);
      name_ = t[1];
      header_line_ = line;
      return;
    }
    if (kw == "dfa") fail(line, "duplicate 'dfa' header");
    if (kw == "alphabet") {
      if (alphabet_line_) fail(line, "duplicate 'alphabet'");
      expect_count(line, t, 1, SIZE_MAX);
      alphabet_.assign(t.begin() + 1, t.end());
      alphabet_line_ = line;
      for (std::size_t i = 0; i < alphabet_.size(); ++i) {
        if (!symbols_.emplace(alphabet_[i], static_cast<Symbol>(i)).second) {
          fail(line, "duplicate symbol '" + alphabet_[i] + "'");
        }
      }
    } else if (kw == "states") {
      if (states_line_) fail(line, "duplicate 'states'");
      expect_count(line, t, 1, SIZE_MAX);
      states_.assign(t.begin() + 1, t.end());
      states_line_ = line;
      for (std::size_t i = 0; i < states_.size(); ++i) {
        if (!state_ids_.emplace(states_[i], static_cast<State>(i)).second) {
          fail(line, "duplicate state '" + states_[i] + "'");
        }
      }
    } else if (kw == "initial") {
      if (initial_line_) fail(line, "duplicate 'initial'");
      expect_count(line, t, 1, 1);
      initial_ = lookup_state(line, t[1]);
      initial_line_ = line;
    } else if (kw == "accepting") {
      if (accepting_line_) fail(line, "duplicate 'accepting'");
      accepting_line_ = line;
      need_states(line);
      accepting_.assign(states_.size(), false);
      for (std::size_t i = 1; i < t.size(); ++i) accepting_[lookup_state(line, t[i])] = true;
    } else if (kw == "trans") {
      expect_count(line, t, 3, 3);
      need_states(line);
      if (!alphabet_line_) fail(line, "'trans' before 'alphabet'");
      const State from = lookup_state(line, t[1]);
      auto sym = symbols_.find(t[2]);
      if (sym == symbols_.end()) fail(line, "unknown symbol '" + t[2] + "'");
      const State to = lookup_state(line, t[3]);
      const std::size_t cell = from * alphabet_.size() + sym->second;
      if (delta_.empty()) {
        delta_.assign(states_.size() * alphabet_.size(), kNoState);
        lines_.assign(delta_.size(), 0);
      }
      if (delta_[cell] != kNoState) {
        fail(line, "duplicate transition for (" + t[1] + ", " + t[2] + "), first given on line " +
                       std::to_string(lines_[cell]));
      }
      delta_[cell] = to;
      lines_[cell] = line;
    } else if (kw == "end") {
      expect_count(line, t, 0, 0);
      done_ = true;
      end_line_ = line;
    } else {
      fail(line, "unknown keyword '" + kw + "'");
    }
  }

  void need_states(std::size_t line) const {
    if (!states_line_) fail(line, "'states' must come first");
  }

  State lookup_state(std::size_t line, const std::string& name) const {
    need_states(line);
    auto it = state_ids_.find(name);
    if (it == state_ids_.end()) fail(line, "unknown state '" + name + "'");
    return it->second;
  }

  DfaDocument finish() {
    if (!alphabet_line_) fail(end_line_, "missing 'alphabet'");
    if (!states_line_) fail(end_line_, "missing 'states'");
    if (!initial_line_) fail(end_line_, "missing 'initial'");
    if (!accepting_line_) fail(end_line_, "missing 'accepting'");
    if (delta_.empty()) {
      delta_.assign(states_.size() * alphabet_.size(), kNoState);
      lines_.assign(delta_.size(), 0);
    }
    for (std::size_t cell = 0; cell < delta_.size(); ++cell) {
      if (delta_[cell] == kNoState) {
        fail(end_line_, "automaton is not complete: missing transition for (" +
                            states_[cell / alphabet_.size()] + ", " +
                            alphabet_[cell % alphabet_.size()] + ")");
      }
    }
    try {
      Dfa dfa(name_, states_, alphabet_, delta_, initial_, accepting_);
      return DfaDocument{std::move(dfa), source_, header_line_, end_line_, std::move(lines_)};
    } catch (const InputError& e) {
      fail(header_line_, e.what());
    }
  }

  std::string_view text_;
  std::string source_;
  bool done_ = false;
  std::size_t header_line_ = 0, alphabet_line_ = 0, states_line_ = 0, initial_line_ = 0,
              accepting_line_ = 0, end_line_ = 0;
  std::string name_;
  std::vector<std::string> alphabet_, states_;
  std::map<std::string, Symbol> symbols_;
  std::map<std::string, State> state_ids_;
  State initial_ = kNoState;
  std::vector<bool> accepting_;
  std::vector<State> delta_;
  std::vector<std::size_t> lines_;
};

std::string dot_id(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

DfaDocument parse_dfa_document(std::string_view text, std::string source) {
  return Parser(text, std::move(source)).parse();
}

Dfa parse_dfa(std::string_view text) { return parse_dfa_document(text).dfa; }

std::string print_dfa(const Dfa& a) {
  std::string out = "dfa " + a.name() + "\n";
  out += "alphabet " + join_tokens(a.alphabet()) + "\n";
  out += "states " + join_tokens(a.state_names()) + "\n";
  out += "initial " + a.state_name(a.initial()) + "\n";
  out += "accepting";
  for (State q = 0; q < a.state_count(); ++q) {
    if (a.is_accepting(q)) out += " " + a.state_name(q);
  }
  out += "\n";
  for (State q = 0; q < a.state_count(); ++q) {
    for (Symbol s = 0; s < a.symbol_count(); ++s) {
      out += "trans " + a.state_name(q) + " " + a.symbol_name(s) + " " +
             a.state_name(a.next(q, s)) + "\n";
    }
  }
  out += "end\n";
  return out;
}

std::string export_dot(const Dfa& a, const Partition* highlight) {
  if (highlight && highlight->element_count() != a.state_count()) {
    throw InputError("highlight partition does not match the automaton");
  }
  std::ostringstream out;
  out << "digraph " << dot_id(a.name()) << " {\n";
  out << "  rankdir=LR;\n";
  out << "  __start [shape=point];\n";
  auto node = [&](State q, const char* indent) {
    out << indent << dot_id(a.state_name(q)) << " [shape="
        << (a.is_accepting(q) ? "doublecircle" : "circle") << "];\n";
  };
  if (highlight) {
    const auto blocks = highlight->blocks();
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      out << "  subgraph cluster_" << b << " {\n";
      out << "    label=" << dot_id(block_name(a, blocks[b])) << ";\n";
      out << "    style=dashed;\n";
      for (State q : blocks[b]) node(q, "    ");
      out << "  }\n";
    }
  } else {
    for (State q = 0; q < a.state_count(); ++q) node(q, "  ");
  }
  out << "  __start -> " << dot_id(a.state_name(a.initial())) << ";\n";
  for (State q = 0; q < a.state_count(); ++q) {
    // Parallel edges are merged into one comma-labelled edge.
    std::map<State, std::string> labels;
    std::vector<State> order;
    for (Symbol s = 0; s < a.symbol_count(); ++s) {
      const State t = a.next(q, s);
      auto [it, fresh] = labels.try_emplace(t, a.symbol_name(s));
      if (fresh) order.push_back(t);
      else it->second += "," + a.symbol_name(s);
    }
    for (State t : order) {
      out << "  " << dot_id(a.state_name(q)) << " -> " << dot_id(a.state_name(t))
          << " [label=" << dot_id(labels[t]) << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string format_partition(const Dfa& a, const Partition& pi) {
  std::string out = "{";
  const auto blocks = pi.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b > 0) out += '|';
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (i > 0) out += ',';
      out += a.state_name(blocks[b][i]);
    }
  }
  return out + "}";
}

Partition parse_partition(const Dfa& a, std::string_view literal) {
  std::string text;
  for (char c : literal) {
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  }
  if (text.size() >= 2 && text.front() == '{' && text.back() == '}') {
    text = text.substr(1, text.size() - 2);
  }
  if (text.find_first_of("{}") != std::string::npos) {
    throw InputError("malformed partition literal '" + std::string(literal) + "'");
  }
  std::vector<std::vector<State>> blocks;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t bar = text.find('|', start);
    if (bar == std::string::npos) bar = text.size();
    std::vector<State> block;
    std::size_t s = start;
    while (s <= bar) {
      std::size_t comma = text.find(',', s);
      if (comma == std::string::npos || comma > bar) comma = bar;
      std::string name = text.substr(s, comma - s);
      if (name.empty()) throw InputError("empty state name in partition literal");
      block.push_back(a.state(name));
      s = comma + 1;
    }
    blocks.push_back(std::move(block));
    start = bar + 1;
  }
  return Partition::from_blocks(a.state_count(), blocks);
}

}  // namespace decomp
