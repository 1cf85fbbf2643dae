#include "decomp/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "decomp/decomposition.hpp"
#include "decomp/errors.hpp"
#include "decomp/families.hpp"
#include "decomp/oracle.hpp"
#include "decomp/report.hpp"
#include "decomp/sp_lattice.hpp"
#include "decomp/text_format.hpp"

namespace decomp {
namespace {

class InputReader {
 public:
  explicit InputReader(std::istream& in) : in_(in) {}

  Dfa read(const std::string& path) {
    if (path.empty() || path == "-") {
      if (stdin_used_) throw InputError("standard input can only be read once");
      stdin_used_ = true;
      std::ostringstream buf;
      buf << in_.rdbuf();
      return parse_dfa_document(buf.str(), "<stdin>").dfa;
    }
    std::ifstream file(path);
    if (!file) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    return parse_dfa_document(buf.str(), path).dfa;
  }

 private:
  std::istream& in_;
  bool stdin_used_ = false;
};

Kind kind_or_throw(const std::string& text) {
  auto k = parse_kind(text);
  if (!k) throw InputError("unknown decomposition kind '" + text + "'");
  return *k;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Decompositions of deterministic finite automata", "decomp"};
  app.require_subcommand(1);
  std::string format = "text";

  // gen
  auto* gen = app.add_subcommand("gen", "Print a named automaton family member");
  FamilySpec family;
  int n = 0, k = 0, l = 0, r = 0, s = 0;
  gen->add_option("--family", family.family,
                  "ln, lkl, grid, kext, example31_min, example31_prime, a4b4_triple, sb_not_asb")
      ->required();
  auto* opt_n = gen->add_option("--n", n);
  auto* opt_k = gen->add_option("--k", k);
  auto* opt_l = gen->add_option("--l", l);
  auto* opt_r = gen->add_option("--r", r);
  auto* opt_s = gen->add_option("--s", s);
  gen->add_option("--part", family.part, "a4b4_triple member: a, a1 or a2");

  // minimize
  auto* min_cmd = app.add_subcommand("minimize", "Minimize an automaton");
  std::string min_input;
  min_cmd->add_option("input", min_input, "DFA file (default: stdin)");

  // lattice
  auto* lat_cmd = app.add_subcommand("lattice", "List all S.P. partitions");
  std::string lat_input;
  lat_cmd->add_option("input", lat_input, "DFA file (default: stdin)");
  lat_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  // decompose
  auto* dec_cmd = app.add_subcommand("decompose", "Enumerate decompositions from S.P. partitions");
  std::string dec_kind, dec_input;
  bool nonredundant = false, perfect_only = false;
  dec_cmd->add_option("--kind", dec_kind)->required()->check(CLI::IsMember({"sb", "asb", "ai", "wai"}));
  dec_cmd->add_flag("--nonredundant", nonredundant, "Only report nonredundant entries");
  dec_cmd->add_flag("--perfect-only", perfect_only, "Only report perfect entries");
  dec_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  dec_cmd->add_option("input", dec_input, "DFA file (default: stdin)");

  // verify
  auto* ver_cmd = app.add_subcommand("verify", "Check a candidate decomposition");
  std::string ver_kind;
  std::vector<std::string> ver_files;
  ver_cmd->add_option("--kind", ver_kind)->required()->check(CLI::IsMember({"sb", "asb", "ai", "si", "wai"}));
  ver_cmd->add_option("files", ver_files, "A A1 A2")->expected(3)->required();

  // oracle
  auto* orc_cmd = app.add_subcommand("oracle", "Exhaustive search for small decompositions");
  std::string orc_kind, orc_input;
  std::size_t max1 = 1, max2 = 1;
  bool no_canonical = false;
  orc_cmd->add_option("--kind", orc_kind)->required()->check(CLI::IsMember({"ai", "si", "wai"}));
  orc_cmd->add_option("--max1", max1)->required()->check(CLI::PositiveNumber);
  orc_cmd->add_option("--max2", max2)->required()->check(CLI::PositiveNumber);
  orc_cmd->add_flag("--no-canonical", no_canonical, "Enumerate every labelling, not one per class");
  orc_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  orc_cmd->add_option("input", orc_input, "DFA file (default: stdin)");

  // dot
  auto* dot_cmd = app.add_subcommand("dot", "Export Graphviz DOT");
  std::string dot_partition, dot_input;
  dot_cmd->add_option("--partition", dot_partition, "Blocks to draw as clusters, e.g. {a0,a1|b0}");
  dot_cmd->add_option("input", dot_input, "DFA file (default: stdin)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitFound;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitFound;
  } catch (const CLI::ParseError& e) {
    err << "decomp: " << e.what() << "\n";
    return kExitUsage;
  }

  std::ostringstream buffer;
  int code = kExitFound;
  InputReader reader(in);
  try {
    if (gen->parsed()) {
      if (*opt_n) family.n = n;
      if (*opt_k) family.k = k;
      if (*opt_l) family.l = l;
      if (*opt_r) family.r = r;
      if (*opt_s) family.s = s;
      buffer << print_dfa(generate(family));
    } else if (min_cmd->parsed()) {
      buffer << print_dfa(minimize(reader.read(min_input)).dfa);
    } else if (lat_cmd->parsed()) {
      const Dfa a = reader.read(lat_input);
      const SpLattice lattice = sp_lattice(a);
      const bool distributive = is_distributive(lattice);
      if (format == "json") buffer << lattice_json(a, lattice, distributive).dump(2) << "\n";
      else buffer << lattice_text(a, lattice, distributive);
    } else if (dec_cmd->parsed()) {
      const Dfa a = reader.read(dec_input);
      DecompositionReport report = decompose(kind_or_throw(dec_kind), a);
      std::erase_if(report.entries, [&](const ReportEntry& e) {
        return (nonredundant && e.redundant) || (perfect_only && !e.perfect);
      });
      if (format == "json") buffer << report_json(a, report).dump(2) << "\n";
      else buffer << report_text(a, report);
      code = report.entries.empty() ? kExitNone : kExitFound;
    } else if (ver_cmd->parsed()) {
      const Dfa a = reader.read(ver_files[0]);
      const Dfa a1 = reader.read(ver_files[1]);
      const Dfa a2 = reader.read(ver_files[2]);
      const Kind kind = kind_or_throw(ver_kind);
      Verdict v = verify(kind, a, a1, a2);
      if (v) {
        buffer << decomposition_text(a, *v.decomposition);
      } else {
        buffer << "not an " << to_string(kind) << " decomposition: " << v.reason << "\n";
        code = kExitNone;
      }
    } else if (orc_cmd->parsed()) {
      const Dfa a = reader.read(orc_input);
      const Kind kind = kind_or_throw(orc_kind);
      const oracle::Certificate cert =
          oracle::certify_undecomposable(kind, a, {max1, max2, !no_canonical});
      if (format == "json") {
        buffer << certificate_json(a, kind, cert).dump(2) << "\n";
      } else if (cert.exhausted) {
        buffer << "no nontrivial " << to_string(kind) << " decomposition of " << a.name()
               << " with at most " << cert.effective_max_1 << " and " << cert.effective_max_2
               << " states: examined " << cert.examined << " candidate pairs (estimate "
               << cert.estimate << ")\n";
      } else {
        buffer << decomposition_text(a, *cert.counterexample);
        buffer << "--- a1\n" << print_dfa(cert.counterexample->a1);
        buffer << "--- a2\n" << print_dfa(cert.counterexample->a2);
      }
      code = cert.exhausted ? kExitNone : kExitFound;
    } else if (dot_cmd->parsed()) {
      const Dfa a = reader.read(dot_input);
      if (dot_partition.empty()) {
        buffer << export_dot(a);
      } else {
        const Partition pi = parse_partition(a, dot_partition);
        buffer << export_dot(a, &pi);
      }
    }
  } catch (const BudgetError& e) {
    err << "decomp: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "decomp: " << e.what() << "\n";
    return kExitUsage;
  }
  out << buffer.str();
  return code;
}

}  // namespace decomp
