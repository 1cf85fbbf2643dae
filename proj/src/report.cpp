#include "decomp/report.hpp"

#include <cstdio>
#include <sstream>

#include "decomp/text_format.hpp"

namespace decomp {
namespace {

nlohmann::json blocks_json(const Dfa& a, const Partition& pi) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : pi.blocks()) {
    nlohmann::json names = nlohmann::json::array();
    for (State q : b) names.push_back(a.state_name(q));
    blocks.push_back(std::move(names));
  }
  return blocks;
}

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

nlohmann::json entry_json(const Dfa& a, const ReportEntry& entry) {
  const auto& d = entry.decomposition;
  nlohmann::json j;
  j["kind"] = std::string(to_string(d.kind));
  j["a1_states"] = d.a1.state_count();
  j["a2_states"] = d.a2.state_count();
  j["nontrivial"] = entry.nontrivial;
  j["perfect"] = entry.perfect;
  j["redundant"] = entry.redundant;
  if (d.source_partitions) {
    j["partitions"] = nlohmann::json::array(
        {blocks_json(a, d.source_partitions->first), blocks_json(a, d.source_partitions->second)});
  } else {
    j["partitions"] = nullptr;
  }
  j["witness_kind"] = std::string(witness_kind(d.witness));
  return j;
}

nlohmann::json report_json(const Dfa& a, const DecompositionReport& report) {
  nlohmann::json j;
  j["automaton"] = a.name();
  j["states"] = report.dfa_states;
  j["fingerprint"] = hex(report.dfa_fingerprint);
  j["kind"] = std::string(to_string(report.kind));
  j["decompositions"] = nlohmann::json::array();
  for (const auto& e : report.entries) j["decompositions"].push_back(entry_json(a, e));
  return j;
}

std::string report_text(const Dfa& a, const DecompositionReport& report) {
  std::ostringstream out;
  out << "automaton " << a.name() << " (" << report.dfa_states << " states): "
      << report.entries.size() << " " << to_string(report.kind) << " decomposition"
      << (report.entries.size() == 1 ? "" : "s") << "\n";
  int index = 0;
  for (const auto& e : report.entries) {
    const auto& d = e.decomposition;
    out << "  [" << ++index << "] sizes (" << d.a1.state_count() << ", " << d.a2.state_count()
        << ")  nontrivial=" << yes_no(e.nontrivial) << " perfect=" << yes_no(e.perfect)
        << " redundant=" << yes_no(e.redundant) << "\n";
    if (d.source_partitions) {
      out << "      pi1 = " << format_partition(a, d.source_partitions->first) << "\n";
      out << "      pi2 = " << format_partition(a, d.source_partitions->second) << "\n";
    }
  }
  return out.str();
}

nlohmann::json lattice_json(const Dfa& a, const SpLattice& lattice, bool distributive) {
  nlohmann::json j;
  j["automaton"] = a.name();
  j["states"] = a.state_count();
  j["fingerprint"] = hex(lattice.dfa_fingerprint());
  j["distributive"] = distributive;
  j["elements"] = nlohmann::json::array();
  for (const auto& e : lattice.elements()) j["elements"].push_back(blocks_json(a, e));
  return j;
}

std::string lattice_text(const Dfa& a, const SpLattice& lattice, bool distributive) {
  std::ostringstream out;
  out << "automaton " << a.name() << " (" << a.state_count() << " states): " << lattice.size()
      << " S.P. partition" << (lattice.size() == 1 ? "" : "s")
      << ", distributive=" << yes_no(distributive) << "\n";
  for (const auto& e : lattice.elements()) {
    out << "  " << e.block_count() << " block" << (e.block_count() == 1 ? " " : "s") << "  "
        << format_partition(a, e) << "\n";
  }
  return out.str();
}

std::string decomposition_text(const Dfa& a, const Decomposition& d) {
  std::ostringstream out;
  out << to_string(d.kind) << " decomposition of " << a.name() << " into automata with "
      << d.a1.state_count() << " and " << d.a2.state_count() << " states\n";
  auto pair = [&](State p1, State p2) {
    return "(" + d.a1.state_name(p1) + ", " + d.a2.state_name(p2) + ")";
  };
  if (const auto* e = std::get_if<Embedding>(&d.witness)) {
    for (State q = 0; q < a.state_count(); ++q) {
      out << "  alpha(" << a.state_name(q) << ") = " << pair(e->alpha[q].first, e->alpha[q].second)
          << "\n";
    }
  } else if (const auto* m = std::get_if<PairMap>(&d.witness)) {
    for (State p1 = 0; p1 < d.a1.state_count(); ++p1) {
      for (State p2 = 0; p2 < d.a2.state_count(); ++p2) {
        out << "  beta" << pair(p1, p2) << " = " << a.state_name(m->at(p1, p2)) << "\n";
      }
    }
  } else if (const auto* r = std::get_if<PairRelation>(&d.witness)) {
    for (State p1 = 0; p1 < d.a1.state_count(); ++p1) {
      for (State p2 = 0; p2 < d.a2.state_count(); ++p2) {
        if (r->at(p1, p2)) out << "  R" << pair(p1, p2) << "\n";
      }
    }
  }
  return out.str();
}

nlohmann::json certificate_json(const Dfa& a, Kind kind, const oracle::Certificate& cert) {
  nlohmann::json j;
  j["automaton"] = a.name();
  j["kind"] = std::string(to_string(kind));
  j["exhausted"] = cert.exhausted;
  j["examined"] = cert.examined;
  j["estimate"] = cert.estimate;
  j["max1"] = cert.effective_max_1;
  j["max2"] = cert.effective_max_2;
  if (cert.counterexample) {
    j["counterexample"] = {{"a1_states", cert.counterexample->a1.state_count()},
                           {"a2_states", cert.counterexample->a2.state_count()},
                           {"a1", print_dfa(cert.counterexample->a1)},
                           {"a2", print_dfa(cert.counterexample->a2)}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

}  // namespace decomp
