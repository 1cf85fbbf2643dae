#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "decomp/decomposition.hpp"
#include "decomp/dfa.hpp"
#include "decomp/oracle.hpp"
#include "decomp/sp_lattice.hpp"

namespace decomp {

/// One flat object per decomposition. Keys always present:
/// kind, a1_states, a2_states, nontrivial, perfect, redundant, partitions
/// (list of two block lists, or null), witness_kind.
nlohmann::json entry_json(const Dfa& a, const ReportEntry& entry);
nlohmann::json report_json(const Dfa& a, const DecompositionReport& report);
std::string report_text(const Dfa& a, const DecompositionReport& report);

nlohmann::json lattice_json(const Dfa& a, const SpLattice& lattice, bool distributive);
std::string lattice_text(const Dfa& a, const SpLattice& lattice, bool distributive);

/// Human-readable witness listing for a verified decomposition of `a`.
std::string decomposition_text(const Dfa& a, const Decomposition& d);

nlohmann::json certificate_json(const Dfa& a, Kind kind, const oracle::Certificate& cert);

}  // namespace decomp
