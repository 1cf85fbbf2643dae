#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "decomp/decomposition.hpp"
#include "decomp/errors.hpp"
#include "decomp/families.hpp"
#include "decomp/oracle.hpp"
#include "decomp/sp_lattice.hpp"
#include "decomp/text_format.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace decomp;

namespace {

using Blocks = std::vector<std::vector<std::string>>;

Blocks named_blocks(const Dfa& a, const Partition& pi) {
  Blocks out;
  for (const auto& block : pi.blocks()) {
    auto& names = out.emplace_back();
    for (State q : block) names.push_back(a.state_name(q));
  }
  return out;
}

Kind kind_of(const std::string& text) {
  auto k = parse_kind(text);
  if (!k) throw InputError("unknown decomposition kind '" + text + "'");
  return *k;
}

py::dict entry_dict(const Dfa& a, const ReportEntry& e) {
  const Decomposition& d = e.decomposition;
  py::dict out;
  out["kind"] = std::string(to_string(d.kind));
  out["a1"] = d.a1;
  out["a2"] = d.a2;
  out["nontrivial"] = e.nontrivial;
  out["perfect"] = e.perfect;
  out["redundant"] = e.redundant;
  if (d.source_partitions) {
    out["partitions"] = py::make_tuple(named_blocks(a, d.source_partitions->first),
                                       named_blocks(a, d.source_partitions->second));
  } else {
    out["partitions"] = py::none();
  }
  out["witness_kind"] = std::string(witness_kind(d.witness));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Decompositions of deterministic finite automata";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ContractError>(m, "ContractError", PyExc_ValueError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

  py::class_<Dfa>(m, "Dfa")
      .def_static("parse", [](const std::string& text) { return parse_dfa(text); },
                  py::arg("text"), "Parse the line-oriented text format.")
      .def("to_text", &print_dfa)
      .def("to_dot", [](const Dfa& a, const std::optional<std::string>& partition) {
             if (!partition) return export_dot(a);
             const Partition pi = parse_partition(a, *partition);
             return export_dot(a, &pi);
           },
           py::arg("partition") = py::none())
      .def_property_readonly("name", &Dfa::name)
      .def_property_readonly("states", &Dfa::state_names)
      .def_property_readonly("alphabet", &Dfa::alphabet)
      .def_property_readonly("initial", [](const Dfa& a) { return a.state_name(a.initial()); })
      .def_property_readonly("accepting", [](const Dfa& a) {
        std::vector<std::string> out;
        for (State q = 0; q < a.state_count(); ++q) {
          if (a.is_accepting(q)) out.push_back(a.state_name(q));
        }
        return out;
      })
      .def("__len__", &Dfa::state_count)
      .def("run", [](const Dfa& a, const std::string& w) { return a.state_name(run(a, w)); },
           py::arg("word"))
      .def("accepts", [](const Dfa& a, const std::string& w) { return accepts(a, w); },
           py::arg("word"))
      .def("__eq__", [](const Dfa& a, const Dfa& b) { return a == b; })
      .def("__repr__", [](const Dfa& a) {
        return "<Dfa " + a.name() + " with " + std::to_string(a.state_count()) + " states>";
      });

  m.def("generate",
        [](const std::string& family, std::optional<int> n, std::optional<int> k,
           std::optional<int> l, std::optional<int> r, std::optional<int> s,
           const std::string& part) {
          return generate(FamilySpec{family, n, k, l, r, s, part});
        },
        py::arg("family"), py::kw_only(), py::arg("n") = py::none(), py::arg("k") = py::none(),
        py::arg("l") = py::none(), py::arg("r") = py::none(), py::arg("s") = py::none(),
        py::arg("part") = "");

  m.def("minimize", [](const Dfa& a) {
    const MinimizeResult res = minimize(a);
    py::dict mapping;
    for (State q = 0; q < a.state_count(); ++q) {
      if (res.map.defined(q)) mapping[py::str(a.state_name(q))] = res.dfa.state_name(res.map(q));
    }
    return py::make_tuple(res.dfa, mapping);
  });
  m.def("trim", &trim);
  m.def("equivalent", &equivalent);
  m.def("isomorphic", &isomorphic);
  m.def("parallel_connection", &parallel_connection);

  m.def("sp_partitions", [](const Dfa& a) {
    std::vector<Blocks> out;
    const SpLattice lattice = sp_lattice(a);
    for (const auto& e : lattice.elements()) out.push_back(named_blocks(a, e));
    return out;
  }, "All S.P. partitions, finest first, as lists of blocks of state names.");
  m.def("is_distributive", [](const Dfa& a) { return is_distributive(sp_lattice(a)); });

  m.def("decompose", [](const std::string& kind, const Dfa& a) {
    py::list out;
    for (const auto& e : decompose(kind_of(kind), a).entries) out.append(entry_dict(a, e));
    return out;
  }, py::arg("kind"), py::arg("dfa"));

  m.def("verify",
        [](const std::string& kind, const Dfa& a, const Dfa& a1, const Dfa& a2) {
          const Verdict v = verify(kind_of(kind), a, a1, a2);
          py::object word = py::none();
          if (v.counterexample) word = py::str(a.spell(*v.counterexample));
          return py::make_tuple(static_cast<bool>(v), v.reason, word);
        },
        py::arg("kind"), py::arg("dfa"), py::arg("a1"), py::arg("a2"),
        "Returns (ok, reason, counterexample word or None).");

  m.def("certify",
        [](const std::string& kind, const Dfa& a, std::size_t max1, std::size_t max2,
           bool canonical) {
          const auto cert =
              oracle::certify_undecomposable(kind_of(kind), a, {max1, max2, canonical});
          py::dict out;
          out["exhausted"] = cert.exhausted;
          out["examined"] = cert.examined;
          out["estimate"] = cert.estimate;
          if (cert.counterexample) {
            out["a1"] = cert.counterexample->a1;
            out["a2"] = cert.counterexample->a2;
          }
          return out;
        },
        py::arg("kind"), py::arg("dfa"), py::arg("max1"), py::arg("max2"),
        py::arg("canonical") = true);

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
