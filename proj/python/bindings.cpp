#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "slicecomp/bench.hpp"
#include "slicecomp/lasso.hpp"
#include "slicecomp/oaf.hpp"
#include "slicecomp/parity.hpp"
#include "slicecomp/preopt.hpp"
#include "slicecomp/randgen.hpp"
#include "slicecomp/slice.hpp"

namespace py = pybind11;
using namespace slicecomp;

namespace
{
  Limits limits_for(std::size_t max_states)
  {
    Limits l;
    l.max_states = max_states;
    return l;
  }

  std::vector<std::string> trace(const Automaton& a,
                                 const std::vector<std::string>& word,
                                 bool decorated, bool merge)
  {
    auto sym = encode_word(a, word);
    auto levels = decorated ? decorated_trace(a, sym, 0, merge)
                            : reduced_split_tree_prefix(a, sym);
    std::vector<std::string> out;
    for (const auto& s : levels)
      out.push_back(s.to_string(&a));
    return out;
  }
}

PYBIND11_MODULE(_slicecomp, m)
{
  m.doc() = "Slice-based complementation of Büchi automata";

  py::register_exception<OafError>(m, "OafError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded");
  py::register_exception<AutomatonError>(m, "AutomatonError", PyExc_ValueError);

  py::class_<Automaton>(m, "Automaton")
      .def(py::init([](std::vector<std::string> alphabet, std::size_t n,
                       State initial, bool parity) {
             return Automaton(std::move(alphabet), n, initial,
                              parity ? AcceptanceKind::parity : AcceptanceKind::buchi);
           }),
           py::arg("alphabet"), py::arg("num_states"), py::arg("initial") = 0,
           py::arg("parity") = false)
      .def_property_readonly("alphabet", &Automaton::alphabet)
      .def_property_readonly("num_states", &Automaton::num_states)
      .def_property_readonly("initial", &Automaton::initial)
      .def_property_readonly("is_buchi", &Automaton::is_buchi)
      .def_property_readonly("is_parity", &Automaton::is_parity)
      .def_property_readonly("num_transitions", &Automaton::num_transitions)
      .def("add_transition",
           [](Automaton& a, State src, const std::string& sym, State dst) {
             auto s = a.find_symbol(sym);
             if (!s)
               throw py::value_error("unknown symbol " + sym);
             a.add_transition(src, *s, dst);
           })
      .def("successors",
           [](const Automaton& a, State q, const std::string& sym) {
             auto s = a.find_symbol(sym);
             if (!s)
               throw py::value_error("unknown symbol " + sym);
             return a.successors(q, *s);
           })
      .def("set_accepting", &Automaton::set_accepting, py::arg("state"),
           py::arg("accepting") = true)
      .def("accepting_states", &Automaton::accepting_states)
      .def("set_priority", &Automaton::set_priority)
      .def("priority", &Automaton::priority)
      .def("label", &Automaton::label)
      .def("is_deterministic", &Automaton::is_deterministic)
      .def("is_complete", &Automaton::is_complete)
      .def("to_oaf", [](const Automaton& a) { return emit_oaf(a); })
      .def("__eq__", [](const Automaton& a, const Automaton& b) { return a == b; })
      .def("__repr__", [](const Automaton& a) {
        return "<Automaton " + std::string(a.is_buchi() ? "buchi" : "parity") + " with "
               + std::to_string(a.num_states()) + " states>";
      });

  m.def("parse_oaf", [](const std::string& text) { return parse_oaf(text); });
  m.def("emit_oaf", &emit_oaf);

  m.def("reachable", &reachable);
  m.def("live", &live);

  m.def(
      "complement",
      [](const Automaton& a, const std::string& heuristics, std::size_t max_states) {
        std::string spec = heuristics.empty() ? "slice" : "slice+" + heuristics;
        return run_pipeline(a, Pipeline::parse(spec), limits_for(max_states));
      },
      py::arg("automaton"), py::arg("heuristics") = "DRM",
      py::arg("max_states") = 1'000'000,
      "Slice complement; heuristics is any subset of \"PADRM\".");
  m.def("maximize_acceptance", &maximize_acceptance);
  m.def("simplify", [](const Automaton& a) {
    return a.is_buchi() ? simplify_nbw(a) : simplify_npw(a);
  });

  m.def("complement_dpw", &complement_dpw);
  m.def(
      "parity_to_buchi",
      [](const Automaton& p, bool improved, std::size_t max_states) {
        return improved ? parity_to_buchi_improved(p, limits_for(max_states))
                        : parity_to_buchi_typical(p, limits_for(max_states));
      },
      py::arg("automaton"), py::arg("improved") = true,
      py::arg("max_states") = 1'000'000);

  m.def("accepts",
        [](const Automaton& a, std::vector<std::string> prefix,
           std::vector<std::string> period) {
          return member(a, {std::move(prefix), std::move(period)});
        },
        py::arg("automaton"), py::arg("prefix"), py::arg("period"));

  auto verdict = [](const Verdict& v) {
    py::dict d;
    d["passed"] = v.pass;
    d["lassos_checked"] = v.lassos_checked;
    if (v.witness)
      {
        d["prefix"] = v.witness->prefix;
        d["period"] = v.witness->period;
        d["in_a"] = v.in_a;
        d["in_b"] = v.in_b;
      }
    return d;
  };
  m.def(
      "check_complement",
      [verdict](const Automaton& a, const Automaton& b, std::size_t u, std::size_t v) {
        return verdict(check_complement(a, b, u, v));
      },
      py::arg("a"), py::arg("b"), py::arg("max_u") = 3, py::arg("max_v") = 4);
  m.def(
      "check_equivalent",
      [verdict](const Automaton& a, const Automaton& b, std::size_t u, std::size_t v) {
        return verdict(check_equivalent(a, b, u, v));
      },
      py::arg("a"), py::arg("b"), py::arg("max_u") = 3, py::arg("max_v") = 4);

  m.def("trace", &trace, py::arg("automaton"), py::arg("word"),
        py::arg("decorated") = false, py::arg("merge") = false);

  m.def(
      "generate",
      [](std::size_t n, std::size_t sigma, double r, double f, std::uint64_t seed) {
        return generate({n, sigma, r, f, seed});
      },
      py::arg("n"), py::arg("sigma") = 2, py::arg("r") = 2.0, py::arg("f") = 0.5,
      py::arg("seed") = 0);
  m.def("generate_dpw", &generate_dpw, py::arg("n"), py::arg("sigma") = 2,
        py::arg("max_priority") = 4, py::arg("seed") = 0);

  m.def(
      "run_task",
      [](const Automaton& a, const std::string& pipeline, std::int64_t timeout_ms,
         std::size_t budget) {
        auto r = run_task("task", a, Pipeline::parse(pipeline), timeout_ms, budget);
        py::dict d;
        d["outcome"] = to_string(r.outcome);
        d["wall_millis"] = r.wall_millis;
        d["reachable"] = r.reachable ? py::cast(*r.reachable) : py::none();
        d["live"] = r.live ? py::cast(*r.live) : py::none();
        d["universal"] = r.universal;
        return d;
      },
      py::arg("automaton"), py::arg("pipeline") = "slice+ADRM",
      py::arg("timeout_ms") = 10'000, py::arg("state_budget") = 1'000'000);
}
