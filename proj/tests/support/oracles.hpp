#pragma once

// Brute-force reference implementations used only by the test suites.  They
// deliberately avoid the library's SCC machinery and worklists so that they
// can serve as independent checks.

#include <vector>

#include "slicecomp/automaton.hpp"
#include "slicecomp/lasso.hpp"
#include "slicecomp/preopt.hpp"

namespace slicecomp::oracle
{
  /// The running example: Σ = {p, !p},
  /// δ(q0, p) = δ(q0, !p) = {q0, q1}, δ(q1, p) = {q1}, F = {q1}.
  Automaton fig1();

  /// Membership by explicit search: some product node on the periodic part
  /// that is accepting (or, for parity, of even priority d) returns to
  /// itself through nodes that respect the priority bound.
  bool member(const Automaton& a, const LassoWord& w);

  /// Every elementary cycle (as a vertex list, starting at its least vertex)
  /// of the symbol-erased transition graph.
  std::vector<std::vector<State>> elementary_cycles(const Automaton& a);

  /// States q with q ∈ F, or every elementary cycle through q meets F.
  StateSet maximal_acceptance(const Automaton& a);

  /// Greatest simulation by synchronous re-evaluation of every pair until
  /// the relation stops changing.
  SimulationRelation naive_simulation(const Automaton& a, SimulationKind kind);

  /// Live states by per-state searches: reachable, and some accepting state
  /// on a cycle is reachable from it.
  StateSet live_states(const Automaton& a);

  /// Bounded agreement of two automata via member() on every lasso.
  bool lasso_equivalent(const Automaton& a, const Automaton& b,
                        std::size_t max_u, std::size_t max_v);
  bool lasso_complementary(const Automaton& a, const Automaton& b,
                           std::size_t max_u, std::size_t max_v);
}
