#pragma once

#include <utility>
#include <vector>

#include "slicecomp/automaton.hpp"

namespace slicecomp
{
  enum class SimulationKind
  {
    direct,
    reverse,
  };

  /// \brief Simulation preorder over the states of one automaton.
  ///
  /// simulated(p, q) holds iff p is simulated by q.  The local condition is
  /// acceptance implication (p ∈ F ⇒ q ∈ F) for Büchi automata and priority
  /// equality for parity automata.  Reverse simulation transfers along
  /// predecessors and additionally requires p = q0 ⇒ q = q0.
  class SimulationRelation
  {
  public:
    SimulationRelation(SimulationKind kind, std::size_t n)
      : kind_(kind), n_(n), bits_(n * n, false)
    {
    }

    SimulationKind kind() const { return kind_; }
    std::size_t num_states() const { return n_; }

    bool simulated(State p, State q) const { return bits_[p * n_ + q]; }
    void set(State p, State q, bool v) { bits_[p * n_ + q] = v; }

    /// p ⊑ q and q ⊑ p.
    bool equivalent(State p, State q) const
    {
      return simulated(p, q) && simulated(q, p);
    }
    /// p ⊑ q but not q ⊑ p.
    bool strictly_simulated(State p, State q) const
    {
      return simulated(p, q) && !simulated(q, p);
    }

    std::vector<std::pair<State, State>> pairs() const;

    friend bool operator==(const SimulationRelation&,
                           const SimulationRelation&) = default;

  private:
    SimulationKind kind_;
    std::size_t n_;
    std::vector<bool> bits_;
  };

  /// Büchi acceptance set enlarged with every state that lies on no cycle
  /// of the transition graph restricted to nonaccepting states.  The
  /// language is unchanged.
  Automaton maximize_acceptance(const Automaton& a);

  /// Greatest simulation of the given kind (Büchi or parity input).
  SimulationRelation compute_simulation(const Automaton& a,
                                        SimulationKind kind);

  /// \brief Simulation-based simplification of a Büchi automaton.
  ///
  /// Each round quotients by direct-simulation equivalence, drops
  /// transitions (p,a,r) that have a sibling (p,a,r') with r strictly
  /// direct-simulated by r', then drops transitions (p,a,r) that have a
  /// sibling (p',a,r) with p strictly reverse-simulated by p', and finally
  /// removes unreachable states.  Rounds repeat until nothing changes.
  Automaton simplify_nbw(const Automaton& a);

  /// Same procedure for parity automata (priority-equality local condition).
  /// The result may be nondeterministic even for deterministic input.
  Automaton simplify_npw(const Automaton& a);
}
