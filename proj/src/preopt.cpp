#include "slicecomp/preopt.hpp"

#include <algorithm>
#include <deque>

#include "slicecomp/scc.hpp"

namespace slicecomp
{
  std::vector<std::pair<State, State>> SimulationRelation::pairs() const
  {
    std::vector<std::pair<State, State>> out;
    for (State p = 0; p < n_; ++p)
      for (State q = 0; q < n_; ++q)
        if (simulated(p, q))
          out.emplace_back(p, q);
    return out;
  }

  Automaton maximize_acceptance(const Automaton& a)
  {
    if (!a.is_buchi())
      throw AutomatonError("maximize_acceptance() needs Büchi acceptance");
    auto g = successor_graph(a);
    std::vector<bool> outside_f(a.num_states());
    for (State q = 0; q < a.num_states(); ++q)
      outside_f[q] = !a.accepting(q);
    // A state off F lies on an F-free cycle iff its SCC in the F-free
    // subgraph is nontrivial.
    auto scc = strongly_connected_components(g, outside_f);

    Automaton res = a;
    for (State q = 0; q < a.num_states(); ++q)
      if (outside_f[q] && !scc.nontrivial[scc.component[q]])
        res.set_accepting(q);
    return res;
  }

  namespace
  {
    using Adjacency = std::vector<std::vector<StateSet>>;  // [state][symbol]

    Adjacency forward_adjacency(const Automaton& a)
    {
      Adjacency adj(a.num_states(), std::vector<StateSet>(a.alphabet_size()));
      for (State q = 0; q < a.num_states(); ++q)
        for (Symbol s = 0; s < a.alphabet_size(); ++s)
          adj[q][s] = a.successors(q, s);
      return adj;
    }

    Adjacency backward_adjacency(const Automaton& a)
    {
      Adjacency adj(a.num_states(), std::vector<StateSet>(a.alphabet_size()));
      for (State q = 0; q < a.num_states(); ++q)
        for (Symbol s = 0; s < a.alphabet_size(); ++s)
          for (State d : a.successors(q, s))
            adj[d][s].push_back(q);  // q ascending, so already sorted
      return adj;
    }

    bool local_condition(const Automaton& a, SimulationKind kind, State p,
                         State q)
    {
      bool ok = a.is_buchi() ? (!a.accepting(p) || a.accepting(q))
                             : a.priority(p) == a.priority(q);
      if (kind == SimulationKind::reverse && p == a.initial())
        ok = ok && q == a.initial();
      return ok;
    }
  }

  SimulationRelation compute_simulation(const Automaton& a,
                                        SimulationKind kind)
  {
    const std::size_t n = a.num_states();
    const std::size_t k = a.alphabet_size();
    // "step" is the transfer direction, "back" its inverse.
    Adjacency fwd = forward_adjacency(a);
    Adjacency bwd = backward_adjacency(a);
    const Adjacency& step = kind == SimulationKind::direct ? fwd : bwd;
    const Adjacency& back = kind == SimulationKind::direct ? bwd : fwd;

    SimulationRelation rel(kind, n);
    std::vector<bool> queued(n * n, false);
    std::deque<std::pair<State, State>> work;
    for (State p = 0; p < n; ++p)
      for (State q = 0; q < n; ++q)
        if (local_condition(a, kind, p, q))
          {
            rel.set(p, q, true);
            queued[p * n + q] = true;
            work.emplace_back(p, q);
          }

    auto violates = [&](State p, State q) {
      for (Symbol s = 0; s < k; ++s)
        for (State p2 : step[p][s])
          {
            bool matched = false;
            for (State q2 : step[q][s])
              if (rel.simulated(p2, q2))
                {
                  matched = true;
                  break;
                }
            if (!matched)
              return true;
          }
      return false;
    };

    while (!work.empty())
      {
        auto [p, q] = work.front();
        work.pop_front();
        queued[p * n + q] = false;
        if (!rel.simulated(p, q) || !violates(p, q))
          continue;
        rel.set(p, q, false);
        // Pairs whose transfer condition may have relied on (p, q).
        for (Symbol s = 0; s < k; ++s)
          for (State p0 : back[p][s])
            for (State q0 : back[q][s])
              if (rel.simulated(p0, q0) && !queued[p0 * n + q0])
                {
                  queued[p0 * n + q0] = true;
                  work.emplace_back(p0, q0);
                }
      }
    return rel;
  }

  namespace
  {
    Automaton quotient_by_direct(const Automaton& a)
    {
      auto sim = compute_simulation(a, SimulationKind::direct);
      const std::size_t n = a.num_states();
      std::vector<State> cls(n);
      std::vector<State> reps;
      for (State q = 0; q < n; ++q)
        {
          State rep = q;
          for (State p = 0; p < q; ++p)
            if (sim.equivalent(p, q))
              {
                rep = p;
                break;
              }
          if (rep == q)
            {
              cls[q] = static_cast<State>(reps.size());
              reps.push_back(q);
            }
          else
            cls[q] = cls[rep];
        }
      if (reps.size() == n)
        return a;

      Automaton res(a.alphabet(), reps.size(), cls[a.initial()], a.kind());
      for (State q = 0; q < n; ++q)
        for (Symbol s = 0; s < a.alphabet_size(); ++s)
          for (State d : a.successors(q, s))
            res.add_transition(cls[q], s, cls[d]);
      for (State c = 0; c < reps.size(); ++c)
        {
          if (a.is_buchi())
            res.set_accepting(c, a.accepting(reps[c]));
          else
            res.set_priority(c, a.priority(reps[c]));
        }
      return res;
    }

    Automaton prune_by_direct(const Automaton& a)
    {
      auto sim = compute_simulation(a, SimulationKind::direct);
      Automaton res = a;
      for (State p = 0; p < a.num_states(); ++p)
        for (Symbol s = 0; s < a.alphabet_size(); ++s)
          {
            const auto& succ = a.successors(p, s);
            StateSet keep;
            for (State r : succ)
              if (std::none_of(succ.begin(), succ.end(), [&](State r2) {
                    return sim.strictly_simulated(r, r2);
                  }))
                keep.push_back(r);
            res.set_successors(p, s, std::move(keep));
          }
      return res;
    }

    Automaton prune_by_reverse(const Automaton& a)
    {
      auto sim = compute_simulation(a, SimulationKind::reverse);
      auto preds = backward_adjacency(a);
      Automaton res = a;
      for (State p = 0; p < a.num_states(); ++p)
        for (Symbol s = 0; s < a.alphabet_size(); ++s)
          {
            StateSet keep;
            for (State r : a.successors(p, s))
              {
                const auto& siblings = preds[r][s];
                if (std::none_of(siblings.begin(), siblings.end(),
                                 [&](State p2) {
                                   return sim.strictly_simulated(p, p2);
                                 }))
                  keep.push_back(r);
              }
            res.set_successors(p, s, std::move(keep));
          }
      return res;
    }

    Automaton simplify(const Automaton& a)
    {
      Automaton cur = a;
      cur.clear_labels();
      for (;;)
        {
          auto before = std::make_pair(cur.num_states(), cur.num_transitions());
          cur = quotient_by_direct(cur);
          cur = prune_by_direct(cur);
          cur = prune_by_reverse(cur);
          cur = restrict_to(cur, reachable(cur));
          if (std::make_pair(cur.num_states(), cur.num_transitions()) == before)
            return cur;
        }
    }
  }

  Automaton simplify_nbw(const Automaton& a)
  {
    if (!a.is_buchi())
      throw AutomatonError("simplify_nbw() needs Büchi acceptance");
    return simplify(a);
  }

  Automaton simplify_npw(const Automaton& a)
  {
    if (!a.is_parity())
      throw AutomatonError("simplify_npw() needs parity acceptance");
    return simplify(a);
  }
}
