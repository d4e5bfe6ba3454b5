#include "slicecomp/automaton.hpp"

#include <algorithm>

#include "slicecomp/scc.hpp"

namespace slicecomp
{
  Automaton::Automaton(std::vector<std::string> alphabet,
                       std::size_t num_states, State initial,
                       AcceptanceKind kind)
    : alphabet_(std::move(alphabet)),
      num_states_(num_states),
      initial_(initial),
      kind_(kind),
      delta_(num_states * alphabet_.size()),
      accepting_(num_states, false),
      priority_(num_states, 0)
  {
    if (num_states == 0)
      throw AutomatonError("automaton needs at least one state");
    check_state(initial);
    for (std::size_t i = 0; i < alphabet_.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (alphabet_[i] == alphabet_[j])
          throw AutomatonError("duplicate symbol '" + alphabet_[i] + "'");
  }

  std::optional<Symbol> Automaton::find_symbol(const std::string& name) const
  {
    auto it = std::find(alphabet_.begin(), alphabet_.end(), name);
    if (it == alphabet_.end())
      return std::nullopt;
    return static_cast<Symbol>(it - alphabet_.begin());
  }

  void Automaton::check_state(State q) const
  {
    if (q >= num_states_)
      throw AutomatonError("state " + std::to_string(q) + " out of range");
  }

  void Automaton::check_symbol(Symbol a) const
  {
    if (a >= alphabet_.size())
      throw AutomatonError("symbol " + std::to_string(a) + " out of range");
  }

  void Automaton::set_initial(State q)
  {
    check_state(q);
    initial_ = q;
  }

  State Automaton::add_state()
  {
    auto q = static_cast<State>(num_states_++);
    delta_.resize(num_states_ * alphabet_.size());
    accepting_.push_back(false);
    priority_.push_back(0);
    if (!labels_.empty())
      labels_.emplace_back();
    return q;
  }

  void Automaton::add_transition(State src, Symbol sym, State dst)
  {
    check_state(src);
    check_state(dst);
    check_symbol(sym);
    auto& succ = delta_[slot(src, sym)];
    auto it = std::lower_bound(succ.begin(), succ.end(), dst);
    if (it == succ.end() || *it != dst)
      succ.insert(it, dst);
  }

  void Automaton::set_successors(State src, Symbol sym, StateSet dsts)
  {
    check_state(src);
    check_symbol(sym);
    for (State d : dsts)
      check_state(d);
    std::sort(dsts.begin(), dsts.end());
    dsts.erase(std::unique(dsts.begin(), dsts.end()), dsts.end());
    delta_[slot(src, sym)] = std::move(dsts);
  }

  const StateSet& Automaton::successors(State src, Symbol sym) const
  {
    check_state(src);
    check_symbol(sym);
    return delta_[slot(src, sym)];
  }

  std::size_t Automaton::num_transitions() const
  {
    std::size_t total = 0;
    for (const auto& s : delta_)
      total += s.size();
    return total;
  }

  bool Automaton::accepting(State q) const
  {
    check_state(q);
    if (kind_ != AcceptanceKind::buchi)
      throw AutomatonError("accepting() needs Büchi acceptance");
    return accepting_[q];
  }

  void Automaton::set_accepting(State q, bool acc)
  {
    check_state(q);
    if (kind_ != AcceptanceKind::buchi)
      throw AutomatonError("set_accepting() needs Büchi acceptance");
    accepting_[q] = acc;
  }

  StateSet Automaton::accepting_states() const
  {
    StateSet res;
    for (State q = 0; q < num_states_; ++q)
      if (accepting(q))
        res.push_back(q);
    return res;
  }

  unsigned Automaton::priority(State q) const
  {
    check_state(q);
    if (kind_ != AcceptanceKind::parity)
      throw AutomatonError("priority() needs parity acceptance");
    return priority_[q];
  }

  void Automaton::set_priority(State q, unsigned p)
  {
    check_state(q);
    if (kind_ != AcceptanceKind::parity)
      throw AutomatonError("set_priority() needs parity acceptance");
    priority_[q] = p;
  }

  unsigned Automaton::max_priority() const
  {
    if (kind_ != AcceptanceKind::parity)
      throw AutomatonError("max_priority() needs parity acceptance");
    return *std::max_element(priority_.begin(), priority_.end());
  }

  void Automaton::convert_acceptance(AcceptanceKind kind)
  {
    if (kind == kind_)
      return;
    if (kind == AcceptanceKind::parity)
      for (State q = 0; q < num_states_; ++q)
        priority_[q] = accepting_[q] ? 0 : 1;
    else
      for (State q = 0; q < num_states_; ++q)
        accepting_[q] = priority_[q] == 0;
    kind_ = kind;
  }

  std::string Automaton::label(State q) const
  {
    check_state(q);
    if (labels_.empty() || labels_[q].empty())
      return "q" + std::to_string(q);
    return labels_[q];
  }

  void Automaton::set_label(State q, std::string label)
  {
    check_state(q);
    if (labels_.empty())
      labels_.resize(num_states_);
    labels_[q] = std::move(label);
  }

  bool Automaton::is_deterministic() const
  {
    return std::all_of(delta_.begin(), delta_.end(),
                       [](const StateSet& s) { return s.size() <= 1; });
  }

  bool Automaton::is_complete() const
  {
    return std::all_of(delta_.begin(), delta_.end(),
                       [](const StateSet& s) { return !s.empty(); });
  }

  bool operator==(const Automaton& lhs, const Automaton& rhs)
  {
    if (lhs.alphabet_ != rhs.alphabet_ || lhs.num_states_ != rhs.num_states_
        || lhs.initial_ != rhs.initial_ || lhs.kind_ != rhs.kind_
        || lhs.delta_ != rhs.delta_)
      return false;
    if (lhs.kind_ == AcceptanceKind::buchi)
      return lhs.accepting_ == rhs.accepting_;
    return lhs.priority_ == rhs.priority_;
  }

  std::vector<std::vector<State>> successor_graph(const Automaton& a)
  {
    std::vector<std::vector<State>> g(a.num_states());
    for (State q = 0; q < a.num_states(); ++q)
      {
        auto& out = g[q];
        for (Symbol s = 0; s < a.alphabet_size(); ++s)
          {
            const auto& succ = a.successors(q, s);
            out.insert(out.end(), succ.begin(), succ.end());
          }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
      }
    return g;
  }

  namespace
  {
    StateSet to_set(const std::vector<bool>& mask)
    {
      StateSet res;
      for (State q = 0; q < mask.size(); ++q)
        if (mask[q])
          res.push_back(q);
      return res;
    }
  }

  StateSet reachable(const Automaton& a)
  {
    auto g = successor_graph(a);
    State init = a.initial();
    return to_set(reachable_from(g, std::span(&init, 1)));
  }

  StateSet live(const Automaton& a)
  {
    if (!a.is_buchi())
      throw AutomatonError("live() needs Büchi acceptance");
    auto g = successor_graph(a);
    State init = a.initial();
    auto reach = reachable_from(g, std::span(&init, 1));
    auto scc = strongly_connected_components(g, reach);

    // Accepting states on a cycle seed a backward search.
    std::vector<State> seeds;
    for (State q = 0; q < a.num_states(); ++q)
      if (reach[q] && a.accepting(q) && scc.nontrivial[scc.component[q]])
        seeds.push_back(q);
    auto back = reachable_from(transpose(g), seeds);
    for (State q = 0; q < a.num_states(); ++q)
      back[q] = back[q] && reach[q];
    return to_set(back);
  }

  Automaton restrict_to(const Automaton& a, const StateSet& keep)
  {
    std::vector<State> index(a.num_states(), static_cast<State>(-1));
    for (State i = 0; i < keep.size(); ++i)
      index[keep[i]] = i;
    if (index[a.initial()] == static_cast<State>(-1))
      throw AutomatonError("restrict_to() must keep the initial state");

    Automaton res(a.alphabet(), keep.size(), index[a.initial()], a.kind());
    for (State i = 0; i < keep.size(); ++i)
      {
        State q = keep[i];
        for (Symbol s = 0; s < a.alphabet_size(); ++s)
          {
            StateSet succ;
            for (State d : a.successors(q, s))
              if (index[d] != static_cast<State>(-1))
                succ.push_back(index[d]);
            res.set_successors(i, s, std::move(succ));
          }
        if (a.is_buchi())
          res.set_accepting(i, a.accepting(q));
        else
          res.set_priority(i, a.priority(q));
        if (a.has_labels())
          res.set_label(i, a.label(q));
      }
    return res;
  }

  Automaton prune_dead(const Automaton& a)
  {
    auto keep = live(a);
    auto it = std::lower_bound(keep.begin(), keep.end(), a.initial());
    if (it == keep.end() || *it != a.initial())
      keep.insert(it, a.initial());
    return restrict_to(a, keep);
  }

  StateStats state_stats(const Automaton& a)
  {
    return {reachable(a).size(), live(a).size()};
  }

  Automaton universal_automaton(std::vector<std::string> alphabet)
  {
    Automaton a(std::move(alphabet), 1);
    for (Symbol s = 0; s < a.alphabet_size(); ++s)
      a.add_transition(0, s, 0);
    a.set_accepting(0);
    return a;
  }

  Automaton empty_automaton(std::vector<std::string> alphabet)
  {
    Automaton a(std::move(alphabet), 1);
    for (Symbol s = 0; s < a.alphabet_size(); ++s)
      a.add_transition(0, s, 0);
    return a;
  }
}
