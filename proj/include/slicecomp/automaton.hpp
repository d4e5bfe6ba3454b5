#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace slicecomp
{
  using State = std::uint32_t;
  using Symbol = std::uint32_t;

  /// Sorted, duplicate-free set of state indices.
  using StateSet = std::vector<State>;

  enum class AcceptanceKind
  {
    buchi,
    parity,
  };

  /// Raised when an automaton is used in a way that breaks its invariants
  /// (bad state index, wrong acceptance kind, ...).
  class AutomatonError : public std::logic_error
  {
  public:
    using std::logic_error::logic_error;
  };

  /// \brief Explicit ω-automaton over a finite alphabet.
  ///
  /// States are the indices 0..num_states()-1.  The transition map is total:
  /// a missing entry is the empty successor set.  Acceptance is either a
  /// Büchi set or a parity (min-even) priority map; exactly one of them is
  /// meaningful, as given by kind().
  ///
  /// States may carry a printable label; labels are metadata and do not take
  /// part in structural equality.
  class Automaton
  {
  public:
    Automaton() = default;
    Automaton(std::vector<std::string> alphabet, std::size_t num_states,
              State initial = 0,
              AcceptanceKind kind = AcceptanceKind::buchi);

    const std::vector<std::string>& alphabet() const { return alphabet_; }
    std::size_t alphabet_size() const { return alphabet_.size(); }
    std::optional<Symbol> find_symbol(const std::string& name) const;

    std::size_t num_states() const { return num_states_; }
    State initial() const { return initial_; }
    void set_initial(State q);

    AcceptanceKind kind() const { return kind_; }
    bool is_buchi() const { return kind_ == AcceptanceKind::buchi; }
    bool is_parity() const { return kind_ == AcceptanceKind::parity; }

    /// Appends a fresh state (non-accepting, priority 0) and returns it.
    State add_state();

    void add_transition(State src, Symbol sym, State dst);
    /// Replaces the whole successor set; \p dsts need not be sorted.
    void set_successors(State src, Symbol sym, StateSet dsts);
    const StateSet& successors(State src, Symbol sym) const;
    std::size_t num_transitions() const;

    bool accepting(State q) const;
    void set_accepting(State q, bool acc = true);
    StateSet accepting_states() const;

    unsigned priority(State q) const;
    void set_priority(State q, unsigned p);
    unsigned max_priority() const;

    /// Switches the acceptance kind.  Büchi→parity maps accepting states to
    /// priority 0 and the rest to 1; parity→Büchi keeps priority-0 states.
    void convert_acceptance(AcceptanceKind kind);

    bool has_labels() const { return !labels_.empty(); }
    std::string label(State q) const;
    void set_label(State q, std::string label);
    void clear_labels() { labels_.clear(); }

    /// True iff every (state, symbol) has at most one successor.
    bool is_deterministic() const;
    /// True iff every (state, symbol) has at least one successor.
    bool is_complete() const;

    /// Structural equality: alphabet, states, initial, δ, acceptance.
    friend bool operator==(const Automaton& lhs, const Automaton& rhs);

  private:
    void check_state(State q) const;
    void check_symbol(Symbol a) const;
    std::size_t slot(State q, Symbol a) const
    {
      return static_cast<std::size_t>(q) * alphabet_.size() + a;
    }

    std::vector<std::string> alphabet_;
    std::size_t num_states_ = 0;
    State initial_ = 0;
    AcceptanceKind kind_ = AcceptanceKind::buchi;
    std::vector<StateSet> delta_;
    std::vector<bool> accepting_;
    std::vector<unsigned> priority_;
    std::vector<std::string> labels_;
  };

  /// Reachable/live state counts of an automaton (the S_R / S_L metrics).
  struct StateStats
  {
    std::size_t reachable_count = 0;
    std::size_t live_count = 0;
  };

  /// States reachable from the initial state, sorted.
  StateSet reachable(const Automaton& a);

  /// States occurring on some accepting run.  Büchi acceptance only.
  StateSet live(const Automaton& a);

  /// Restriction of \p a to its live states plus the initial state.  The
  /// relative order of kept states is preserved.
  Automaton prune_dead(const Automaton& a);

  /// Restriction of \p a to the states listed in \p keep (sorted, must
  /// contain the initial state).  Transitions leaving the kept set vanish.
  Automaton restrict_to(const Automaton& a, const StateSet& keep);

  StateStats state_stats(const Automaton& a);

  /// Successor lists of the transition digraph with symbols erased.
  std::vector<std::vector<State>> successor_graph(const Automaton& a);

  /// Universal 1-state Büchi automaton: self-loops on every symbol, accepting.
  Automaton universal_automaton(std::vector<std::string> alphabet);
  /// 1-state Büchi automaton with empty language.
  Automaton empty_automaton(std::vector<std::string> alphabet);
}
