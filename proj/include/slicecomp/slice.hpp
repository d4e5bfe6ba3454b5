#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "slicecomp/automaton.hpp"
#include "slicecomp/limits.hpp"

namespace slicecomp
{
  enum class Decoration : std::uint8_t
  {
    zero,  ///< descendants die before the next reset slice
    star,  ///< like zero, but checked only after the next reset slice
    one,   ///< may lie on an infinite branch
  };

  char decoration_char(Decoration d);

  /// Raised by slice operations when given a slice of the wrong phase.
  class SliceError : public std::logic_error
  {
  public:
    using std::logic_error::logic_error;
  };

  /// \brief One level of a (reduced) split tree: an ordered sequence of
  /// pairwise-disjoint nonempty state sets, optionally decorated.
  ///
  /// Either every node carries a decoration or none does.  The empty slice
  /// (bottom) is both undecorated and decorated, and is the only slice for
  /// which both predicates hold.  Node order is significant.
  class Slice
  {
  public:
    Slice() = default;  // bottom

    static Slice bottom() { return {}; }
    static Slice undecorated(std::vector<StateSet> sets);
    static Slice decorated(std::vector<StateSet> sets,
                           std::vector<Decoration> marks);

    std::size_t size() const { return sets_.size(); }
    bool is_bottom() const { return sets_.empty(); }
    bool is_decorated() const { return sets_.empty() || !marks_.empty(); }
    bool is_undecorated() const { return marks_.empty(); }

    const StateSet& set(std::size_t i) const { return sets_[i]; }
    Decoration mark(std::size_t i) const { return marks_.at(i); }
    const std::vector<StateSet>& sets() const { return sets_; }
    const std::vector<Decoration>& marks() const { return marks_; }

    /// The undecorated version (proj_Q).
    Slice project() const { return undecorated(sets_); }

    /// Union of all node sets, sorted.
    StateSet states() const;

    /// Notation of the form "{q1}*|{q0}1"; bottom prints as "⊥".
    std::string to_string(const Automaton* names = nullptr) const;

    friend bool operator==(const Slice&, const Slice&) = default;

  private:
    std::vector<StateSet> sets_;
    std::vector<Decoration> marks_;
  };

  struct SliceHash
  {
    std::size_t operator()(const Slice& s) const;
  };

  /// Heuristic switches for the slice complement.
  struct SliceConfig
  {
    bool use_d = false;  ///< deterministic decoration
    bool use_r = false;  ///< reducing transitions
    bool use_m = false;  ///< merging adjacent nodes

    static SliceConfig basic() { return {}; }
    static SliceConfig improved() { return {true, true, true}; }
    /// Parses any subset of "DRM" (order free, case-insensitive).
    static SliceConfig parse(const std::string& flags);
    std::string to_string() const;

    friend bool operator==(const SliceConfig&, const SliceConfig&) = default;
  };

  /// No decorated node with decoration 0.  Requires a decorated slice.
  bool is_reset(const Slice& s);
  /// No decorated node with decoration 1.  Requires a decorated slice.
  bool is_doomed(const Slice& s);

  /// Next level of the reduced split tree (δ_u).  Ignores decorations.
  Slice slice_successor(const Automaton& a, const Slice& s, Symbol sym);

  /// Decorated guesses on the successor of an undecorated slice: all
  /// {0,1}-decorations, or the single deterministic one when \p use_d.
  std::vector<Slice> guess_decorations(const Automaton& a, const Slice& s,
                                       Symbol sym, bool use_d);

  /// Successor of a decorated slice under rules D1–D4.  Without \p use_d,
  /// condition C1 (every 1-node keeps a nonaccepting child) is enforced and
  /// std::nullopt is returned when it fails.
  std::optional<Slice> decorated_successor(const Automaton& a, const Slice& s,
                                           Symbol sym, bool use_d);

  /// Repeatedly unions adjacent nodes that are both 0 or both *.
  Slice merge_slice(const Slice& s);

  /// Merges at most \p j consecutive mergible nodes starting from the
  /// \p i-th mergible pair (both 1-based).  Unchanged if there are fewer
  /// than \p i mergible pairs.
  Slice merge_ij(const Slice& s, std::size_t i, std::size_t j);

  /// All successors of \p s in the complement built with \p cfg.
  std::vector<Slice> complement_successors(const Automaton& a, const Slice& s,
                                           Symbol sym, const SliceConfig& cfg);

  /// Accepting in the complement: decorated reset slices, bottom included.
  bool is_complement_accepting(const Slice& s);

  /// \brief Complement of a Büchi automaton by the slice construction.
  ///
  /// Only reachable slices are built, in FIFO order from the undecorated
  /// initial slice, so the state numbering is deterministic.  Each state is
  /// labeled with its slice.  Throws BudgetExceeded / DeadlineExpired when
  /// \p limits are hit.
  Automaton complement_slice(const Automaton& a, const SliceConfig& cfg,
                             const Limits& limits = {});

  /// Decorated evolution on a finite word: the first \p guess_at symbols
  /// follow the undecorated tree, the next one guesses decorations
  /// deterministically and the rest follow decorated successors (+D rules,
  /// optionally merged).  Stops early if a successor is missing.
  std::vector<Slice> decorated_trace(const Automaton& a,
                                     const std::vector<Symbol>& word,
                                     std::size_t guess_at = 0,
                                     bool merge = false);
}
