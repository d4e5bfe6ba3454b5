#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "slicecomp/automaton.hpp"
#include "slicecomp/slice.hpp"

namespace slicecomp
{
  /// Ultimately periodic word prefix · period^ω.  Symbols are names, so a
  /// word can be checked against automata with differently ordered alphabets.
  struct LassoWord
  {
    std::vector<std::string> prefix;
    std::vector<std::string> period;  ///< nonempty

    /// "u=p,!p v=p" style rendering.
    std::string to_string() const;

    friend bool operator==(const LassoWord&, const LassoWord&) = default;
  };

  class UnknownSymbolError : public std::invalid_argument
  {
  public:
    using std::invalid_argument::invalid_argument;
  };

  /// Does some run of the Büchi automaton \p a on \p w visit F infinitely
  /// often?
  bool member_nbw(const Automaton& a, const LassoWord& w);

  /// Does some run of the parity automaton \p a on \p w have an even least
  /// priority among those seen infinitely often?
  bool member_npw(const Automaton& a, const LassoWord& w);

  /// Dispatches on the acceptance kind.
  bool member(const Automaton& a, const LassoWord& w);

  /// All lassos with |u| ≤ max_u and 1 ≤ |v| ≤ max_v, ordered by |u|, then
  /// u lexicographically (by symbol index), then |v|, then v.
  std::vector<LassoWord> enumerate_lassos(
      const std::vector<std::string>& alphabet, std::size_t max_u,
      std::size_t max_v);

  /// Membership of every lasso of enumerate_lassos(a.alphabet(), max_u,
  /// max_v), in that order.  Shares the work between lassos with equal
  /// prefixes or periods, so it is much cheaper than repeated member().
  std::vector<bool> member_table(const Automaton& a,
                                 const std::vector<std::string>& alphabet,
                                 std::size_t max_u, std::size_t max_v);

  struct Verdict
  {
    bool pass = true;
    std::optional<LassoWord> witness;  ///< first failing lasso
    bool in_a = false;                 ///< memberships at the witness
    bool in_b = false;
    std::size_t lassos_checked = 0;

    explicit operator bool() const { return pass; }
  };

  /// Pass iff exactly one of \p a, \p b accepts each enumerated lasso.
  /// Throws std::invalid_argument when the alphabets differ as sets.
  Verdict check_complement(const Automaton& a, const Automaton& b,
                           std::size_t max_u = 3, std::size_t max_v = 4);

  /// Pass iff \p a and \p b agree on each enumerated lasso.
  Verdict check_equivalent(const Automaton& a, const Automaton& b,
                           std::size_t max_u = 3, std::size_t max_v = 4);

  /// Levels of the reduced split tree of \p a on a finite word, root
  /// ({q0}) first; one more level than symbols.
  std::vector<Slice> reduced_split_tree_prefix(const Automaton& a,
                                               const std::vector<Symbol>& word);

  /// Symbol names → indices of \p a; throws UnknownSymbolError.
  std::vector<Symbol> encode_word(const Automaton& a,
                                  const std::vector<std::string>& word);
}
