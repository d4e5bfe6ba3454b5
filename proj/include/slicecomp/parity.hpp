#pragma once

#include <vector>

#include "slicecomp/automaton.hpp"
#include "slicecomp/limits.hpp"

namespace slicecomp
{
  /// Equivalence class of states with respect to an even pivot priority:
  /// members share every successor set and all sit on the same side of the
  /// pivot (equal to, above, or below it).
  struct ParityClass
  {
    StateSet members;
    unsigned pivot = 0;

    friend bool operator==(const ParityClass&, const ParityClass&) = default;
  };

  /// Complement of a deterministic parity automaton: every priority moves up
  /// by one.  An incomplete input is first completed with a rejecting sink.
  /// Throws AutomatonError on nondeterministic input.
  Automaton complement_dpw(const Automaton& a);

  /// The partition of the states by ≡_pivot, classes ordered by their
  /// smallest member.  Throws std::invalid_argument on an odd pivot.
  std::vector<ParityClass> parity_equiv_classes(const Automaton& p,
                                                unsigned pivot);

  /// \brief Parity → Büchi by guessing the least even priority seen
  /// infinitely often.
  ///
  /// States are (q, track) with track ∈ {0, 2, ..., 2r}, 2r the least even
  /// number ≥ the maximal priority.  Track 0 follows δ freely and may jump
  /// to any track 2k > 0; on track 2k only successors of priority ≥ 2k are
  /// kept, and (q, 2k) accepts iff q has priority 2k.  Reachable part only;
  /// states are labeled "(q,2k)".
  Automaton parity_to_buchi_typical(const Automaton& p,
                                    const Limits& limits = {});

  /// \brief Parity → Büchi over ≡_2k classes with delayed guessing.
  ///
  /// Like the typical conversion, but a track is a class of ≡_2k, and the
  /// jump from track 0 to track 2k only targets classes whose priority is
  /// exactly 2k.  Reachable part only; labels read "({q,..},2k)".
  Automaton parity_to_buchi_improved(const Automaton& p,
                                     const Limits& limits = {});
}
