#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "slicecomp/automaton.hpp"

namespace slicecomp
{
  /// PRNG behind every generator.  std::mt19937_64 output is fixed by the
  /// standard, and bounded draws below avoid library distributions, so
  /// corpora are identical across platforms.
  using Rng = std::mt19937_64;
  inline constexpr const char* rng_name = "mt19937_64";

  /// Uniform integer in [0, bound) by rejection sampling.
  std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

  /// Derives the seed of the i-th item of a batch (splitmix64 of both).
  std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

  /// Parameters of the random model: ⌈r·n⌉ transition pairs per symbol and
  /// ⌈f·n⌉ accepting states.
  struct GenSpec
  {
    std::size_t n = 1;
    std::size_t alphabet_size = 2;
    double transition_density = 1.0;  ///< r
    double acceptance_density = 0.5;  ///< f
    std::uint64_t seed = 0;

    std::size_t transitions_per_symbol() const;
    std::size_t accepting_count() const;
    /// Throws std::invalid_argument when the counts cannot be realized.
    void validate() const;
  };

  /// Symbol names used by the generators: "a", "b", ... then "s26", ...
  std::vector<std::string> default_alphabet(std::size_t size);

  /// Random Büchi automaton: for each symbol, exactly ⌈r·n⌉ distinct (p, q)
  /// pairs drawn uniformly without replacement; exactly ⌈f·n⌉ accepting
  /// states (the initial state 0 is eligible).
  Automaton generate(const GenSpec& spec);

  /// Random complete deterministic parity automaton with priorities drawn
  /// uniformly from 0..max_priority.
  Automaton generate_dpw(std::size_t n, std::size_t alphabet_size,
                         unsigned max_priority, std::uint64_t seed);
}
