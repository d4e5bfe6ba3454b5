#include "slicecomp/randgen.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace slicecomp
{
  std::uint64_t uniform_below(Rng& rng, std::uint64_t bound)
  {
    if (bound == 0)
      throw std::invalid_argument("uniform_below() needs a positive bound");
    // Reject the top partial block so every residue is equally likely.
    const std::uint64_t limit = Rng::max() - (Rng::max() % bound + 1) % bound;
    for (;;)
      {
        std::uint64_t x = rng();
        if (x <= limit)
          return x % bound;
      }
  }

  std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index)
  {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  namespace
  {
    // Densities are decimal inputs such as 1.1; 1.1 * 10 must round to 11.
    std::size_t ceil_product(double density, std::size_t n)
    {
      double x = density * static_cast<double>(n);
      return static_cast<std::size_t>(std::ceil(x - 1e-9));
    }

    /// First \p k entries of a uniformly random permutation of 0..m-1.
    std::vector<std::uint64_t> sample_without_replacement(Rng& rng,
                                                          std::uint64_t m,
                                                          std::size_t k)
    {
      std::vector<std::uint64_t> pool(m);
      std::iota(pool.begin(), pool.end(), 0);
      for (std::size_t i = 0; i < k; ++i)
        {
          auto j = i + uniform_below(rng, m - i);
          std::swap(pool[i], pool[j]);
        }
      pool.resize(k);
      return pool;
    }
  }

  std::size_t GenSpec::transitions_per_symbol() const
  {
    return ceil_product(transition_density, n);
  }

  std::size_t GenSpec::accepting_count() const
  {
    return ceil_product(acceptance_density, n);
  }

  void GenSpec::validate() const
  {
    if (n == 0)
      throw std::invalid_argument("n must be positive");
    if (alphabet_size == 0)
      throw std::invalid_argument("alphabet must be nonempty");
    if (transition_density < 0)
      throw std::invalid_argument("transition density must be nonnegative");
    if (!(acceptance_density > 0 && acceptance_density <= 1.0 + 1e-9))
      throw std::invalid_argument("acceptance density must lie in (0, 1]");
    if (transitions_per_symbol() > n * n)
      throw std::invalid_argument("more transition pairs than n^2");
    if (accepting_count() > n)
      throw std::invalid_argument("more accepting states than n");
  }

  std::vector<std::string> default_alphabet(std::size_t size)
  {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < size; ++i)
      out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i))
                           : "s" + std::to_string(i));
    return out;
  }

  Automaton generate(const GenSpec& spec)
  {
    spec.validate();
    Rng rng(spec.seed);
    Automaton a(default_alphabet(spec.alphabet_size), spec.n, 0);
    const std::uint64_t pairs = spec.n * spec.n;
    for (Symbol s = 0; s < spec.alphabet_size; ++s)
      for (auto code : sample_without_replacement(rng, pairs,
                                                  spec.transitions_per_symbol()))
        a.add_transition(static_cast<State>(code / spec.n), s,
                         static_cast<State>(code % spec.n));
    for (auto q : sample_without_replacement(rng, spec.n, spec.accepting_count()))
      a.set_accepting(static_cast<State>(q));
    return a;
  }

  Automaton generate_dpw(std::size_t n, std::size_t alphabet_size,
                         unsigned max_priority, std::uint64_t seed)
  {
    if (n == 0 || alphabet_size == 0)
      throw std::invalid_argument("generate_dpw() needs n, |Σ| > 0");
    Rng rng(seed);
    Automaton a(default_alphabet(alphabet_size), n, 0, AcceptanceKind::parity);
    for (State q = 0; q < n; ++q)
      for (Symbol s = 0; s < alphabet_size; ++s)
        a.add_transition(q, s, static_cast<State>(uniform_below(rng, n)));
    for (State q = 0; q < n; ++q)
      a.set_priority(q, static_cast<unsigned>(uniform_below(rng, max_priority + 1)));
    return a;
  }
}
