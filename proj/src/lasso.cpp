#include "slicecomp/lasso.hpp"

#include <algorithm>

#include "slicecomp/scc.hpp"

namespace slicecomp
{
  std::string LassoWord::to_string() const
  {
    auto join = [](const std::vector<std::string>& w) {
      std::string s;
      for (std::size_t i = 0; i < w.size(); ++i)
        s += (i ? "," : "") + w[i];
      return s;
    };
    return "u=" + join(prefix) + " v=" + join(period);
  }

  std::vector<Symbol> encode_word(const Automaton& a,
                                  const std::vector<std::string>& word)
  {
    std::vector<Symbol> out;
    out.reserve(word.size());
    for (const auto& name : word)
      {
        auto sym = a.find_symbol(name);
        if (!sym)
          throw UnknownSymbolError("symbol '" + name + "' not in alphabet");
        out.push_back(*sym);
      }
    return out;
  }

  namespace
  {
    using Graph = std::vector<std::vector<std::uint32_t>>;

    /// Product of \p a with the positions of a cyclic word: node i*n + q is
    /// state q before reading position i.  Reading the last position leads
    /// to position \p loop.
    Graph word_product(const Automaton& a, const std::vector<Symbol>& word,
                       std::size_t loop)
    {
      const std::size_t n = a.num_states();
      const std::size_t len = word.size();
      Graph g(n * len);
      for (std::size_t i = 0; i < len; ++i)
        {
          std::size_t next = i + 1 < len ? i + 1 : loop;
          for (State q = 0; q < n; ++q)
            for (State d : a.successors(q, word[i]))
              g[i * n + q].push_back(static_cast<std::uint32_t>(next * n + d));
        }
      return g;
    }

    /// Product nodes lying on a cycle that witnesses acceptance.  Only nodes
    /// with \p enabled set are considered.
    std::vector<bool> accepting_cycle_nodes(const Automaton& a, const Graph& g,
                                            const std::vector<bool>& enabled)
    {
      const std::size_t n = a.num_states();
      std::vector<bool> good(g.size(), false);
      auto state_of = [n](std::size_t node) { return static_cast<State>(node % n); };

      if (a.is_buchi())
        {
          auto scc = strongly_connected_components(g, enabled);
          for (std::size_t v = 0; v < g.size(); ++v)
            if (enabled[v] && a.accepting(state_of(v))
                && scc.nontrivial[scc.component[v]])
              good[v] = true;
          return good;
        }

      const unsigned maxp = a.max_priority();
      for (unsigned d = 0; d <= maxp; d += 2)
        {
          std::vector<bool> sub(g.size(), false);
          bool any = false;
          for (std::size_t v = 0; v < g.size(); ++v)
            if (enabled[v] && a.priority(state_of(v)) >= d)
              {
                sub[v] = true;
                any = any || a.priority(state_of(v)) == d;
              }
          if (!any)
            continue;
          auto scc = strongly_connected_components(g, sub);
          for (std::size_t v = 0; v < g.size(); ++v)
            if (sub[v] && a.priority(state_of(v)) == d
                && scc.nontrivial[scc.component[v]])
              good[v] = true;
        }
      return good;
    }

    bool member_impl(const Automaton& a, const LassoWord& w)
    {
      if (w.period.empty())
        throw std::invalid_argument("lasso period must be nonempty");
      std::vector<Symbol> word = encode_word(a, w.prefix);
      auto v = encode_word(a, w.period);
      word.insert(word.end(), v.begin(), v.end());

      Graph g = word_product(a, word, w.prefix.size());
      auto init = static_cast<std::uint32_t>(a.initial());
      auto reach = reachable_from(g, std::span(&init, 1));
      auto good = accepting_cycle_nodes(a, g, reach);
      return std::find(good.begin(), good.end(), true) != good.end();
    }

    /// States from which some run on period^ω is accepting.
    std::vector<bool> period_winners(const Automaton& a,
                                     const std::vector<Symbol>& period)
    {
      const std::size_t n = a.num_states();
      Graph g = word_product(a, period, 0);
      std::vector<bool> all(g.size(), true);
      auto good = accepting_cycle_nodes(a, g, all);
      std::vector<std::uint32_t> seeds;
      for (std::uint32_t v = 0; v < g.size(); ++v)
        if (good[v])
          seeds.push_back(v);
      auto back = reachable_from(transpose(g), seeds);
      back.resize(n);  // position 0 only
      return back;
    }

    /// All words of length \p len over \p k symbols, lexicographic.
    std::vector<std::vector<Symbol>> words_of_length(std::size_t k,
                                                     std::size_t len)
    {
      std::vector<std::vector<Symbol>> out;
      if (k == 0 && len > 0)
        return out;
      std::vector<Symbol> w(len, 0);
      for (;;)
        {
          out.push_back(w);
          std::size_t i = len;
          while (i > 0 && w[i - 1] + 1 == k)
            w[--i] = 0;
          if (i == 0)
            return out;
          ++w[i - 1];
        }
    }

    std::vector<std::string> names(const std::vector<std::string>& alphabet,
                                   const std::vector<Symbol>& w)
    {
      std::vector<std::string> out;
      for (Symbol s : w)
        out.push_back(alphabet[s]);
      return out;
    }

    void require_same_alphabet(const Automaton& a, const Automaton& b)
    {
      auto x = a.alphabet();
      auto y = b.alphabet();
      std::sort(x.begin(), x.end());
      std::sort(y.begin(), y.end());
      if (x != y)
        throw std::invalid_argument("automata have different alphabets");
    }

    template <typename Agree>
    Verdict compare(const Automaton& a, const Automaton& b, std::size_t max_u,
                    std::size_t max_v, Agree ok)
    {
      require_same_alphabet(a, b);
      auto ta = member_table(a, a.alphabet(), max_u, max_v);
      auto tb = member_table(b, a.alphabet(), max_u, max_v);
      Verdict res;
      res.lassos_checked = ta.size();
      for (std::size_t i = 0; i < ta.size(); ++i)
        if (!ok(ta[i], tb[i]))
          {
            res.pass = false;
            res.witness = enumerate_lassos(a.alphabet(), max_u, max_v)[i];
            res.in_a = ta[i];
            res.in_b = tb[i];
            break;
          }
      return res;
    }
  }

  bool member_nbw(const Automaton& a, const LassoWord& w)
  {
    if (!a.is_buchi())
      throw AutomatonError("member_nbw() needs Büchi acceptance");
    return member_impl(a, w);
  }

  bool member_npw(const Automaton& a, const LassoWord& w)
  {
    if (!a.is_parity())
      throw AutomatonError("member_npw() needs parity acceptance");
    return member_impl(a, w);
  }

  bool member(const Automaton& a, const LassoWord& w)
  {
    return member_impl(a, w);
  }

  std::vector<LassoWord> enumerate_lassos(
      const std::vector<std::string>& alphabet, std::size_t max_u,
      std::size_t max_v)
  {
    if (max_v == 0)
      throw std::invalid_argument("max_v must be at least 1");
    std::vector<LassoWord> out;
    for (std::size_t lu = 0; lu <= max_u; ++lu)
      for (const auto& u : words_of_length(alphabet.size(), lu))
        for (std::size_t lv = 1; lv <= max_v; ++lv)
          for (const auto& v : words_of_length(alphabet.size(), lv))
            out.push_back({names(alphabet, u), names(alphabet, v)});
    return out;
  }

  std::vector<bool> member_table(const Automaton& a,
                                 const std::vector<std::string>& alphabet,
                                 std::size_t max_u, std::size_t max_v)
  {
    if (max_v == 0)
      throw std::invalid_argument("max_v must be at least 1");
    const std::size_t k = alphabet.size();
    std::vector<Symbol> to_local;
    for (const auto& name : alphabet)
      to_local.push_back(encode_word(a, {name}).front());
    auto localize = [&](std::vector<Symbol> w) {
      for (auto& s : w)
        s = to_local[s];
      return w;
    };

    std::vector<std::vector<bool>> winners;  // per period, enumeration order
    for (std::size_t lv = 1; lv <= max_v; ++lv)
      for (const auto& v : words_of_length(k, lv))
        winners.push_back(period_winners(a, localize(v)));

    std::vector<bool> out;
    std::vector<bool> cur(a.num_states()), next(a.num_states());
    for (std::size_t lu = 0; lu <= max_u; ++lu)
      for (const auto& u : words_of_length(k, lu))
        {
          std::fill(cur.begin(), cur.end(), false);
          cur[a.initial()] = true;
          for (Symbol s : localize(u))
            {
              std::fill(next.begin(), next.end(), false);
              for (State q = 0; q < a.num_states(); ++q)
                if (cur[q])
                  for (State d : a.successors(q, s))
                    next[d] = true;
              std::swap(cur, next);
            }
          for (const auto& win : winners)
            {
              bool acc = false;
              for (State q = 0; q < a.num_states() && !acc; ++q)
                acc = cur[q] && win[q];
              out.push_back(acc);
            }
        }
    return out;
  }

  Verdict check_complement(const Automaton& a, const Automaton& b,
                           std::size_t max_u, std::size_t max_v)
  {
    return compare(a, b, max_u, max_v, [](bool x, bool y) { return x != y; });
  }

  Verdict check_equivalent(const Automaton& a, const Automaton& b,
                           std::size_t max_u, std::size_t max_v)
  {
    return compare(a, b, max_u, max_v, [](bool x, bool y) { return x == y; });
  }

  std::vector<Slice> reduced_split_tree_prefix(const Automaton& a,
                                               const std::vector<Symbol>& word)
  {
    std::vector<Slice> levels{Slice::undecorated({StateSet{a.initial()}})};
    for (Symbol sym : word)
      levels.push_back(slice_successor(a, levels.back(), sym));
    return levels;
  }
}
