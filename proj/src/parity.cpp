#include "slicecomp/parity.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace slicecomp
{
  namespace
  {
    void require_parity(const Automaton& a, const char* who)
    {
      if (!a.is_parity())
        throw AutomatonError(std::string(who) + " needs parity acceptance");
    }

    /// Largest track index r, so tracks are 0, 2, ..., 2r.
    unsigned max_track(const Automaton& p)
    {
      return (p.max_priority() + 1) / 2;
    }

    enum class Side : std::uint8_t
    {
      equal,
      above,
      below,
    };

    Side side_of(unsigned priority, unsigned pivot)
    {
      if (priority == pivot)
        return Side::equal;
      return priority > pivot ? Side::above : Side::below;
    }

    /// Builds the reachable part of a product-like automaton whose states
    /// are keyed by 64-bit values.
    template <typename Expand, typename Accepting, typename Label>
    Automaton explore(const Automaton& p, std::uint64_t init, Expand expand,
                      Accepting is_accepting, Label label,
                      const Limits& limits)
    {
      limits.check_deadline();
      std::vector<std::uint64_t> keys;
      std::unordered_map<std::uint64_t, State> index;
      auto intern = [&](std::uint64_t key) {
        auto [it, fresh] = index.try_emplace(key, static_cast<State>(keys.size()));
        if (fresh)
          {
            limits.charge(keys.size() + 1);
            keys.push_back(key);
          }
        return it->second;
      };

      intern(init);
      std::vector<std::vector<StateSet>> edges;
      std::vector<std::uint64_t> targets;
      for (std::size_t cur = 0; cur < keys.size(); ++cur)
        {
          if (cur % 128 == 0)
            limits.check_deadline();
          std::vector<StateSet> out(p.alphabet_size());
          for (Symbol a = 0; a < p.alphabet_size(); ++a)
            {
              targets.clear();
              expand(keys[cur], a, targets);
              for (auto t : targets)
                out[a].push_back(intern(t));
            }
          edges.push_back(std::move(out));
        }

      Automaton res(p.alphabet(), keys.size(), 0);
      for (State q = 0; q < keys.size(); ++q)
        {
          for (Symbol a = 0; a < p.alphabet_size(); ++a)
            res.set_successors(q, a, std::move(edges[q][a]));
          res.set_accepting(q, is_accepting(keys[q]));
          res.set_label(q, label(keys[q]));
        }
      return res;
    }

    std::uint64_t pack(std::uint32_t hi, std::uint32_t lo)
    {
      return (std::uint64_t{hi} << 32) | lo;
    }
    std::uint32_t high(std::uint64_t k) { return static_cast<std::uint32_t>(k >> 32); }
    std::uint32_t low(std::uint64_t k) { return static_cast<std::uint32_t>(k); }
  }

  Automaton complement_dpw(const Automaton& a)
  {
    require_parity(a, "complement_dpw()");
    if (!a.is_deterministic())
      throw AutomatonError("complement_dpw() needs a deterministic automaton");

    Automaton res = a;
    res.clear_labels();
    if (!a.is_complete())
      {
        State sink = res.add_state();
        res.set_priority(sink, 1);
        for (State q = 0; q < res.num_states(); ++q)
          for (Symbol s = 0; s < res.alphabet_size(); ++s)
            if (res.successors(q, s).empty())
              res.add_transition(q, s, sink);
      }
    for (State q = 0; q < res.num_states(); ++q)
      res.set_priority(q, res.priority(q) + 1);
    return res;
  }

  std::vector<ParityClass> parity_equiv_classes(const Automaton& p,
                                                unsigned pivot)
  {
    require_parity(p, "parity_equiv_classes()");
    if (pivot % 2 != 0)
      throw std::invalid_argument("pivot priority must be even");

    std::map<std::pair<std::vector<StateSet>, Side>, std::size_t> seen;
    std::vector<ParityClass> classes;
    for (State q = 0; q < p.num_states(); ++q)
      {
        std::vector<StateSet> succ;
        for (Symbol a = 0; a < p.alphabet_size(); ++a)
          succ.push_back(p.successors(q, a));
        auto key = std::make_pair(std::move(succ), side_of(p.priority(q), pivot));
        auto [it, fresh] = seen.try_emplace(std::move(key), classes.size());
        if (fresh)
          classes.push_back({{}, pivot});
        classes[it->second].members.push_back(q);
      }
    return classes;
  }

  Automaton parity_to_buchi_typical(const Automaton& p, const Limits& limits)
  {
    require_parity(p, "parity_to_buchi_typical()");
    const unsigned r = max_track(p);

    // key = (state, k) for track 2k
    auto expand = [&](std::uint64_t key, Symbol a, std::vector<std::uint64_t>& out) {
      State q = high(key);
      unsigned k = low(key);
      for (State d : p.successors(q, a))
        {
          if (k == 0)
            {
              out.push_back(pack(d, 0));
              for (unsigned j = 1; j <= r; ++j)
                out.push_back(pack(d, j));
            }
          else if (p.priority(d) >= 2 * k)
            out.push_back(pack(d, k));
        }
    };
    auto accepting = [&](std::uint64_t key) {
      return p.priority(high(key)) == 2 * low(key);
    };
    auto label = [&](std::uint64_t key) {
      return "(" + p.label(high(key)) + "," + std::to_string(2 * low(key)) + ")";
    };
    return explore(p, pack(p.initial(), 0), expand, accepting, label, limits);
  }

  Automaton parity_to_buchi_improved(const Automaton& p, const Limits& limits)
  {
    require_parity(p, "parity_to_buchi_improved()");
    const unsigned r = max_track(p);

    std::vector<std::vector<ParityClass>> classes(r + 1);
    std::vector<std::vector<std::uint32_t>> class_of(
        r + 1, std::vector<std::uint32_t>(p.num_states()));
    for (unsigned k = 0; k <= r; ++k)
      {
        classes[k] = parity_equiv_classes(p, 2 * k);
        for (std::uint32_t c = 0; c < classes[k].size(); ++c)
          {
            const auto& members = classes[k][c].members;
            State rep = members.front();
            for (State m : members)
              {
                class_of[k][m] = c;
                // TR1/TR2 only look at the representative.
                for (Symbol a = 0; a < p.alphabet_size(); ++a)
                  if (p.successors(m, a) != p.successors(rep, a))
                    throw std::logic_error("parity class members disagree on δ");
                if (side_of(p.priority(m), 2 * k) != side_of(p.priority(rep), 2 * k))
                  throw std::logic_error("parity class members disagree on priority");
              }
          }
      }

    // key = (k, class index at pivot 2k)
    auto rep_of = [&](std::uint64_t key) {
      return classes[high(key)][low(key)].members.front();
    };
    auto expand = [&](std::uint64_t key, Symbol a, std::vector<std::uint64_t>& out) {
      unsigned k = high(key);
      State rep = rep_of(key);
      for (State d : p.successors(rep, a))
        {
          unsigned pd = p.priority(d);
          if (pd >= 2 * k)                                    // TR2
            out.push_back(pack(k, class_of[k][d]));
          if (k == 0)
            for (unsigned j = 1; j <= r; ++j)
              if (pd == 2 * j)                                // TR1
                out.push_back(pack(j, class_of[j][d]));
        }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
    };
    auto accepting = [&](std::uint64_t key) {
      return p.priority(rep_of(key)) == 2 * high(key);
    };
    auto label = [&](std::uint64_t key) {
      std::string s = "({";
      const auto& members = classes[high(key)][low(key)].members;
      for (std::size_t i = 0; i < members.size(); ++i)
        s += (i ? "," : "") + p.label(members[i]);
      return s + "}," + std::to_string(2 * high(key)) + ")";
    };
    return explore(p, pack(0, class_of[0][p.initial()]), expand, accepting,
                   label, limits);
  }
}
