#include "slicecomp/slice.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <unordered_map>

namespace slicecomp
{
  char decoration_char(Decoration d)
  {
    switch (d)
      {
      case Decoration::zero:
        return '0';
      case Decoration::star:
        return '*';
      case Decoration::one:
        return '1';
      }
    return '?';
  }

  namespace
  {
    void check_nodes(const std::vector<StateSet>& sets)
    {
      std::vector<State> all;
      for (const auto& s : sets)
        {
          if (s.empty())
            throw SliceError("slice nodes must be nonempty");
          if (!std::is_sorted(s.begin(), s.end()))
            throw SliceError("slice node sets must be sorted");
          all.insert(all.end(), s.begin(), s.end());
        }
      std::sort(all.begin(), all.end());
      if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw SliceError("slice nodes must be pairwise disjoint");
    }

    StateSet set_union(const StateSet& x, const StateSet& y)
    {
      StateSet res;
      res.reserve(x.size() + y.size());
      std::set_union(x.begin(), x.end(), y.begin(), y.end(),
                     std::back_inserter(res));
      return res;
    }

    bool mergible(Decoration x, Decoration y)
    {
      return x == y && x != Decoration::one;
    }

    /// Children Q'_0 .. Q'_{2n-1} of the reduced split tree, before empty
    /// nodes are removed.  Even slots hold accepting children.
    std::vector<StateSet> raw_children(const Automaton& a, const Slice& s,
                                       Symbol sym)
    {
      std::vector<StateSet> out(2 * s.size());
      std::vector<bool> seen(a.num_states(), false);
      std::vector<bool> image(a.num_states(), false);
      std::vector<State> touched;
      for (std::size_t i = 0; i < s.size(); ++i)
        {
          touched.clear();
          for (State q : s.set(i))
            for (State d : a.successors(q, sym))
              if (!image[d])
                {
                  image[d] = true;
                  touched.push_back(d);
                }
          std::sort(touched.begin(), touched.end());
          auto& left = out[2 * i];
          auto& right = out[2 * i + 1];
          for (State d : touched)
            {
              image[d] = false;
              if (seen[d])
                continue;
              (a.accepting(d) ? left : right).push_back(d);
            }
          for (State d : touched)
            seen[d] = true;
        }
      return out;
    }

    void require_buchi(const Automaton& a)
    {
      if (!a.is_buchi())
        throw AutomatonError("slice construction needs Büchi acceptance");
    }
  }

  Slice Slice::undecorated(std::vector<StateSet> sets)
  {
    check_nodes(sets);
    Slice s;
    s.sets_ = std::move(sets);
    return s;
  }

  Slice Slice::decorated(std::vector<StateSet> sets,
                         std::vector<Decoration> marks)
  {
    check_nodes(sets);
    if (sets.size() != marks.size())
      throw SliceError("one decoration per node required");
    Slice s;
    s.sets_ = std::move(sets);
    s.marks_ = std::move(marks);
    return s;
  }

  StateSet Slice::states() const
  {
    StateSet all;
    for (const auto& s : sets_)
      all.insert(all.end(), s.begin(), s.end());
    std::sort(all.begin(), all.end());
    return all;
  }

  std::string Slice::to_string(const Automaton* names) const
  {
    if (is_bottom())
      return "⊥";
    std::string out;
    for (std::size_t i = 0; i < sets_.size(); ++i)
      {
        if (i)
          out += '|';
        out += '{';
        for (std::size_t k = 0; k < sets_[i].size(); ++k)
          {
            if (k)
              out += ',';
            State q = sets_[i][k];
            out += names ? names->label(q) : "q" + std::to_string(q);
          }
        out += '}';
        if (!marks_.empty())
          out += decoration_char(marks_[i]);
      }
    return out;
  }

  std::size_t SliceHash::operator()(const Slice& s) const
  {
    // FNV-1a over node boundaries, decorations and members.
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    mix(s.is_undecorated() ? 0 : 1);
    for (std::size_t i = 0; i < s.size(); ++i)
      {
        mix(0xffffffffull);
        if (!s.is_undecorated())
          mix(static_cast<std::uint64_t>(s.mark(i)) + 1);
        for (State q : s.set(i))
          mix(q);
      }
    return static_cast<std::size_t>(h);
  }

  SliceConfig SliceConfig::parse(const std::string& flags)
  {
    SliceConfig cfg;
    for (char c : flags)
      switch (std::toupper(static_cast<unsigned char>(c)))
        {
        case 'D':
          cfg.use_d = true;
          break;
        case 'R':
          cfg.use_r = true;
          break;
        case 'M':
          cfg.use_m = true;
          break;
        default:
          throw std::invalid_argument(std::string("unknown slice heuristic '")
                                      + c + "'");
        }
    return cfg;
  }

  std::string SliceConfig::to_string() const
  {
    std::string s;
    if (use_d)
      s += 'D';
    if (use_r)
      s += 'R';
    if (use_m)
      s += 'M';
    return s;
  }

  bool is_reset(const Slice& s)
  {
    if (!s.is_decorated())
      throw SliceError("is_reset() needs a decorated slice");
    const auto& m = s.marks();
    return std::find(m.begin(), m.end(), Decoration::zero) == m.end();
  }

  bool is_doomed(const Slice& s)
  {
    if (!s.is_decorated())
      throw SliceError("is_doomed() needs a decorated slice");
    const auto& m = s.marks();
    return std::find(m.begin(), m.end(), Decoration::one) == m.end();
  }

  Slice slice_successor(const Automaton& a, const Slice& s, Symbol sym)
  {
    require_buchi(a);
    std::vector<StateSet> next;
    for (auto& c : raw_children(a, s, sym))
      if (!c.empty())
        next.push_back(std::move(c));
    return Slice::undecorated(std::move(next));
  }

  std::vector<Slice> guess_decorations(const Automaton& a, const Slice& s,
                                       Symbol sym, bool use_d)
  {
    require_buchi(a);
    if (!s.is_undecorated())
      throw SliceError("guess_decorations() needs an undecorated slice");

    if (use_d)
      {
        std::vector<StateSet> sets;
        std::vector<Decoration> marks;
        auto children = raw_children(a, s, sym);
        for (std::size_t k = 0; k < children.size(); ++k)
          if (!children[k].empty())
            {
              sets.push_back(std::move(children[k]));
              marks.push_back(k % 2 == 0 ? Decoration::zero : Decoration::one);
            }
        return {Slice::decorated(std::move(sets), std::move(marks))};
      }

    Slice succ = slice_successor(a, s, sym);
    if (succ.is_bottom())
      return {Slice::bottom()};
    const std::size_t k = succ.size();
    if (k >= 8 * sizeof(std::size_t) - 1)
      throw SliceError("too many nodes to enumerate decorations");
    std::vector<Slice> out;
    out.reserve(std::size_t{1} << k);
    for (std::size_t bits = 0; bits < (std::size_t{1} << k); ++bits)
      {
        std::vector<Decoration> marks(k);
        for (std::size_t i = 0; i < k; ++i)
          marks[i] = (bits >> (k - 1 - i)) & 1 ? Decoration::one
                                               : Decoration::zero;
        out.push_back(Slice::decorated(succ.sets(), std::move(marks)));
      }
    return out;
  }

  std::optional<Slice> decorated_successor(const Automaton& a, const Slice& s,
                                           Symbol sym, bool use_d)
  {
    require_buchi(a);
    if (!s.is_decorated())
      throw SliceError("decorated_successor() needs a decorated slice");
    if (s.is_bottom())
      return Slice::bottom();

    const bool reset = is_reset(s);
    auto children = raw_children(a, s, sym);
    std::vector<StateSet> sets;
    std::vector<Decoration> marks;
    for (std::size_t i = 0; i < s.size(); ++i)
      {
        Decoration d = s.mark(i);
        auto& left = children[2 * i];
        auto& right = children[2 * i + 1];
        if (!use_d && d == Decoration::one && right.empty())
          return std::nullopt;  // C1

        Decoration dl, dr;
        if (!reset)
          {
            if (d == Decoration::one)
              dl = Decoration::star, dr = Decoration::one;    // D1
            else
              dl = d, dr = d;                                 // D2
          }
        else if (d == Decoration::one)
          dl = Decoration::zero, dr = Decoration::one;        // D3
        else
          dl = Decoration::zero, dr = Decoration::zero;       // D4

        if (!left.empty())
          {
            sets.push_back(std::move(left));
            marks.push_back(dl);
          }
        if (!right.empty())
          {
            sets.push_back(std::move(right));
            marks.push_back(dr);
          }
      }
    if (sets.empty())
      return Slice::bottom();
    return Slice::decorated(std::move(sets), std::move(marks));
  }

  Slice merge_slice(const Slice& s)
  {
    if (!s.is_decorated())
      throw SliceError("merge_slice() needs a decorated slice");
    if (s.is_bottom())
      return s;
    std::vector<StateSet> sets{s.set(0)};
    std::vector<Decoration> marks{s.mark(0)};
    for (std::size_t i = 1; i < s.size(); ++i)
      if (mergible(marks.back(), s.mark(i)))
        sets.back() = set_union(sets.back(), s.set(i));
      else
        {
          sets.push_back(s.set(i));
          marks.push_back(s.mark(i));
        }
    return Slice::decorated(std::move(sets), std::move(marks));
  }

  Slice merge_ij(const Slice& s, std::size_t i, std::size_t j)
  {
    if (!s.is_decorated())
      throw SliceError("merge_ij() needs a decorated slice");
    if (i == 0)
      throw SliceError("merge_ij() pair index is 1-based");

    std::size_t start = s.size();
    std::size_t seen = 0;
    for (std::size_t p = 0; p + 1 < s.size(); ++p)
      if (mergible(s.mark(p), s.mark(p + 1)) && ++seen == i)
        {
          start = p;
          break;
        }
    if (start == s.size() || j < 2)
      return s;

    std::size_t stop = start + 1;  // one past the last merged node
    while (stop < s.size() && stop - start < j
           && mergible(s.mark(stop - 1), s.mark(stop)))
      ++stop;

    std::vector<StateSet> sets;
    std::vector<Decoration> marks;
    for (std::size_t p = 0; p < s.size(); ++p)
      {
        if (p > start && p < stop)
          {
            sets.back() = set_union(sets.back(), s.set(p));
            continue;
          }
        sets.push_back(s.set(p));
        marks.push_back(s.mark(p));
      }
    return Slice::decorated(std::move(sets), std::move(marks));
  }

  std::vector<Slice> complement_successors(const Automaton& a, const Slice& s,
                                           Symbol sym, const SliceConfig& cfg)
  {
    if (s.is_bottom())
      return {Slice::bottom()};

    std::vector<Slice> out;
    auto add = [&out](Slice t) {
      if (std::find(out.begin(), out.end(), t) == out.end())
        out.push_back(std::move(t));
    };

    if (s.is_undecorated())
      {
        add(slice_successor(a, s, sym));
        for (auto& g : guess_decorations(a, s, sym, cfg.use_d))
          {
            if (cfg.use_r && !g.is_bottom() && is_doomed(g))
              continue;
            add(cfg.use_m ? merge_slice(g) : std::move(g));
          }
        return out;
      }

    auto next = decorated_successor(a, s, sym, cfg.use_d);
    if (!next)
      return out;
    // +R: decorated slices never move to bottom or to a doomed slice.
    if (cfg.use_r && is_doomed(*next))
      return out;
    add(cfg.use_m ? merge_slice(*next) : std::move(*next));
    return out;
  }

  bool is_complement_accepting(const Slice& s)
  {
    return s.is_decorated() && is_reset(s);
  }

  Automaton complement_slice(const Automaton& a, const SliceConfig& cfg,
                             const Limits& limits)
  {
    require_buchi(a);
    limits.check_deadline();

    std::vector<Slice> slices;
    std::unordered_map<Slice, State, SliceHash> index;
    std::vector<std::vector<std::vector<State>>> edges;

    auto intern = [&](Slice s) -> State {
      auto it = index.find(s);
      if (it != index.end())
        return it->second;
      auto id = static_cast<State>(slices.size());
      limits.charge(slices.size() + 1);
      index.emplace(s, id);
      slices.push_back(std::move(s));
      return id;
    };

    intern(Slice::undecorated({StateSet{a.initial()}}));
    for (std::size_t cur = 0; cur < slices.size(); ++cur)
      {
        if (cur % 128 == 0)
          limits.check_deadline();
        std::vector<std::vector<State>> out(a.alphabet_size());
        for (Symbol sym = 0; sym < a.alphabet_size(); ++sym)
          for (auto& t : complement_successors(a, slices[cur], sym, cfg))
            out[sym].push_back(intern(std::move(t)));
        edges.push_back(std::move(out));
      }

    Automaton res(a.alphabet(), slices.size(), 0);
    for (State q = 0; q < slices.size(); ++q)
      {
        for (Symbol sym = 0; sym < a.alphabet_size(); ++sym)
          res.set_successors(q, sym, std::move(edges[q][sym]));
        res.set_accepting(q, is_complement_accepting(slices[q]));
        res.set_label(q, slices[q].to_string(&a));
      }
    return res;
  }

  std::vector<Slice> decorated_trace(const Automaton& a,
                                     const std::vector<Symbol>& word,
                                     std::size_t guess_at, bool merge)
  {
    std::vector<Slice> levels{Slice::undecorated({StateSet{a.initial()}})};
    for (std::size_t k = 0; k < word.size(); ++k)
      {
        const Slice& cur = levels.back();
        Slice next;
        if (k < guess_at)
          next = slice_successor(a, cur, word[k]);
        else if (k == guess_at)
          next = guess_decorations(a, cur, word[k], true).front();
        else
          {
            auto t = decorated_successor(a, cur, word[k], true);
            if (!t)
              break;
            next = std::move(*t);
          }
        if (merge && next.is_decorated())
          next = merge_slice(next);
        levels.push_back(std::move(next));
      }
    return levels;
  }
}
