#include <doctest.h>

#include "slicecomp/lasso.hpp"
#include "slicecomp/slice.hpp"

#include "../support/generators.hpp"
#include "../support/oracles.hpp"

using namespace slicecomp;

namespace
{
  std::vector<std::string> render(const std::vector<Slice>& levels)
  {
    std::vector<std::string> out;
    for (const auto& s : levels)
      out.push_back(s.to_string());
    return out;
  }

  const Slice s_q1_q0 = Slice::undecorated({{1}, {0}});
}

TEST_CASE("slice construction is validated")
{
  CHECK_THROWS_AS(Slice::undecorated({{}}), SliceError);
  CHECK_THROWS_AS(Slice::undecorated({{0}, {0, 1}}), SliceError);
  CHECK_THROWS_AS(Slice::undecorated({{1, 0}}), SliceError);
  CHECK_THROWS_AS(Slice::decorated({{0}}, {}), SliceError);
  CHECK(Slice::bottom().is_decorated());
  CHECK(Slice::bottom().is_undecorated());
  CHECK(Slice::bottom().to_string() == "⊥");
}

TEST_CASE("split tree prefix on p !p p")
{
  auto a = oracle::fig1();
  auto levels = reduced_split_tree_prefix(a, encode_word(a, {"p", "!p", "p"}));
  CHECK(render(levels)
        == std::vector<std::string>{"{q0}", "{q1}|{q0}", "{q1}|{q0}", "{q1}|{q0}"});
}

TEST_CASE("decorated trace on (p !p) prefixes")
{
  auto a = oracle::fig1();
  auto levels = decorated_trace(a, encode_word(a, {"p", "!p", "p", "!p"}));
  CHECK(render(levels)
        == std::vector<std::string>{"{q0}", "{q1}0|{q0}1", "{q1}*|{q0}1",
                                    "{q1}0|{q0}1", "{q1}*|{q0}1"});
}

TEST_CASE("undecorated successor drops emptied nodes")
{
  auto a = oracle::fig1();
  auto next = slice_successor(a, s_q1_q0, *a.find_symbol("!p"));
  CHECK(next.to_string() == "{q1}|{q0}");
  // q1 has no !p successor; q0 splits into accepting {q1} and {q0}
  auto bare = slice_successor(a, Slice::undecorated({{1}}), 1);
  CHECK(bare.is_bottom());
}

TEST_CASE("guessing decorations")
{
  auto a = oracle::fig1();
  auto all = guess_decorations(a, Slice::undecorated({{0}}), 0, false);
  CHECK(all.size() == 4);
  auto det = guess_decorations(a, Slice::undecorated({{0}}), 0, true);
  REQUIRE(det.size() == 1);
  CHECK(det[0].to_string() == "{q1}0|{q0}1");
}

TEST_CASE("C1 rejects a 1-node without a nonaccepting child")
{
  auto a = oracle::fig1();
  auto s = Slice::decorated({{1}, {0}}, {Decoration::one, Decoration::one});
  // {q1} on p has only the accepting child {q1}
  CHECK_FALSE(decorated_successor(a, s, 0, false));
  auto d = decorated_successor(a, s, 0, true);
  REQUIRE(d);
  CHECK(d->to_string() == "{q1}0|{q0}1");
}

TEST_CASE("reset and doomed slices")
{
  auto reset = Slice::decorated({{1}, {0}}, {Decoration::star, Decoration::one});
  auto doomed = Slice::decorated({{1}, {0}}, {Decoration::zero, Decoration::star});
  CHECK(is_reset(reset));
  CHECK_FALSE(is_doomed(reset));
  CHECK(is_doomed(doomed));
  CHECK_FALSE(is_reset(doomed));
  CHECK(is_complement_accepting(reset));
  CHECK(is_complement_accepting(Slice::bottom()));
  CHECK_FALSE(is_complement_accepting(s_q1_q0));
  CHECK_THROWS_AS(is_reset(s_q1_q0), SliceError);
}

TEST_CASE("merging adjacent nodes")
{
  auto s = Slice::decorated({{0}, {1}, {2}, {3}, {4}},
                            {Decoration::zero, Decoration::zero, Decoration::one,
                             Decoration::star, Decoration::star});
  auto m = merge_slice(s);
  CHECK(m.to_string() == "{q0,q1}0|{q2}1|{q3,q4}*");
  CHECK(merge_slice(m) == m);
  CHECK(merge_ij(s, 1, 2) == Slice::decorated({{0, 1}, {2}, {3}, {4}},
                                              {Decoration::zero, Decoration::one,
                                               Decoration::star, Decoration::star}));
  CHECK(merge_ij(s, 2, 2) == Slice::decorated({{0}, {1}, {2}, {3, 4}},
                                              {Decoration::zero, Decoration::zero,
                                               Decoration::one, Decoration::star}));
  CHECK(merge_ij(s, 3, 2) == s);
  CHECK(merge_ij(s, 1, 1) == s);
  CHECK_THROWS_AS(merge_ij(s, 0, 2), SliceError);
}

TEST_CASE("SliceConfig parsing")
{
  CHECK(SliceConfig::parse("drm") == SliceConfig::improved());
  CHECK(SliceConfig::parse("") == SliceConfig::basic());
  CHECK(SliceConfig::parse("MD").to_string() == "DM");
  CHECK_THROWS(SliceConfig::parse("X"));
}

TEST_CASE("successor slices partition the reached states")
{
  Rng rng(3);
  auto corpus = testgen::nbw_corpus(60, 5);
  for (std::size_t k = 0; k < 600; ++k)
    {
      const auto& a = corpus[k % corpus.size()];
      auto s = testgen::random_decorated_slice(a, rng);
      Symbol sym = static_cast<Symbol>(uniform_below(rng, a.alphabet_size()));
      auto next = slice_successor(a, s.project(), sym);
      StateSet expected;
      for (State q : s.states())
        for (State d : a.successors(q, sym))
          expected.push_back(d);
      std::sort(expected.begin(), expected.end());
      expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
      CHECK(next.states() == expected);

      // decorated successors refine the undecorated one
      if (auto d = decorated_successor(a, s, sym, true))
        CHECK(d->project() == next);
      for (const auto& g : guess_decorations(a, s.project(), sym, false))
        CHECK(g.project() == next);
    }
}

TEST_CASE("merging is idempotent and preserves the state set")
{
  Rng rng(4);
  auto corpus = testgen::nbw_corpus(40, 6);
  for (std::size_t k = 0; k < 400; ++k)
    {
      auto s = testgen::random_decorated_slice(corpus[k % corpus.size()], rng);
      auto m = merge_slice(s);
      CHECK(merge_slice(m) == m);
      CHECK(m.states() == s.states());
      CHECK(merge_slice(merge_ij(s, 1, 2)) == m);
    }
}

TEST_CASE("merging commutes with decorated successors")
{
  Rng rng(8);
  auto corpus = testgen::nbw_corpus(50, 9);
  for (std::size_t k = 0; k < 1000; ++k)
    {
      const auto& a = corpus[k % corpus.size()];
      auto s = testgen::random_decorated_slice(a, rng);
      Symbol sym = static_cast<Symbol>(uniform_below(rng, 2));
      auto base = decorated_successor(a, s, sym, true);
      REQUIRE(base);
      auto merged = decorated_successor(a, merge_ij(s, 1, 2), sym, true);
      REQUIRE(merged);
      CHECK(merge_slice(*merged) == merge_slice(*base));

      if (!is_doomed(*base))
        {
          auto succ = complement_successors(a, merge_slice(s), sym,
                                            SliceConfig::improved());
          CHECK(succ == std::vector<Slice>{merge_slice(*base)});
        }
    }
}

TEST_CASE("complement of the running example")
{
  auto a = oracle::fig1();
  for (auto cfg : {SliceConfig::basic(), SliceConfig::improved()})
    {
      auto c = complement_slice(a, cfg);
      CHECK(c.has_labels());
      CHECK(c.label(0) == "{q0}");
      CHECK(oracle::lasso_complementary(a, c, 3, 4));
      CHECK(check_complement(a, c).pass);
    }
  // accepted p !p p^ω, rejected (p !p)^ω
  auto c = complement_slice(a, SliceConfig::improved());
  CHECK_FALSE(oracle::member(c, {{"p", "!p"}, {"p"}}));
  CHECK(oracle::member(c, {{}, {"p", "!p"}}));
}

TEST_CASE("complements of random automata against the brute-force oracle")
{
  auto corpus = testgen::nbw_corpus(24, 21, 2, 5);
  for (const auto& a : corpus)
    for (const char* flags : {"", "D", "R", "M", "DRM"})
      {
        auto c = complement_slice(a, SliceConfig::parse(flags));
        CHECK(oracle::lasso_complementary(a, c, 2, 3));
      }
}

TEST_CASE("the improved complement never has more states")
{
  for (const auto& a : testgen::nbw_corpus(30, 17, 3, 6))
    {
      auto basic = complement_slice(a, SliceConfig::basic());
      auto improved = complement_slice(a, SliceConfig::improved());
      CHECK(improved.num_states() <= basic.num_states());
      CHECK(check_equivalent(basic, improved, 2, 3).pass);
    }
}

TEST_CASE("complement of a universal input has no live state")
{
  auto c = complement_slice(universal_automaton({"a", "b"}), SliceConfig::improved());
  CHECK(live(c).empty());
  auto e = complement_slice(empty_automaton({"a", "b"}), SliceConfig::improved());
  CHECK_FALSE(live(e).empty());
}

TEST_CASE("limits are enforced")
{
  auto a = testgen::nbw_corpus(1, 2, 6, 6).front();
  Limits tiny;
  tiny.max_states = 1;
  CHECK_THROWS_AS(complement_slice(a, SliceConfig::basic(), tiny), BudgetExceeded);
  Limits past;
  past.deadline = std::chrono::steady_clock::now();
  CHECK_THROWS_AS(complement_slice(a, SliceConfig::basic(), past), DeadlineExpired);
  Automaton parity({"a"}, 1, 0, AcceptanceKind::parity);
  CHECK_THROWS(complement_slice(parity, SliceConfig::basic()));
}
