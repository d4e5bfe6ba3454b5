#include <doctest.h>

#include "slicecomp/oaf.hpp"
#include "slicecomp/slice.hpp"

#include "../support/generators.hpp"
#include "../support/oracles.hpp"

using namespace slicecomp;

namespace
{
  const char* fig1_text = R"(# running example
alphabet: p !p
states: 2
init: 0
acc: buchi 1
trans:
0 p 0
0 p 1
0 !p 0
0 !p 1
1 p 1
)";

  OafErrorKind kind_of(const std::string& text, std::size_t* line = nullptr)
  {
    try
      {
        parse_oaf(text);
      }
    catch (const OafError& e)
      {
        if (line)
          *line = e.line();
        return e.kind();
      }
    FAIL("no error raised");
    return OafErrorKind::syntax;
  }
}

TEST_CASE("parsing the running example")
{
  auto a = parse_oaf(fig1_text);
  CHECK(a == oracle::fig1());
  CHECK(emit_oaf(a) == fig1_text + std::string(fig1_text).find('\n') + 1);
}

TEST_CASE("emitted text is canonical")
{
  auto text = emit_oaf(oracle::fig1());
  CHECK(std::count(text.begin(), text.end(), '\n') == 10);
  CHECK(text.back() == '\n');
  // sections in any order, transitions unsorted, comments and blank lines
  auto shuffled = parse_oaf("trans: 1 p 1\n0 !p 1\n\n0 p 0 # loop\n0 !p 0\n0 p 1\n"
                            "acc: buchi 1\ninit: 0\nstates: 2\nalphabet: p !p\n");
  CHECK(emit_oaf(shuffled) == text);
}

TEST_CASE("parity automata list every priority")
{
  auto p = parse_oaf("alphabet: a\nstates: 2\ninit: 1\nacc: parity 0=3 1=0\n"
                     "trans:\n1 a 0\n0 a 0\n");
  CHECK(p.is_parity());
  CHECK(p.initial() == 1);
  CHECK(p.priority(0) == 3);
  CHECK(emit_oaf(p).find("acc: parity 0=3 1=0\n") != std::string::npos);
}

TEST_CASE("empty transition section")
{
  auto a = parse_oaf("alphabet: a b\nstates: 3\ninit: 0\nacc: buchi\ntrans:\n");
  CHECK(a.num_transitions() == 0);
  CHECK(a.accepting_states().empty());
}

TEST_CASE("errors carry their kind and line")
{
  const std::string head = "alphabet: p !p\nstates: 2\ninit: 0\nacc: buchi 1\n";
  std::size_t line = 0;
  CHECK(kind_of(head + "trans: 0 q 1\n", &line) == OafErrorKind::unknown_symbol);
  CHECK(line == 5);
  CHECK(kind_of(head + "trans:\n0 p 1\n0 p 2\n", &line)
        == OafErrorKind::state_out_of_range);
  CHECK(line == 7);
  CHECK(kind_of("alphabet: p\nstates: 1\ninit: 0\ntrans:\n")
        == OafErrorKind::missing_section);
  CHECK(kind_of(head + "states: 3\ntrans:\n", &line)
        == OafErrorKind::duplicate_section);
  CHECK(line == 5);
  CHECK(kind_of("alphabet: a\nstates: 2\ninit: 0\nacc: parity 0=1\ntrans:\n", &line)
        == OafErrorKind::unassigned_priority);
  CHECK(line == 4);
  CHECK(kind_of(head + "trans:\n0 p\n") == OafErrorKind::syntax);
  CHECK(kind_of(head + "colour: red\ntrans:\n") == OafErrorKind::syntax);
  CHECK(kind_of("0 p 1\n" + head + "trans:\n") == OafErrorKind::syntax);
  CHECK(kind_of("alphabet: p\nstates: 0\ninit: 0\nacc: buchi\ntrans:\n")
        == OafErrorKind::syntax);
}

TEST_CASE("round trip over random corpora")
{
  for (const auto& a : testgen::nbw_corpus(100, 71, 1, 9))
    {
      auto text = emit_oaf(a);
      CHECK(parse_oaf(text) == a);
      CHECK(emit_oaf(parse_oaf(text)) == text);
    }
  for (const auto& p : testgen::dpw_corpus(30, 72))
    CHECK(parse_oaf(emit_oaf(p)) == p);
}

TEST_CASE("labels are written as comments")
{
  auto c = complement_slice(oracle::fig1(), SliceConfig::improved());
  auto text = emit_oaf(c);
  CHECK(text.rfind("# 0: {q0}\n", 0) == 0);
  CHECK(parse_oaf(text) == c);
}
