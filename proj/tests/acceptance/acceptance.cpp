// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.  Criteria can be selected by number on the
// command line, e.g. `acceptance 1 3 8`.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "slicecomp/bench.hpp"
#include "slicecomp/lasso.hpp"
#include "slicecomp/oaf.hpp"
#include "slicecomp/parity.hpp"
#include "slicecomp/preopt.hpp"
#include "slicecomp/randgen.hpp"
#include "slicecomp/slice.hpp"

#include "../support/generators.hpp"
#include "../support/oracles.hpp"

using namespace slicecomp;

namespace
{
  struct Result
  {
    bool pass = true;
    std::string detail;
  };

  std::string join(const std::vector<Slice>& levels)
  {
    std::string out;
    for (std::size_t i = 0; i < levels.size(); ++i)
      out += (i ? " -> " : "") + levels[i].to_string();
    return out;
  }

  // 1 ------------------------------------------------------------------------

  Result figures()
  {
    auto start = std::chrono::steady_clock::now();
    auto a = oracle::fig1();
    auto tree = join(reduced_split_tree_prefix(a, encode_word(a, {"p", "!p", "p"})));
    auto deco = join(decorated_trace(
        a, encode_word(a, {"p", "!p", "p", "!p", "p", "!p"})));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now()
                                                - start)
                      .count();
    const std::string want_tree = "{q0} -> {q1}|{q0} -> {q1}|{q0} -> {q1}|{q0}";
    const std::string want_deco =
        "{q0} -> {q1}0|{q0}1 -> {q1}*|{q0}1 -> {q1}0|{q0}1 -> {q1}*|{q0}1"
        " -> {q1}0|{q0}1 -> {q1}*|{q0}1";
    Result r;
    r.pass = tree == want_tree && deco == want_deco && secs < 1.0;
    std::ostringstream d;
    d << "split tree " << (tree == want_tree ? "match" : "MISMATCH [" + tree + "]")
      << ", decorated " << (deco == want_deco ? "match" : "MISMATCH [" + deco + "]")
      << ", " << secs * 1000 << " ms";
    r.detail = d.str();
    return r;
  }

  // 2 ------------------------------------------------------------------------

  std::vector<Automaton> soundness_corpus()
  {
    return testgen::nbw_corpus(200, 0x5eed0002, 4, 7);
  }

  Result soundness()
  {
    auto corpus = soundness_corpus();
    std::size_t checks = 0, violations = 0;
    std::string first;
    for (std::size_t i = 0; i < corpus.size(); ++i)
      for (const char* pre : {"", "A", "P", "PA"})
        for (const char* flags : {"", "D", "R", "M", "DR", "DM", "RM", "DRM"})
          {
            std::string spec = std::string("slice+") + pre + flags;
            if (spec == "slice+")
              spec = "slice";
            auto c = run_pipeline(corpus[i], Pipeline::parse(spec));
            auto v = check_complement(corpus[i], c, 3, 4);
            ++checks;
            if (!v.pass)
              {
                ++violations;
                if (first.empty())
                  first = "; first: automaton " + std::to_string(i) + " " + spec
                          + " at " + v.witness->to_string();
              }
          }
    return {violations == 0, std::to_string(checks) + " complement checks, "
                                 + std::to_string(violations) + " violations"
                                 + first};
  }

  // 3 ------------------------------------------------------------------------

  Result lemmas()
  {
    auto corpus = soundness_corpus();
    Rng rng(0x5eed0003);
    std::size_t l8 = 0, l9 = 0, l9_checked = 0;
    for (std::size_t k = 0; k < 10'000; ++k)
      {
        const auto& a = corpus[k % corpus.size()];
        auto s = testgen::random_decorated_slice(a, rng);
        auto sym = static_cast<Symbol>(uniform_below(rng, a.alphabet_size()));
        auto base = decorated_successor(a, s, sym, true);
        auto merged = decorated_successor(a, merge_ij(s, 1, 2), sym, true);
        if (!base || !merged || merge_slice(*merged) != merge_slice(*base))
          ++l8;
        if (base && !is_doomed(*base))
          {
            ++l9_checked;
            auto succ = complement_successors(a, merge_slice(s), sym,
                                              SliceConfig::improved());
            if (succ != std::vector<Slice>{merge_slice(*base)})
              ++l9;
          }
      }
    return {l8 == 0 && l9 == 0,
            "10000 slices; merge-commutation violations " + std::to_string(l8)
                + ", merged-successor violations " + std::to_string(l9) + " of "
                + std::to_string(l9_checked) + " non-doomed"};
  }

  // 4 ------------------------------------------------------------------------

  std::vector<Automaton> dpw_corpus()
  {
    return testgen::dpw_corpus(100, 0x5eed0004, 6, 4);
  }

  Result conversions()
  {
    std::size_t bad_equiv = 0, bad_compl = 0, bad_size = 0;
    std::size_t sum_t = 0, sum_i = 0;
    for (const auto& p : dpw_corpus())
      {
        auto c = complement_dpw(p);
        auto t = parity_to_buchi_typical(c);
        auto i = parity_to_buchi_improved(c);
        sum_t += t.num_states();
        sum_i += i.num_states();
        if (!check_equivalent(t, i, 3, 4).pass)
          ++bad_equiv;
        if (!check_complement(p, t, 3, 4).pass || !check_complement(p, i, 3, 4).pass)
          ++bad_compl;
        if (i.num_states() > t.num_states())
          ++bad_size;
      }
    std::ostringstream d;
    d << "100 DPWs; equivalence failures " << bad_equiv
      << ", complement failures " << bad_compl << ", improved larger "
      << bad_size << "; total states typical " << sum_t << " improved " << sum_i;
    return {bad_equiv + bad_compl + bad_size == 0, d.str()};
  }

  // 5 ------------------------------------------------------------------------

  Result maximize()
  {
    auto corpus = testgen::nbw_corpus(200, 0x5eed0005, 1, 6);
    std::size_t mismatch = 0, inequiv = 0, added = 0;
    for (const auto& a : corpus)
      {
        auto m = maximize_acceptance(a);
        if (m.accepting_states() != oracle::maximal_acceptance(a))
          ++mismatch;
        if (!oracle::lasso_equivalent(a, m, 3, 4))
          ++inequiv;
        added += m.accepting_states().size() - a.accepting_states().size();
      }
    return {mismatch + inequiv == 0,
            "200 NBWs; oracle mismatches " + std::to_string(mismatch)
                + ", language changes " + std::to_string(inequiv)
                + ", states added " + std::to_string(added)};
  }

  // 6 ------------------------------------------------------------------------

  Result simulation()
  {
    auto nbws = testgen::nbw_corpus(50, 0x5eed0006, 1, 6);
    Rng rng(0x5eed0106);
    std::vector<Automaton> inputs = nbws;
    for (int k = 0; k < 50; ++k)
      inputs.push_back(testgen::random_npw(1 + k % 6, 3, rng));

    std::size_t mismatch = 0, inequiv = 0, grown = 0, removed = 0;
    for (const auto& a : inputs)
      {
        for (auto kind : {SimulationKind::direct, SimulationKind::reverse})
          if (compute_simulation(a, kind) != oracle::naive_simulation(a, kind))
            ++mismatch;
        auto s = a.is_buchi() ? simplify_nbw(a) : simplify_npw(a);
        if (!oracle::lasso_equivalent(a, s, 3, 4))
          ++inequiv;
        if (s.num_states() > a.num_states()
            || s.num_transitions() > a.num_transitions())
          ++grown;
        removed += a.num_states() - s.num_states();
      }
    return {mismatch + inequiv + grown == 0,
            "50 NBW + 50 NPW; relation mismatches " + std::to_string(mismatch)
                + ", language changes " + std::to_string(inequiv)
                + ", growths " + std::to_string(grown) + ", states removed "
                + std::to_string(removed)};
  }

  // 7 ------------------------------------------------------------------------

  std::vector<BenchTask> grid_corpus()
  {
    std::vector<BenchTask> tasks;
    std::uint64_t index = 0;
    for (int ri = 0; ri < 11; ++ri)
      for (int fi = 1; fi <= 10; ++fi)
        for (int k = 0; k < 5; ++k, ++index)
          {
            GenSpec spec{8, 2, 0.5 + 0.25 * ri, 0.1 * fi,
                         derive_seed(0x5eed0007, index)};
            tasks.push_back({"g" + std::to_string(index), generate(spec)});
          }
    return tasks;
  }

  Result table4()
  {
    auto tasks = grid_corpus();
    auto pipelines = parse_pipelines("slice,slice+ADRM");
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    auto records = run_bench(tasks, pipelines, 10'000, 200'000, jobs);
    auto st = aggregate_stats(records);
    const auto& basic = st.pipelines[0];
    const auto& improved = st.pipelines[1];
    std::ostringstream d;
    d.setf(std::ios::fixed);
    d.precision(2);
    d << "550 tasks, " << st.effective_samples << " effective; S_R "
      << basic.mean_reachable << " vs " << improved.mean_reachable << " (ratio "
      << improved.mean_reachable / basic.mean_reachable << "), S_L "
      << basic.mean_live << " vs " << improved.mean_live << "; finished "
      << basic.finished << " vs " << improved.finished << "; T/M basic "
      << basic.timeouts << "/" << basic.budget_exceeded << ", improved "
      << improved.timeouts << "/" << improved.budget_exceeded;
    bool pass = st.effective_samples > 0
                && improved.mean_reachable < basic.mean_reachable
                && improved.finished >= basic.finished;
    return {pass, d.str()};
  }

  // 8 ------------------------------------------------------------------------

  BenchRecord rec(std::string task, std::string pipeline, Outcome o,
                  std::size_t sr = 0, std::size_t sl = 0)
  {
    BenchRecord r;
    r.task_id = std::move(task);
    r.pipeline = std::move(pipeline);
    r.outcome = o;
    if (o == Outcome::done)
      {
        r.reachable = sr;
        r.live = sl;
      }
    return r;
  }

  Result statistics()
  {
    using O = Outcome;
    int failures = 0;
    auto expect = [&](bool ok) { failures += ok ? 0 : 1; };

    // three-way tie on S_R, unique S_L winner
    auto a = aggregate_stats({rec("t", "x", O::done, 5, 2), rec("t", "y", O::done, 5, 1),
                              rec("t", "z", O::done, 5, 3)});
    for (const auto& p : a.pipelines)
      expect(p.wins_reachable == Share(1, 3));
    expect(a.pipelines[1].wins_live == Share(1));

    // filtering: t2 timed out for y, t3 out of budget for x
    auto b = aggregate_stats({rec("t1", "x", O::done, 10, 4), rec("t1", "y", O::done, 10, 4),
                              rec("t2", "x", O::done, 3, 1), rec("t2", "y", O::timeout),
                              rec("t3", "x", O::budget_exceeded), rec("t3", "y", O::done, 1, 1),
                              rec("t4", "x", O::done, 8, 2), rec("t4", "y", O::done, 6, 3)});
    expect(b.effective_samples == 2);
    expect(b.pipelines[0].mean_reachable == 9.0);
    expect(b.pipelines[1].mean_reachable == 8.0);
    expect(b.pipelines[0].wins_reachable == Share(1, 2));
    expect(b.pipelines[1].wins_reachable == Share(3, 2));
    expect(b.pipelines[0].wins_live == Share(3, 2));
    expect(b.pipelines[1].timeouts == 1 && b.pipelines[0].budget_exceeded == 1);

    // single pipeline, single task
    auto c = aggregate_stats({rec("t", "x", O::done, 7, 3)});
    expect(c.pipelines[0].wins_reachable == Share(1)
           && c.pipelines[0].mean_reachable == 7.0 && c.pipelines[0].mean_live == 3.0);

    // inconsistent task sets
    bool threw = false;
    try
      {
        aggregate_stats({rec("t1", "x", O::done, 1, 1), rec("t2", "y", O::done, 1, 1)});
      }
    catch (const std::invalid_argument&)
      {
        threw = true;
      }
    expect(threw);
    return {failures == 0, "hand-built record sets, " + std::to_string(failures)
                               + " failed expectations"};
  }

  // 9 ------------------------------------------------------------------------

  Result round_trip()
  {
    std::vector<Automaton> all = soundness_corpus();
    for (auto& t : grid_corpus())
      all.push_back(std::move(t.input));
    for (auto& p : dpw_corpus())
      all.push_back(std::move(p));

    std::size_t bad = 0;
    for (const auto& a : all)
      {
        auto text = emit_oaf(a);
        auto back = parse_oaf(text);
        if (!(back == a) || emit_oaf(back) != text || emit_oaf(a) != text)
          ++bad;
      }
    return {bad == 0, std::to_string(all.size()) + " automata, "
                          + std::to_string(bad) + " round-trip failures"};
  }
}

int main(int argc, char** argv)
{
  const std::vector<std::pair<const char*, std::function<Result()>>> criteria{
      {"figure traces", figures},
      {"complement soundness", soundness},
      {"merge properties", lemmas},
      {"parity conversions", conversions},
      {"acceptance maximization", maximize},
      {"simulation fixpoint", simulation},
      {"directional size comparison", table4},
      {"statistics engine", statistics},
      {"OAF round trip", round_trip},
  };

  std::set<int> selected;
  for (int i = 1; i < argc; ++i)
    selected.insert(std::stoi(argv[i]));

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i)
    {
      int id = static_cast<int>(i + 1);
      if (!selected.empty() && !selected.count(id))
        continue;
      auto start = std::chrono::steady_clock::now();
      Result r;
      try
        {
          r = criteria[i].second();
        }
      catch (const std::exception& e)
        {
          r = {false, std::string("exception: ") + e.what()};
        }
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now()
                                                  - start)
                        .count();
      std::printf("%s criterion %d (%s): %s [%.1f s]\n", r.pass ? "PASS" : "FAIL",
                  id, criteria[i].first, r.detail.c_str(), secs);
      std::fflush(stdout);
      failed += r.pass ? 0 : 1;
    }
  return failed == 0 ? 0 : 1;
}
