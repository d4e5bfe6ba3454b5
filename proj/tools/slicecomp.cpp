#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <iomanip>

#include "slicecomp/bench.hpp"
#include "slicecomp/lasso.hpp"
#include "slicecomp/oaf.hpp"
#include "slicecomp/parity.hpp"
#include "slicecomp/preopt.hpp"
#include "slicecomp/randgen.hpp"
#include "slicecomp/slice.hpp"

namespace fs = std::filesystem;
using namespace slicecomp;

namespace
{
  constexpr int exit_ok = 0;
  constexpr int exit_check_failed = 1;
  constexpr int exit_usage = 2;

  /// Input the user got wrong: bad files, bad flags, bad automata.
  struct UsageError : std::runtime_error
  {
    using std::runtime_error::runtime_error;
  };

  std::vector<std::string> split(const std::string& s, char sep)
  {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
      if (!cur.empty())
        out.push_back(cur);
    return out;
  }

  /// "P,A,D" or "PAD" -> "PAD"
  std::string heuristic_letters(const std::string& list)
  {
    std::string out;
    for (char c : list)
      if (c != ',' && c != ' ')
        out += c;
    return out;
  }

  Automaton load(const std::string& path)
  {
    try
      {
        return read_oaf_file(path);
      }
    catch (const OafError& e)
      {
        throw UsageError(path + ": " + e.what());
      }
    catch (const std::runtime_error& e)
      {
        throw UsageError(e.what());
      }
  }

  void save(const std::string& path, const Automaton& a)
  {
    if (path.empty() || path == "-")
      std::cout << emit_oaf(a);
    else
      write_oaf_file(path, a);
  }

  // generate ---------------------------------------------------------------

  struct GenerateArgs
  {
    std::size_t n = 15;
    std::size_t sigma = 2;
    double r = 2.0;
    double f = 0.5;
    std::size_t count = 1;
    std::uint64_t seed = 1;
    std::string out;
  };

  int run_generate(const GenerateArgs& g)
  {
    fs::create_directories(g.out);
    std::ofstream manifest(fs::path(g.out) / manifest_name);
    manifest << "# rng " << rng_name << "; id seed n sigma r f path\n";
    for (std::size_t i = 0; i < g.count; ++i)
      {
        GenSpec spec{g.n, g.sigma, g.r, g.f, derive_seed(g.seed, i)};
        Automaton a;
        try
          {
            a = generate(spec);
          }
        catch (const std::invalid_argument& e)
          {
            throw UsageError(e.what());
          }
        std::ostringstream id;
        id << "a" << std::setw(5) << std::setfill('0') << i;
        ManifestEntry e{id.str(), spec.seed, spec.n, spec.alphabet_size,
                        spec.transition_density, spec.acceptance_density,
                        id.str() + ".oaf"};
        write_oaf_file(fs::path(g.out) / e.path, a);
        manifest << format_manifest_line(e) << '\n';
      }
    std::cout << "wrote " << g.count << " automata to " << g.out << '\n';
    return exit_ok;
  }

  // complement / convert ---------------------------------------------------

  Pipeline make_pipeline(const std::string& construction,
                         const std::string& heuristics)
  {
    auto letters = heuristic_letters(heuristics);
    try
      {
        return Pipeline::parse(letters.empty() ? construction
                                               : construction + "+" + letters);
      }
    catch (const std::invalid_argument& e)
      {
        throw UsageError(e.what());
      }
  }

  int run_complement(const std::string& in, const std::string& construction,
                     const std::string& heuristics, const std::string& out)
  {
    auto a = load(in);
    auto p = make_pipeline(construction, heuristics);
    Automaton c;
    try
      {
        c = run_pipeline(a, p);
      }
    catch (const std::logic_error& e)
      {
        throw UsageError(e.what());
      }
    save(out, c);
    std::cerr << p.name() << ": " << c.num_states() << " states, "
              << live(c).size() << " live\n";
    return exit_ok;
  }

  int run_convert(const std::string& in, const std::string& heuristics,
                  bool no_complement, const std::string& out)
  {
    auto a = load(in);
    auto p = make_pipeline("parity", heuristics);
    Automaton c;
    try
      {
        if (no_complement)
          {
            if (!a.is_parity())
              throw UsageError("convert needs a parity automaton");
            auto src = p.simplify ? simplify_npw(a) : a;
            c = p.merge_classes ? parity_to_buchi_improved(src)
                                : parity_to_buchi_typical(src);
          }
        else
          c = run_pipeline(a, p);
      }
    catch (const std::logic_error& e)
      {
        throw UsageError(e.what());
      }
    save(out, c);
    std::cerr << c.num_states() << " states\n";
    return exit_ok;
  }

  // check ------------------------------------------------------------------

  int run_check(const std::string& a_path, const std::string& b_path,
                const std::string& mode, std::size_t max_u, std::size_t max_v)
  {
    auto a = load(a_path);
    auto b = load(b_path);
    Verdict v;
    try
      {
        v = mode == "complement" ? check_complement(a, b, max_u, max_v)
                                 : check_equivalent(a, b, max_u, max_v);
      }
    catch (const std::invalid_argument& e)
      {
        throw UsageError(e.what());
      }
    if (v.pass)
      {
        std::cout << "PASS " << mode << " (" << v.lassos_checked
                  << " lassos, |u|<=" << max_u << ", |v|<=" << max_v << ")\n";
        return exit_ok;
      }
    std::cout << "FAIL " << mode << " at " << v.witness->to_string()
              << " (a: " << (v.in_a ? "accepts" : "rejects")
              << ", b: " << (v.in_b ? "accepts" : "rejects") << ")\n";
    return exit_check_failed;
  }

  // trace ------------------------------------------------------------------

  std::string dot_escape(const std::string& s)
  {
    std::string out;
    for (char c : s)
      {
        if (c == '"' || c == '\\')
          out += '\\';
        out += c;
      }
    return out;
  }

  int run_trace(const std::string& in, const std::string& word_text,
                bool decorated, bool merge, std::size_t guess_at,
                const std::string& format)
  {
    auto a = load(in);
    if (!a.is_buchi())
      throw UsageError("trace needs a Büchi automaton");
    auto names = split(word_text, ',');
    std::vector<Symbol> word;
    try
      {
        word = encode_word(a, names);
      }
    catch (const std::invalid_argument& e)
      {
        throw UsageError(e.what());
      }
    auto levels = decorated ? decorated_trace(a, word, guess_at, merge)
                            : reduced_split_tree_prefix(a, word);

    if (format == "dot")
      {
        std::cout << "digraph trace {\n  rankdir=LR;\n  node [shape=box];\n";
        for (std::size_t i = 0; i < levels.size(); ++i)
          std::cout << "  l" << i << " [label=\""
                    << dot_escape(levels[i].to_string(&a)) << "\"];\n";
        for (std::size_t i = 0; i + 1 < levels.size(); ++i)
          std::cout << "  l" << i << " -> l" << i + 1 << " [label=\""
                    << dot_escape(names[i]) << "\"];\n";
        std::cout << "}\n";
      }
    else
      for (std::size_t i = 0; i < levels.size(); ++i)
        {
          std::cout << i << ' ';
          if (i > 0)
            std::cout << names[i - 1] << ' ';
          std::cout << levels[i].to_string(&a) << '\n';
        }
    if (levels.size() < word.size() + 1)
      std::cerr << "trace stopped after " << levels.size() - 1 << " symbols\n";
    return exit_ok;
  }

  // bench ------------------------------------------------------------------

  struct BenchArgs
  {
    std::string corpus;
    std::string pipelines = "slice,slice+ADRM";
    std::int64_t timeout_ms = 10'000;
    std::size_t state_budget = 1'000'000;
    unsigned jobs = 1;
    std::string csv;
  };

  int run_bench_cmd(const BenchArgs& b)
  {
    std::vector<Pipeline> pipelines;
    try
      {
        pipelines = parse_pipelines(b.pipelines);
      }
    catch (const std::invalid_argument& e)
      {
        throw UsageError(e.what());
      }
    std::vector<BenchTask> tasks;
    try
      {
        tasks = load_corpus(b.corpus);
      }
    catch (const std::runtime_error& e)
      {
        throw UsageError(e.what());
      }
    auto records = run_bench(tasks, pipelines, b.timeout_ms, b.state_budget,
                             std::max(1u, b.jobs));
    if (!b.csv.empty())
      {
        std::ofstream out(b.csv);
        if (!out)
          throw UsageError("cannot write " + b.csv);
        write_csv(out, records);
      }
    print_summary(std::cout, aggregate_stats(records));
    return exit_ok;
  }
}

int main(int argc, char** argv)
{
  CLI::App app{"Slice-based Büchi complementation toolkit"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "random NBWs (Tabakov-Vardi model)");
  generate_cmd->add_option("--n", gen.n, "states")->required()->check(CLI::PositiveNumber);
  generate_cmd->add_option("--sigma", gen.sigma, "alphabet size")->check(CLI::PositiveNumber);
  generate_cmd->add_option("--r", gen.r, "transition density")->required();
  generate_cmd->add_option("--f", gen.f, "acceptance density")->required();
  generate_cmd->add_option("--count", gen.count, "number of automata");
  generate_cmd->add_option("--seed", gen.seed, "base seed");
  generate_cmd->add_option("--out", gen.out, "output directory")->required();

  std::string in, out, construction = "slice", heuristics;
  auto* complement_cmd = app.add_subcommand("complement", "complement an NBW");
  complement_cmd->add_option("--in", in)->required();
  complement_cmd->add_option("--construction", construction)
      ->check(CLI::IsMember({"slice", "parity"}));
  complement_cmd->add_option("--heuristics", heuristics, "e.g. P,A,D,R,M");
  complement_cmd->add_option("--out", out, "output file (stdout if omitted)");

  bool no_complement = false;
  auto* convert_cmd = app.add_subcommand(
      "convert", "complement a DPW and convert it to an NBW");
  convert_cmd->add_option("--in", in)->required();
  convert_cmd->add_option("--heuristics", heuristics, "S, E");
  convert_cmd->add_flag("--no-complement", no_complement,
                        "convert the input itself");
  convert_cmd->add_option("--out", out, "output file (stdout if omitted)");

  std::string a_path, b_path, mode = "complement";
  std::size_t max_u = 3, max_v = 4;
  auto* check_cmd = app.add_subcommand("check", "bounded lasso check");
  check_cmd->add_option("--a", a_path)->required();
  check_cmd->add_option("--b", b_path)->required();
  check_cmd->add_option("--mode", mode)->check(CLI::IsMember({"complement", "equivalent"}));
  check_cmd->add_option("--max-u", max_u);
  check_cmd->add_option("--max-v", max_v)->check(CLI::PositiveNumber);

  std::string word, format = "text";
  bool decorated = false, merge = false;
  std::size_t guess_at = 0;
  auto* trace_cmd = app.add_subcommand("trace", "slices along a finite word");
  trace_cmd->add_option("--in", in)->required();
  trace_cmd->add_option("--word", word, "comma-separated symbols")->required();
  trace_cmd->add_flag("--decorated", decorated);
  trace_cmd->add_flag("--merge", merge, "merge adjacent 0/* nodes");
  trace_cmd->add_option("--guess-at", guess_at, "level at which decorations start");
  trace_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "dot"}));

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "run pipelines over a corpus");
  bench_cmd->add_option("--corpus", bench.corpus)->required();
  bench_cmd->add_option("--pipelines", bench.pipelines, "e.g. slice,slice+ADRM");
  bench_cmd->add_option("--timeout-ms", bench.timeout_ms);
  bench_cmd->add_option("--state-budget", bench.state_budget);
  bench_cmd->add_option("--jobs", bench.jobs);
  bench_cmd->add_option("--csv", bench.csv);

  try
    {
      app.parse(argc, argv);
    }
  catch (const CLI::ParseError& e)
    {
      int code = app.exit(e);
      return code == 0 ? exit_ok : exit_usage;
    }

  try
    {
      if (*generate_cmd)
        return run_generate(gen);
      if (*complement_cmd)
        return run_complement(in, construction, heuristics, out);
      if (*convert_cmd)
        return run_convert(in, heuristics, no_complement, out);
      if (*check_cmd)
        return run_check(a_path, b_path, mode, max_u, max_v);
      if (*trace_cmd)
        return run_trace(in, word, decorated, merge, guess_at, format);
      if (*bench_cmd)
        return run_bench_cmd(bench);
    }
  catch (const UsageError& e)
    {
      std::cerr << "error: " << e.what() << '\n';
      return exit_usage;
    }
  catch (const std::exception& e)
    {
      std::cerr << "error: " << e.what() << '\n';
      return exit_check_failed;
    }
  return exit_usage;
}
