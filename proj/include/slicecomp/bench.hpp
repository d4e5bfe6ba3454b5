#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "slicecomp/automaton.hpp"
#include "slicecomp/slice.hpp"

namespace slicecomp
{
  /// \brief A complementation pipeline as benchmarked.
  ///
  /// Written "slice", "slice+ADRM", "slice+PADRM", "parity", "parity+SE":
  /// the construction name, optionally followed by '+' and heuristic
  /// letters.  Slice pipelines take Büchi input and accept P (simulation
  /// preminimization), A (acceptance maximization), D, R and M.  Parity
  /// pipelines take a deterministic parity automaton, complement it, and
  /// convert to Büchi; they accept S (simplify the complement) and E
  /// (class-merging conversion).
  struct Pipeline
  {
    enum class Construction
    {
      slice,
      parity,
    };

    Construction construction = Construction::slice;
    bool preminimize = false;  // P
    bool maximize = false;     // A
    SliceConfig slice;
    bool simplify = false;     // S
    bool merge_classes = false;  // E

    static Pipeline parse(const std::string& spec);
    /// Canonical spelling, heuristics in the order PADRM / SE.
    std::string name() const;

    friend bool operator==(const Pipeline&, const Pipeline&) = default;
  };

  /// Comma-separated list of pipeline specs.
  std::vector<Pipeline> parse_pipelines(const std::string& specs);

  /// Runs the pipeline's complementation and returns the complement.
  Automaton run_pipeline(const Automaton& input, const Pipeline& p,
                         const Limits& limits = {});

  enum class Outcome
  {
    done,
    timeout,
    budget_exceeded,
  };

  const char* to_string(Outcome o);

  struct BenchRecord
  {
    std::string task_id;
    std::string pipeline;
    Outcome outcome = Outcome::done;
    double wall_millis = 0;
    // Present iff outcome == done.
    std::optional<std::size_t> reachable;
    std::optional<std::size_t> live;
    bool universal = false;  ///< complement has no live state
  };

  /// Complements \p input with \p p under a wall-clock timeout and a state
  /// budget.  Failures are outcomes, not exceptions.
  BenchRecord run_task(const std::string& task_id, const Automaton& input,
                       const Pipeline& p, std::int64_t timeout_millis,
                       std::size_t state_budget);

  struct BenchTask
  {
    std::string id;
    Automaton input;
  };

  /// Every pipeline on every task, on \p jobs worker threads.  Records come
  /// back ordered by task, then pipeline, whatever the scheduling.
  std::vector<BenchRecord> run_bench(const std::vector<BenchTask>& tasks,
                                     const std::vector<Pipeline>& pipelines,
                                     std::int64_t timeout_millis,
                                     std::size_t state_budget,
                                     unsigned jobs = 1);

  using Share = boost::rational<std::int64_t>;

  struct PipelineSummary
  {
    std::string pipeline;
    std::size_t timeouts = 0;          ///< T
    std::size_t budget_exceeded = 0;   ///< M
    std::size_t finished = 0;
    double mean_reachable = 0;         ///< over effective samples
    double mean_live = 0;
    Share wins_reachable{0};
    Share wins_live{0};
    double live_ratio = 0;             ///< mean_live / mean_reachable
  };

  struct StatsSummary
  {
    std::size_t tasks = 0;
    std::size_t effective_samples = 0;  ///< tasks finished by every pipeline
    std::size_t universal_samples = 0;  ///< effective samples with universal input
    std::vector<PipelineSummary> pipelines;  ///< first-appearance order
  };

  /// Aggregates records: a task is an effective sample iff every pipeline
  /// finished it; among effective samples the k pipelines tied for the
  /// smallest count each get 1/k of a win.  Throws std::invalid_argument
  /// unless every pipeline has exactly one record per task.
  StatsSummary aggregate_stats(const std::vector<BenchRecord>& records);

  void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);
  void print_summary(std::ostream& out, const StatsSummary& stats);

  /// One corpus entry: "id seed n |Σ| r f path".
  struct ManifestEntry
  {
    std::string id;
    std::uint64_t seed = 0;
    std::size_t n = 0;
    std::size_t alphabet_size = 0;
    double transition_density = 0;
    double acceptance_density = 0;
    std::string path;  ///< relative to the manifest's directory
  };

  inline constexpr const char* manifest_name = "manifest.txt";

  std::string format_manifest_line(const ManifestEntry& e);
  /// Ignores blank lines and '#' comments.
  std::vector<ManifestEntry> read_manifest(const std::filesystem::path& file);

  /// Tasks of a corpus directory: the manifest's entries if present, else
  /// every *.oaf file in name order (ids are file stems).
  std::vector<BenchTask> load_corpus(const std::filesystem::path& dir);
}
