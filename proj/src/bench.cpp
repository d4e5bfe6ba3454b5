#include "slicecomp/bench.hpp"

#include <algorithm>
#include <cctype>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "slicecomp/oaf.hpp"
#include "slicecomp/parity.hpp"
#include "slicecomp/preopt.hpp"

namespace slicecomp
{
  Pipeline Pipeline::parse(const std::string& spec)
  {
    auto plus = spec.find('+');
    std::string head = spec.substr(0, plus);
    std::string flags = plus == std::string::npos ? "" : spec.substr(plus + 1);
    for (auto& c : head)
      c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));

    Pipeline p;
    if (head == "slice")
      {
        p.construction = Construction::slice;
        std::string slice_flags;
        for (char c : flags)
          switch (std::toupper(static_cast<unsigned char>(c)))
            {
            case 'P':
              p.preminimize = true;
              break;
            case 'A':
              p.maximize = true;
              break;
            default:
              slice_flags += c;
            }
        p.slice = SliceConfig::parse(slice_flags);
      }
    else if (head == "parity")
      {
        p.construction = Construction::parity;
        for (char c : flags)
          switch (std::toupper(static_cast<unsigned char>(c)))
            {
            case 'S':
              p.simplify = true;
              break;
            case 'E':
              p.merge_classes = true;
              break;
            default:
              throw std::invalid_argument(
                  std::string("unknown parity heuristic '") + c + "'");
            }
      }
    else
      throw std::invalid_argument("unknown construction '" + head + "'");
    return p;
  }

  std::string Pipeline::name() const
  {
    std::string flags;
    if (construction == Construction::slice)
      {
        if (preminimize)
          flags += 'P';
        if (maximize)
          flags += 'A';
        flags += slice.to_string();
        return flags.empty() ? "slice" : "slice+" + flags;
      }
    if (simplify)
      flags += 'S';
    if (merge_classes)
      flags += 'E';
    return flags.empty() ? "parity" : "parity+" + flags;
  }

  std::vector<Pipeline> parse_pipelines(const std::string& specs)
  {
    std::vector<Pipeline> out;
    std::stringstream in(specs);
    std::string item;
    while (std::getline(in, item, ','))
      {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (!item.empty())
          out.push_back(Pipeline::parse(item));
      }
    if (out.empty())
      throw std::invalid_argument("no pipeline given");
    return out;
  }

  Automaton run_pipeline(const Automaton& input, const Pipeline& p,
                         const Limits& limits)
  {
    limits.check_deadline();
    if (p.construction == Pipeline::Construction::slice)
      {
        if (!input.is_buchi())
          throw std::invalid_argument(p.name() + " needs a Büchi input");
        Automaton a = input;
        if (p.preminimize)
          a = simplify_nbw(a);
        if (p.maximize)
          a = maximize_acceptance(a);
        limits.check_deadline();
        return complement_slice(a, p.slice, limits);
      }

    if (!input.is_parity() || !input.is_deterministic())
      throw std::invalid_argument(p.name()
                                  + " needs a deterministic parity input");
    Automaton c = complement_dpw(input);
    if (p.simplify)
      c = simplify_npw(c);
    limits.check_deadline();
    return p.merge_classes ? parity_to_buchi_improved(c, limits)
                           : parity_to_buchi_typical(c, limits);
  }

  const char* to_string(Outcome o)
  {
    switch (o)
      {
      case Outcome::done:
        return "done";
      case Outcome::timeout:
        return "timeout";
      case Outcome::budget_exceeded:
        return "memout";
      }
    return "?";
  }

  BenchRecord run_task(const std::string& task_id, const Automaton& input,
                       const Pipeline& p, std::int64_t timeout_millis,
                       std::size_t state_budget)
  {
    using Clock = Limits::Clock;
    BenchRecord rec;
    rec.task_id = task_id;
    rec.pipeline = p.name();

    const auto start = Clock::now();
    Limits limits;
    limits.max_states = state_budget;
    limits.deadline = start + std::chrono::milliseconds(std::max<std::int64_t>(timeout_millis, 0));
    try
      {
        Automaton c = run_pipeline(input, p, limits);
        limits.check_deadline();
        auto stats = state_stats(c);
        rec.outcome = Outcome::done;
        rec.reachable = stats.reachable_count;
        rec.live = stats.live_count;
        rec.universal = stats.live_count == 0;
      }
    catch (const DeadlineExpired&)
      {
        rec.outcome = Outcome::timeout;
      }
    catch (const BudgetExceeded&)
      {
        rec.outcome = Outcome::budget_exceeded;
      }
    rec.wall_millis =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return rec;
  }

  std::vector<BenchRecord> run_bench(const std::vector<BenchTask>& tasks,
                                     const std::vector<Pipeline>& pipelines,
                                     std::int64_t timeout_millis,
                                     std::size_t state_budget, unsigned jobs)
  {
    const std::size_t total = tasks.size() * pipelines.size();
    std::vector<BenchRecord> out(total);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;

    auto worker = [&] {
      for (;;)
        {
          std::size_t i = next.fetch_add(1);
          if (i >= total)
            return;
          const auto& task = tasks[i / pipelines.size()];
          try
            {
              out[i] = run_task(task.id, task.input, pipelines[i % pipelines.size()],
                                timeout_millis, state_budget);
            }
          catch (...)
            {
              std::lock_guard lock(failure_lock);
              if (!failure)
                failure = std::current_exception();
              next = total;
            }
        }
    };

    jobs = std::max(1u, jobs);
    if (jobs == 1)
      worker();
    else
      {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j)
          pool.emplace_back(worker);
      }
    if (failure)
      std::rethrow_exception(failure);
    return out;
  }

  StatsSummary aggregate_stats(const std::vector<BenchRecord>& records)
  {
    std::vector<std::string> pipelines;
    std::vector<std::string> tasks;
    std::map<std::string, std::map<std::string, const BenchRecord*>> by_task;
    for (const auto& r : records)
      {
        if (std::find(pipelines.begin(), pipelines.end(), r.pipeline) == pipelines.end())
          pipelines.push_back(r.pipeline);
        if (!by_task.count(r.task_id))
          tasks.push_back(r.task_id);
        auto& slot = by_task[r.task_id][r.pipeline];
        if (slot)
          throw std::invalid_argument("duplicate record for task " + r.task_id
                                      + " / " + r.pipeline);
        slot = &r;
        const bool done = r.outcome == Outcome::done;
        if (done ? !(r.reachable && r.live) : (r.reachable || r.live))
          throw std::invalid_argument("counts must be present iff done");
      }
    for (const auto& t : tasks)
      if (by_task[t].size() != pipelines.size())
        throw std::invalid_argument("task " + t
                                    + " was not attempted by every pipeline");

    StatsSummary st;
    st.tasks = tasks.size();
    std::vector<PipelineSummary> sums(pipelines.size());
    std::vector<double> sum_r(pipelines.size(), 0), sum_l(pipelines.size(), 0);
    for (std::size_t i = 0; i < pipelines.size(); ++i)
      sums[i].pipeline = pipelines[i];

    for (const auto& t : tasks)
      {
        const auto& row = by_task[t];
        bool effective = true;
        for (std::size_t i = 0; i < pipelines.size(); ++i)
          {
            const auto* r = row.at(pipelines[i]);
            switch (r->outcome)
              {
              case Outcome::done:
                ++sums[i].finished;
                break;
              case Outcome::timeout:
                ++sums[i].timeouts;
                effective = false;
                break;
              case Outcome::budget_exceeded:
                ++sums[i].budget_exceeded;
                effective = false;
                break;
              }
          }
        if (!effective)
          continue;

        ++st.effective_samples;
        if (row.begin()->second->universal)
          ++st.universal_samples;

        auto award = [&](auto metric, Share PipelineSummary::*wins) {
          std::size_t best = SIZE_MAX;
          for (const auto& name : pipelines)
            best = std::min(best, metric(*row.at(name)));
          std::int64_t k = 0;
          for (const auto& name : pipelines)
            k += metric(*row.at(name)) == best;
          for (std::size_t i = 0; i < pipelines.size(); ++i)
            if (metric(*row.at(pipelines[i])) == best)
              sums[i].*wins += Share(1, k);
        };
        award([](const BenchRecord& r) { return *r.reachable; },
              &PipelineSummary::wins_reachable);
        award([](const BenchRecord& r) { return *r.live; },
              &PipelineSummary::wins_live);
        for (std::size_t i = 0; i < pipelines.size(); ++i)
          {
            sum_r[i] += static_cast<double>(*row.at(pipelines[i])->reachable);
            sum_l[i] += static_cast<double>(*row.at(pipelines[i])->live);
          }
      }

    for (std::size_t i = 0; i < pipelines.size(); ++i)
      if (st.effective_samples > 0)
        {
          sums[i].mean_reachable = sum_r[i] / static_cast<double>(st.effective_samples);
          sums[i].mean_live = sum_l[i] / static_cast<double>(st.effective_samples);
          sums[i].live_ratio = sums[i].mean_reachable > 0
                                   ? sums[i].mean_live / sums[i].mean_reachable
                                   : 0;
        }
    st.pipelines = std::move(sums);
    return st;
  }

  void write_csv(std::ostream& out, const std::vector<BenchRecord>& records)
  {
    out << "taskId,pipeline,outcome,wallMillis,sR,sL,universal\n";
    for (const auto& r : records)
      {
        out << r.task_id << ',' << r.pipeline << ',' << to_string(r.outcome)
            << ',' << std::fixed << std::setprecision(3) << r.wall_millis
            << std::defaultfloat << ',';
        if (r.reachable)
          out << *r.reachable;
        out << ',';
        if (r.live)
          out << *r.live;
        out << ',' << (r.outcome == Outcome::done ? (r.universal ? "1" : "0") : "")
            << '\n';
      }
  }

  void print_summary(std::ostream& out, const StatsSummary& st)
  {
    out << "tasks " << st.tasks << ", effective samples " << st.effective_samples
        << ", universal " << st.universal_samples << '\n';
    out << std::left << std::setw(16) << "pipeline" << std::right
        << std::setw(6) << "T" << std::setw(6) << "M" << std::setw(12) << "S_R"
        << std::setw(10) << "win_R" << std::setw(10) << "S_L"
        << std::setw(10) << "win_L" << std::setw(8) << "S_L/S_R" << '\n';
    for (const auto& p : st.pipelines)
      {
        auto share = [](Share s) {
          return boost::rational_cast<double>(s);
        };
        out << std::left << std::setw(16) << p.pipeline << std::right
            << std::setw(6) << p.timeouts << std::setw(6) << p.budget_exceeded
            << std::fixed << std::setprecision(2)
            << std::setw(12) << p.mean_reachable << std::setw(10)
            << share(p.wins_reachable) << std::setw(10) << p.mean_live
            << std::setw(10) << share(p.wins_live) << std::setprecision(3)
            << std::setw(8) << p.live_ratio << std::defaultfloat << '\n';
      }
  }

  std::string format_manifest_line(const ManifestEntry& e)
  {
    std::ostringstream out;
    out << e.id << ' ' << e.seed << ' ' << e.n << ' ' << e.alphabet_size << ' '
        << e.transition_density << ' ' << e.acceptance_density << ' ' << e.path;
    return out.str();
  }

  std::vector<ManifestEntry> read_manifest(const std::filesystem::path& file)
  {
    std::ifstream in(file);
    if (!in)
      throw std::runtime_error("cannot open " + file.string());
    std::vector<ManifestEntry> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line))
      {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
          line.erase(hash);
        std::istringstream fields(line);
        ManifestEntry e;
        if (!(fields >> e.id))
          continue;
        if (!(fields >> e.seed >> e.n >> e.alphabet_size >> e.transition_density
              >> e.acceptance_density >> e.path))
          throw std::runtime_error(file.string() + ":" + std::to_string(lineno)
                                   + ": malformed manifest line");
        out.push_back(std::move(e));
      }
    return out;
  }

  std::vector<BenchTask> load_corpus(const std::filesystem::path& dir)
  {
    std::vector<BenchTask> tasks;
    auto manifest = dir / manifest_name;
    if (std::filesystem::exists(manifest))
      {
        for (const auto& e : read_manifest(manifest))
          tasks.push_back({e.id, read_oaf_file(dir / e.path)});
        return tasks;
      }
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
      if (entry.is_regular_file() && entry.path().extension() == ".oaf")
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files)
      tasks.push_back({f.stem().string(), read_oaf_file(f)});
    return tasks;
  }
}
