#include "slicecomp/scc.hpp"

#include <algorithm>
#include <limits>

namespace slicecomp
{
  namespace
  {
    constexpr std::uint32_t unvisited = std::numeric_limits<std::uint32_t>::max();
  }

  SccDecomposition strongly_connected_components(
      std::span<const std::vector<std::uint32_t>> graph,
      const std::vector<bool>& enabled)
  {
    const std::size_t n = graph.size();
    auto is_enabled = [&](std::uint32_t v) {
      return enabled.empty() || enabled[v];
    };

    SccDecomposition res;
    res.component.assign(n, unvisited);

    std::vector<std::uint32_t> index(n, unvisited);
    std::vector<std::uint32_t> lowlink(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::uint32_t> stack;
    // (node, position of the next edge to explore)
    std::vector<std::pair<std::uint32_t, std::size_t>> call;
    std::uint32_t counter = 0;

    for (std::uint32_t root = 0; root < n; ++root)
      {
        if (!is_enabled(root) || index[root] != unvisited)
          continue;
        call.emplace_back(root, 0);
        index[root] = lowlink[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!call.empty())
          {
            auto& [v, pos] = call.back();
            const auto& succ = graph[v];
            if (pos < succ.size())
              {
                std::uint32_t w = succ[pos++];
                if (!is_enabled(w))
                  continue;
                if (index[w] == unvisited)
                  {
                    index[w] = lowlink[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.emplace_back(w, 0);
                  }
                else if (on_stack[w])
                  lowlink[v] = std::min(lowlink[v], index[w]);
                continue;
              }

            std::uint32_t done = v;
            call.pop_back();
            if (!call.empty())
              {
                std::uint32_t parent = call.back().first;
                lowlink[parent] = std::min(lowlink[parent], lowlink[done]);
              }
            if (lowlink[done] != index[done])
              continue;

            auto id = static_cast<std::uint32_t>(res.size.size());
            std::uint32_t members = 0;
            std::uint32_t w;
            do
              {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                res.component[w] = id;
                ++members;
              }
            while (w != done);
            res.size.push_back(members);
            bool cyclic = members > 1;
            if (!cyclic)
              for (std::uint32_t x : graph[done])
                if (x == done)
                  {
                    cyclic = true;
                    break;
                  }
            res.nontrivial.push_back(cyclic);
          }
      }
    return res;
  }

  std::vector<bool> reachable_from(
      std::span<const std::vector<std::uint32_t>> graph,
      std::span<const std::uint32_t> sources)
  {
    std::vector<bool> seen(graph.size(), false);
    std::vector<std::uint32_t> todo;
    for (auto s : sources)
      if (!seen[s])
        {
          seen[s] = true;
          todo.push_back(s);
        }
    while (!todo.empty())
      {
        auto v = todo.back();
        todo.pop_back();
        for (auto w : graph[v])
          if (!seen[w])
            {
              seen[w] = true;
              todo.push_back(w);
            }
      }
    return seen;
  }

  std::vector<std::vector<std::uint32_t>> transpose(
      std::span<const std::vector<std::uint32_t>> graph)
  {
    std::vector<std::vector<std::uint32_t>> rev(graph.size());
    for (std::uint32_t v = 0; v < graph.size(); ++v)
      for (auto w : graph[v])
        rev[w].push_back(v);
    return rev;
  }
}
