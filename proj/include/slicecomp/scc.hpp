#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace slicecomp
{
  /// Strongly connected components of a digraph given by successor lists.
  ///
  /// Components are numbered in reverse topological order (a component's
  /// successors all have smaller ids), as produced by Tarjan's algorithm.
  /// The traversal is iterative, so deep graphs do not exhaust the stack.
  struct SccDecomposition
  {
    std::vector<std::uint32_t> component;  ///< node -> component id
    std::vector<std::uint32_t> size;       ///< component id -> #nodes
    std::vector<bool> nontrivial;          ///< component contains a cycle

    std::size_t count() const { return size.size(); }
  };

  /// Nodes with \p enabled false are ignored (treated as absent); their
  /// component id is left as UINT32_MAX.  An empty \p enabled enables all.
  SccDecomposition strongly_connected_components(
      std::span<const std::vector<std::uint32_t>> graph,
      const std::vector<bool>& enabled = {});

  /// Nodes reachable from \p sources following \p graph edges.
  std::vector<bool> reachable_from(
      std::span<const std::vector<std::uint32_t>> graph,
      std::span<const std::uint32_t> sources);

  /// Reverses every edge.
  std::vector<std::vector<std::uint32_t>> transpose(
      std::span<const std::vector<std::uint32_t>> graph);
}
