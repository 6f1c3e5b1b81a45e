#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "mostar/graph.hpp"

// Ground truth for small instances. Nothing here shares traversal or
// accumulation code with the rest of the library: distances come from a
// bitmask frontier BFS over a dense distance matrix.
namespace mostar::oracle {

inline constexpr std::size_t kReferenceMaxOrder = 64;
inline constexpr std::size_t kEnumerationMaxOrder = 10;

/// Naive Mostar index on a full distance matrix. n <= 64.
std::uint64_t mostar_reference(const Graph& g);

/// Mostar index of the graph on n <= 64 vertices with adjacency bitmasks.
std::uint64_t mostar_from_masks(std::span<const std::uint64_t> adjacency);

/// All-pairs hop distances; -1 for unreachable. n <= 64.
std::vector<std::vector<int>> distance_matrix(const Graph& g);

/// Upper-triangle pairs (0,1), (0,2), ..., (n-2,n-1): the bit positions of
/// the enumeration.
std::vector<Edge> upper_triangle(std::size_t n);

/// Visits every labeled simple graph on {0..n-1} with maximum degree at most
/// delta, ordered lexicographically by the 0/1 vector over upper_triangle(n)
/// (so the empty graph first). With connected_only, disconnected graphs are
/// skipped. The span lists the graph's edges in upper-triangle order.
/// Returns the number of graphs visited.
std::uint64_t for_each_graph(std::size_t n, std::size_t delta, bool connected_only,
                             const std::function<void(std::span<const Edge>)>& visit);

/// Same stream, materialised as Graph values.
std::uint64_t enumerate_graphs(std::size_t n, std::size_t delta, bool connected_only,
                               const std::function<void(const Graph&)>& visit);

struct SearchResult {
  std::size_t n = 0;
  std::size_t delta = 0;
  bool connected_only = false;
  std::uint64_t max_mostar = 0;
  Graph witness;  // first maximiser in enumeration order
  std::uint64_t graphs_examined = 0;
};

/// Exhaustive maximum of Mo over the enumerated class. The prefix space is
/// split across workers; the merge keeps the earliest maximiser, so the
/// result does not depend on the worker count.
SearchResult max_mostar(std::size_t n, std::size_t delta, bool connected_only, unsigned workers = 0);

}  // namespace mostar::oracle
