#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mostar/graph.hpp"

namespace mostar {

/// Distance comparison across one edge {u, v}, u < v.
struct EdgeComparison {
  Vertex u = 0;
  Vertex v = 0;
  std::uint32_t n_uv = 0;         // strictly closer to u
  std::uint32_t n_vu = 0;         // strictly closer to v
  std::uint32_t equidistant = 0;  // the rest, including vertices reaching neither endpoint

  std::uint32_t contribution() const noexcept { return n_uv > n_vu ? n_uv - n_vu : n_vu - n_uv; }

  /// Vertices at least as close to `near` as to `far`; near/far are this edge's endpoints.
  std::uint32_t at_least_as_close(Vertex near, Vertex far) const;

  friend bool operator==(const EdgeComparison&, const EdgeComparison&) = default;
};

struct Arc {
  Vertex tail;
  Vertex head;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// One direction per undirected edge.
struct Orientation {
  std::vector<Arc> arcs;
};

struct MostarResult {
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t total = 0;
  std::optional<std::vector<EdgeComparison>> per_edge;  // indexed like Graph::edges()
};

/// Exact rational p/q in lowest terms.
struct Rational {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;

  double value() const noexcept { return static_cast<double>(numerator) / static_cast<double>(denominator); }
  bool is_integer() const noexcept { return denominator == 1; }
  /// Exact x <= p/q.
  bool bounds(std::uint64_t x) const noexcept;

  friend bool operator==(const Rational&, const Rational&) = default;
};

EdgeComparison edge_comparison(const Graph& g, Vertex u, Vertex v);

/// Per-edge comparisons for every edge, by one BFS sweep per source vertex.
/// Sources are split across `workers` threads (0 = all available); each
/// thread owns private counters that are summed at the end, so the result
/// does not depend on the worker count.
std::vector<EdgeComparison> compare_all_edges(const Graph& g, unsigned workers = 0);

MostarResult mostar_index(const Graph& g, bool keep_per_edge = false, unsigned workers = 0);

/// Delta * n * (n - 2) / 2.
Rational trivial_upper_bound(std::uint64_t n, std::uint64_t delta);

/// Number of vertices whose distance to v is at most their distance to u.
/// Unreachable counts as equal to unreachable. Equals n - n_G(u, v).
std::uint64_t bar_n(const Graph& g, Vertex v, Vertex u);

/// Throws std::invalid_argument unless o holds each edge of g exactly once.
void check_orientation(const Graph& g, const Orientation& o);

/// n*m - 2 * sum over arcs (v, u) of bar_n(v, u). Never exceeds Mo(g).
std::int64_t orientation_lower_bound(const Graph& g, const Orientation& o, unsigned workers = 0);
std::int64_t orientation_lower_bound(const Graph& g, const Orientation& o,
                                     std::span<const EdgeComparison> per_edge);

struct OrientationBound {
  std::int64_t value = 0;
  Orientation orientation;
};

/// Orients each edge as the arc (tail, head) minimising bar_n(tail, head),
/// ties resolved toward the smaller head. This maximises the orientation
/// bound; its value n*m - 2*sum(min bar_n) equals Mo(g) minus the total
/// equidistant count, so it is exact iff no edge has an equidistant vertex
/// (e.g. connected bipartite graphs).
OrientationBound optimal_orientation_bound(const Graph& g, unsigned workers = 0);
OrientationBound optimal_orientation_bound(const Graph& g, std::span<const EdgeComparison> per_edge);

}  // namespace mostar
