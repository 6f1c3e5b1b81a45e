#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace mostar {

using Vertex = std::uint32_t;
using EdgeIndex = std::uint32_t;

/// Largest supported vertex count. Keeps every per-edge counter and id in 32 bits.
inline constexpr std::uint64_t kMaxVertices = std::uint64_t{1} << 31;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Raised by parse_graph with the 1-based line of the offending input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Immutable simple undirected graph in compressed adjacency form.
///
/// Neighbor lists are strictly ascending and the edge list holds each
/// unordered pair once as (u, v) with u < v, sorted lexicographically.
/// Every traversal in this library scans neighbors in that order, which
/// makes trees and orientations derived from a Graph reproducible.
class Graph {
 public:
  Graph() = default;

  /// Builds the canonical graph on vertices 0..n-1. Edge endpoints may be
  /// given in either order. Throws std::invalid_argument on self-loops,
  /// duplicates, or out-of-range ids.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const noexcept;

  std::span<const Edge> edges() const noexcept { return edges_; }

  bool has_edge(Vertex u, Vertex v) const noexcept;
  /// Position of {u, v} in edges(), if present.
  std::optional<EdgeIndex> edge_index(Vertex u, Vertex v) const noexcept;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
  std::vector<Edge> edges_;
};

/// Parses the edge-list text format:
///   optional first line "p <n> <m>", then "<u> <v>" per line,
///   "#" comments and blank lines ignored.
Graph parse_graph(std::string_view text);

/// Canonical edge-list text with header. parse_graph(to_edge_list(g)) == g.
std::string to_edge_list(const Graph& g);

/// Hop distances from one source, stored in the narrowest unsigned width
/// that can represent every distance of the graph plus the UNREACHABLE
/// sentinel (the maximum value of that width).
class DistanceRow {
 public:
  DistanceRow(Vertex source, std::size_t n);

  Vertex source() const noexcept { return source_; }
  std::size_t size() const noexcept;

  /// Distance to v, or std::nullopt when v lies outside the source's component.
  std::optional<std::uint32_t> at(Vertex v) const noexcept;
  bool reachable(Vertex v) const noexcept { return at(v).has_value(); }

  /// Width in bytes of the stored distances (1, 2 or 4).
  std::size_t width() const noexcept;

 private:
  friend DistanceRow bfs_distances(const Graph& g, Vertex s);

  Vertex source_;
  std::variant<std::vector<std::uint8_t>, std::vector<std::uint16_t>, std::vector<std::uint32_t>>
      dist_;
};

DistanceRow bfs_distances(const Graph& g, Vertex s);

struct Component {
  std::vector<Vertex> vertices;  // ascending
  std::size_t order() const noexcept { return vertices.size(); }
};

/// A maximum-cardinality component; ties go to the one holding the smallest id.
Component largest_component(const Graph& g);

/// Component label per vertex, labels numbered by smallest contained vertex.
std::vector<Vertex> component_labels(const Graph& g);
bool is_connected(const Graph& g);

struct DegreeReport {
  std::size_t delta = 0;
  bool passes = true;
  bool regular = false;
  std::vector<Vertex> offending;  // vertices of degree > delta
};

DegreeReport validate_degree(const Graph& g, std::size_t delta);

}  // namespace mostar
