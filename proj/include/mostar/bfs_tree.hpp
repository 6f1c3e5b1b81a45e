#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mostar/extremal.hpp"
#include "mostar/graph.hpp"
#include "mostar/mostar.hpp"

namespace mostar {

/// Breadth-first search tree of the root's component. Per-vertex arrays
/// have one slot per graph vertex; unspanned vertices carry kNoVertex
/// parent, kUnspanned depth and subtree size 0.
struct BfsTree {
  static constexpr std::uint32_t kUnspanned = UINT32_MAX;

  Vertex root = 0;
  std::vector<Vertex> span;  // in dequeue order, root first
  std::vector<Vertex> parent;
  std::vector<std::uint32_t> depth;
  std::vector<std::uint32_t> subtree_size;

  std::size_t order() const noexcept { return span.size(); }
  bool spans(Vertex v) const noexcept { return depth[v] != kUnspanned; }
};

/// Vertices are dequeued in BFS order and neighbors scanned ascending;
/// each vertex's parent is its first discoverer.
BfsTree bfs_tree(const Graph& g, Vertex r);

/// Sum over spanned u of min{depth(u), subtree_size(u)}.
std::uint64_t min_depth_subtree_sum(const BfsTree& t);

/// Sum of subtree sizes.
std::uint64_t subtree_sum(const BfsTree& t);
std::uint64_t subtree_sum(const RootedTreeShape& t);

/// Sum of depth + 1 over the tree's vertices; equals subtree_sum by double counting.
std::uint64_t depth_plus_one_sum(const BfsTree& t);
std::uint64_t depth_plus_one_sum(const RootedTreeShape& t);

/// ((d-2)/(d-1)^2) * n * (log_{d-1}((d-2) n) - 1).
double lemma3_bound(std::uint32_t delta, std::uint64_t n);

/// The three BFS-tree inequalities for tree edge (child, parent).
struct TreeEdgeCheck {
  Vertex child = 0;
  Vertex parent = 0;
  std::uint32_t depth = 0;          // d(child)
  std::uint32_t subtree = 0;        // n-down(child)
  std::uint32_t closer_parent = 0;  // n_G(parent, child)
  std::uint32_t closer_child = 0;   // n_G(child, parent)
  std::int64_t bound = 0;           // n - 2 min{d, n-down}
  std::uint32_t actual = 0;         // |n_G(child,parent) - n_G(parent,child)|

  bool depth_ok() const noexcept { return closer_parent >= depth; }
  bool subtree_ok() const noexcept { return closer_child >= subtree; }
  bool bound_ok() const noexcept { return static_cast<std::int64_t>(actual) <= bound; }
  bool pass() const noexcept { return depth_ok() && subtree_ok() && bound_ok(); }
};

/// One entry per tree edge, in span order of the child.
std::vector<TreeEdgeCheck> edge_upper_bound_check(const Graph& g, const BfsTree& t,
                                                  std::span<const EdgeComparison> per_edge);
std::vector<TreeEdgeCheck> edge_upper_bound_check(const Graph& g, const BfsTree& t,
                                                  unsigned workers = 0);

struct CertificateReport {
  std::optional<Vertex> root;  // empty only for the empty graph
  std::int64_t certificate_value = 0;
  std::uint64_t mostar_value = 0;
  std::vector<TreeEdgeCheck> per_edge_checks;

  bool sound() const noexcept {
    return certificate_value >= 0 && static_cast<std::uint64_t>(certificate_value) >= mostar_value;
  }
  bool tight() const noexcept {
    return certificate_value >= 0 && static_cast<std::uint64_t>(certificate_value) == mostar_value;
  }
  bool all_edges_pass() const noexcept;
  bool passed() const noexcept { return sound() && all_edges_pass(); }
  std::vector<TreeEdgeCheck> failed_edges() const;
};

/// m*n - 2 * min_depth_subtree_sum(bfs_tree(g, r)), checked against Mo(g).
CertificateReport mostar_upper_certificate(const Graph& g, Vertex r, unsigned workers = 0);
CertificateReport mostar_upper_certificate(const Graph& g, Vertex r,
                                           std::span<const EdgeComparison> per_edge);

/// Report for the graph with no vertices.
CertificateReport empty_certificate();

struct CertificateSweep {
  CertificateReport best;  // minimum certificate, ties to the smaller root
  std::size_t roots_examined = 0;
  bool all_passed = true;
};

/// Certificates for each root in `roots`, spread across workers.
CertificateSweep sweep_certificates(const Graph& g, std::span<const Vertex> roots,
                                    std::span<const EdgeComparison> per_edge, unsigned workers = 0);

struct Theorem2Evaluation {
  double value = 0;
  bool guarded = false;  // log_{d-1} n <= 1: the subtracted term is undefined and dropped
};

/// (d/2) n^2 - 2 ((d-2)/(d-1)^2) n log_{d-1}(log_{d-1} n) with the o(1) term
/// dropped. A leading-order evaluation, not a certified finite-n bound.
Theorem2Evaluation theorem2_bound(std::uint32_t delta, std::uint64_t n);

}  // namespace mostar
