#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "mostar/graph.hpp"
#include "mostar/mostar.hpp"

namespace mostar {

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

/// Rooted tree with a plane embedding: children lists run left to right.
struct RootedTreeShape {
  Vertex root = 0;
  std::vector<Vertex> parent;  // kNoVertex at the root
  std::vector<std::uint32_t> depth;
  std::vector<std::vector<Vertex>> children;
  std::uint32_t height = 0;

  std::size_t order() const noexcept { return parent.size(); }
  bool is_leaf(Vertex v) const noexcept { return children[v].empty(); }
};

/// Root with delta children, every other internal vertex with delta-1
/// children, all leaves at depth h_param. Ids run level by level, left to right.
RootedTreeShape build_th(std::uint32_t delta, std::uint32_t h_param);

enum class Role : std::uint8_t { kBlack, kGrey };

struct GreyGroup {
  std::vector<Vertex> leaves;  // delta consecutive leaves, left to right
  std::vector<Vertex> greys;   // the delta-1 grey vertices joined to all of them
};

/// The delta-regular completion of T_H by grey vertices, with its labels.
struct LabeledExtremalGraph {
  Graph graph;
  std::uint32_t delta = 0;
  std::uint32_t h_param = 0;
  RootedTreeShape tree;              // over the black ids 0..black_count-1
  std::vector<Role> role;            // per vertex of graph
  std::vector<std::uint32_t> black_height;  // per black vertex
  std::vector<Vertex> leaf_order;
  std::vector<GreyGroup> grey_groups;
  Orientation orientation;           // every edge toward the root

  std::size_t black_count() const noexcept { return tree.order(); }
  std::size_t grey_count() const noexcept { return graph.order() - tree.order(); }
};

std::uint64_t gh_black_count(std::uint32_t delta, std::uint32_t h_param);
std::uint64_t gh_grey_count(std::uint32_t delta, std::uint32_t h_param);
std::uint64_t gh_group_count(std::uint32_t delta, std::uint32_t h_param);

/// Emits the edges of G_H in canonical (sorted) order without building the
/// graph: tree edges by child id, then each leaf's grey edges.
void for_each_gh_edge(std::uint32_t delta, std::uint32_t h_param,
                      const std::function<void(const Edge&)>& emit);

LabeledExtremalGraph build_gh(std::uint32_t delta, std::uint32_t h_param);

/// v, its black descendants, and every grey vertex adjacent to one of v's
/// descendant leaves. Ascending.
std::vector<Vertex> ndown_set(const LabeledExtremalGraph& lg, Vertex v);

struct StructureCheck {
  std::string name;
  bool pass = true;
  std::string detail;
  std::vector<Vertex> offending;
};

struct GhStructureReport {
  std::vector<StructureCheck> checks;

  bool passed() const noexcept {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
  const StructureCheck* find(std::string_view name) const noexcept {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

/// Regularity, vertex counts, grey groups, the per-vertex and aggregate
/// N-down size bounds, and the toward-root orientation.
GhStructureReport verify_gh_structure(const LabeledExtremalGraph& lg);

/// Sum of bar_n(tail, head) over the canonical orientation.
std::uint64_t canonical_orientation_sum(const LabeledExtremalGraph& lg,
                                        std::span<const EdgeComparison> per_edge);

/// Vertex permutation reflecting the plane embedding left to right.
std::vector<Vertex> mirror_permutation(const LabeledExtremalGraph& lg);

/// 20*d^3 + 12*d^2 - 24*d + 48
std::int64_t theorem1_constant(std::uint32_t delta);
/// 10*d^3 + 6*d^2 - 12*d + 24
std::int64_t lemma2_constant(std::uint32_t delta);

/// (delta/2) n^2 - theorem1_constant * n * log_{delta-1} n. Negative at small n.
double theorem1_bound(std::uint32_t delta, std::uint64_t n);
/// lemma2_constant * n * log_{delta-1} n.
double lemma2_bound(std::uint32_t delta, std::uint64_t n);

/// Relative slack granted to floating right-hand sides in exact-vs-float checks.
inline constexpr double kBoundSlack = 1e-9;

/// lhs <= rhs up to kBoundSlack * |rhs|.
inline bool within_bound(double lhs, double rhs) noexcept {
  return lhs <= rhs + kBoundSlack * (rhs < 0 ? -rhs : rhs);
}

/// lhs >= rhs up to kBoundSlack * |rhs|.
inline bool at_least_bound(double lhs, double rhs) noexcept {
  return lhs >= rhs - kBoundSlack * (rhs < 0 ? -rhs : rhs);
}

}  // namespace mostar
