#include "mostar/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mostar/detail/checked.hpp"

namespace mostar {

namespace {

void check_parameters(std::uint32_t delta, std::uint32_t h_param) {
  if (delta < 3) throw std::invalid_argument("delta must be at least 3");
  if (h_param < 2) throw std::invalid_argument("height must be at least 2");
}

// Vertices of T_H at each depth 0..h_param; throws once the total G_H order
// leaves the supported width.
std::vector<std::uint64_t> level_sizes(std::uint32_t delta, std::uint32_t h_param) {
  check_parameters(delta, h_param);
  std::vector<std::uint64_t> sizes{1};
  std::uint64_t total = 1;
  std::uint64_t level = delta;
  for (std::uint32_t i = 1; i <= h_param; ++i) {
    sizes.push_back(level);
    total += level;
    if (total >= kMaxVertices) throw std::overflow_error("G_H order exceeds supported width");
    level = detail::checked_mul(level, delta - 1);
  }
  // Grey count (delta-1)^H is below the last level size.
  if (total + sizes.back() >= kMaxVertices) {
    throw std::overflow_error("G_H order exceeds supported width");
  }
  return sizes;
}

}  // namespace

std::uint64_t gh_black_count(std::uint32_t delta, std::uint32_t h_param) {
  std::uint64_t total = 0;
  for (auto s : level_sizes(delta, h_param)) total += s;
  return total;
}

std::uint64_t gh_grey_count(std::uint32_t delta, std::uint32_t h_param) {
  return gh_group_count(delta, h_param) * (delta - 1);
}

std::uint64_t gh_group_count(std::uint32_t delta, std::uint32_t h_param) {
  return level_sizes(delta, h_param).back() / delta;
}

RootedTreeShape build_th(std::uint32_t delta, std::uint32_t h_param) {
  const auto sizes = level_sizes(delta, h_param);
  std::size_t n = 0;
  for (auto s : sizes) n += s;

  RootedTreeShape t;
  t.root = 0;
  t.height = h_param;
  t.parent.assign(n, kNoVertex);
  t.depth.assign(n, 0);
  t.children.assign(n, {});
  Vertex next = 1;
  for (Vertex v = 0; v < n; ++v) {
    if (t.depth[v] == h_param) continue;
    const std::uint32_t k = v == t.root ? delta : delta - 1;
    t.children[v].reserve(k);
    for (std::uint32_t c = 0; c < k; ++c) {
      t.parent[next] = v;
      t.depth[next] = t.depth[v] + 1;
      t.children[v].push_back(next);
      ++next;
    }
  }
  return t;
}

void for_each_gh_edge(std::uint32_t delta, std::uint32_t h_param,
                      const std::function<void(const Edge&)>& emit) {
  const auto sizes = level_sizes(delta, h_param);
  std::uint64_t black = 0;
  for (auto s : sizes) black += s;
  const std::uint64_t leaves = sizes.back();
  const std::uint64_t first_leaf = black - leaves;

  // Parent of id c >= 1 follows from level-order numbering.
  Vertex child = 1;
  for (std::uint32_t c = 0; c < delta; ++c, ++child) emit(Edge{0, child});
  for (Vertex parent = 1; parent < first_leaf; ++parent) {
    for (std::uint32_t c = 0; c + 1 < delta; ++c, ++child) emit(Edge{parent, child});
  }
  for (std::uint64_t i = 0; i < leaves; ++i) {
    const std::uint64_t group = i / delta;
    const auto leaf = static_cast<Vertex>(first_leaf + i);
    for (std::uint32_t j = 0; j + 1 < delta; ++j) {
      emit(Edge{leaf, static_cast<Vertex>(black + group * (delta - 1) + j)});
    }
  }
}

LabeledExtremalGraph build_gh(std::uint32_t delta, std::uint32_t h_param) {
  LabeledExtremalGraph lg;
  lg.delta = delta;
  lg.h_param = h_param;
  lg.tree = build_th(delta, h_param);
  const std::size_t black = lg.tree.order();
  const std::size_t grey = gh_grey_count(delta, h_param);
  const std::size_t n = black + grey;

  std::vector<Edge> edges;
  edges.reserve(n * delta / 2);
  for_each_gh_edge(delta, h_param, [&](const Edge& e) { edges.push_back(e); });
  lg.graph = Graph::from_edges(n, edges);

  lg.role.assign(n, Role::kGrey);
  std::fill(lg.role.begin(), lg.role.begin() + static_cast<std::ptrdiff_t>(black), Role::kBlack);
  lg.black_height.resize(black);
  for (Vertex v = 0; v < black; ++v) {
    lg.black_height[v] = h_param - lg.tree.depth[v];
    if (lg.tree.depth[v] == h_param) lg.leaf_order.push_back(v);
  }

  const std::size_t groups = lg.leaf_order.size() / delta;
  lg.grey_groups.resize(groups);
  for (std::size_t i = 0; i < groups; ++i) {
    auto& g = lg.grey_groups[i];
    g.leaves.assign(lg.leaf_order.begin() + static_cast<std::ptrdiff_t>(i * delta),
                    lg.leaf_order.begin() + static_cast<std::ptrdiff_t>((i + 1) * delta));
    for (std::uint32_t j = 0; j + 1 < delta; ++j) {
      g.greys.push_back(static_cast<Vertex>(black + i * (delta - 1) + j));
    }
  }

  lg.orientation.arcs.reserve(lg.graph.size());
  for (const Edge& e : lg.graph.edges()) {
    // Tree edges are (parent, child) and grey edges (leaf, grey); both point at e.u.
    lg.orientation.arcs.push_back(Arc{e.v, e.u});
  }
  return lg;
}

std::vector<Vertex> ndown_set(const LabeledExtremalGraph& lg, Vertex v) {
  if (v >= lg.black_count() || lg.role[v] != Role::kBlack) {
    throw std::invalid_argument("vertex " + std::to_string(v) + " is not black");
  }
  if (v == lg.tree.root) throw std::invalid_argument("N-down is undefined at the root");

  std::vector<Vertex> out;
  std::vector<Vertex> stack{v};
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    out.push_back(x);
    if (lg.tree.is_leaf(x)) {
      for (const Vertex y : lg.graph.neighbors(x)) {
        if (lg.role[y] == Role::kGrey) out.push_back(y);
      }
    }
    for (const Vertex c : lg.tree.children[x]) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) r = detail::checked_mul(r, base);
  return r;
}

StructureCheck check_regular(const LabeledExtremalGraph& lg) {
  StructureCheck c{"regularity", true, {}, {}};
  for (Vertex v = 0; v < lg.graph.order(); ++v) {
    if (lg.graph.degree(v) != lg.delta) c.offending.push_back(v);
  }
  c.pass = c.offending.empty();
  c.detail = c.pass ? "every degree equals " + std::to_string(lg.delta)
                    : std::to_string(c.offending.size()) + " vertices with degree != " +
                          std::to_string(lg.delta);
  return c;
}

StructureCheck check_count(std::string name, std::uint64_t actual, std::uint64_t expected) {
  StructureCheck c{std::move(name), actual == expected, {}, {}};
  c.detail = std::to_string(actual) + (c.pass ? " == " : " != ") + std::to_string(expected);
  return c;
}

StructureCheck check_groups(const LabeledExtremalGraph& lg) {
  StructureCheck c{"grey_groups", true, {}, {}};
  const std::uint64_t p = gh_group_count(lg.delta, lg.h_param);
  if (lg.grey_groups.size() != p) {
    c.pass = false;
    c.detail = std::to_string(lg.grey_groups.size()) + " groups, expected " + std::to_string(p);
    return c;
  }
  for (std::size_t i = 0; i < p; ++i) {
    const auto& grp = lg.grey_groups[i];
    bool ok = grp.leaves.size() == lg.delta && grp.greys.size() + 1 == lg.delta;
    for (std::size_t j = 0; ok && j < grp.leaves.size(); ++j) {
      ok = i * lg.delta + j < lg.leaf_order.size() && lg.leaf_order[i * lg.delta + j] == grp.leaves[j];
    }
    for (const Vertex g : grp.greys) {
      if (g >= lg.graph.order()) {
        ok = false;
        continue;
      }
      std::vector<Vertex> expect = grp.leaves;
      std::sort(expect.begin(), expect.end());
      const auto nb = lg.graph.neighbors(g);
      if (!std::equal(nb.begin(), nb.end(), expect.begin(), expect.end())) {
        ok = false;
        c.offending.push_back(g);
      }
    }
    if (!ok) c.pass = false;
  }
  c.detail = c.pass ? std::to_string(p) + " groups of " + std::to_string(lg.delta) + " leaves and " +
                          std::to_string(lg.delta - 1) + " greys"
                    : "group membership differs from adjacency";
  return c;
}

StructureCheck check_orientation_toward_root(const LabeledExtremalGraph& lg) {
  StructureCheck c{"orientation_toward_root", true, {}, {}};
  try {
    check_orientation(lg.graph, lg.orientation);
  } catch (const std::invalid_argument& e) {
    c.pass = false;
    c.detail = e.what();
    return c;
  }
  for (const Arc& a : lg.orientation.arcs) {
    bool ok = false;
    if (lg.role[a.tail] == Role::kBlack) {
      ok = lg.tree.parent[a.tail] == a.head;
    } else {
      ok = lg.role[a.head] == Role::kBlack && lg.tree.is_leaf(a.head);
    }
    if (!ok) c.offending.push_back(a.tail);
  }
  c.pass = c.offending.empty();
  c.detail = c.pass ? "child->parent and grey->leaf on every arc"
                    : std::to_string(c.offending.size()) + " arcs point away from the root";
  return c;
}

}  // namespace

GhStructureReport verify_gh_structure(const LabeledExtremalGraph& lg) {
  GhStructureReport r;
  const std::uint32_t d = lg.delta;
  const std::uint32_t h_param = lg.h_param;

  r.checks.push_back(check_regular(lg));

  std::uint64_t black = 0;
  std::uint64_t grey = 0;
  for (const Role x : lg.role) (x == Role::kBlack ? black : grey) += 1;
  std::uint64_t black_formula = 1;
  for (std::uint32_t i = 1; i <= h_param; ++i) black_formula += d * ipow(d - 1, i - 1);
  r.checks.push_back(check_count("black_count", black, black_formula));
  r.checks.push_back(check_count("grey_count", grey, ipow(d - 1, h_param)));
  r.checks.push_back(check_groups(lg));

  StructureCheck per_vertex{"ndown_vertex_bound", true, {}, {}};
  std::uint64_t aggregate = 0;
  for (Vertex v = 0; v < lg.black_count(); ++v) {
    if (v == lg.tree.root) continue;
    const std::uint64_t size = ndown_set(lg, v).size();
    const std::uint64_t bound = 4 * ipow(d - 1, lg.black_height[v] + 1);
    aggregate += size;
    if (size > bound) per_vertex.offending.push_back(v);
  }
  per_vertex.pass = per_vertex.offending.empty();
  per_vertex.detail = per_vertex.pass ? "|N(v)| <= 4(d-1)^(h+1) for all black v != root"
                                      : std::to_string(per_vertex.offending.size()) + " violations";
  r.checks.push_back(std::move(per_vertex));

  const std::uint64_t aggregate_bound = 4ull * d * ipow(d - 1, h_param) * h_param;
  StructureCheck agg{"ndown_aggregate_bound", aggregate <= aggregate_bound, {}, {}};
  agg.detail = std::to_string(aggregate) + (agg.pass ? " <= " : " > ") + std::to_string(aggregate_bound);
  r.checks.push_back(std::move(agg));

  r.checks.push_back(check_orientation_toward_root(lg));
  return r;
}

std::uint64_t canonical_orientation_sum(const LabeledExtremalGraph& lg,
                                        std::span<const EdgeComparison> per_edge) {
  std::uint64_t sum = 0;
  for (const Arc& a : lg.orientation.arcs) {
    const auto idx = lg.graph.edge_index(a.tail, a.head);
    if (!idx) throw std::invalid_argument("orientation arc is not an edge");
    sum = detail::checked_add(sum, per_edge[*idx].at_least_as_close(a.tail, a.head));
  }
  return sum;
}

std::vector<Vertex> mirror_permutation(const LabeledExtremalGraph& lg) {
  const std::size_t n = lg.graph.order();
  const std::size_t black = lg.black_count();
  std::vector<Vertex> perm(n);
  // Level-order ids: each depth occupies one contiguous block.
  std::size_t start = 0;
  while (start < black) {
    std::size_t end = start;
    while (end < black && lg.tree.depth[end] == lg.tree.depth[start]) ++end;
    for (std::size_t k = start; k < end; ++k) perm[k] = static_cast<Vertex>(start + end - 1 - k);
    start = end;
  }
  const std::size_t groups = lg.grey_groups.size();
  for (std::size_t i = 0; i < groups; ++i) {
    const auto& src = lg.grey_groups[i].greys;
    const auto& dst = lg.grey_groups[groups - 1 - i].greys;
    for (std::size_t j = 0; j < src.size(); ++j) perm[src[j]] = dst[src.size() - 1 - j];
  }
  return perm;
}

std::int64_t theorem1_constant(std::uint32_t delta) {
  const std::int64_t d = delta;
  return 20 * d * d * d + 12 * d * d - 24 * d + 48;
}

std::int64_t lemma2_constant(std::uint32_t delta) {
  const std::int64_t d = delta;
  return 10 * d * d * d + 6 * d * d - 12 * d + 24;
}

namespace {

double log_base(double base, double x) { return std::log(x) / std::log(base); }

void check_bound_args(std::uint32_t delta, std::uint64_t n) {
  if (delta < 3) throw std::invalid_argument("delta must be at least 3");
  if (n < 2) throw std::invalid_argument("n must be at least 2");
}

}  // namespace

double theorem1_bound(std::uint32_t delta, std::uint64_t n) {
  check_bound_args(delta, n);
  const double x = static_cast<double>(n);
  return delta / 2.0 * x * x -
         static_cast<double>(theorem1_constant(delta)) * x * log_base(delta - 1, x);
}

double lemma2_bound(std::uint32_t delta, std::uint64_t n) {
  check_bound_args(delta, n);
  const double x = static_cast<double>(n);
  return static_cast<double>(lemma2_constant(delta)) * x * log_base(delta - 1, x);
}

}  // namespace mostar
