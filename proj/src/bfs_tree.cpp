#include "mostar/bfs_tree.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mostar/detail/checked.hpp"
#include "mostar/parallel.hpp"

namespace mostar {

BfsTree bfs_tree(const Graph& g, Vertex r) {
  const std::size_t n = g.order();
  if (r >= n) throw std::out_of_range("root " + std::to_string(r) + " out of range");
  BfsTree t;
  t.root = r;
  t.parent.assign(n, kNoVertex);
  t.depth.assign(n, BfsTree::kUnspanned);
  t.subtree_size.assign(n, 0);
  t.span.reserve(n);
  t.depth[r] = 0;
  t.span.push_back(r);
  for (std::size_t head = 0; head < t.span.size(); ++head) {
    const Vertex x = t.span[head];
    for (const Vertex y : g.neighbors(x)) {
      if (t.depth[y] == BfsTree::kUnspanned) {
        t.depth[y] = t.depth[x] + 1;
        t.parent[y] = x;
        t.span.push_back(y);
      }
    }
  }
  for (auto it = t.span.rbegin(); it != t.span.rend(); ++it) {
    t.subtree_size[*it] += 1;
    if (t.parent[*it] != kNoVertex) t.subtree_size[t.parent[*it]] += t.subtree_size[*it];
  }
  return t;
}

std::uint64_t min_depth_subtree_sum(const BfsTree& t) {
  std::uint64_t sum = 0;
  for (const Vertex u : t.span) sum += std::min(t.depth[u], t.subtree_size[u]);
  return sum;
}

std::uint64_t subtree_sum(const BfsTree& t) {
  std::uint64_t sum = 0;
  for (const Vertex u : t.span) sum += t.subtree_size[u];
  return sum;
}

std::uint64_t subtree_sum(const RootedTreeShape& t) {
  // Sizes accumulate bottom-up; process vertices by decreasing depth.
  std::vector<Vertex> order(t.order());
  for (Vertex v = 0; v < order.size(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return t.depth[a] > t.depth[b]; });
  std::vector<std::uint64_t> size(t.order(), 1);
  std::uint64_t sum = 0;
  for (const Vertex v : order) {
    sum += size[v];
    if (t.parent[v] != kNoVertex) size[t.parent[v]] += size[v];
  }
  return sum;
}

std::uint64_t depth_plus_one_sum(const BfsTree& t) {
  std::uint64_t sum = 0;
  for (const Vertex u : t.span) sum += std::uint64_t{t.depth[u]} + 1;
  return sum;
}

std::uint64_t depth_plus_one_sum(const RootedTreeShape& t) {
  std::uint64_t sum = 0;
  for (const auto d : t.depth) sum += std::uint64_t{d} + 1;
  return sum;
}

double lemma3_bound(std::uint32_t delta, std::uint64_t n) {
  if (delta < 3) throw std::invalid_argument("delta must be at least 3");
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  const double d = delta;
  const double x = static_cast<double>(n);
  const double factor = (d - 2) / ((d - 1) * (d - 1));
  return factor * x * (std::log((d - 2) * x) / std::log(d - 1) - 1);
}

namespace {

void check_tree_matches(const Graph& g, const BfsTree& t) {
  if (t.parent.size() != g.order() || t.depth.size() != g.order()) {
    throw std::invalid_argument("BFS tree was built for a different vertex count");
  }
  for (const Vertex u : t.span) {
    if (u != t.root && !g.has_edge(u, t.parent[u])) {
      throw std::invalid_argument("tree edge (" + std::to_string(u) + "," +
                                  std::to_string(t.parent[u]) + ") is not a graph edge");
    }
  }
}

}  // namespace

std::vector<TreeEdgeCheck> edge_upper_bound_check(const Graph& g, const BfsTree& t,
                                                  std::span<const EdgeComparison> per_edge) {
  check_tree_matches(g, t);
  const auto n = static_cast<std::int64_t>(g.order());
  std::vector<TreeEdgeCheck> out;
  out.reserve(t.order());
  for (const Vertex u : t.span) {
    if (u == t.root) continue;
    const Vertex v = t.parent[u];
    const EdgeComparison& c = per_edge[*g.edge_index(u, v)];
    TreeEdgeCheck e;
    e.child = u;
    e.parent = v;
    e.depth = t.depth[u];
    e.subtree = t.subtree_size[u];
    e.closer_child = c.u == u ? c.n_uv : c.n_vu;
    e.closer_parent = c.u == u ? c.n_vu : c.n_uv;
    e.bound = n - 2 * static_cast<std::int64_t>(std::min(e.depth, e.subtree));
    e.actual = c.contribution();
    out.push_back(e);
  }
  return out;
}

std::vector<TreeEdgeCheck> edge_upper_bound_check(const Graph& g, const BfsTree& t,
                                                  unsigned workers) {
  check_tree_matches(g, t);
  const auto per_edge = compare_all_edges(g, workers);
  return edge_upper_bound_check(g, t, per_edge);
}

bool CertificateReport::all_edges_pass() const noexcept {
  return std::all_of(per_edge_checks.begin(), per_edge_checks.end(),
                     [](const TreeEdgeCheck& e) { return e.pass(); });
}

std::vector<TreeEdgeCheck> CertificateReport::failed_edges() const {
  std::vector<TreeEdgeCheck> out;
  for (const auto& e : per_edge_checks) {
    if (!e.pass()) out.push_back(e);
  }
  return out;
}

CertificateReport mostar_upper_certificate(const Graph& g, Vertex r,
                                           std::span<const EdgeComparison> per_edge) {
  const BfsTree t = bfs_tree(g, r);
  CertificateReport rep;
  rep.root = r;
  const auto mn = detail::to_signed(detail::checked_mul(g.size(), g.order()));
  const auto slack = detail::to_signed(detail::checked_mul(2, min_depth_subtree_sum(t)));
  rep.certificate_value = detail::checked_sub(mn, slack);
  for (const auto& c : per_edge) rep.mostar_value = detail::checked_add(rep.mostar_value, c.contribution());
  rep.per_edge_checks = edge_upper_bound_check(g, t, per_edge);
  return rep;
}

CertificateReport mostar_upper_certificate(const Graph& g, Vertex r, unsigned workers) {
  if (r >= g.order()) throw std::out_of_range("root " + std::to_string(r) + " out of range");
  const auto per_edge = compare_all_edges(g, workers);
  return mostar_upper_certificate(g, r, per_edge);
}

CertificateReport empty_certificate() { return CertificateReport{}; }

CertificateSweep sweep_certificates(const Graph& g, std::span<const Vertex> roots,
                                    std::span<const EdgeComparison> per_edge, unsigned workers) {
  CertificateSweep sweep;
  if (roots.empty()) {
    sweep.best = empty_certificate();
    return sweep;
  }
  std::vector<CertificateReport> reports(roots.size());
  parallel_tasks(roots.size(), workers, [&](unsigned, std::size_t i) {
    reports[i] = mostar_upper_certificate(g, roots[i], per_edge);
  });
  std::size_t best = 0;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (!reports[i].passed()) sweep.all_passed = false;
    const auto& a = reports[i];
    const auto& b = reports[best];
    if (a.certificate_value < b.certificate_value ||
        (a.certificate_value == b.certificate_value && *a.root < *b.root)) {
      best = i;
    }
  }
  sweep.best = std::move(reports[best]);
  sweep.roots_examined = roots.size();
  return sweep;
}

Theorem2Evaluation theorem2_bound(std::uint32_t delta, std::uint64_t n) {
  if (delta < 3) throw std::invalid_argument("delta must be at least 3");
  const double d = delta;
  const double x = static_cast<double>(n);
  Theorem2Evaluation r;
  const double lead = d / 2 * x * x;
  const double log_n = n > 0 ? std::log(x) / std::log(d - 1) : 0.0;
  if (log_n <= 1) {
    r.value = lead;
    r.guarded = true;
    return r;
  }
  const double factor = (d - 2) / ((d - 1) * (d - 1));
  r.value = lead - 2 * factor * x * (std::log(log_n) / std::log(d - 1));
  return r;
}

}  // namespace mostar
