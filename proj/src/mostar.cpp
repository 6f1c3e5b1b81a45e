#include "mostar/mostar.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mostar/detail/bfs_kernel.hpp"
#include "mostar/detail/checked.hpp"
#include "mostar/parallel.hpp"

namespace mostar {

std::uint32_t EdgeComparison::at_least_as_close(Vertex near, Vertex far) const {
  if (near == u && far == v) return n_uv + equidistant;
  if (near == v && far == u) return n_vu + equidistant;
  throw std::invalid_argument("(" + std::to_string(near) + "," + std::to_string(far) +
                              ") is not the edge {" + std::to_string(u) + "," + std::to_string(v) +
                              "}");
}

bool Rational::bounds(std::uint64_t x) const noexcept {
  // x <= p/q  <=>  x*q <= p, evaluated in 128 bits.
  return static_cast<unsigned __int128>(x) * denominator <= numerator;
}

EdgeComparison edge_comparison(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v)) {
    throw std::invalid_argument("(" + std::to_string(u) + "," + std::to_string(v) +
                                ") is not an edge");
  }
  if (u > v) std::swap(u, v);
  const DistanceRow du = bfs_distances(g, u);
  const DistanceRow dv = bfs_distances(g, v);
  EdgeComparison c{u, v, 0, 0, 0};
  for (Vertex w = 0; w < g.order(); ++w) {
    const auto a = du.at(w);
    const auto b = dv.at(w);
    // Both endpoints share a component, so a and b are both set or both unset.
    if (!a || *a == *b) {
      ++c.equidistant;
    } else if (*a < *b) {
      ++c.n_uv;
    } else {
      ++c.n_vu;
    }
  }
  return c;
}

namespace {

constexpr std::size_t kSourcesPerTask = 32;

template <typename Dist>
std::vector<EdgeComparison> sweep_sources(const Graph& g, unsigned workers) {
  const std::size_t n = g.order();
  const std::size_t m = g.size();
  const auto edges = g.edges();

  struct Counters {
    std::vector<std::uint32_t> closer_u;
    std::vector<std::uint32_t> closer_v;
  };

  const std::size_t tasks = (n + kSourcesPerTask - 1) / kSourcesPerTask;
  const unsigned threads = effective_workers(tasks, workers);
  std::vector<Counters> local(threads);
  for (auto& c : local) {
    c.closer_u.assign(m, 0);
    c.closer_v.assign(m, 0);
  }
  // Worker-private scratch; kernels hold a reference to g only.
  std::vector<detail::BfsKernel<Dist>> kernels;
  kernels.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) kernels.emplace_back(g);
  std::vector<std::vector<Dist>> dist(threads, std::vector<Dist>(n));

  parallel_tasks(tasks, threads, [&](unsigned w, std::size_t task) {
    auto& cu = local[w].closer_u;
    auto& cv = local[w].closer_v;
    auto& d = dist[w];
    const std::size_t first = task * kSourcesPerTask;
    const std::size_t last = std::min(n, first + kSourcesPerTask);
    for (std::size_t s = first; s < last; ++s) {
      kernels[w].run(static_cast<Vertex>(s), d);
      for (std::size_t e = 0; e < m; ++e) {
        const Dist a = d[edges[e].u];
        const Dist b = d[edges[e].v];
        cu[e] += static_cast<std::uint32_t>(a < b);
        cv[e] += static_cast<std::uint32_t>(b < a);
      }
    }
  });

  std::vector<EdgeComparison> out(m);
  for (std::size_t e = 0; e < m; ++e) {
    std::uint64_t nu = 0;
    std::uint64_t nv = 0;
    for (const auto& c : local) {
      nu += c.closer_u[e];
      nv += c.closer_v[e];
    }
    out[e] = EdgeComparison{edges[e].u, edges[e].v, static_cast<std::uint32_t>(nu),
                            static_cast<std::uint32_t>(nv), static_cast<std::uint32_t>(n - nu - nv)};
  }
  return out;
}

}  // namespace

std::vector<EdgeComparison> compare_all_edges(const Graph& g, unsigned workers) {
  return detail::with_distance_width(
      g.order(), [&]<typename Dist>() { return sweep_sources<Dist>(g, workers); });
}

MostarResult mostar_index(const Graph& g, bool keep_per_edge, unsigned workers) {
  MostarResult r;
  r.n = g.order();
  r.m = g.size();
  auto per_edge = compare_all_edges(g, workers);
  for (const auto& c : per_edge) r.total = detail::checked_add(r.total, c.contribution());
  if (keep_per_edge) r.per_edge = std::move(per_edge);
  return r;
}

Rational trivial_upper_bound(std::uint64_t n, std::uint64_t delta) {
  if (n < 2) throw std::invalid_argument("trivial bound needs n >= 2");
  std::uint64_t num = detail::checked_mul(detail::checked_mul(delta, n), n - 2);
  if (num % 2 == 0) return Rational{num / 2, 1};
  return Rational{num, 2};
}

std::uint64_t bar_n(const Graph& g, Vertex v, Vertex u) {
  return edge_comparison(g, u, v).at_least_as_close(v, u);
}

void check_orientation(const Graph& g, const Orientation& o) {
  if (o.arcs.size() != g.size()) {
    throw std::invalid_argument("orientation has " + std::to_string(o.arcs.size()) +
                                " arcs for " + std::to_string(g.size()) + " edges");
  }
  std::vector<bool> seen(g.size(), false);
  for (const Arc& a : o.arcs) {
    const auto idx = g.edge_index(a.tail, a.head);
    if (!idx || a.tail == a.head) {
      throw std::invalid_argument("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                                  ") is not an edge");
    }
    if (seen[*idx]) {
      throw std::invalid_argument("edge {" + std::to_string(a.tail) + "," +
                                  std::to_string(a.head) + "} oriented twice");
    }
    seen[*idx] = true;
  }
}

std::int64_t orientation_lower_bound(const Graph& g, const Orientation& o,
                                     std::span<const EdgeComparison> per_edge) {
  check_orientation(g, o);
  std::uint64_t sum = 0;
  for (const Arc& a : o.arcs) {
    const auto& c = per_edge[*g.edge_index(a.tail, a.head)];
    sum = detail::checked_add(sum, c.at_least_as_close(a.tail, a.head));
  }
  const auto nm = detail::to_signed(detail::checked_mul(g.order(), g.size()));
  return detail::checked_sub(nm, detail::to_signed(detail::checked_mul(2, sum)));
}

std::int64_t orientation_lower_bound(const Graph& g, const Orientation& o, unsigned workers) {
  check_orientation(g, o);
  const auto per_edge = compare_all_edges(g, workers);
  return orientation_lower_bound(g, o, per_edge);
}

OrientationBound optimal_orientation_bound(const Graph& g, std::span<const EdgeComparison> per_edge) {
  OrientationBound r;
  r.orientation.arcs.reserve(per_edge.size());
  for (const auto& c : per_edge) {
    // Arc (u, v) costs bar_n(u, v); arc (v, u) costs bar_n(v, u). Ties point at u < v.
    const auto from_u = c.at_least_as_close(c.u, c.v);
    const auto from_v = c.at_least_as_close(c.v, c.u);
    r.orientation.arcs.push_back(from_u < from_v ? Arc{c.u, c.v} : Arc{c.v, c.u});
  }
  r.value = orientation_lower_bound(g, r.orientation, per_edge);
  return r;
}

OrientationBound optimal_orientation_bound(const Graph& g, unsigned workers) {
  const auto per_edge = compare_all_edges(g, workers);
  return optimal_orientation_bound(g, per_edge);
}

}  // namespace mostar
