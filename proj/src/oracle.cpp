#include "mostar/oracle.hpp"

#include <array>
#include <bit>
#include <queue>
#include <stdexcept>
#include <string>

#include "mostar/parallel.hpp"

namespace mostar::oracle {

namespace {

void require_reference_order(std::size_t n) {
  if (n > kReferenceMaxOrder) {
    throw std::invalid_argument("reference oracle handles at most " +
                                std::to_string(kReferenceMaxOrder) + " vertices, got " +
                                std::to_string(n));
  }
}

void require_enumeration_order(std::size_t n) {
  if (n < 1 || n > kEnumerationMaxOrder) {
    throw std::invalid_argument("enumeration needs 1 <= n <= " +
                                std::to_string(kEnumerationMaxOrder) + ", got " + std::to_string(n));
  }
}

}  // namespace

std::vector<std::vector<int>> distance_matrix(const Graph& g) {
  const std::size_t n = g.order();
  require_reference_order(n);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges()) {
    adj[e.u][e.v] = true;
    adj[e.v][e.u] = true;
  }
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (std::size_t s = 0; s < n; ++s) {
    std::queue<std::size_t> q;
    dist[s][s] = 0;
    q.push(s);
    while (!q.empty()) {
      const std::size_t x = q.front();
      q.pop();
      for (std::size_t y = 0; y < n; ++y) {
        if (adj[x][y] && dist[s][y] < 0) {
          dist[s][y] = dist[s][x] + 1;
          q.push(y);
        }
      }
    }
  }
  return dist;
}

std::uint64_t mostar_reference(const Graph& g) {
  const auto dist = distance_matrix(g);
  const std::size_t n = g.order();
  std::uint64_t total = 0;
  for (const Edge& e : g.edges()) {
    std::int64_t closer_u = 0;
    std::int64_t closer_v = 0;
    for (std::size_t w = 0; w < n; ++w) {
      const int a = dist[w][e.u];
      const int b = dist[w][e.v];
      if (a < 0 && b < 0) continue;
      if (a < b) ++closer_u;
      if (b < a) ++closer_v;
    }
    total += static_cast<std::uint64_t>(closer_u > closer_v ? closer_u - closer_v : closer_v - closer_u);
  }
  return total;
}

std::uint64_t mostar_from_masks(std::span<const std::uint64_t> adjacency) {
  const std::size_t n = adjacency.size();
  require_reference_order(n);
  constexpr std::uint8_t kFar = 0xff;
  std::array<std::array<std::uint8_t, kReferenceMaxOrder>, kReferenceMaxOrder> dist;
  for (std::size_t s = 0; s < n; ++s) {
    dist[s].fill(kFar);
    std::uint64_t seen = std::uint64_t{1} << s;
    std::uint64_t frontier = seen;
    std::uint8_t level = 0;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) {
        const int x = std::countr_zero(f);
        dist[s][x] = level;
        next |= adjacency[x];
      }
      frontier = next & ~seen;
      seen |= frontier;
      ++level;
    }
  }
  std::uint64_t total = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::uint64_t higher = adjacency[u] & ~((std::uint64_t{2} << u) - 1); higher;
         higher &= higher - 1) {
      const int v = std::countr_zero(higher);
      int balance = 0;
      for (std::size_t w = 0; w < n; ++w) {
        balance += (dist[w][u] < dist[w][v]) - (dist[w][v] < dist[w][u]);
      }
      total += static_cast<std::uint64_t>(balance < 0 ? -balance : balance);
    }
  }
  return total;
}

std::vector<Edge> upper_triangle(std::size_t n) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back(Edge{u, v});
  }
  return pairs;
}

namespace {

bool connected_masks(std::span<const std::uint64_t> adjacency) {
  const std::size_t n = adjacency.size();
  if (n == 0) return true;
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= adjacency[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= frontier;
  }
  return std::popcount(seen) == static_cast<int>(n);
}

// Depth-first walk over include/exclude decisions, exclusion first, with
// the degree bound pruned at every inclusion.
class EdgeSetWalker {
 public:
  EdgeSetWalker(std::size_t n, std::size_t delta, bool connected_only)
      : n_(n), delta_(delta), connected_only_(connected_only), pairs_(upper_triangle(n)),
        adjacency_(n, 0), degree_(n, 0) {
    // last_[v]: last pair position touching v. Past it, an isolated v rules out connectivity.
    last_.assign(n, 0);
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      last_[pairs_[i].u] = i;
      last_[pairs_[i].v] = i;
    }
  }

  const std::vector<Edge>& pairs() const noexcept { return pairs_; }

  bool include(std::size_t i) {
    const Edge e = pairs_[i];
    if (degree_[e.u] >= delta_ || degree_[e.v] >= delta_) return false;
    adjacency_[e.u] |= std::uint64_t{1} << e.v;
    adjacency_[e.v] |= std::uint64_t{1} << e.u;
    ++degree_[e.u];
    ++degree_[e.v];
    chosen_.push_back(e);
    return true;
  }

  void exclude_back(std::size_t i) {
    const Edge e = pairs_[i];
    adjacency_[e.u] &= ~(std::uint64_t{1} << e.v);
    adjacency_[e.v] &= ~(std::uint64_t{1} << e.u);
    --degree_[e.u];
    --degree_[e.v];
    chosen_.pop_back();
  }

  // True when deciding position i cannot still lead to a connected graph.
  bool doomed_after(std::size_t i) const {
    if (!connected_only_ || n_ < 2) return false;
    const Edge e = pairs_[i];
    return (last_[e.u] == i && degree_[e.u] == 0) || (last_[e.v] == i && degree_[e.v] == 0);
  }

  template <typename Visit>
  std::uint64_t walk(std::size_t i, Visit& visit) {
    if (i == pairs_.size()) {
      if (connected_only_ && !connected_masks(adjacency_)) return 0;
      visit(std::span<const Edge>(chosen_), std::span<const std::uint64_t>(adjacency_));
      return 1;
    }
    std::uint64_t count = 0;
    if (!doomed_after(i)) count += walk(i + 1, visit);
    if (include(i)) {
      if (!doomed_after(i)) count += walk(i + 1, visit);
      exclude_back(i);
    }
    return count;
  }

  void reset() {
    std::fill(adjacency_.begin(), adjacency_.end(), 0);
    std::fill(degree_.begin(), degree_.end(), 0);
    chosen_.clear();
  }

 private:
  std::size_t n_;
  std::size_t delta_;
  bool connected_only_;
  std::vector<Edge> pairs_;
  std::vector<std::size_t> last_;
  std::vector<std::uint64_t> adjacency_;
  std::vector<std::size_t> degree_;
  std::vector<Edge> chosen_;
};

}  // namespace

std::uint64_t for_each_graph(std::size_t n, std::size_t delta, bool connected_only,
                             const std::function<void(std::span<const Edge>)>& visit) {
  require_enumeration_order(n);
  EdgeSetWalker walker(n, delta, connected_only);
  auto adapter = [&](std::span<const Edge> edges, std::span<const std::uint64_t>) { visit(edges); };
  return walker.walk(0, adapter);
}

std::uint64_t enumerate_graphs(std::size_t n, std::size_t delta, bool connected_only,
                               const std::function<void(const Graph&)>& visit) {
  return for_each_graph(n, delta, connected_only,
                        [&](std::span<const Edge> edges) { visit(Graph::from_edges(n, edges)); });
}

SearchResult max_mostar(std::size_t n, std::size_t delta, bool connected_only, unsigned workers) {
  require_enumeration_order(n);
  SearchResult result;
  result.n = n;
  result.delta = delta;
  result.connected_only = connected_only;

  // Fixed prefixes of the first k decisions, listed in enumeration order.
  const std::size_t pair_count = n * (n - 1) / 2;
  const std::size_t k = std::min<std::size_t>(pair_count, 12);
  std::vector<std::vector<bool>> prefixes;
  {
    EdgeSetWalker walker(n, delta, connected_only);
    std::vector<bool> current;
    std::function<void(std::size_t)> grow = [&](std::size_t i) {
      if (i == k) {
        prefixes.push_back(current);
        return;
      }
      current.push_back(false);
      if (!walker.doomed_after(i)) grow(i + 1);
      current.back() = true;
      if (walker.include(i)) {
        if (!walker.doomed_after(i)) grow(i + 1);
        walker.exclude_back(i);
      }
      current.pop_back();
    };
    grow(0);
  }

  struct Partial {
    std::uint64_t count = 0;
    std::uint64_t best = 0;
    bool found = false;
    std::vector<Edge> witness;
  };
  std::vector<Partial> partial(prefixes.size());

  parallel_tasks(prefixes.size(), workers, [&](unsigned, std::size_t t) {
    EdgeSetWalker walker(n, delta, connected_only);
    for (std::size_t i = 0; i < k; ++i) {
      if (prefixes[t][i]) walker.include(i);
    }
    Partial& p = partial[t];
    auto visit = [&](std::span<const Edge> edges, std::span<const std::uint64_t> adjacency) {
      const std::uint64_t mo = mostar_from_masks(adjacency);
      if (!p.found || mo > p.best) {
        p.found = true;
        p.best = mo;
        p.witness.assign(edges.begin(), edges.end());
      }
    };
    p.count = walker.walk(k, visit);
  });

  bool found = false;
  std::vector<Edge> witness;
  for (const Partial& p : partial) {
    result.graphs_examined += p.count;
    if (p.found && (!found || p.best > result.max_mostar)) {
      found = true;
      result.max_mostar = p.best;
      witness = p.witness;
    }
  }
  result.witness = Graph::from_edges(found ? n : 0, witness);
  return result;
}

}  // namespace mostar::oracle
