#include "mostar/graph.hpp"

#include <gtest/gtest.h>

#include <random>

#include "graph_builders.hpp"
#include "mostar/oracle.hpp"

namespace mostar {
namespace {

using testing::cycle;
using testing::path;

// Repeated relaxation over the edge list until nothing changes; -1 = unreachable.
std::vector<long> relaxation_distances(const Graph& g, Vertex s) {
  std::vector<long> d(g.order(), -1);
  d[s] = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (const Edge& e : g.edges()) {
      for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
        if (d[a] >= 0 && (d[b] < 0 || d[a] + 1 < d[b])) {
          d[b] = d[a] + 1;
          changed = true;
        }
      }
    }
  }
  return d;
}

TEST(ParseGraph, HeaderAndSingleEdge) {
  const Graph g = parse_graph("p 2 1\n0 1");
  EXPECT_EQ(g.order(), 2u);
  EXPECT_EQ(g.size(), 1u);
}

TEST(ParseGraph, CycleWithoutHeader) {
  const Graph g = parse_graph("0 1\n1 2\n2 3\n3 0");
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.size(), 4u);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(g.degree(v), 2u);
}

TEST(ParseGraph, CommentsBlankLinesAndWhitespace) {
  const Graph g = parse_graph("# triangle\np 4 3\n\n 0\t1 \n# mid\n2 1\r\n0 2\n");
  EXPECT_EQ(g.order(), 4u);  // isolated vertex 3 from the header
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(g.degree(3), 0u);
}

TEST(ParseGraph, EmptyDocument) {
  EXPECT_EQ(parse_graph("").order(), 0u);
  EXPECT_EQ(parse_graph("# nothing\n").order(), 0u);
  EXPECT_EQ(parse_graph("p 3 0\n").order(), 3u);
}

TEST(ParseGraph, Errors) {
  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("0 0"), 1u);                 // self-loop
  EXPECT_EQ(line_of("0 1\n2 3\n1 0"), 3u);       // duplicate
  EXPECT_EQ(line_of("p 3 1\n0 3"), 2u);          // id >= n
  EXPECT_EQ(line_of("0 1\n1 x"), 2u);            // malformed token
  EXPECT_EQ(line_of("0 -1"), 1u);                // negative id
  EXPECT_EQ(line_of("0 1 2"), 1u);               // too many tokens
  EXPECT_EQ(line_of("p 3 2\n0 1"), 1u);          // count mismatch reported at header
  EXPECT_EQ(line_of("0 1\np 2 1"), 2u);          // late header
}

TEST(ParseGraph, RoundTripIsIdempotent) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing::random_graph(1 + trial % 15, 0.3, rng);
    const std::string once = to_edge_list(g);
    EXPECT_EQ(parse_graph(once), g);
    EXPECT_EQ(to_edge_list(parse_graph(once)), once);
  }
}

TEST(GraphInvariants, CanonicalAdjacency) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = testing::random_graph(20, 0.2, rng);
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      auto nb = g.neighbors(v);
      degree_sum += nb.size();
      for (std::size_t i = 0; i < nb.size(); ++i) {
        EXPECT_NE(nb[i], v);
        if (i > 0) {
          EXPECT_LT(nb[i - 1], nb[i]);
        }
        EXPECT_TRUE(g.has_edge(nb[i], v));
      }
    }
    EXPECT_EQ(degree_sum, 2 * g.size());
    EXPECT_TRUE(std::is_sorted(g.edges().begin(), g.edges().end()));
  }
}

TEST(GraphInvariants, FromEdgesRejectsBadInput) {
  EXPECT_THROW(Graph::from_edges(2, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph::from_edges(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph::from_edges(2, {{0, 2}}), std::invalid_argument);
}

TEST(BfsDistances, Examples) {
  const auto p3 = bfs_distances(path(3), 0);
  EXPECT_EQ(p3.at(0), 0u);
  EXPECT_EQ(p3.at(1), 1u);
  EXPECT_EQ(p3.at(2), 2u);

  const auto split = bfs_distances(Graph::from_edges(3, {{0, 1}}), 0);
  EXPECT_EQ(split.at(1), 1u);
  EXPECT_FALSE(split.reachable(2));

  const auto c4 = bfs_distances(cycle(4), 0);
  EXPECT_EQ(c4.at(2), 2u);
  EXPECT_EQ(c4.at(3), 1u);

  EXPECT_THROW(bfs_distances(path(3), 3), std::out_of_range);
}

TEST(BfsDistances, NarrowestWidth) {
  EXPECT_EQ(bfs_distances(path(254), 0).width(), 1u);
  EXPECT_EQ(bfs_distances(path(255), 0).width(), 2u);
  EXPECT_EQ(bfs_distances(path(255), 0).at(254), 254u);
  EXPECT_EQ(bfs_distances(path(70000), 0).width(), 4u);
  EXPECT_EQ(bfs_distances(path(70000), 0).at(69999), 69999u);
}

TEST(BfsDistances, MatchesRelaxationOnAllSmallGraphs) {
  for (std::size_t n = 1; n <= 6; ++n) {
    oracle::enumerate_graphs(n, n, false, [&](const Graph& g) {
      for (Vertex s = 0; s < n; ++s) {
        const auto row = bfs_distances(g, s);
        const auto ref = relaxation_distances(g, s);
        for (Vertex w = 0; w < n; ++w) {
          if (ref[w] < 0) {
            ASSERT_FALSE(row.reachable(w));
          } else {
            ASSERT_EQ(row.at(w), static_cast<std::uint32_t>(ref[w]));
          }
        }
      }
    });
  }
}

TEST(BfsDistances, TriangleStepAcrossEdges) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = testing::random_graph(25, 0.08, rng);
    for (Vertex s = 0; s < g.order(); ++s) {
      const auto row = bfs_distances(g, s);
      for (const Edge& e : g.edges()) {
        ASSERT_EQ(row.reachable(e.u), row.reachable(e.v));
        if (row.reachable(e.u)) {
          const long a = *row.at(e.u);
          const long b = *row.at(e.v);
          ASSERT_LE(std::abs(a - b), 1);
        }
      }
    }
  }
}

TEST(LargestComponent, Examples) {
  EXPECT_EQ(largest_component(cycle(4)).order(), 4u);
  const auto k2k1 = largest_component(Graph::from_edges(3, {{0, 1}}));
  EXPECT_EQ(k2k1.vertices, (std::vector<Vertex>{0, 1}));
  const auto tie = largest_component(Graph::from_edges(2, std::initializer_list<Edge>{}));
  EXPECT_EQ(tie.vertices, (std::vector<Vertex>{0}));
  EXPECT_EQ(largest_component(Graph{}).order(), 0u);
  // Two equal components {0,3} and {1,2}: the one holding 0 wins.
  const auto pair = largest_component(Graph::from_edges(4, {{1, 2}, {0, 3}}));
  EXPECT_EQ(pair.vertices, (std::vector<Vertex>{0, 3}));
}

TEST(ValidateDegree, Examples) {
  const auto c4 = validate_degree(cycle(4), 3);
  EXPECT_TRUE(c4.passes);
  EXPECT_FALSE(c4.regular);

  const auto k5 = validate_degree(testing::complete(5), 3);
  EXPECT_FALSE(k5.passes);
  EXPECT_EQ(k5.offending.size(), 5u);

  const auto k4 = validate_degree(testing::complete(4), 3);
  EXPECT_TRUE(k4.passes);
  EXPECT_TRUE(k4.regular);
}

}  // namespace
}  // namespace mostar
