#include "mostar/extremal.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

namespace mostar {
namespace {

TEST(BuildTh, Examples) {
  const auto t32 = build_th(3, 2);
  EXPECT_EQ(t32.order(), 10u);
  EXPECT_EQ(std::count_if(t32.children.begin(), t32.children.end(), [](auto& c) { return c.empty(); }), 6);
  const auto t42 = build_th(4, 2);
  EXPECT_EQ(t42.order(), 17u);
  EXPECT_EQ(std::count_if(t42.children.begin(), t42.children.end(), [](auto& c) { return c.empty(); }), 12);
  EXPECT_THROW(build_th(3, 1), std::invalid_argument);
  EXPECT_THROW(build_th(2, 3), std::invalid_argument);
}

TEST(BuildTh, ShapeInvariants) {
  for (std::uint32_t d = 3; d <= 5; ++d) {
    for (std::uint32_t h = 2; h <= 5; ++h) {
      const auto t = build_th(d, h);
      EXPECT_EQ(t.depth[t.root], 0u);
      EXPECT_EQ(t.children[t.root].size(), d);
      for (Vertex v = 0; v < t.order(); ++v) {
        if (v != t.root) {
          EXPECT_EQ(t.depth[v], t.depth[t.parent[v]] + 1);
          EXPECT_LT(t.parent[v], v);  // level order
        }
        if (t.is_leaf(v)) {
          EXPECT_EQ(t.depth[v], h);
        } else if (v != t.root) {
          EXPECT_EQ(t.children[v].size(), d - 1);
        }
        // Children are consecutive ids, left to right.
        for (std::size_t i = 1; i < t.children[v].size(); ++i) {
          EXPECT_EQ(t.children[v][i], t.children[v][i - 1] + 1);
        }
      }
    }
  }
}

TEST(BuildGh, Examples) {
  const auto g43 = build_gh(4, 3);
  EXPECT_EQ(g43.graph.order(), 80u);
  EXPECT_EQ(g43.graph.size(), 160u);
  EXPECT_EQ(g43.black_count(), 53u);
  EXPECT_EQ(g43.grey_count(), 27u);
  EXPECT_TRUE(validate_degree(g43.graph, 4).regular);

  const auto g32 = build_gh(3, 2);
  EXPECT_EQ(g32.graph.order(), 14u);
  EXPECT_EQ(g32.graph.size(), 21u);
  EXPECT_TRUE(validate_degree(g32.graph, 3).regular);

  const auto g52 = build_gh(5, 2);
  EXPECT_EQ(g52.graph.order(), 42u);
  EXPECT_EQ(g52.graph.size(), 105u);
  EXPECT_EQ(g52.black_count(), 26u);
  EXPECT_EQ(g52.grey_count(), 16u);
  EXPECT_TRUE(validate_degree(g52.graph, 5).regular);

  EXPECT_THROW(build_gh(2, 3), std::invalid_argument);
  EXPECT_THROW(build_gh(3, 1), std::invalid_argument);
}

TEST(BuildGh, OverflowGuard) {
  EXPECT_THROW(build_gh(3, 40), std::overflow_error);
  EXPECT_THROW(gh_black_count(100, 10), std::overflow_error);
}

TEST(BuildGh, GreyIdsFollowBlackIdsGroupByGroup) {
  const auto lg = build_gh(3, 3);
  ASSERT_EQ(lg.grey_groups.size(), gh_group_count(3, 3));
  Vertex expect = static_cast<Vertex>(lg.black_count());
  for (std::size_t i = 0; i < lg.grey_groups.size(); ++i) {
    const auto& grp = lg.grey_groups[i];
    for (const Vertex g : grp.greys) {
      EXPECT_EQ(g, expect++);
      const auto nb = lg.graph.neighbors(g);
      EXPECT_EQ(std::vector<Vertex>(nb.begin(), nb.end()), grp.leaves);
    }
    for (std::size_t j = 0; j < grp.leaves.size(); ++j) EXPECT_EQ(grp.leaves[j], lg.leaf_order[3 * i + j]);
  }
}

TEST(BuildGh, StreamedEdgesAreCanonical) {
  for (std::uint32_t d = 3; d <= 5; ++d) {
    const auto lg = build_gh(d, 3);
    std::vector<Edge> streamed;
    for_each_gh_edge(d, 3, [&](const Edge& e) { streamed.push_back(e); });
    EXPECT_TRUE(std::equal(streamed.begin(), streamed.end(), lg.graph.edges().begin(), lg.graph.edges().end()));
  }
}

TEST(BuildGh, OrientationPointsTowardRoot) {
  const auto lg = build_gh(4, 3);
  for (const Arc& a : lg.orientation.arcs) {
    if (lg.role[a.tail] == Role::kBlack) {
      EXPECT_EQ(lg.tree.parent[a.tail], a.head);
    } else {
      EXPECT_EQ(lg.role[a.head], Role::kBlack);
      EXPECT_EQ(lg.tree.depth[a.head], 3u);
    }
  }
}

TEST(NdownSet, LeavesAndHeightOne) {
  const auto lg = build_gh(3, 2);
  // Leaves 4..9; groups {4,5,6} -> greys {10,11}, {7,8,9} -> greys {12,13}.
  for (const Vertex leaf : lg.leaf_order) EXPECT_EQ(ndown_set(lg, leaf).size(), 3u);
  EXPECT_EQ(ndown_set(lg, 4), (std::vector<Vertex>{4, 10, 11}));
  // Depth-1 vertices 1, 2, 3 own leaves {4,5}, {6,7}, {8,9}.
  EXPECT_EQ(ndown_set(lg, 1), (std::vector<Vertex>{1, 4, 5, 10, 11}));
  EXPECT_EQ(ndown_set(lg, 2), (std::vector<Vertex>{2, 6, 7, 10, 11, 12, 13}));
  EXPECT_EQ(ndown_set(lg, 3), (std::vector<Vertex>{3, 8, 9, 12, 13}));
  for (Vertex v = 1; v <= 3; ++v) EXPECT_LE(ndown_set(lg, v).size(), 16u);
}

TEST(NdownSet, Guards) {
  const auto lg = build_gh(3, 2);
  EXPECT_THROW(ndown_set(lg, 0), std::invalid_argument);
  EXPECT_THROW(ndown_set(lg, 10), std::invalid_argument);
}

TEST(VerifyGhStructure, PassesOnGeneratedFamily) {
  for (std::uint32_t d = 3; d <= 5; ++d) {
    for (std::uint32_t h = 2; h <= 5; ++h) {
      const auto report = verify_gh_structure(build_gh(d, h));
      for (const auto& c : report.checks) EXPECT_TRUE(c.pass) << d << "," << h << ": " << c.name << " " << c.detail;
    }
  }
}

TEST(VerifyGhStructure, DetectsRemovedGreyEdge) {
  auto lg = build_gh(3, 2);
  std::vector<Edge> edges(lg.graph.edges().begin(), lg.graph.edges().end());
  const Edge dropped = edges.back();  // (9, 13)
  edges.pop_back();
  lg.graph = Graph::from_edges(lg.graph.order(), edges);
  const auto report = verify_gh_structure(lg);
  EXPECT_FALSE(report.passed());
  const auto* reg = report.find("regularity");
  ASSERT_NE(reg, nullptr);
  EXPECT_FALSE(reg->pass);
  EXPECT_EQ(reg->offending, (std::vector<Vertex>{dropped.u, dropped.v}));
}

TEST(VerifyGhStructure, DetectsReversedArc) {
  auto lg = build_gh(3, 2);
  std::swap(lg.orientation.arcs[0].tail, lg.orientation.arcs[0].head);
  const auto* c = verify_gh_structure(lg).find("orientation_toward_root");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->pass);
}

TEST(Bounds, Constants) {
  EXPECT_EQ(theorem1_constant(3), 624);
  EXPECT_EQ(theorem1_constant(4), 1424);
  EXPECT_EQ(lemma2_constant(3), 312);
  EXPECT_EQ(lemma2_constant(4), 712);
  EXPECT_EQ(theorem1_constant(5), 2 * lemma2_constant(5));
}

TEST(Bounds, Evaluations) {
  EXPECT_NEAR(theorem1_bound(3, 14), 294 - 624 * 14 * std::log2(14.0), 1e-6);
  EXPECT_NEAR(theorem1_bound(3, 14), -3.297e4, 5.0);
  EXPECT_NEAR(lemma2_bound(3, 14), 1.663e4, 5.0);
  EXPECT_NEAR(lemma2_bound(4, 81), 712.0 * 81 * 4, 1e-6);  // log_3 81 = 4
  EXPECT_THROW(theorem1_bound(2, 14), std::invalid_argument);
  EXPECT_THROW(lemma2_bound(3, 1), std::invalid_argument);
}

TEST(OrientationAggregate, HoldsOnSmallInstances) {
  for (std::uint32_t d = 3; d <= 4; ++d) {
    for (std::uint32_t h = 2; h <= 5; ++h) {
      const auto lg = build_gh(d, h);
      const auto per_edge = compare_all_edges(lg.graph);
      const std::uint64_t sum = canonical_orientation_sum(lg, per_edge);
      EXPECT_TRUE(within_bound(static_cast<double>(sum), lemma2_bound(d, lg.graph.order())));

      // Orientation bound for the canonical orientation, exactly, then the lower bound it implies.
      const std::int64_t lower = orientation_lower_bound(lg.graph, lg.orientation, per_edge);
      const std::uint64_t mo = mostar_index(lg.graph).total;
      EXPECT_LE(lower, static_cast<std::int64_t>(mo));
      EXPECT_EQ(lower, static_cast<std::int64_t>(lg.graph.order() * lg.graph.size() - 2 * sum));
      EXPECT_TRUE(at_least_bound(static_cast<double>(lower), theorem1_bound(d, lg.graph.order())));
    }
  }
}

TEST(Symmetry, MirrorIsAnAutomorphismPreservingContributions) {
  for (std::uint32_t d = 3; d <= 5; ++d) {
    for (std::uint32_t h = 2; h <= 4; ++h) {
      const auto lg = build_gh(d, h);
      const auto perm = mirror_permutation(lg);
      std::set<Vertex> image(perm.begin(), perm.end());
      ASSERT_EQ(image.size(), perm.size());
      const auto per_edge = compare_all_edges(lg.graph);
      for (std::size_t i = 0; i < lg.graph.size(); ++i) {
        const Edge e = lg.graph.edges()[i];
        const auto j = lg.graph.edge_index(perm[e.u], perm[e.v]);
        ASSERT_TRUE(j.has_value()) << "edge not mapped to an edge";
        EXPECT_EQ(per_edge[i].contribution(), per_edge[*j].contribution());
      }
    }
  }
}

TEST(Symmetry, GreysOfAGroupAreInterchangeable) {
  for (std::uint32_t d = 3; d <= 4; ++d) {
    const auto lg = build_gh(d, 3);
    const auto per_edge = compare_all_edges(lg.graph);
    for (const auto& grp : lg.grey_groups) {
      std::multiset<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> first;
      for (std::size_t k = 0; k < grp.greys.size(); ++k) {
        std::multiset<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> mine;
        for (const Vertex leaf : lg.graph.neighbors(grp.greys[k])) {
          // Leaf ids are below grey ids, so the grey is the edge's v side.
          const auto& c = per_edge[*lg.graph.edge_index(leaf, grp.greys[k])];
          mine.insert({c.n_vu, c.n_uv, c.equidistant});
        }
        if (k == 0) {
          first = mine;
        } else {
          EXPECT_EQ(mine, first);
        }
      }
    }
  }
}

}  // namespace
}  // namespace mostar
