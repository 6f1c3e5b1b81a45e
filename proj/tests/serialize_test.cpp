#include "mostar/serialize.hpp"

#include <gtest/gtest.h>

#include "graph_builders.hpp"

namespace mostar {
namespace {

using testing::cycle;
using testing::path;

TEST(Serialize, MostarResultJson) {
  EXPECT_EQ(dump(to_json(mostar_index(path(3)))), "{\"n\":3,\"m\":2,\"mostar\":2}\n");
  EXPECT_EQ(to_json(mostar_index(path(2), true)).dump(),
            R"({"n":2,"m":1,"mostar":0,"per_edge":[{"u":0,"v":1,"n_uv":1,"n_vu":1,"eq":0}]})");
}

TEST(Serialize, MostarResultCsv) {
  EXPECT_EQ(to_csv(mostar_index(path(4), true)),
            "u,v,n_uv,n_vu,eq,contribution\n"
            "0,1,1,3,0,2\n"
            "1,2,2,2,0,0\n"
            "2,3,3,1,0,2\n");
  EXPECT_EQ(to_csv(mostar_index(path(4))), "u,v,n_uv,n_vu,eq,contribution\n");
}

TEST(Serialize, CertificateJson) {
  EXPECT_EQ(to_json(mostar_upper_certificate(path(3), 1)).dump(),
            R"({"root":1,"certificate":2,"mostar":2,"tight":true,"failed_edges":[]})");
  EXPECT_EQ(to_json(empty_certificate()).dump(),
            R"({"root":null,"certificate":0,"mostar":0,"tight":true,"failed_edges":[]})");
}

TEST(Serialize, SearchResultJson) {
  EXPECT_EQ(to_json(oracle::max_mostar(4, 3, true, 1)).dump(),
            R"({"n":4,"delta":3,"max_mostar":6,"witness_edges":[[0,3],[1,3],[2,3]],"graphs_examined":38})");
}

TEST(Serialize, StructureReportJson) {
  const Json j = to_json(verify_gh_structure(build_gh(3, 2)));
  EXPECT_TRUE(j.at("passed").get<bool>());
  EXPECT_EQ(j.at("checks").size(), 7u);
  EXPECT_EQ(j.at("checks").at(0).at("name"), "regularity");
}

TEST(Sidecar, RoundTrip) {
  for (std::uint32_t d = 3; d <= 5; ++d) {
    for (std::uint32_t h = 2; h <= 4; ++h) {
      const auto lg = build_gh(d, h);
      const Json meta = Json::parse(dump(to_sidecar(lg)));
      const auto back = from_sidecar(parse_graph(to_edge_list(lg.graph)), meta);
      EXPECT_EQ(back.graph, lg.graph);
      EXPECT_EQ(back.delta, d);
      EXPECT_EQ(back.h_param, h);
      EXPECT_EQ(back.role, lg.role);
      EXPECT_EQ(back.black_height, lg.black_height);
      EXPECT_EQ(back.leaf_order, lg.leaf_order);
      EXPECT_EQ(back.tree.parent, lg.tree.parent);
      EXPECT_EQ(back.tree.depth, lg.tree.depth);
      EXPECT_EQ(back.tree.children, lg.tree.children);
      EXPECT_EQ(back.tree.height, lg.tree.height);
      EXPECT_EQ(back.orientation.arcs, lg.orientation.arcs);
      EXPECT_TRUE(verify_gh_structure(back).passed());
      EXPECT_EQ(dump(to_sidecar(back)), dump(meta));
    }
  }
}

TEST(Sidecar, RejectsInconsistentMetadata) {
  const auto lg = build_gh(3, 2);
  const Json good = to_sidecar(lg);

  Json missing = good;
  missing.erase("orientation");
  EXPECT_THROW(from_sidecar(lg.graph, missing), std::invalid_argument);

  Json short_grey = good;
  short_grey["grey"].erase(short_grey["grey"].size() - 1);
  EXPECT_THROW(from_sidecar(lg.graph, short_grey), std::invalid_argument);

  Json two_roots = good;
  auto& arcs = two_roots["orientation"];
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (arcs[i][0] == 1) arcs.erase(i);
  }
  EXPECT_THROW(from_sidecar(lg.graph, two_roots), std::invalid_argument);

  EXPECT_THROW(from_sidecar(cycle(4), good), std::invalid_argument);
  EXPECT_THROW(from_sidecar(lg.graph, Json::parse("[1,2]")), std::invalid_argument);
}

}  // namespace
}  // namespace mostar
