#include "mostar/serialize.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mostar {

Json to_json(const MostarResult& r) {
  Json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["mostar"] = r.total;
  if (r.per_edge) {
    Json rows = Json::array();
    for (const auto& c : *r.per_edge) {
      rows.push_back(Json{{"u", c.u}, {"v", c.v}, {"n_uv", c.n_uv}, {"n_vu", c.n_vu}, {"eq", c.equidistant}});
    }
    j["per_edge"] = std::move(rows);
  }
  return j;
}

std::string to_csv(const MostarResult& r) {
  std::ostringstream out;
  out << "u,v,n_uv,n_vu,eq,contribution\n";
  if (r.per_edge) {
    for (const auto& c : *r.per_edge) {
      out << c.u << ',' << c.v << ',' << c.n_uv << ',' << c.n_vu << ',' << c.equidistant << ','
          << c.contribution() << '\n';
    }
  }
  return out.str();
}

Json to_json(const CertificateReport& r) {
  Json j;
  j["root"] = r.root ? Json(*r.root) : Json(nullptr);
  j["certificate"] = r.certificate_value;
  j["mostar"] = r.mostar_value;
  j["tight"] = r.tight();
  Json failed = Json::array();
  for (const auto& e : r.failed_edges()) {
    failed.push_back(Json{{"child", e.child},
                          {"parent", e.parent},
                          {"depth", e.depth},
                          {"subtree", e.subtree},
                          {"n_parent", e.closer_parent},
                          {"n_child", e.closer_child},
                          {"bound", e.bound},
                          {"actual", e.actual}});
  }
  j["failed_edges"] = std::move(failed);
  return j;
}

Json to_json(const oracle::SearchResult& r) {
  Json j;
  j["n"] = r.n;
  j["delta"] = r.delta;
  j["max_mostar"] = r.max_mostar;
  Json edges = Json::array();
  for (const Edge& e : r.witness.edges()) edges.push_back(Json::array({e.u, e.v}));
  j["witness_edges"] = std::move(edges);
  j["graphs_examined"] = r.graphs_examined;
  return j;
}

Json to_json(const GhStructureReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}, {"offending", c.offending}});
  }
  return Json{{"passed", r.passed()}, {"checks", std::move(checks)}};
}

Json to_sidecar(const LabeledExtremalGraph& lg) {
  Json j;
  j["delta"] = lg.delta;
  j["H"] = lg.h_param;
  Json black = Json::array();
  Json grey = Json::array();
  for (Vertex v = 0; v < lg.role.size(); ++v) (lg.role[v] == Role::kBlack ? black : grey).push_back(v);
  j["black"] = std::move(black);
  j["grey"] = std::move(grey);
  Json heights = Json::object();
  for (Vertex v = 0; v < lg.black_height.size(); ++v) heights[std::to_string(v)] = lg.black_height[v];
  j["black_height"] = std::move(heights);
  Json groups = Json::array();
  for (const auto& g : lg.grey_groups) groups.push_back(Json::array({g.leaves, g.greys}));
  j["grey_groups"] = std::move(groups);
  Json arcs = Json::array();
  for (const Arc& a : lg.orientation.arcs) arcs.push_back(Json::array({a.tail, a.head}));
  j["orientation"] = std::move(arcs);
  return j;
}

namespace {

struct SidecarError : std::invalid_argument {
  explicit SidecarError(const std::string& what) : std::invalid_argument("metadata sidecar: " + what) {}
};

[[noreturn]] void bad_sidecar(const std::string& what) { throw SidecarError(what); }

}  // namespace

LabeledExtremalGraph from_sidecar(Graph graph, const Json& meta) {
  LabeledExtremalGraph lg;
  const std::size_t n = graph.order();
  try {
    lg.delta = meta.at("delta").get<std::uint32_t>();
    lg.h_param = meta.at("H").get<std::uint32_t>();
    const auto black = meta.at("black").get<std::vector<Vertex>>();
    const auto grey = meta.at("grey").get<std::vector<Vertex>>();

    // Black ids must be 0..B-1 so the tree arrays can be indexed by id.
    for (std::size_t i = 0; i < black.size(); ++i) {
      if (black[i] != i) bad_sidecar("black ids must be 0..B-1 in order");
    }
    if (black.size() + grey.size() != n) bad_sidecar("black and grey ids do not cover the graph");
    lg.role.assign(n, Role::kBlack);
    std::vector<bool> seen(n, false);
    for (Vertex v : black) seen[v] = true;
    for (Vertex v : grey) {
      if (v >= n || seen[v]) bad_sidecar("grey id " + std::to_string(v) + " invalid or repeated");
      seen[v] = true;
      lg.role[v] = Role::kGrey;
    }

    const std::size_t b = black.size();
    lg.black_height.assign(b, 0);
    for (const auto& [key, value] : meta.at("black_height").items()) {
      const auto v = static_cast<std::size_t>(std::stoul(key));
      if (v >= b) bad_sidecar("black_height names non-black vertex " + key);
      lg.black_height[v] = value.get<std::uint32_t>();
    }

    for (const auto& grp : meta.at("grey_groups")) {
      GreyGroup g;
      g.leaves = grp.at(0).get<std::vector<Vertex>>();
      g.greys = grp.at(1).get<std::vector<Vertex>>();
      lg.leaf_order.insert(lg.leaf_order.end(), g.leaves.begin(), g.leaves.end());
      lg.grey_groups.push_back(std::move(g));
    }

    for (const auto& arc : meta.at("orientation")) {
      lg.orientation.arcs.push_back(Arc{arc.at(0).get<Vertex>(), arc.at(1).get<Vertex>()});
    }
  } catch (const SidecarError&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    bad_sidecar(e.what());
  } catch (const std::logic_error& e) {
    // std::stoul on a malformed black_height key
    bad_sidecar(e.what());
  }

  // The black tree is the set of black->black arcs, read child->parent.
  const std::size_t b = lg.black_height.size();
  RootedTreeShape& t = lg.tree;
  t.parent.assign(b, kNoVertex);
  t.depth.assign(b, 0);
  t.children.assign(b, {});
  for (const Arc& a : lg.orientation.arcs) {
    if (a.tail >= n || a.head >= n) bad_sidecar("orientation arc out of range");
    if (a.tail < b && a.head < b) {
      if (t.parent[a.tail] != kNoVertex) bad_sidecar("black vertex with two parents");
      t.parent[a.tail] = a.head;
      t.children[a.head].push_back(a.tail);
    }
  }
  std::vector<Vertex> roots;
  for (Vertex v = 0; v < b; ++v) {
    if (t.parent[v] == kNoVertex) roots.push_back(v);
    std::sort(t.children[v].begin(), t.children[v].end());
  }
  if (b > 0 && roots.size() != 1) bad_sidecar("black arcs do not form a single rooted tree");
  if (b > 0) {
    t.root = roots.front();
    std::vector<Vertex> order{t.root};
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (const Vertex c : t.children[order[i]]) {
        t.depth[c] = t.depth[order[i]] + 1;
        t.height = std::max(t.height, t.depth[c]);
        order.push_back(c);
      }
    }
    if (order.size() != b) bad_sidecar("black arcs contain a cycle");
  }
  lg.graph = std::move(graph);
  return lg;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

}  // namespace mostar
