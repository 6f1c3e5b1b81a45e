#pragma once

#include <string>

#include "json.hpp"

#include "mostar/bfs_tree.hpp"
#include "mostar/extremal.hpp"
#include "mostar/mostar.hpp"
#include "mostar/oracle.hpp"

namespace mostar {

// Insertion-ordered so every document is byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const MostarResult& r);
/// Header "u,v,n_uv,n_vu,eq,contribution"; one row per edge when per_edge is present.
std::string to_csv(const MostarResult& r);

Json to_json(const CertificateReport& r);
Json to_json(const oracle::SearchResult& r);
Json to_json(const GhStructureReport& r);

/// Metadata sidecar for a generated G_H.
Json to_sidecar(const LabeledExtremalGraph& lg);

/// Rebuilds the labels of a G_H from its edge list and sidecar. Throws
/// std::invalid_argument when the sidecar does not describe a rooted tree
/// with grey completion over exactly the graph's vertices.
LabeledExtremalGraph from_sidecar(Graph graph, const Json& meta);

/// Compact dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace mostar
