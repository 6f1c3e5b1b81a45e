#include "mostar/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "mostar/detail/bfs_kernel.hpp"

namespace mostar {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n >= kMaxVertices) {
    throw std::invalid_argument("vertex count " + std::to_string(n) + " exceeds supported width");
  }
  Graph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") has an endpoint outside 0.." + std::to_string(n) + "-1");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    }
    g.edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  if (auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end()); dup != g.edges_.end()) {
    throw std::invalid_argument("duplicate edge (" + std::to_string(dup->u) + "," +
                                std::to_string(dup->v) + ")");
  }

  std::vector<std::size_t> degree(n, 0);
  for (const Edge& e : g.edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.adjacency_.resize(2 * g.edges_.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // Lexicographic edge order fills each list ascending: for vertex x, the
  // smaller neighbors arrive as (w, x) before the larger ones as (x, w).
  for (const Edge& e : g.edges_) {
    g.adjacency_[fill[e.v]++] = e.u;
  }
  for (const Edge& e : g.edges_) {
    g.adjacency_[fill[e.u]++] = e.v;
  }
  return g;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t v = 0; v < n_; ++v) best = std::max(best, offsets_[v + 1] - offsets_[v]);
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
  if (u >= n_ || v >= n_) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<EdgeIndex> Graph::edge_index(Vertex u, Vertex v) const noexcept {
  if (u > v) std::swap(u, v);
  const Edge key{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<EdgeIndex>(it - edges_.begin());
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_count(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "malformed token '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::optional<std::uint64_t> declared_n;
  std::optional<std::uint64_t> declared_m;
  std::size_t header_line = 0;
  bool seen_content = false;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;
  std::uint64_t max_id = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (tokens.front() == "p") {
      if (seen_content) throw ParseError(line_no, "header must be the first line");
      if (tokens.size() != 3) throw ParseError(line_no, "header must read 'p <n> <m>'");
      declared_n = parse_count(tokens[1], line_no);
      declared_m = parse_count(tokens[2], line_no);
      if (*declared_n >= kMaxVertices) throw ParseError(line_no, "vertex count too large");
      header_line = line_no;
      seen_content = true;
      continue;
    }
    seen_content = true;
    if (tokens.size() != 2) throw ParseError(line_no, "expected '<u> <v>'");
    const std::uint64_t u = parse_count(tokens[0], line_no);
    const std::uint64_t v = parse_count(tokens[1], line_no);
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    const std::uint64_t hi = std::max(u, v);
    if (declared_n && hi >= *declared_n) {
      throw ParseError(line_no, "vertex id " + std::to_string(hi) + " not below declared n=" +
                                    std::to_string(*declared_n));
    }
    if (hi + 1 >= kMaxVertices) throw ParseError(line_no, "vertex id too large");
    max_id = std::max(max_id, hi);
    edges.push_back(u < v ? Edge{static_cast<Vertex>(u), static_cast<Vertex>(v)}
                          : Edge{static_cast<Vertex>(v), static_cast<Vertex>(u)});
    edge_lines.push_back(line_no);
  }

  if (declared_m && *declared_m != edges.size()) {
    throw ParseError(header_line, "header declares " + std::to_string(*declared_m) +
                                      " edges but body has " + std::to_string(edges.size()));
  }

  // Locate the first duplicate by input line, so the diagnostic points at it.
  std::vector<std::size_t> idx(edges.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return edges[a] < edges[b]; });
  std::optional<std::size_t> dup_line;
  for (std::size_t k = 1; k < idx.size(); ++k) {
    if (edges[idx[k]] == edges[idx[k - 1]]) {
      const std::size_t l = edge_lines[idx[k]];
      if (!dup_line || l < *dup_line) dup_line = l;
    }
  }
  if (dup_line) throw ParseError(*dup_line, "duplicate edge");

  const std::size_t n = declared_n ? *declared_n : (edges.empty() ? 0 : max_id + 1);
  return Graph::from_edges(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

DistanceRow::DistanceRow(Vertex source, std::size_t n) : source_(source) {
  detail::with_distance_width(n, [&]<typename Dist>() {
    dist_ = std::vector<Dist>(n, detail::kUnreachable<Dist>);
  });
}

std::size_t DistanceRow::size() const noexcept {
  return std::visit([](const auto& d) { return d.size(); }, dist_);
}

std::optional<std::uint32_t> DistanceRow::at(Vertex v) const noexcept {
  return std::visit(
      [v](const auto& d) -> std::optional<std::uint32_t> {
        using Dist = typename std::decay_t<decltype(d)>::value_type;
        if (d[v] == detail::kUnreachable<Dist>) return std::nullopt;
        return d[v];
      },
      dist_);
}

std::size_t DistanceRow::width() const noexcept {
  return std::visit([](const auto& d) { return sizeof(d[0]); }, dist_);
}

DistanceRow bfs_distances(const Graph& g, Vertex s) {
  if (s >= g.order()) {
    throw std::out_of_range("source " + std::to_string(s) + " out of range");
  }
  DistanceRow row(s, g.order());
  std::visit(
      [&](auto& d) {
        using Dist = typename std::decay_t<decltype(d)>::value_type;
        detail::BfsKernel<Dist>(g).run(s, d);
      },
      row.dist_);
  return row;
}

std::vector<Vertex> component_labels(const Graph& g) {
  const std::size_t n = g.order();
  constexpr Vertex kNone = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> label(n, kNone);
  std::vector<Vertex> stack;
  Vertex next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] != kNone) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (const Vertex y : g.neighbors(x)) {
        if (label[y] == kNone) {
          label[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return label;
}

Component largest_component(const Graph& g) {
  const auto label = component_labels(g);
  if (label.empty()) return {};
  const Vertex count = *std::max_element(label.begin(), label.end()) + 1;
  std::vector<std::size_t> sizes(count, 0);
  for (const Vertex l : label) ++sizes[l];
  // Labels follow smallest contained vertex, so the first maximum wins ties.
  const auto best = static_cast<Vertex>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  Component c;
  c.vertices.reserve(sizes[best]);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (label[v] == best) c.vertices.push_back(v);
  }
  return c;
}

bool is_connected(const Graph& g) { return largest_component(g).order() == g.order(); }

DegreeReport validate_degree(const Graph& g, std::size_t delta) {
  DegreeReport r;
  r.delta = delta;
  r.regular = true;
  for (Vertex v = 0; v < g.order(); ++v) {
    const std::size_t d = g.degree(v);
    if (d > delta) r.offending.push_back(v);
    if (d != delta) r.regular = false;
  }
  r.passes = r.offending.empty();
  return r;
}

}  // namespace mostar
