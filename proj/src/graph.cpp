#include "aalpha/graph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace aalpha {

namespace {

std::string index_label(int i) { return "v" + std::to_string(i); }

// Merge labels from two operands; a labelled side keeps its names, the other
// side gets positional fallbacks. Returns empty when neither side is labelled.
std::vector<std::string> merge_labels(const Graph& g, const Graph& h) {
  if (!g.has_labels() && !h.has_labels()) return {};
  std::vector<std::string> out;
  out.reserve(static_cast<size_t>(g.order()) + h.order());
  for (int i = 0; i < g.order(); ++i)
    out.push_back(g.has_labels() ? g.labels()[i] : index_label(i));
  for (int i = 0; i < h.order(); ++i)
    out.push_back(h.has_labels() ? h.labels()[i] : index_label(g.order() + i));
  return out;
}

}  // namespace

Graph::Graph(int n, const std::vector<Edge>& edges,
             std::vector<std::string> labels)
    : n_(n) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
  if (n > kMaxVertices)
    throw std::invalid_argument("graph order " + std::to_string(n) +
                                " exceeds the supported maximum " +
                                std::to_string(kMaxVertices));
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw std::invalid_argument("label list length must equal graph order");
  adj_.assign(static_cast<size_t>(n) * n, 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (!adjacent(u, v)) {
      adj_[static_cast<size_t>(u) * n + v] = 1;
      adj_[static_cast<size_t>(v) * n + u] = 1;
      ++m_;
    }
  }
  labels_ = std::move(labels);
}

int Graph::degree(int v) const {
  int d = 0;
  for (int u = 0; u < n_; ++u) d += adj_[static_cast<size_t>(v) * n_ + u];
  return d;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < n_; ++u)
    if (adj_[static_cast<size_t>(v) * n_ + u]) out.push_back(u);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

Graph build_basic(BasicKind kind, int n) {
  if (n <= 0) throw std::invalid_argument("graph order must be positive");
  std::vector<Edge> edges;
  switch (kind) {
    case BasicKind::complete:
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      break;
    case BasicKind::empty:
      break;
    case BasicKind::cycle:
      if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
      for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
      break;
    case BasicKind::path:
      for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
      break;
    case BasicKind::star:
      for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
      break;
  }
  return Graph(n, edges);
}

Graph complete_graph(int n) { return build_basic(BasicKind::complete, n); }
Graph empty_graph(int n) { return build_basic(BasicKind::empty, n); }
Graph cycle_graph(int n) { return build_basic(BasicKind::cycle, n); }
Graph path_graph(int n) { return build_basic(BasicKind::path, n); }
Graph star_graph(int n) { return build_basic(BasicKind::star, n); }

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = g.edges();
  for (const auto& [u, v] : h.edges())
    edges.emplace_back(g.order() + u, g.order() + v);
  return Graph(g.order() + h.order(), edges, merge_labels(g, h));
}

Graph join(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = g.edges();
  for (const auto& [u, v] : h.edges())
    edges.emplace_back(g.order() + u, g.order() + v);
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) edges.emplace_back(u, g.order() + v);
  return Graph(g.order() + h.order(), edges, merge_labels(g, h));
}

Graph joined_union(const JoinedUnionSpec& spec) {
  const int n = spec.base.order();
  if (static_cast<int>(spec.parts.size()) != n)
    throw std::invalid_argument("joined union needs one part per base vertex");
  std::vector<int> offset(n + 1, 0);
  bool labelled = false;
  for (int i = 0; i < n; ++i) {
    if (spec.parts[i].order() < 1)
      throw std::invalid_argument("joined union parts must be non-empty");
    offset[i + 1] = offset[i] + spec.parts[i].order();
    labelled = labelled || spec.parts[i].has_labels();
  }
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (const auto& [u, v] : spec.parts[i].edges())
      edges.emplace_back(offset[i] + u, offset[i] + v);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!spec.base.adjacent(i, j)) continue;
      for (int u = offset[i]; u < offset[i + 1]; ++u)
        for (int v = offset[j]; v < offset[j + 1]; ++v) edges.emplace_back(u, v);
    }
  std::vector<std::string> labels;
  if (labelled) {
    for (int i = 0; i < n; ++i)
      for (int u = 0; u < spec.parts[i].order(); ++u)
        labels.push_back(spec.parts[i].has_labels()
                             ? spec.parts[i].labels()[u]
                             : index_label(offset[i] + u));
  }
  return Graph(offset[n], edges, std::move(labels));
}

DegreeInfo degree_info(const Graph& g) {
  DegreeInfo info;
  info.degrees = g.degrees();
  info.edge_count = g.edge_count();
  if (g.order() > 0 &&
      std::all_of(info.degrees.begin(), info.degrees.end(),
                  [&](int d) { return d == info.degrees[0]; }))
    info.regular_degree = info.degrees[0];

  // Diameter by breadth-first search from every vertex.
  const int n = g.order();
  if (n == 0) return info;
  int diameter = 0;
  bool connected = true;
  std::vector<int> dist(n);
  for (int s = 0; s < n && connected; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::queue<int> q;
    q.push(s);
    int reached = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbors(u))
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          diameter = std::max(diameter, dist[v]);
          q.push(v);
          ++reached;
        }
    }
    connected = reached == n;
  }
  if (connected) info.diameter = diameter;
  return info;
}

Graph read_edge_list(std::istream& in) {
  int n = 0, m = 0;
  if (!(in >> n >> m)) throw std::runtime_error("edge list: missing header");
  if (n < 0 || m < 0) throw std::runtime_error("edge list: negative header");
  std::vector<Edge> edges;
  edges.reserve(m);
  std::vector<unsigned char> seen(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v))
      throw std::runtime_error("edge list: expected " + std::to_string(m) +
                               " edges, got " + std::to_string(i));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::runtime_error("edge list: endpoint out of range at edge " +
                               std::to_string(i));
    if (u == v)
      throw std::runtime_error("edge list: loop at edge " + std::to_string(i));
    if (seen[static_cast<size_t>(u) * n + v])
      throw std::runtime_error("edge list: duplicate edge at line " +
                               std::to_string(i + 2));
    seen[static_cast<size_t>(u) * n + v] = 1;
    seen[static_cast<size_t>(v) * n + u] = 1;
    edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace aalpha
