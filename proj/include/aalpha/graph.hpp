#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace aalpha {

// Hard cap on graph order; everything here is dense n x n storage.
inline constexpr int kMaxVertices = 4096;

using Edge = std::pair<int, int>;

// Simple undirected graph: symmetric adjacency, zero diagonal, optional
// vertex labels. Immutable after construction; all operators below return
// new graphs.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n, const std::vector<Edge>& edges = {},
                 std::vector<std::string> labels = {});

  int order() const { return n_; }
  int edge_count() const { return m_; }
  bool adjacent(int u, int v) const {
    return adj_[static_cast<size_t>(u) * n_ + v] != 0;
  }
  int degree(int v) const;
  std::vector<int> degrees() const;
  std::vector<int> neighbors(int v) const;
  std::vector<Edge> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }

private:
  int n_ = 0;
  int m_ = 0;
  std::vector<unsigned char> adj_;
  std::vector<std::string> labels_;
};

enum class BasicKind { complete, empty, cycle, path, star };

// K_n, empty graph, C_n, P_n, K_{1,n-1}. Rejects n = 0 and cycles with n < 3.
Graph build_basic(BasicKind kind, int n);

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int n);  // n vertices total, center is vertex 0

Graph disjoint_union(const Graph& g, const Graph& h);

// Usual join: all cross edges between g and h. Equals K_2[g, h].
Graph join(const Graph& g, const Graph& h);

// Base graph on n vertices plus one part per base vertex.
struct JoinedUnionSpec {
  Graph base;
  std::vector<Graph> parts;  // parts.size() == base.order(), each order >= 1
};

// G[G_1,...,G_n]: union of the parts plus complete bipartite links V_i x V_j
// for every base edge v_i v_j. Parts are laid out in base-vertex order,
// each keeping its internal vertex order, so the natural partition is
// positionally reconstructible.
Graph joined_union(const JoinedUnionSpec& spec);

struct DegreeInfo {
  std::vector<int> degrees;
  std::optional<int> regular_degree;  // set when all degrees equal
  int edge_count = 0;
  std::optional<int> diameter;  // absent when disconnected (or n == 0)
};

DegreeInfo degree_info(const Graph& g);

// Edge-list text format: line 1 "n m", then m lines "u v" (0-based).
// Reader rejects loops, duplicate edges and out-of-range indices.
Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace aalpha
