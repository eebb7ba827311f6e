#pragma once

#include <string>
#include <vector>

#include "aalpha/graph.hpp"

namespace aalpha {

// Finite group as an explicit composition table. Rows/columns are element
// indices; identity is always index 0. Construction validates the table
// (Latin square, identity, associativity -- exhaustive up to order 64,
// sampled above that).
class FiniteGroup {
public:
  static FiniteGroup cyclic(int n);
  static FiniteGroup dihedral(int order);           // order = 2n
  static FiniteGroup dicyclic(int order);           // order = 4n
  static FiniteGroup elementary_abelian(int p, int k);  // order = p^k

  int order() const { return order_; }
  int identity() const { return 0; }
  int compose(int x, int y) const {
    return table_[static_cast<size_t>(x) * order_ + y];
  }
  int element_order(int x) const;
  const std::string& name(int x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }

private:
  FiniteGroup(int order, std::vector<int> table, std::vector<std::string> names);
  void validate() const;

  int order_ = 0;
  std::vector<int> table_;
  std::vector<std::string> names_;
};

// Parses "cyclic:6", "dihedral:12", "dicyclic:8", "elemabelian:3,2".
FiniteGroup build_group(const std::string& spec);

struct PowerGraphResult {
  Graph graph;
  std::vector<int> universal;  // vertices adjacent to all others
};

// Undirected power graph: distinct x, y adjacent iff one lies in the cyclic
// subgroup generated by the other.
PowerGraphResult power_graph(const FiniteGroup& g);

// Exactly the vertices of degree n-1.
std::vector<int> universal_vertices(const Graph& g);

}  // namespace aalpha
