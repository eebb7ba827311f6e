#include "aalpha/group.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "aalpha/number_theory.hpp"

namespace aalpha {

namespace {

std::string power_name(const std::string& base, int exp) {
  if (exp == 0) return "e";
  if (exp == 1) return base;
  return base + std::to_string(exp);
}

}  // namespace

FiniteGroup::FiniteGroup(int order, std::vector<int> table,
                         std::vector<std::string> names)
    : order_(order), table_(std::move(table)), names_(std::move(names)) {
  validate();
}

void FiniteGroup::validate() const {
  const int n = order_;
  if (n < 1) throw std::invalid_argument("group order must be positive");
  std::vector<bool> seen(n);
  for (int x = 0; x < n; ++x) {
    seen.assign(n, false);
    for (int y = 0; y < n; ++y) {
      int z = compose(x, y);
      if (z < 0 || z >= n || seen[z])
        throw std::logic_error("composition table row is not a permutation");
      seen[z] = true;
    }
    seen.assign(n, false);
    for (int y = 0; y < n; ++y) {
      int z = compose(y, x);
      if (seen[z])
        throw std::logic_error("composition table column is not a permutation");
      seen[z] = true;
    }
    if (compose(0, x) != x || compose(x, 0) != x)
      throw std::logic_error("index 0 is not an identity element");
  }
  // Associativity: exhaustive for small orders, random triples otherwise.
  auto check = [&](int a, int b, int c) {
    if (compose(compose(a, b), c) != compose(a, compose(b, c)))
      throw std::logic_error("composition table is not associative");
  };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eedc0de);
    for (int i = 0; i < 20000; ++i)
      check(static_cast<int>(rng() % n), static_cast<int>(rng() % n),
            static_cast<int>(rng() % n));
  }
}

int FiniteGroup::element_order(int x) const {
  if (x < 0 || x >= order_)
    throw std::invalid_argument("element index out of range");
  int k = 1, y = x;
  while (y != 0) {
    y = compose(y, x);
    ++k;
  }
  return k;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic: order must be positive");
  std::vector<int> table(static_cast<size_t>(n) * n);
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = std::to_string(i);
    for (int j = 0; j < n; ++j) table[static_cast<size_t>(i) * n + j] = (i + j) % n;
  }
  return FiniteGroup(n, std::move(table), std::move(names));
}

// Elements a^i b^j with 0 <= i < n, j in {0,1}, index i + n*j.
// Relations: a^n = b^2 = e, b a = a^-1 b.
FiniteGroup FiniteGroup::dihedral(int order) {
  if (order < 2 || order % 2 != 0)
    throw std::invalid_argument("dihedral: order must be a positive even number");
  const int n = order / 2;
  auto index = [n](int i, int j) { return ((i % n) + n) % n + n * j; };
  std::vector<int> table(static_cast<size_t>(order) * order);
  std::vector<std::string> names(order);
  for (int i = 0; i < n; ++i) {
    names[index(i, 0)] = power_name("a", i);
    names[index(i, 1)] = (i == 0) ? "b" : power_name("a", i) + "b";
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < 2; ++l) {
          int x = index(i, j), y = index(k, l);
          int z = (j == 0) ? index(i + k, l) : index(i - k, 1 - l);
          table[static_cast<size_t>(x) * order + y] = z;
        }
  return FiniteGroup(order, std::move(table), std::move(names));
}

// Elements a^i b^j with 0 <= i < 2n, j in {0,1}, index i + 2n*j.
// Relations: a^{2n} = e, b^2 = a^n, b a = a^-1 b.
FiniteGroup FiniteGroup::dicyclic(int order) {
  if (order < 4 || order % 4 != 0)
    throw std::invalid_argument("dicyclic: order must be a positive multiple of 4");
  const int n = order / 4;
  const int twon = 2 * n;
  auto index = [twon](int i, int j) { return ((i % twon) + twon) % twon + twon * j; };
  std::vector<int> table(static_cast<size_t>(order) * order);
  std::vector<std::string> names(order);
  for (int i = 0; i < twon; ++i) {
    names[index(i, 0)] = power_name("a", i);
    names[index(i, 1)] = (i == 0) ? "b" : power_name("a", i) + "b";
  }
  for (int i = 0; i < twon; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < twon; ++k)
        for (int l = 0; l < 2; ++l) {
          int x = index(i, j), y = index(k, l);
          int z;
          if (j == 0) {
            z = index(i + k, l);
          } else if (l == 0) {
            z = index(i - k, 1);
          } else {
            z = index(i - k + n, 0);  // b a^k b = a^{n-k}
          }
          table[static_cast<size_t>(x) * order + y] = z;
        }
  return FiniteGroup(order, std::move(table), std::move(names));
}

// Direct product of k copies of the cyclic group of order p; elements are
// base-p digit strings, composed digitwise.
FiniteGroup FiniteGroup::elementary_abelian(int p, int k) {
  if (!is_prime(p)) throw std::invalid_argument("elementary abelian: p must be prime");
  if (k < 1) throw std::invalid_argument("elementary abelian: k must be positive");
  long long order_ll = 1;
  for (int i = 0; i < k; ++i) {
    order_ll *= p;
    if (order_ll > kMaxVertices)
      throw std::invalid_argument("elementary abelian: p^k too large");
  }
  const int n = static_cast<int>(order_ll);
  std::vector<int> table(static_cast<size_t>(n) * n);
  std::vector<std::string> names(n);
  for (int x = 0; x < n; ++x) {
    std::string name;
    for (int d = 0, xx = x; d < k; ++d, xx /= p)
      name += std::to_string(xx % p) + (d + 1 < k ? "," : "");
    names[x] = "(" + name + ")";
    for (int y = 0; y < n; ++y) {
      int z = 0, pw = 1;
      for (int d = 0, xx = x, yy = y; d < k; ++d, xx /= p, yy /= p, pw *= p)
        z += ((xx % p) + (yy % p)) % p * pw;
      table[static_cast<size_t>(x) * n + y] = z;
    }
  }
  return FiniteGroup(n, std::move(table), std::move(names));
}

FiniteGroup build_group(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("group spec must look like kind:params");
  std::string kind = spec.substr(0, colon);
  std::vector<int> params;
  std::stringstream ss(spec.substr(colon + 1));
  for (std::string item; std::getline(ss, item, ',');) {
    size_t pos = 0;
    int value = std::stoi(item, &pos);
    if (pos != item.size())
      throw std::invalid_argument("bad group parameter: " + item);
    params.push_back(value);
  }
  auto want = [&](size_t k) {
    if (params.size() != k)
      throw std::invalid_argument("group kind " + kind + " takes " +
                                  std::to_string(k) + " parameter(s)");
  };
  if (kind == "cyclic") {
    want(1);
    return FiniteGroup::cyclic(params[0]);
  }
  if (kind == "dihedral") {
    want(1);
    return FiniteGroup::dihedral(params[0]);
  }
  if (kind == "dicyclic") {
    want(1);
    return FiniteGroup::dicyclic(params[0]);
  }
  if (kind == "elemabelian") {
    want(2);
    return FiniteGroup::elementary_abelian(params[0], params[1]);
  }
  throw std::invalid_argument("unknown group kind: " + kind);
}

PowerGraphResult power_graph(const FiniteGroup& g) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("power graph needs group order >= 2");
  // Cyclic subgroup membership per element; x ~ y iff y in <x> or x in <y>.
  std::vector<std::vector<bool>> in_span(n, std::vector<bool>(n, false));
  for (int x = 0; x < n; ++x) {
    int y = 0;
    do {
      in_span[x][y] = true;
      y = g.compose(y, x);
    } while (y != 0);
  }
  std::vector<Edge> edges;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (in_span[x][y] || in_span[y][x]) edges.emplace_back(x, y);
  Graph graph(n, edges, g.names());
  std::vector<int> universal = universal_vertices(graph);
  return PowerGraphResult{std::move(graph), std::move(universal)};
}

std::vector<int> universal_vertices(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == g.order() - 1) out.push_back(v);
  return out;
}

}  // namespace aalpha
