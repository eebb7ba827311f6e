#include "aalpha/predict.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "aalpha/group.hpp"
#include "aalpha/number_theory.hpp"
#include "aalpha/partition.hpp"

namespace aalpha {

namespace {

constexpr double kPi = 3.14159265358979323846;

void append_fixed(std::vector<FixedEigenvalue>& fixed, double value, int mult) {
  if (mult <= 0) return;
  for (auto& f : fixed)
    if (std::abs(f.value - value) <= 1e-12 * std::max(1.0, std::abs(value))) {
      f.multiplicity += mult;
      return;
    }
  fixed.push_back({value, mult});
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

int SpectralPrediction::fixed_dimension() const {
  int d = 0;
  for (const auto& f : fixed) d += f.multiplicity;
  return d;
}

int SpectralPrediction::total_dimension() const {
  return fixed_dimension() + aux.rows();
}

Spectrum SpectralPrediction::assemble() const {
  std::vector<double> values;
  values.reserve(total_dimension());
  for (const auto& f : fixed)
    for (int k = 0; k < f.multiplicity; ++k) values.push_back(f.value);
  if (aux.rows() > 0) {
    Spectrum rest = eig_quotient(aux, aux_sizes);
    values.insert(values.end(), rest.values.begin(), rest.values.end());
  }
  return Spectrum(std::move(values));
}

std::string SpectralPrediction::to_json() const {
  std::ostringstream out;
  out << "{\"fixed\":[";
  for (size_t i = 0; i < fixed.size(); ++i) {
    if (i) out << ',';
    out << "{\"value\":" << format_double(fixed[i].value)
        << ",\"mult\":" << fixed[i].multiplicity << '}';
  }
  out << "],\"aux\":[";
  for (int i = 0; i < aux.rows(); ++i) {
    if (i) out << ',';
    out << '[';
    for (int j = 0; j < aux.cols(); ++j) {
      if (j) out << ',';
      out << format_double(aux(i, j));
    }
    out << ']';
  }
  out << "],\"aux_sizes\":[";
  for (size_t i = 0; i < aux_sizes.size(); ++i) {
    if (i) out << ',';
    out << aux_sizes[i];
  }
  out << "]}";
  return out.str();
}

std::vector<FixedEigenvalue> canonical_fixed(std::vector<FixedEigenvalue> fixed) {
  std::sort(fixed.begin(), fixed.end(),
            [](const FixedEigenvalue& a, const FixedEigenvalue& b) {
              return a.value > b.value;
            });
  std::vector<FixedEigenvalue> merged;
  for (const auto& f : fixed) {
    if (!merged.empty() &&
        std::abs(merged.back().value - f.value) <=
            1e-12 * std::max(1.0, std::abs(f.value)))
      merged.back().multiplicity += f.multiplicity;
    else
      merged.push_back(f);
  }
  return merged;
}

RegularPart part_from_graph(const Graph& g) {
  DegreeInfo info = degree_info(g);
  if (!info.regular_degree)
    throw std::invalid_argument("part graph is not regular");
  Spectrum s = eig_symmetric(adjacency_matrix(g));
  return RegularPart{g.order(), *info.regular_degree, std::move(s.values)};
}

RegularPart complete_part(int t) {
  if (t < 1) throw std::invalid_argument("complete_part: order must be positive");
  std::vector<double> eigs(t, -1.0);
  eigs[0] = t - 1.0;
  return RegularPart{t, t - 1, std::move(eigs)};
}

RegularPart empty_part(int t) {
  if (t < 1) throw std::invalid_argument("empty_part: order must be positive");
  return RegularPart{t, 0, std::vector<double>(t, 0.0)};
}

RegularPart cycle_part(int t) {
  if (t < 3) throw std::invalid_argument("cycle_part: order must be >= 3");
  std::vector<double> eigs(t);
  for (int k = 0; k < t; ++k) eigs[k] = 2.0 * std::cos(2.0 * kPi * k / t);
  std::sort(eigs.begin(), eigs.end(), std::greater<>());
  return RegularPart{t, 2, std::move(eigs)};
}

SpectralPrediction predict_joined_union(const Graph& base,
                                        const std::vector<RegularPart>& parts,
                                        Alpha a) {
  const int n = base.order();
  if (n < 2)
    throw std::invalid_argument("predict_joined_union: base order must be >= 2");
  if (static_cast<int>(parts.size()) != n)
    throw std::invalid_argument("predict_joined_union: one part per base vertex");
  const double alpha = a.value();

  std::vector<int> sizes(n), degrees(n);
  for (int i = 0; i < n; ++i) {
    const RegularPart& part = parts[i];
    if (part.order < 1 ||
        static_cast<int>(part.adjacency_eigenvalues.size()) != part.order)
      throw std::invalid_argument("predict_joined_union: malformed part " +
                                  std::to_string(i));
    if (std::abs(part.adjacency_eigenvalues.front() - part.degree) > 1e-9)
      throw std::invalid_argument(
          "predict_joined_union: part " + std::to_string(i) +
          " violates regularity (top eigenvalue != degree)");
    sizes[i] = part.order;
    degrees[i] = part.degree;
  }
  std::vector<int> alpha_i = neighbor_size_sums(base, sizes);

  SpectralPrediction pred;
  for (int i = 0; i < n; ++i) {
    const double shift = alpha * (parts[i].degree + alpha_i[i]);
    for (int k = 1; k < parts[i].order; ++k)
      append_fixed(pred.fixed,
                   shift + (1.0 - alpha) * parts[i].adjacency_eigenvalues[k], 1);
  }
  pred.fixed = canonical_fixed(std::move(pred.fixed));
  pred.aux = joined_union_aux_matrix({base, sizes, degrees}, a);
  pred.aux_sizes = sizes;
  return pred;
}

SpectralPrediction predict_complete_multipartite(const std::vector<int>& sizes,
                                                 Alpha a) {
  const int p = static_cast<int>(sizes.size());
  if (p < 2)
    throw std::invalid_argument("complete multipartite needs at least 2 parts");
  for (int s : sizes)
    if (s < 1) throw std::invalid_argument("multipartite part sizes must be positive");
  const double alpha = a.value();

  const bool equal = std::all_of(sizes.begin(), sizes.end(),
                                 [&](int s) { return s == sizes[0]; });
  if (equal) {
    // All parts of size t: the auxiliary matrix collapses by symmetry.
    const int t = sizes[0];
    Matrix B(1, 1), C(1, 1);
    B(0, 0) = alpha * t * (p - 1);
    C(0, 0) = t * (1.0 - alpha);
    BlockSymmetricSpec spec =
        BlockSymmetricSpec::symmetric(Matrix(0, 0), Matrix(0, 1), B, C, p);
    BlockReduction red = block_symmetric_reduce(spec);
    SpectralPrediction pred;
    append_fixed(pred.fixed, alpha * t * (p - 1), t * p - p);
    append_fixed(pred.fixed, red.repeated.at(0), p - 1);  // t(alpha p - 1)
    append_fixed(pred.fixed, red.reduced(0, 0), 1);       // t(p - 1)
    pred.fixed = canonical_fixed(std::move(pred.fixed));
    return pred;
  }

  std::vector<RegularPart> parts;
  parts.reserve(p);
  for (int s : sizes) parts.push_back(empty_part(s));
  return predict_joined_union(complete_graph(p), parts, a);
}

SpectralPrediction predict_join_two(const RegularPart& g1, const RegularPart& g2,
                                    Alpha a) {
  return predict_joined_union(complete_graph(2), {g1, g2}, a);
}

SpectralPrediction predict_join_three(const RegularPart& g1, const RegularPart& g2,
                                      const RegularPart& g3, Alpha a) {
  // g1 v (g2 u g3) is the joined union over a path with g1 in the middle.
  return predict_joined_union(path_graph(3), {g2, g1, g3}, a);
}

SpectralPrediction predict_friendship(int n, Alpha a) {
  if (n < 1) throw std::invalid_argument("friendship: n must be positive");
  std::vector<RegularPart> parts{complete_part(1)};
  for (int i = 0; i < n; ++i) parts.push_back(complete_part(2));
  return predict_joined_union(star_graph(n + 1), parts, a);
}

SpectralPrediction predict_firefly(int p, int n, Alpha a) {
  if (n < 1 || p < 0 || p > n)
    throw std::invalid_argument("firefly: need 0 <= p <= n, n >= 1");
  std::vector<RegularPart> parts{complete_part(1)};
  for (int i = 0; i < p; ++i) parts.push_back(complete_part(1));
  for (int i = 0; i < n - p; ++i) parts.push_back(complete_part(2));
  return predict_joined_union(star_graph(n + 1), parts, a);
}

SpectralPrediction predict_wheel(int n, Alpha a) {
  if (n < 3) throw std::invalid_argument("wheel: rim must have >= 3 vertices");
  return predict_join_two(cycle_part(n), complete_part(1), a);
}

SpectralPrediction predict_complete_split(int clique, int total, Alpha a) {
  if (clique < 1 || total <= clique)
    throw std::invalid_argument("complete split: need 1 <= clique < total");
  return predict_join_two(complete_part(clique), empty_part(total - clique), a);
}

SpectralPrediction predict_cone(int cycle_len, int apex_count, Alpha a) {
  if (cycle_len < 3 || apex_count < 1)
    throw std::invalid_argument("cone: need cycle >= 3 and apex count >= 1");
  return predict_join_two(cycle_part(cycle_len), empty_part(apex_count), a);
}

SpectralPrediction predict_complete_bipartite(int a_size, int b_size, Alpha a) {
  if (a_size < 1 || b_size < 1)
    throw std::invalid_argument("complete bipartite: part sizes must be positive");
  return predict_join_two(empty_part(a_size), empty_part(b_size), a);
}

SpectralPrediction predict_power_cyclic(long long n, Alpha a) {
  if (n < 3) throw std::invalid_argument("power_cyclic: n must be >= 3");
  if (n > kMaxVertices)
    throw std::invalid_argument("power_cyclic: n exceeds supported graph order");
  const double alpha = a.value();
  std::vector<long long> divisors = proper_divisors(n);
  if (divisors.empty()) {
    // Prime n: the power graph is complete.
    SpectralPrediction pred;
    append_fixed(pred.fixed, alpha * n - 1.0, static_cast<int>(n) - 1);
    pred.aux = Matrix(1, 1);
    pred.aux(0, 0) = static_cast<double>(n - 1);
    pred.aux_sizes = {static_cast<int>(n)};
    return pred;
  }
  DivisorGraph dg = divisor_graph(n);
  Graph h = join(complete_graph(1), dg.graph);
  std::vector<RegularPart> parts;
  parts.push_back(complete_part(static_cast<int>(totient(n)) + 1));
  for (long long d : divisors)
    parts.push_back(complete_part(static_cast<int>(totient(d))));
  return predict_joined_union(h, parts, a);
}

SpectralPrediction predict_elementary_abelian(int p, int k, Alpha a) {
  if (!is_prime(p)) throw std::invalid_argument("elementary abelian: p must be prime");
  if (k < 1) throw std::invalid_argument("elementary abelian: k must be positive");
  long long order = 1;
  for (int i = 0; i < k; ++i) order *= p;
  const int l = static_cast<int>((order - 1) / (p - 1));
  std::vector<RegularPart> parts{complete_part(1)};
  for (int i = 0; i < l; ++i) parts.push_back(complete_part(p - 1));
  return predict_joined_union(star_graph(l + 1), parts, a);
}

SpectralPrediction predict_nonabelian_pq(int p, int q, Alpha a) {
  if (!is_prime(p) || !is_prime(q) || p >= q)
    throw std::invalid_argument("nonabelian pq: need primes p < q");
  if (q % p != 1)
    throw std::invalid_argument(
        "nonabelian pq: a non-abelian group of order pq needs q = 1 (mod p)");
  std::vector<RegularPart> parts{complete_part(1)};
  for (int i = 0; i < q; ++i) parts.push_back(complete_part(p - 1));
  parts.push_back(complete_part(q - 1));
  return predict_joined_union(star_graph(q + 2), parts, a);
}

SpectralPrediction predict_dihedral_prime_power(int p, int z, Alpha a) {
  if (!is_prime(p) || z < 1)
    throw std::invalid_argument("dihedral: need prime p and z >= 1");
  long long n = 1;
  for (int i = 0; i < z; ++i) n *= p;
  if (n < 3)
    throw std::invalid_argument("dihedral: rotation order p^z must be >= 3");
  if (2 * n > kMaxVertices)
    throw std::invalid_argument("dihedral: group order too large");
  const int ni = static_cast<int>(n);
  return predict_joined_union(
      path_graph(3),
      {complete_part(ni - 1), complete_part(1), empty_part(ni)}, a);
}

SpectralPrediction predict_dicyclic_two_power(int n, Alpha a) {
  if (n < 2 || !is_power_of_two(n))
    throw std::invalid_argument("dicyclic: n must be a power of 2, n >= 2");
  if (4 * n > kMaxVertices)
    throw std::invalid_argument("dicyclic: group order too large");
  std::vector<RegularPart> parts{complete_part(2), complete_part(2 * n - 2)};
  for (int i = 0; i < n; ++i) parts.push_back(complete_part(2));
  return predict_joined_union(star_graph(n + 2), parts, a);
}

Graph friendship_graph(int n) {
  if (n < 1) throw std::invalid_argument("friendship: n must be positive");
  std::vector<Graph> parts{complete_graph(1)};
  for (int i = 0; i < n; ++i) parts.push_back(complete_graph(2));
  return joined_union({star_graph(n + 1), parts});
}

Graph firefly_graph(int p, int n) {
  if (n < 1 || p < 0 || p > n)
    throw std::invalid_argument("firefly: need 0 <= p <= n, n >= 1");
  std::vector<Graph> parts{complete_graph(1)};
  for (int i = 0; i < p; ++i) parts.push_back(complete_graph(1));
  for (int i = 0; i < n - p; ++i) parts.push_back(complete_graph(2));
  return joined_union({star_graph(n + 1), parts});
}

Graph wheel_graph(int n) { return join(cycle_graph(n), complete_graph(1)); }

Graph complete_split_graph(int clique, int total) {
  if (clique < 1 || total <= clique)
    throw std::invalid_argument("complete split: need 1 <= clique < total");
  return join(complete_graph(clique), empty_graph(total - clique));
}

Graph cone_graph(int cycle_len, int apex_count) {
  return join(cycle_graph(cycle_len), empty_graph(apex_count));
}

Graph complete_multipartite_graph(const std::vector<int>& sizes) {
  if (sizes.size() < 2)
    throw std::invalid_argument("complete multipartite needs at least 2 parts");
  std::vector<Graph> parts;
  parts.reserve(sizes.size());
  for (int s : sizes) parts.push_back(empty_graph(s));
  return joined_union({complete_graph(static_cast<int>(sizes.size())), parts});
}

Graph power_cyclic_construction(long long n) {
  if (n < 3) throw std::invalid_argument("power_cyclic: n must be >= 3");
  std::vector<long long> divisors = proper_divisors(n);
  if (divisors.empty()) return complete_graph(static_cast<int>(n));
  DivisorGraph dg = divisor_graph(n);
  Graph h = join(complete_graph(1), dg.graph);
  std::vector<Graph> parts;
  parts.push_back(complete_graph(static_cast<int>(totient(n)) + 1));
  for (long long d : divisors)
    parts.push_back(complete_graph(static_cast<int>(totient(d))));
  return joined_union({h, parts});
}

Graph nonabelian_pq_power_graph(int p, int q) {
  if (!is_prime(p) || !is_prime(q) || p >= q || q % p != 1)
    throw std::invalid_argument("nonabelian pq: need primes p < q with q = 1 (mod p)");
  std::vector<Graph> parts{complete_graph(1)};
  for (int i = 0; i < q; ++i) parts.push_back(complete_graph(p - 1));
  parts.push_back(complete_graph(q - 1));
  return joined_union({star_graph(q + 2), parts});
}

UniversalBoundReport universal_multiplicity_bound(const Graph& g, Alpha a,
                                                  double tol) {
  if (g.order() < 3)
    throw std::invalid_argument("universal_multiplicity_bound: need order >= 3");
  UniversalBoundReport report;
  report.universal_count = static_cast<int>(universal_vertices(g).size());
  report.bound = report.universal_count - 1;
  report.eigenvalue = a.value() * g.order() - 1.0;
  Spectrum s = eig_symmetric(a_alpha_matrix(g, a));
  report.observed = multiplicity_of(s, report.eigenvalue, tol);
  return report;
}

}  // namespace aalpha
