#pragma once

#include <string>
#include <vector>

#include "aalpha/graph.hpp"
#include "aalpha/spectra.hpp"

namespace aalpha {

struct FixedEigenvalue {
  double value = 0.0;
  int multiplicity = 0;
};

// Structured spectrum: explicitly known eigenvalues plus a small auxiliary
// matrix whose eigenvalues (solved along the quotient path) complete the
// multiset. Total dimension always equals the order of the target graph.
struct SpectralPrediction {
  std::vector<FixedEigenvalue> fixed;
  Matrix aux;                  // 0x0 when the fixed part is the whole spectrum
  std::vector<int> aux_sizes;  // part sizes backing eig_quotient

  int fixed_dimension() const;
  int total_dimension() const;
  Spectrum assemble() const;
  std::string to_json() const;
};

// Sorts descending and merges near-identical values (relative 1e-12).
std::vector<FixedEigenvalue> canonical_fixed(std::vector<FixedEigenvalue> fixed);

// A regular graph reduced to what the joined-union theorem needs from it.
struct RegularPart {
  int order = 0;
  int degree = 0;
  std::vector<double> adjacency_eigenvalues;  // descending, front == degree
};

RegularPart part_from_graph(const Graph& g);
RegularPart complete_part(int t);
RegularPart empty_part(int t);
RegularPart cycle_part(int t);

// A_alpha spectrum of base[G_1,...,G_n]: the eigenvalues
// alpha*(r_i + alpha_i) + (1-alpha)*lambda_ik for k >= 2, plus the
// joined-union auxiliary matrix. Base order must be at least 2.
SpectralPrediction predict_joined_union(const Graph& base,
                                        const std::vector<RegularPart>& parts,
                                        Alpha a);

// K_{n_1,...,n_p}. Equal part sizes use the fully explicit spectrum
// (no auxiliary matrix).
SpectralPrediction predict_complete_multipartite(const std::vector<int>& sizes,
                                                 Alpha a);

SpectralPrediction predict_join_two(const RegularPart& g1, const RegularPart& g2,
                                    Alpha a);

// g1 joined to the disjoint union of g2 and g3.
SpectralPrediction predict_join_three(const RegularPart& g1, const RegularPart& g2,
                                      const RegularPart& g3, Alpha a);

SpectralPrediction predict_friendship(int n, Alpha a);          // K_1 v nK_2
SpectralPrediction predict_firefly(int p, int n, Alpha a);      // p K_1's, n-p K_2's
SpectralPrediction predict_wheel(int n, Alpha a);               // C_n v K_1
SpectralPrediction predict_complete_split(int clique, int total, Alpha a);
SpectralPrediction predict_cone(int cycle_len, int apex_count, Alpha a);
SpectralPrediction predict_complete_bipartite(int a_size, int b_size, Alpha a);

// Power graph of the cyclic group of order n >= 3, via the divisor-graph
// decomposition; prime powers degenerate to the complete-graph spectrum.
SpectralPrediction predict_power_cyclic(long long n, Alpha a);

SpectralPrediction predict_elementary_abelian(int p, int k, Alpha a);
SpectralPrediction predict_nonabelian_pq(int p, int q, Alpha a);
SpectralPrediction predict_dihedral_prime_power(int p, int z, Alpha a);
SpectralPrediction predict_dicyclic_two_power(int n, Alpha a);  // group order 4n

// Companion graph constructions the predictions target.
Graph friendship_graph(int n);
Graph firefly_graph(int p, int n);
Graph wheel_graph(int n);
Graph complete_split_graph(int clique, int total);
Graph cone_graph(int cycle_len, int apex_count);
Graph complete_multipartite_graph(const std::vector<int>& sizes);
Graph power_cyclic_construction(long long n);
Graph nonabelian_pq_power_graph(int p, int q);

struct UniversalBoundReport {
  int universal_count = 0;  // b
  int bound = 0;            // b - 1
  int observed = 0;         // multiplicity of alpha*n - 1 in the spectrum
  double eigenvalue = 0.0;  // alpha*n - 1
};

// alpha*n - 1 is an A_alpha eigenvalue of any graph with b universal
// vertices, with multiplicity at least b - 1.
UniversalBoundReport universal_multiplicity_bound(const Graph& g, Alpha a,
                                                  double tol = kDefaultTol);

}  // namespace aalpha
