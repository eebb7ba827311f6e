#pragma once

#include <utility>
#include <vector>

#include "aalpha/graph.hpp"

namespace aalpha {

// Prime-exponent pairs in increasing prime order.
struct Factorization {
  std::vector<std::pair<long long, int>> factors;
  int divisor_count() const;  // product of (exponent + 1)
};

// Trial division; intended for n up to ~1e9.
Factorization factorize(long long n);

bool is_prime(long long n);

// Euler's totient. Rejects n < 1.
long long totient(long long n);

// All d with 1 < d < n and d | n, ascending. Rejects n < 2.
std::vector<long long> proper_divisors(long long n);

// Vertices are the proper divisors of n (ascending), edges by divisibility.
struct DivisorGraph {
  Graph graph;
  std::vector<long long> divisors;
};

DivisorGraph divisor_graph(long long n);

}  // namespace aalpha
