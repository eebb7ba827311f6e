#include "aalpha/number_theory.hpp"

#include <stdexcept>

namespace aalpha {

int Factorization::divisor_count() const {
  int count = 1;
  for (const auto& [p, e] : factors) count *= e + 1;
  return count;
}

Factorization factorize(long long n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  Factorization f;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.factors.emplace_back(p, e);
  }
  if (n > 1) f.factors.emplace_back(n, 1);
  return f;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

long long totient(long long n) {
  if (n < 1) throw std::invalid_argument("totient: n must be positive");
  long long result = n;
  for (const auto& [p, e] : factorize(n).factors) result -= result / p;
  return result;
}

std::vector<long long> proper_divisors(long long n) {
  if (n < 2) throw std::invalid_argument("proper_divisors: n must be >= 2");
  std::vector<long long> small, large;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

DivisorGraph divisor_graph(long long n) {
  if (n < 2) throw std::invalid_argument("divisor_graph: n must be >= 2");
  std::vector<long long> divisors = proper_divisors(n);
  const int r = static_cast<int>(divisors.size());
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (int i = 0; i < r; ++i) {
    labels.push_back(std::to_string(divisors[i]));
    for (int j = i + 1; j < r; ++j)
      if (divisors[j] % divisors[i] == 0) edges.emplace_back(i, j);
  }
  return DivisorGraph{Graph(r, edges, std::move(labels)), std::move(divisors)};
}

}  // namespace aalpha
