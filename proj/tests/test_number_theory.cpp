#include <doctest.h>

#include <numeric>

#include "aalpha/number_theory.hpp"
#include "oracles.hpp"

using namespace aalpha;

namespace {

// Brute-force coprime count, the oracle behind the frozen totient values.
long long totient_brute(long long n) {
  long long count = 0;
  for (long long k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

}  // namespace

TEST_SUITE("number_theory") {

TEST_CASE("totient basics") {
  CHECK(totient(1) == 1);
  CHECK(totient(7) == 6);
  CHECK(totient(6) == 2);  // brute count of coprime residues
  CHECK(totient(6) == totient_brute(6));
  CHECK_THROWS_AS(totient(0), std::invalid_argument);
}

TEST_CASE("totient agrees with brute force up to 500") {
  for (long long n = 1; n <= 500; ++n) CHECK(totient(n) == totient_brute(n));
}

TEST_CASE("totient is multiplicative on coprime pairs") {
  for (long long x = 2; x <= 30; ++x)
    for (long long y = 2; y <= 30; ++y)
      if (std::gcd(x, y) == 1) CHECK(totient(x * y) == totient(x) * totient(y));
}

TEST_CASE("divisor totients sum to n") {
  for (long long s = 2; s <= 10000; ++s) {
    long long sum = totient(1) + totient(s);
    for (long long d : proper_divisors(s)) sum += totient(d);
    CHECK(sum == s);
  }
}

TEST_CASE("prime-power totient partial sums") {
  for (long long p : {2, 3, 5, 7, 11, 13}) {
    long long pk = 1, sum = 0;
    for (int k = 1; k <= 6; ++k) {
      pk *= p;
      sum += totient(pk);
      CHECK(sum == pk - 1);
    }
  }
}

TEST_CASE("proper divisors") {
  CHECK(proper_divisors(12) == std::vector<long long>{2, 3, 4, 6});
  CHECK(proper_divisors(9) == std::vector<long long>{3});
  CHECK(proper_divisors(7).empty());
  CHECK_THROWS_AS(proper_divisors(1), std::invalid_argument);
}

TEST_CASE("divisor count formula") {
  for (long long n = 2; n <= 2000; ++n) {
    Factorization f = factorize(n);
    CHECK(static_cast<int>(proper_divisors(n).size()) == f.divisor_count() - 2);
  }
}

TEST_CASE("factorize reconstructs n with increasing primes") {
  for (long long n : {2LL, 60LL, 97LL, 1024LL, 999999937LL, 735134400LL}) {
    Factorization f = factorize(n);
    long long prod = 1;
    long long last_prime = 0;
    for (const auto& [p, e] : f.factors) {
      CHECK(p > last_prime);
      CHECK(is_prime(p));
      CHECK(e >= 1);
      last_prime = p;
      for (int i = 0; i < e; ++i) prod *= p;
    }
    CHECK(prod == n);
  }
}

TEST_CASE("divisor graph structure") {
  SUBCASE("n = 12 is the path 4-2-6-3") {
    DivisorGraph dg = divisor_graph(12);
    CHECK(dg.divisors == std::vector<long long>{2, 3, 4, 6});
    CHECK(dg.graph.edge_count() == 3);
    auto at = [&](long long d) {
      for (int i = 0; i < 4; ++i)
        if (dg.divisors[i] == d) return i;
      FAIL("divisor missing");
      return -1;
    };
    CHECK(dg.graph.adjacent(at(2), at(4)));
    CHECK(dg.graph.adjacent(at(2), at(6)));
    CHECK(dg.graph.adjacent(at(3), at(6)));
    CHECK_FALSE(dg.graph.adjacent(at(2), at(3)));
    CHECK_FALSE(dg.graph.adjacent(at(4), at(6)));
    CHECK_FALSE(dg.graph.adjacent(at(3), at(4)));
  }
  SUBCASE("n = 6 is two isolated vertices") {
    DivisorGraph dg = divisor_graph(6);
    CHECK(dg.divisors == std::vector<long long>{2, 3});
    CHECK(dg.graph.edge_count() == 0);
  }
  SUBCASE("n = 9 is a single vertex") {
    DivisorGraph dg = divisor_graph(9);
    CHECK(dg.graph.order() == 1);
    CHECK(dg.graph.edge_count() == 0);
  }
}

TEST_CASE("divisor graph is connected off the excluded shapes") {
  // Connected whenever n is neither a prime power nor a product of two
  // distinct primes.
  for (long long n = 2; n <= 300; ++n) {
    Factorization f = factorize(n);
    const bool prime_power = f.factors.size() == 1;
    const bool two_primes =
        f.factors.size() == 2 && f.factors[0].second == 1 && f.factors[1].second == 1;
    if (prime_power || two_primes) continue;
    DivisorGraph dg = divisor_graph(n);
    auto dist = oracle::bfs_distances(dg.graph, 0);
    for (int d : dist) CHECK(d >= 0);
  }
}

}  // TEST_SUITE
