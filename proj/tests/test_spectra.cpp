#include <doctest.h>

#include <cmath>
#include <random>

#include "aalpha/graph.hpp"
#include "aalpha/spectra.hpp"
#include "oracles.hpp"

using namespace aalpha;

namespace {

Matrix random_symmetric(std::mt19937_64& rng, int d) {
  Matrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      const double v = (static_cast<double>(rng() % 2000) - 1000.0) / 100.0;
      m(i, j) = v;
      m(j, i) = v;
    }
  return m;
}

void check_close(const std::vector<double>& got, const std::vector<double>& want,
                 double tol) {
  REQUIRE(got.size() == want.size());
  for (size_t i = 0; i < got.size(); ++i)
    CHECK(std::abs(got[i] - want[i]) <= tol);
}

}  // namespace

TEST_SUITE("spectra") {

TEST_CASE("matrix builders agree with definitions") {
  Graph g = cycle_graph(4);
  Matrix a = adjacency_matrix(g);
  Matrix d = degree_matrix(g);
  Matrix l = laplacian_matrix(g);
  Matrix q = signless_laplacian_matrix(g);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      CHECK(l(i, j) == d(i, j) - a(i, j));
      CHECK(q(i, j) == d(i, j) + a(i, j));
    }
}

TEST_CASE("a_alpha endpoints are exact") {
  Graph g = join(complete_graph(2), empty_graph(3));
  Matrix a = adjacency_matrix(g);
  Matrix d = degree_matrix(g);
  Matrix q = signless_laplacian_matrix(g);
  Matrix a0 = a_alpha_matrix(g, Alpha(0.0));
  Matrix a1 = a_alpha_matrix(g, Alpha(1.0));
  Matrix ah = a_alpha_matrix(g, Alpha(0.5));
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < g.order(); ++j) {
      CHECK(a0(i, j) == a(i, j));
      CHECK(a1(i, j) == d(i, j));
      CHECK(2.0 * ah(i, j) == q(i, j));
    }
}

TEST_CASE("a_alpha difference identity, exact on a dyadic alpha grid") {
  std::mt19937_64 rng(7);
  Graph g = joined_union({cycle_graph(4),
                          {complete_graph(2), empty_graph(3), complete_graph(1),
                           cycle_graph(3)}});
  Matrix l = laplacian_matrix(g);
  for (int trial = 0; trial < 5; ++trial) {
    const double alpha = static_cast<double>(rng() % 17) / 16.0;
    const double gamma = static_cast<double>(rng() % 17) / 16.0;
    Matrix ma = a_alpha_matrix(g, Alpha(alpha));
    Matrix mg = a_alpha_matrix(g, Alpha(gamma));
    for (int i = 0; i < g.order(); ++i)
      for (int j = 0; j < g.order(); ++j)
        CHECK(ma(i, j) - mg(i, j) == (alpha - gamma) * l(i, j));
  }
}

TEST_CASE("alpha outside [0,1] is rejected") {
  CHECK_THROWS_AS(Alpha(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(Alpha(1.1), std::invalid_argument);
}

TEST_CASE("eig_symmetric frozen examples") {
  // A(K_3): characteristic polynomial (x-2)(x+1)^2.
  check_close(eig_symmetric(adjacency_matrix(complete_graph(3))).values,
              {2.0, -1.0, -1.0}, 1e-10);
  // A(C_4).
  check_close(eig_symmetric(adjacency_matrix(cycle_graph(4))).values,
              {2.0, 0.0, 0.0, -2.0}, 1e-10);
  // Zero matrix.
  check_close(eig_symmetric(Matrix(4, 4)).values, {0, 0, 0, 0}, 0.0);
  // A(P_3): x^3 - 2x.
  const double r2 = std::sqrt(2.0);
  check_close(eig_symmetric(adjacency_matrix(path_graph(3))).values,
              {r2, 0.0, -r2}, 1e-10);
}

TEST_CASE("eig_symmetric rejects asymmetric input") {
  Matrix m(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 0.5;
  CHECK_THROWS_AS(eig_symmetric(m), std::invalid_argument);
}

TEST_CASE("eig_symmetric of a diagonal matrix returns the diagonal exactly") {
  Graph g = star_graph(5);
  Spectrum s = eig_symmetric(degree_matrix(g));
  std::vector<int> deg = g.degrees();
  std::sort(deg.begin(), deg.end(), std::greater<>());
  REQUIRE(s.dim() == 5);
  for (int i = 0; i < 5; ++i) CHECK(s.values[i] == static_cast<double>(deg[i]));
}

TEST_CASE("eig_symmetric vs characteristic polynomial oracle") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 3);  // 2..4
    Matrix m = random_symmetric(rng, d);
    std::vector<double> expected = oracle::eigenvalues(m);
    check_close(eig_symmetric(m).values, expected,
                1e-7 * std::max(1.0, m.frobenius_norm()));
  }
}

TEST_CASE("trace and Frobenius identities") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 12);
    Matrix m = random_symmetric(rng, d);
    Spectrum s = eig_symmetric(m);
    double sum = 0, sq = 0;
    for (double v : s.values) {
      sum += v;
      sq += v * v;
    }
    const double scale = 1e-9 * std::max(1.0, m.frobenius_norm());
    CHECK(std::abs(sum - m.trace()) <= scale);
    CHECK(std::abs(sq - m.frobenius_norm() * m.frobenius_norm()) <=
          scale * std::max(1.0, m.frobenius_norm()));
  }
}

TEST_CASE("spectrum of A_1 equals the sorted degree sequence exactly") {
  Graph g = joined_union(
      {path_graph(3), {complete_graph(3), empty_graph(2), cycle_graph(4)}});
  Spectrum s = eig_symmetric(a_alpha_matrix(g, Alpha(1.0)));
  std::vector<int> deg = g.degrees();
  std::sort(deg.begin(), deg.end(), std::greater<>());
  for (int i = 0; i < s.dim(); ++i)
    CHECK(s.values[i] == static_cast<double>(deg[i]));
}

TEST_CASE("doubled half-alpha spectrum equals the signless Laplacian spectrum") {
  Graph g = join(cycle_graph(5), complete_graph(2));
  Spectrum half = eig_symmetric(a_alpha_matrix(g, Alpha(0.5)));
  Spectrum q = eig_symmetric(signless_laplacian_matrix(g));
  std::vector<double> doubled;
  for (double v : half.values) doubled.push_back(2.0 * v);
  CHECK(spectra_match(Spectrum(doubled), q, 1e-8).matched);
}

TEST_CASE("largest eigenvalue is simple for connected graphs, alpha < 1") {
  const Graph graphs[] = {complete_graph(5), cycle_graph(6), star_graph(7),
                          join(cycle_graph(3), empty_graph(4))};
  for (const Graph& g : graphs)
    for (double alpha : {0.0, 0.25, 0.5, 0.75, 0.99}) {
      Spectrum s = eig_symmetric(a_alpha_matrix(g, Alpha(alpha)));
      REQUIRE(s.dim() >= 2);
      CHECK(s.values[0] - s.values[1] > kDefaultTol);
    }
}

TEST_CASE("eig_quotient examples") {
  SUBCASE("join quotient at alpha=0.3") {
    Matrix m(2, 2);
    m(0, 0) = 0.3;
    m(0, 1) = 0.7;
    m(1, 0) = 0.7;
    m(1, 1) = 0.3;
    check_close(eig_quotient(m, {1, 1}).values, {1.0, -0.4}, 1e-12);
  }
  SUBCASE("K_{2,3} quotient") {
    Matrix m(2, 2);
    m(0, 1) = 3;
    m(1, 0) = 2;
    const double r6 = std::sqrt(6.0);
    check_close(eig_quotient(m, {2, 3}).values, {r6, -r6}, 1e-12);
  }
  SUBCASE("C_4 opposite-pair quotient") {
    Matrix m(2, 2);
    m(0, 1) = 2;
    m(1, 0) = 2;
    check_close(eig_quotient(m, {2, 2}).values, {2.0, -2.0}, 1e-12);
  }
  SUBCASE("malformed aux matrix is rejected") {
    Matrix m(2, 2);
    m(0, 1) = 3;
    m(1, 0) = 2;
    CHECK_THROWS_AS(eig_quotient(m, {1, 1}), std::invalid_argument);
  }
}

TEST_CASE("eig_quotient agrees with the characteristic polynomial oracle") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 25; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 3);
    std::vector<int> sizes(d);
    for (int& s : sizes) s = 1 + static_cast<int>(rng() % 4);
    // Quotient-shaped matrix: m_ij = c_ij * n_j with symmetric c.
    Matrix m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j) {
        const double c = (i == j) ? 0.0 : static_cast<double>(rng() % 4) / 2.0;
        m(i, j) = c * sizes[j];
        m(j, i) = c * sizes[i];
      }
    for (int i = 0; i < d; ++i)
      m(i, i) = static_cast<double>(rng() % 10);
    check_close(eig_quotient(m, sizes).values, oracle::eigenvalues(m), 1e-7);
  }
}

TEST_CASE("eig_balanced handles diagonally symmetrizable matrices") {
  // Star-like pattern with asymmetric magnitudes: [[0, 6], [1, 0]] ~ sqrt(6).
  Matrix m(2, 2);
  m(0, 1) = 6;
  m(1, 0) = 1;
  const double r6 = std::sqrt(6.0);
  check_close(eig_balanced(m).values, {r6, -r6}, 1e-12);

  Matrix bad(2, 2);
  bad(0, 1) = 1;
  bad(1, 0) = -1;  // rotation: complex spectrum
  CHECK_THROWS_AS(eig_balanced(bad), std::invalid_argument);
}

TEST_CASE("spectra_match tolerance behaviour") {
  Spectrum a({1.0, 0.0});
  Spectrum b({1.0 + 5e-9, 0.0});
  CHECK(spectra_match(a, b, 1e-8).matched);

  Spectrum c({1.0, 1.0, 0.0});
  Spectrum d({1.0, 0.0, 0.0});
  MatchReport r = spectra_match(c, d, 1e-8);
  CHECK_FALSE(r.matched);
  CHECK_FALSE(r.unmatched.empty());

  std::vector<double> same(50);
  for (int i = 0; i < 50; ++i) same[i] = i * 0.5;
  MatchReport identical = spectra_match(Spectrum(same), Spectrum(same), 1e-8);
  CHECK(identical.matched);
  CHECK(identical.max_error == 0.0);

  MatchReport shape = spectra_match(Spectrum({1.0}), Spectrum({1.0, 2.0}), 1e-8);
  CHECK_FALSE(shape.matched);
}

TEST_CASE("multiplicity_of") {
  CHECK(multiplicity_of(Spectrum({2.0, -1.0, -1.0}), -1.0, 1e-8) == 2);
  CHECK(multiplicity_of(Spectrum({0.0, 0.0, 0.0}), 1.0, 1e-8) == 0);
  CHECK(multiplicity_of(Spectrum({1.0 + 1e-10, 1.0, 0.5}), 1.0, 1e-8) == 2);
}

TEST_CASE("polynomial_real_roots") {
  // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
  check_close(polynomial_real_roots({-6, 11, -6, 1}), {3.0, 2.0, 1.0}, 1e-9);
  // x^2 + 1 has no real roots
  CHECK_THROWS_AS(polynomial_real_roots({1, 0, 1}), std::runtime_error);
}

TEST_CASE("format_double round-trips") {
  for (double v : {0.5, 1.0 / 3.0, -2.7182818284590452, 1e-17}) {
    CHECK(std::stod(format_double(v)) == v);
  }
}

}  // TEST_SUITE
