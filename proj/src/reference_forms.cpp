#include "aalpha/reference_forms.hpp"

#include <cmath>
#include <stdexcept>

#include "aalpha/number_theory.hpp"

namespace aalpha {

namespace {

double phi(long long n) { return static_cast<double>(totient(n)); }

long long ipow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

Matrix reference_pq_aux(long long p, long long q, Alpha a) {
  if (!is_prime(p) || !is_prime(q) || p >= q)
    throw std::invalid_argument("reference_pq_aux: need primes p < q");
  const double alpha = a.value();
  const double fp = phi(p), fq = phi(q), fn = phi(p * q);
  Matrix m(3, 3);
  m(0, 0) = fp - 1 + alpha * (fn + 1);
  m(0, 1) = (1 - alpha) * (fn + 1);
  m(0, 2) = 0;
  m(1, 0) = (1 - alpha) * fp;
  m(1, 1) = fn + alpha * (fp + fq);
  m(1, 2) = (1 - alpha) * fq;
  m(2, 0) = 0;
  m(2, 1) = (1 - alpha) * (fn + 1);
  m(2, 2) = fq - 1 + alpha * (fn + 1);
  return m;
}

std::vector<long long> reference_pqr_divisor_order(long long p, long long q,
                                                   long long r) {
  return {p, q, r, p * q, p * r, q * r};
}

Matrix reference_pqr_aux(long long p, long long q, long long r, Alpha a) {
  if (!is_prime(p) || !is_prime(q) || !is_prime(r) || !(p < q && q < r))
    throw std::invalid_argument("reference_pqr_aux: need primes p < q < r");
  const double alpha = a.value();
  const long long n = p * q * r;
  const double fn = phi(n);
  const double fp = phi(p), fq = phi(q), fr = phi(r);
  const double fpq = phi(p * q), fpr = phi(p * r), fqr = phi(q * r);
  const double c1 = (1 - alpha) * (fn + 1);

  Matrix m(7, 7);
  m(0, 0) = fn + alpha * (n - fn - 1);
  const double row0[6] = {fp, fq, fr, fpq, fpr, fqr};
  for (int j = 0; j < 6; ++j) m(0, j + 1) = (1 - alpha) * row0[j];
  for (int i = 1; i < 7; ++i) m(i, 0) = c1;

  m(1, 1) = fp - 1 + alpha * (fn + 1 + fpr + fpq);
  m(1, 4) = (1 - alpha) * fpq;
  m(1, 5) = (1 - alpha) * fpr;

  m(2, 2) = fq - 1 + alpha * (fn + 1 + fpq + fqr);
  m(2, 4) = (1 - alpha) * fpq;
  m(2, 6) = (1 - alpha) * fqr;

  m(3, 3) = fr - 1 + alpha * (fn + 1 + fpr + fqr);
  m(3, 5) = (1 - alpha) * fpr;
  m(3, 6) = (1 - alpha) * fqr;

  m(4, 4) = fpq - 1 + alpha * (fn + 1 + fp + fq);
  m(4, 1) = (1 - alpha) * fp;
  m(4, 2) = (1 - alpha) * fq;

  m(5, 5) = fpr - 1 + alpha * (fn + 1 + fp + fr);
  m(5, 1) = (1 - alpha) * fp;
  m(5, 3) = (1 - alpha) * fr;

  m(6, 6) = fqr - 1 + alpha * (fn + 1 + fq + fr);
  m(6, 2) = (1 - alpha) * fq;
  m(6, 3) = (1 - alpha) * fr;
  return m;
}

std::vector<FixedEigenvalue> reference_pq_power_fixed(long long p, long long q,
                                                      int N, Alpha a) {
  if (!is_prime(p) || !is_prime(q) || p == q || N < 1)
    throw std::invalid_argument("reference_pq_power_fixed: need distinct primes, N >= 1");
  const double alpha = a.value();
  const long long n = p * ipow(q, N);
  const double fn = phi(n);
  const double fp = phi(p);
  const double qN = static_cast<double>(ipow(q, N));
  const double qNm1 = static_cast<double>(ipow(q, N - 1));

  std::vector<FixedEigenvalue> fixed;
  fixed.push_back({alpha * n - 1.0, static_cast<int>(totient(n))});
  // Class of p.
  if (totient(p) > 1)
    fixed.push_back({alpha * (fn + 1 + fp * qNm1) - 1.0,
                     static_cast<int>(totient(p)) - 1});
  // Classes of q^j, j = 1..N.
  for (int j = 1; j <= N; ++j) {
    const int mult = static_cast<int>(totient(ipow(q, j))) - 1;
    const double qjm1 = static_cast<double>(ipow(q, j - 1));
    if (mult > 0)
      fixed.push_back({alpha * (fn + qN + fp * (qNm1 - qjm1)) - 1.0, mult});
  }
  // Classes of p*q^j, j = 1..N-1.
  for (int j = 1; j <= N - 1; ++j) {
    const int mult = static_cast<int>(totient(p * ipow(q, j))) - 1;
    const double qj = static_cast<double>(ipow(q, j));
    if (mult > 0) fixed.push_back({alpha * (fn + qj + fp * qNm1) - 1.0, mult});
  }
  return canonical_fixed(std::move(fixed));
}

Matrix reference_elementary_abelian_aux(int p, int k, Alpha a) {
  if (!is_prime(p) || k < 1)
    throw std::invalid_argument("reference_elementary_abelian_aux: bad parameters");
  const double alpha = a.value();
  const int l = static_cast<int>((ipow(p, k) - 1) / (p - 1));
  Matrix m(l + 1, l + 1);
  m(0, 0) = alpha * l * (p - 1);
  for (int j = 1; j <= l; ++j) {
    m(0, j) = (1 - alpha) * (p - 1);
    m(j, 0) = 1 - alpha;
    m(j, j) = alpha + p - 2;
  }
  return m;
}

std::pair<double, double> reference_elementary_abelian_pair(int p, int k, Alpha a) {
  const double alpha = a.value();
  const double l = static_cast<double>((ipow(p, k) - 1) / (p - 1));
  const double base = alpha * (l * p + 1 - l) + p - 2;
  const double inner = alpha * l * p + p + alpha - alpha * l - 2;
  const double disc = inner * inner - 4 * l * (alpha * p * p - alpha * p - p + 1);
  const double root = std::sqrt(disc);
  return {base + root, base - root};
}

Matrix reference_nonabelian_pq_aux(int p, int q, Alpha a) {
  if (!is_prime(p) || !is_prime(q) || p >= q)
    throw std::invalid_argument("reference_nonabelian_pq_aux: need primes p < q");
  const double alpha = a.value();
  Matrix m(q + 2, q + 2);
  m(0, 0) = alpha * (static_cast<double>(p) * q - 1);
  for (int j = 1; j <= q; ++j) {
    m(0, j) = (1 - alpha) * (p - 1);
    m(j, 0) = 1 - alpha;
    m(j, j) = alpha + p - 2;
  }
  m(0, q + 1) = (1 - alpha) * (q - 1);
  m(q + 1, 0) = 1 - alpha;
  m(q + 1, q + 1) = alpha + q - 2;
  return m;
}

Matrix reference_dihedral_aux(int n, Alpha a) {
  const double alpha = a.value();
  Matrix m(3, 3);
  m(0, 0) = n - 2 + alpha;
  m(0, 1) = 1 - alpha;
  m(0, 2) = 0;
  m(1, 0) = (1 - alpha) * (n - 2);
  m(1, 1) = alpha * (2.0 * n - 1);
  m(1, 2) = (1 - alpha) * n;
  m(2, 0) = 0;
  m(2, 1) = 1 - alpha;
  m(2, 2) = alpha;
  return m;
}

std::array<double, 4> reference_dihedral_cubic(int n, Alpha a) {
  const double alpha = a.value();
  const double nn = n;
  // (alpha - x) * (x^2 + b x + c) - (1-alpha)^2 n (alpha + n - 2 - x)
  const double c = alpha * alpha - 2 * alpha + 2 * alpha * nn * nn +
                   alpha * alpha * nn - 3 * alpha * nn - nn + 2;
  const double b = -2 * alpha * nn - nn + 2;
  const double w = (1 - alpha) * (1 - alpha) * nn;
  std::array<double, 4> coeffs{};
  coeffs[3] = -1.0;
  coeffs[2] = alpha - b;
  coeffs[1] = alpha * b - c + w;
  coeffs[0] = alpha * c - w * (alpha + nn - 2);
  return coeffs;
}

Matrix reference_dicyclic_aux(int n, Alpha a) {
  const double alpha = a.value();
  Matrix m(3, 3);
  m(0, 0) = 1 + alpha * (4.0 * n - 2);
  m(0, 1) = (1 - alpha) * (2.0 * n - 2);
  m(0, 2) = 2.0 * n * (1 - alpha);
  m(1, 0) = 2 * (1 - alpha);
  m(1, 1) = 2.0 * n - 3 + alpha;
  m(1, 2) = 0;
  m(2, 0) = 2 * (1 - alpha);
  m(2, 1) = 0;
  m(2, 2) = 1 + 2 * alpha;
  return m;
}

std::vector<FixedEigenvalue> reference_dicyclic_fixed(int n, Alpha a) {
  const double alpha = a.value();
  std::vector<FixedEigenvalue> fixed;
  fixed.push_back({4 * alpha * n - 1, 1});
  fixed.push_back({2 * alpha * n - 1, 2 * n - 3});
  fixed.push_back({4 * alpha - 1, n});
  if (n - 2 > 0) fixed.push_back({1 + 2 * alpha, n - 2});
  return canonical_fixed(std::move(fixed));
}

std::pair<double, double> reference_complete_bipartite_pair(int a_size, int b_size,
                                                            Alpha al) {
  const double alpha = al.value();
  const double s = a_size + b_size;
  const double root = std::sqrt(alpha * alpha * s * s +
                                4.0 * a_size * b_size * (1 - 2 * alpha));
  return {0.5 * (alpha * s + root), 0.5 * (alpha * s - root)};
}

std::pair<double, double> reference_wheel_pair(int n, Alpha a) {
  const double alpha = a.value();
  const double nn = n;
  const double root = std::sqrt(alpha * alpha * (nn + 1) * (nn + 1) +
                                alpha * (4 - 12 * nn) + 4 * nn + 4);
  return {0.5 * (2 + alpha * (nn + 1) + root), 0.5 * (2 + alpha * (nn + 1) - root)};
}

std::pair<double, double> reference_complete_split_pair(int clique, int total) {
  const double w = clique, n = total;
  const double inner = 3 * (2 * w - n) - 2 * (w - 1);
  const double root = std::sqrt(inner * inner + 4 * w * (n - w));
  return {0.5 * (5 * n - 2 * w - 6 + root), 0.5 * (5 * n - 2 * w - 6 - root)};
}

std::pair<double, double> eigenvalues_2x2(const Matrix& m) {
  if (m.rows() != 2 || m.cols() != 2)
    throw std::invalid_argument("eigenvalues_2x2: need a 2x2 matrix");
  const double cross = m(0, 1) * m(1, 0);
  if (cross < 0)
    throw std::invalid_argument("eigenvalues_2x2: spectrum is not real");
  const double half_trace = 0.5 * (m(0, 0) + m(1, 1));
  const double half_gap = 0.5 * (m(0, 0) - m(1, 1));
  const double root = std::sqrt(half_gap * half_gap + cross);
  return {half_trace + root, half_trace - root};
}

}  // namespace aalpha
