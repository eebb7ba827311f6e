#include "aalpha/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "aalpha/graph.hpp"

namespace aalpha {

Matrix::Matrix(int rows, int cols, double fill)
    : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, fill) {
  if (rows < 0 || cols < 0)
    throw std::invalid_argument("matrix dimensions must be non-negative");
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double Matrix::trace() const {
  double t = 0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double Matrix::frobenius_norm() const {
  double s = 0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

double Matrix::max_abs() const {
  double s = 0;
  for (double v : a_) s = std::max(s, std::abs(v));
  return s;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::equals(const Matrix& other, double tol) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return false;
  return max_abs_diff(other) <= tol;
}

double Matrix::max_abs_diff(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix shape mismatch");
  double d = 0;
  for (size_t i = 0; i < a_.size(); ++i)
    d = std::max(d, std::abs(a_[i] - other.a_[i]));
  return d;
}

Alpha::Alpha(double v) : v_(v) {
  if (!(v >= 0.0 && v <= 1.0))
    throw std::invalid_argument("alpha must lie in [0, 1]");
}

Spectrum::Spectrum(std::vector<double> v) : values(std::move(v)) {
  std::sort(values.begin(), values.end(), std::greater<>());
}

double Spectrum::radius() const {
  double r = 0;
  for (double v : values) r = std::max(r, std::abs(v));
  return r;
}

Matrix adjacency_matrix(const Graph& g) {
  const int n = g.order();
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.adjacent(i, j)) m(i, j) = 1.0;
  return m;
}

Matrix degree_matrix(const Graph& g) {
  const int n = g.order();
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = g.degree(i);
  return m;
}

Matrix laplacian_matrix(const Graph& g) {
  const int n = g.order();
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = g.degree(i);
    for (int j = 0; j < n; ++j)
      if (g.adjacent(i, j)) m(i, j) = -1.0;
  }
  return m;
}

Matrix signless_laplacian_matrix(const Graph& g) {
  const int n = g.order();
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = g.degree(i);
    for (int j = 0; j < n; ++j)
      if (g.adjacent(i, j)) m(i, j) = 1.0;
  }
  return m;
}

Matrix a_alpha_matrix(const Graph& g, Alpha a) {
  const int n = g.order();
  const double alpha = a.value();
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = alpha * g.degree(i);
    for (int j = 0; j < n; ++j)
      if (g.adjacent(i, j)) m(i, j) = 1.0 - alpha;
  }
  return m;
}

namespace {

double offdiagonal_frobenius(const Matrix& m) {
  double s = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (i != j) s += m(i, j) * m(i, j);
  return std::sqrt(s);
}

void require_symmetric(const Matrix& m, double tol, const char* who) {
  if (!m.square()) throw std::invalid_argument(std::string(who) + ": matrix not square");
  const double scale = std::max(1.0, m.max_abs());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i + 1; j < m.cols(); ++j)
      if (std::abs(m(i, j) - m(j, i)) > tol * scale)
        throw std::invalid_argument(std::string(who) + ": matrix not symmetric");
}

}  // namespace

Spectrum eig_symmetric(const Matrix& m) {
  require_symmetric(m, 1e-12, "eig_symmetric");
  const int d = m.rows();
  if (d == 0) return Spectrum{};

  Matrix a = m;
  const double stop = 1e-12 * (1.0 + m.frobenius_norm());
  const int max_sweeps = 64;
  int sweep = 0;
  while (offdiagonal_frobenius(a) >= stop) {
    if (++sweep > max_sweeps)
      throw std::runtime_error("eig_symmetric: Jacobi did not converge");
    for (int p = 0; p < d - 1; ++p)
      for (int q = p + 1; q < d; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0)
                             ? 1.0 / (theta + std::sqrt(theta * theta + 1.0))
                             : -1.0 / (-theta + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (int r = 0; r < d; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = arp - s * (arq + tau * arp);
          a(p, r) = a(r, p);
          a(r, q) = arq + s * (arp - tau * arq);
          a(q, r) = a(r, q);
        }
      }
  }
  std::vector<double> values(d);
  for (int i = 0; i < d; ++i) values[i] = a(i, i);
  return Spectrum(std::move(values));
}

Spectrum eig_quotient(const Matrix& m, const std::vector<int>& sizes) {
  if (!m.square()) throw std::invalid_argument("eig_quotient: matrix not square");
  if (static_cast<int>(sizes.size()) != m.rows())
    throw std::invalid_argument("eig_quotient: one size per row required");
  for (int s : sizes)
    if (s < 1) throw std::invalid_argument("eig_quotient: sizes must be positive");
  const int d = m.rows();
  Matrix s(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      s(i, j) = m(i, j) * std::sqrt(static_cast<double>(sizes[i]) / sizes[j]);
  const double scale = std::max(1.0, s.max_abs());
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (std::abs(s(i, j) - s(j, i)) > 1e-9 * scale)
        throw std::invalid_argument(
            "eig_quotient: similarity transform is not symmetric; "
            "matrix does not have the expected quotient structure");
  // Force exact symmetry so the 1e-12 gate of eig_symmetric is met.
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const double avg = 0.5 * (s(i, j) + s(j, i));
      s(i, j) = avg;
      s(j, i) = avg;
    }
  return eig_symmetric(s);
}

Spectrum eig_balanced(const Matrix& m) {
  if (!m.square()) throw std::invalid_argument("eig_balanced: matrix not square");
  const int d = m.rows();
  const double scale = std::max(1.0, m.max_abs());
  const double zero_tol = 1e-13 * scale;

  // Find w_i > 0 with w_i^2 m_ij = w_j^2 m_ji by propagating ratios over the
  // nonzero pattern; inconsistent or sign-flipped patterns are rejected.
  std::vector<double> w2(d, 0.0);
  for (int root = 0; root < d; ++root) {
    if (w2[root] != 0.0) continue;
    w2[root] = 1.0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < d; ++j) {
        if (i == j) continue;
        const bool ij = std::abs(m(i, j)) > zero_tol;
        const bool ji = std::abs(m(j, i)) > zero_tol;
        if (ij != ji || (ij && m(i, j) * m(j, i) < 0.0))
          throw std::invalid_argument("eig_balanced: matrix is not diagonally symmetrizable");
        if (!ij) continue;
        const double ratio = w2[i] * m(i, j) / m(j, i);
        if (w2[j] == 0.0) {
          w2[j] = ratio;
          stack.push_back(j);
        } else if (std::abs(w2[j] - ratio) > 1e-9 * std::max(1.0, std::abs(w2[j]))) {
          throw std::invalid_argument("eig_balanced: inconsistent symmetrizer");
        }
      }
    }
  }
  Matrix s(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      s(i, j) = m(i, j) * std::sqrt(w2[i] / w2[j]);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const double avg = 0.5 * (s(i, j) + s(j, i));
      s(i, j) = avg;
      s(j, i) = avg;
    }
  return eig_symmetric(s);
}

MatchReport spectra_match(const Spectrum& s1, const Spectrum& s2, double tol) {
  if (tol <= 0) throw std::invalid_argument("spectra_match: tol must be positive");
  MatchReport report;
  if (s1.dim() != s2.dim()) {
    report.matched = false;
    report.max_error = std::numeric_limits<double>::infinity();
    report.unmatched = "dimension mismatch: " + std::to_string(s1.dim()) +
                       " vs " + std::to_string(s2.dim());
    return report;
  }
  const double scale = std::max(1.0, std::max(s1.radius(), s2.radius()));
  report.matched = true;
  for (int i = 0; i < s1.dim(); ++i) {
    const double err = std::abs(s1.values[i] - s2.values[i]);
    report.max_error = std::max(report.max_error, err);
    if (err > tol * scale && report.matched) {
      report.matched = false;
      report.unmatched = "index " + std::to_string(i) + ": " +
                         format_double(s1.values[i]) + " vs " +
                         format_double(s2.values[i]);
    }
  }
  return report;
}

int multiplicity_of(const Spectrum& s, double value, double tol) {
  if (tol <= 0) throw std::invalid_argument("multiplicity_of: tol must be positive");
  const double window = tol * std::max(1.0, std::abs(value));
  int count = 0;
  for (double v : s.values)
    if (std::abs(v - value) <= window) ++count;
  return count;
}

Matrix permuted(const Matrix& m, const std::vector<int>& perm) {
  if (!m.square() || static_cast<int>(perm.size()) != m.rows())
    throw std::invalid_argument("permuted: need a square matrix and a full permutation");
  Matrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(perm[i], perm[j]);
  return out;
}

std::vector<double> polynomial_real_roots(const std::vector<double>& coeffs) {
  int degree = static_cast<int>(coeffs.size()) - 1;
  while (degree > 0 && coeffs[degree] == 0.0) --degree;
  if (degree < 1) return {};
  std::vector<std::complex<double>> c(degree + 1);
  for (int i = 0; i <= degree; ++i) c[i] = coeffs[i] / coeffs[degree];
  auto eval = [&](std::complex<double> x) {
    std::complex<double> v = 1.0;
    for (int i = degree - 1; i >= 0; --i) v = v * x + c[i];
    return v;
  };
  std::vector<std::complex<double>> roots(degree);
  const std::complex<double> seed(0.4, 0.9);
  roots[0] = seed;
  for (int i = 1; i < degree; ++i) roots[i] = roots[i - 1] * seed;
  for (int iter = 0; iter < 500; ++iter) {
    double shift = 0;
    for (int i = 0; i < degree; ++i) {
      std::complex<double> denom = 1.0;
      for (int j = 0; j < degree; ++j)
        if (j != i) denom *= roots[i] - roots[j];
      std::complex<double> delta = eval(roots[i]) / denom;
      roots[i] -= delta;
      shift = std::max(shift, std::abs(delta));
    }
    if (shift < 1e-14) break;
  }
  double scale = 1.0;
  for (const auto& r : roots) scale = std::max(scale, std::abs(r));
  std::vector<double> out;
  for (const auto& r : roots) {
    if (std::abs(r.imag()) > 1e-7 * scale)
      throw std::runtime_error("polynomial_real_roots: complex root " +
                               format_double(r.real()) + " + " +
                               format_double(r.imag()) + "i");
    out.push_back(r.real());
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace aalpha
