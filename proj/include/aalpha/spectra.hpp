#pragma once

#include <string>
#include <vector>

namespace aalpha {

class Graph;

// Dense real matrix, row-major. Square in most uses; rectangular blocks
// appear in the block-symmetric machinery.
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0);
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  double trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  Matrix transposed() const;

  // Entrywise |a - b| <= tol everywhere (and equal shape).
  bool equals(const Matrix& other, double tol) const;
  double max_abs_diff(const Matrix& other) const;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<double> a_;
};

// Convexity parameter of the generalized adjacency matrix; must lie in [0,1].
class Alpha {
public:
  explicit Alpha(double v);
  double value() const { return v_; }

private:
  double v_ = 0.0;
};

// Real eigenvalue multiset, kept sorted descending.
struct Spectrum {
  std::vector<double> values;

  Spectrum() = default;
  explicit Spectrum(std::vector<double> v);

  int dim() const { return static_cast<int>(values.size()); }
  double radius() const;  // max |value|, 0 for empty
};

Matrix adjacency_matrix(const Graph& g);
Matrix degree_matrix(const Graph& g);
Matrix laplacian_matrix(const Graph& g);           // D - A
Matrix signless_laplacian_matrix(const Graph& g);  // D + A

// alpha*D + (1-alpha)*A. Diagonal alpha*d_v, off-diagonal (1-alpha) on edges.
Matrix a_alpha_matrix(const Graph& g, Alpha a);

// Cyclic Jacobi on a dense symmetric matrix. Fixed sweep order, so results
// are bit-reproducible across runs. Rejects matrices that are not symmetric
// within 1e-12 (scaled by the largest entry).
Spectrum eig_symmetric(const Matrix& m);

// Eigenvalues of a quotient-type matrix via the diagonal similarity
// D^{1/2} m D^{-1/2} with D = diag(sizes); the result must be symmetric
// within 1e-9 (scaled), otherwise the matrix is malformed for this path.
Spectrum eig_quotient(const Matrix& m, const std::vector<int>& sizes);

// Symmetrize a combinatorially symmetric matrix with sign-consistent
// opposite entries by a positive diagonal similarity, then solve. Covers the
// reduced matrices coming out of block_symmetric_reduce.
Spectrum eig_balanced(const Matrix& m);

inline constexpr double kDefaultTol = 1e-8;

struct MatchReport {
  bool matched = false;
  double max_error = 0.0;
  std::string unmatched;  // human-readable summary, empty when matched
};

// Multiset equality after descending sort: |s1_i - s2_i| <= tol * scale with
// scale = max(1, largest |eigenvalue| on either side).
MatchReport spectra_match(const Spectrum& s1, const Spectrum& s2,
                          double tol = kDefaultTol);

// Count of eigenvalues within tol * max(1, |value|) of value.
int multiplicity_of(const Spectrum& s, double value, double tol = kDefaultTol);

// Simultaneous row/column reorder: result(i, j) = m(perm[i], perm[j]).
Matrix permuted(const Matrix& m, const std::vector<int>& perm);

// Real roots of a polynomial given by ascending coefficients, via
// Durand-Kerner iteration; rejects roots with non-negligible imaginary part.
std::vector<double> polynomial_real_roots(const std::vector<double>& coeffs);

// "%.17g" -- round-trip-exact text form used by every serializer here.
std::string format_double(double v);

}  // namespace aalpha
