#pragma once

#include <vector>

#include "aalpha/graph.hpp"
#include "aalpha/spectra.hpp"

namespace aalpha {

// Ordered blocks of vertex indices covering [0, n) without overlap.
struct VertexPartition {
  std::vector<std::vector<int>> blocks;

  // Consecutive index runs of the given sizes -- the natural partition of a
  // joined union laid out in part order.
  static VertexPartition natural(const std::vector<int>& sizes);

  std::vector<int> block_sizes() const;
  void validate(int n) const;
};

enum class MatrixKind { adjacency, a_alpha };

// Block-average row sums of m under p. Defined for any partition; for an
// equitable one its eigenvalues are a sub-multiset of the spectrum of m.
Matrix quotient_matrix(const Matrix& m, const VertexPartition& p);
Matrix quotient_matrix(const Graph& g, const VertexPartition& p, MatrixKind kind,
                       Alpha a = Alpha(0.0));

// Every block pair has constant row sums in m.
bool is_equitable(const Matrix& m, const VertexPartition& p, double tol = 1e-9);
bool is_equitable(const Graph& g, const VertexPartition& p, MatrixKind kind,
                  Alpha a = Alpha(0.0));

// Part sizes and regular degrees of a joined union over the given base.
struct JoinedUnionShape {
  Graph base;
  std::vector<int> sizes;    // n_i >= 1
  std::vector<int> degrees;  // r_i of the (regular) parts
};

// alpha_i = sum of n_j over base-neighbours j of i.
std::vector<int> neighbor_size_sums(const Graph& base, const std::vector<int>& sizes);

// The small matrix carrying the non-structural part of the joined-union
// spectrum: diagonal alpha*alpha_i + r_i, off-diagonal (1-alpha)*n_j on base
// edges. Identical to the A_alpha quotient matrix of the natural partition.
Matrix joined_union_aux_matrix(const JoinedUnionShape& shape, Alpha a);

// Matrix of shape [[X, b, ..., b], [b', B, C, ...], ..., [b', C, ..., B]]
// with `copies` diagonal B blocks. beta_col defaults to beta_row^T in the
// symmetric case but may differ (quotient matrices are only diagonally
// similar to symmetric ones).
struct BlockSymmetricSpec {
  Matrix X;         // t x t (t may be 0)
  Matrix beta_row;  // t x s
  Matrix beta_col;  // s x t
  Matrix B;         // s x s
  Matrix C;         // s x s
  int copies = 1;   // c >= 1

  static BlockSymmetricSpec symmetric(Matrix X, Matrix beta, Matrix B, Matrix C,
                                      int copies);
  void validate() const;
  int dimension() const;  // t + c*s
};

Matrix assemble_block_symmetric(const BlockSymmetricSpec& spec);

struct BlockReduction {
  std::vector<double> repeated;  // eigenvalues of B - C
  int repeat_count = 0;          // each occurs copies - 1 times
  Matrix reduced;                // (t+s) x (t+s): [[X, sqrt(c) b],[sqrt(c) b', B+(c-1)C]]
};

// Spectrum splitting for block-symmetric matrices: the assembled matrix has
// the eigenvalues of B - C with multiplicity copies-1, plus those of the
// reduced matrix.
BlockReduction block_symmetric_reduce(const BlockSymmetricSpec& spec);

}  // namespace aalpha
