#include "aalpha/partition.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace aalpha {

VertexPartition VertexPartition::natural(const std::vector<int>& sizes) {
  VertexPartition p;
  int next = 0;
  for (int s : sizes) {
    if (s < 1) throw std::invalid_argument("partition block sizes must be positive");
    std::vector<int> block(s);
    std::iota(block.begin(), block.end(), next);
    next += s;
    p.blocks.push_back(std::move(block));
  }
  return p;
}

std::vector<int> VertexPartition::block_sizes() const {
  std::vector<int> sizes;
  sizes.reserve(blocks.size());
  for (const auto& b : blocks) sizes.push_back(static_cast<int>(b.size()));
  return sizes;
}

void VertexPartition::validate(int n) const {
  std::vector<char> seen(n, 0);
  int covered = 0;
  for (const auto& block : blocks) {
    if (block.empty()) throw std::invalid_argument("partition has an empty block");
    for (int v : block) {
      if (v < 0 || v >= n)
        throw std::invalid_argument("partition vertex out of range");
      if (seen[v]) throw std::invalid_argument("partition blocks overlap");
      seen[v] = 1;
      ++covered;
    }
  }
  if (covered != n)
    throw std::invalid_argument("partition does not cover the vertex set");
}

Matrix quotient_matrix(const Matrix& m, const VertexPartition& p) {
  if (!m.square()) throw std::invalid_argument("quotient_matrix: matrix not square");
  p.validate(m.rows());
  const int s = static_cast<int>(p.blocks.size());
  Matrix q(s, s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      double sum = 0;
      for (int u : p.blocks[i])
        for (int v : p.blocks[j]) sum += m(u, v);
      q(i, j) = sum / static_cast<double>(p.blocks[i].size());
    }
  return q;
}

Matrix quotient_matrix(const Graph& g, const VertexPartition& p, MatrixKind kind,
                       Alpha a) {
  Matrix m = (kind == MatrixKind::adjacency) ? adjacency_matrix(g)
                                             : a_alpha_matrix(g, a);
  return quotient_matrix(m, p);
}

bool is_equitable(const Matrix& m, const VertexPartition& p, double tol) {
  if (!m.square()) throw std::invalid_argument("is_equitable: matrix not square");
  p.validate(m.rows());
  for (const auto& bi : p.blocks)
    for (const auto& bj : p.blocks) {
      double first = 0;
      bool have_first = false;
      for (int u : bi) {
        double row = 0;
        for (int v : bj) row += m(u, v);
        if (!have_first) {
          first = row;
          have_first = true;
        } else if (std::abs(row - first) > tol) {
          return false;
        }
      }
    }
  return true;
}

bool is_equitable(const Graph& g, const VertexPartition& p, MatrixKind kind,
                  Alpha a) {
  Matrix m = (kind == MatrixKind::adjacency) ? adjacency_matrix(g)
                                             : a_alpha_matrix(g, a);
  return is_equitable(m, p);
}

std::vector<int> neighbor_size_sums(const Graph& base, const std::vector<int>& sizes) {
  if (static_cast<int>(sizes.size()) != base.order())
    throw std::invalid_argument("one size per base vertex required");
  std::vector<int> sums(base.order(), 0);
  for (int i = 0; i < base.order(); ++i)
    for (int j : base.neighbors(i)) sums[i] += sizes[j];
  return sums;
}

Matrix joined_union_aux_matrix(const JoinedUnionShape& shape, Alpha a) {
  const int n = shape.base.order();
  if (static_cast<int>(shape.sizes.size()) != n ||
      static_cast<int>(shape.degrees.size()) != n)
    throw std::invalid_argument("joined_union_aux_matrix: need n_i and r_i per base vertex");
  for (int i = 0; i < n; ++i) {
    if (shape.sizes[i] < 1)
      throw std::invalid_argument("joined_union_aux_matrix: part sizes must be positive");
    if (shape.degrees[i] < 0 || shape.degrees[i] >= shape.sizes[i])
      throw std::invalid_argument(
          "joined_union_aux_matrix: part " + std::to_string(i) +
          " has impossible regular degree " + std::to_string(shape.degrees[i]));
  }
  const double alpha = a.value();
  std::vector<int> alpha_i = neighbor_size_sums(shape.base, shape.sizes);
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = alpha * alpha_i[i] + shape.degrees[i];
    for (int j : shape.base.neighbors(i))
      m(i, j) = (1.0 - alpha) * shape.sizes[j];
  }
  return m;
}

BlockSymmetricSpec BlockSymmetricSpec::symmetric(Matrix X, Matrix beta, Matrix B,
                                                 Matrix C, int copies) {
  BlockSymmetricSpec spec;
  spec.beta_col = beta.transposed();
  spec.X = std::move(X);
  spec.beta_row = std::move(beta);
  spec.B = std::move(B);
  spec.C = std::move(C);
  spec.copies = copies;
  return spec;
}

void BlockSymmetricSpec::validate() const {
  if (copies < 1) throw std::invalid_argument("block spec: copies must be >= 1");
  if (!X.square() || !B.square() || !C.square())
    throw std::invalid_argument("block spec: X, B, C must be square");
  const int t = X.rows();
  const int s = B.rows();
  if (C.rows() != s) throw std::invalid_argument("block spec: B and C sizes differ");
  if (beta_row.rows() != t || beta_row.cols() != s)
    throw std::invalid_argument("block spec: beta_row must be t x s");
  if (beta_col.rows() != s || beta_col.cols() != t)
    throw std::invalid_argument("block spec: beta_col must be s x t");
}

int BlockSymmetricSpec::dimension() const {
  return X.rows() + copies * B.rows();
}

Matrix assemble_block_symmetric(const BlockSymmetricSpec& spec) {
  spec.validate();
  const int t = spec.X.rows();
  const int s = spec.B.rows();
  const int n = t + spec.copies * s;
  Matrix m(n, n);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) m(i, j) = spec.X(i, j);
  for (int k = 0; k < spec.copies; ++k) {
    const int off = t + k * s;
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < s; ++j) {
        m(i, off + j) = spec.beta_row(i, j);
        m(off + j, i) = spec.beta_col(j, i);
      }
    for (int l = 0; l < spec.copies; ++l) {
      const Matrix& blk = (k == l) ? spec.B : spec.C;
      for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) m(t + k * s + i, t + l * s + j) = blk(i, j);
    }
  }
  return m;
}

BlockReduction block_symmetric_reduce(const BlockSymmetricSpec& spec) {
  spec.validate();
  const int t = spec.X.rows();
  const int s = spec.B.rows();
  const double root_c = std::sqrt(static_cast<double>(spec.copies));

  BlockReduction out;
  out.repeat_count = spec.copies - 1;
  if (out.repeat_count > 0) {
    Matrix diff(s, s);
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) diff(i, j) = spec.B(i, j) - spec.C(i, j);
    Spectrum rep = (s == 1) ? Spectrum({diff(0, 0)}) : eig_balanced(diff);
    out.repeated = rep.values;
  }

  Matrix reduced(t + s, t + s);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) reduced(i, j) = spec.X(i, j);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < s; ++j) {
      reduced(i, t + j) = root_c * spec.beta_row(i, j);
      reduced(t + j, i) = root_c * spec.beta_col(j, i);
    }
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      reduced(t + i, t + j) = spec.B(i, j) + (spec.copies - 1) * spec.C(i, j);
  out.reduced = std::move(reduced);
  return out;
}

}  // namespace aalpha
