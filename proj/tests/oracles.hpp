#pragma once

// Test-only oracles, independent of the library's eigenpaths: characteristic
// polynomial coefficients by Faddeev-LeVerrier plus Durand-Kerner roots, and
// a plain BFS distance table.

#include <algorithm>
#include <complex>
#include <queue>
#include <stdexcept>
#include <vector>

#include "aalpha/graph.hpp"
#include "aalpha/spectra.hpp"

namespace oracle {

// Ascending coefficients of det(xI - M) via Faddeev-LeVerrier:
// M_k = A M_{k-1} + c_{d-k+1} I,  c_{d-k} = -tr(A M_k) / k.
inline std::vector<double> charpoly(const aalpha::Matrix& m) {
  const int d = m.rows();
  std::vector<double> c(d + 1, 0.0);
  c[d] = 1.0;
  aalpha::Matrix mk(d, d);  // M_0 = 0
  for (int k = 1; k <= d; ++k) {
    aalpha::Matrix next(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        double sum = (i == j) ? c[d - k + 1] : 0.0;
        for (int l = 0; l < d; ++l) sum += m(i, l) * mk(l, j);
        next(i, j) = sum;
      }
    double tr = 0;
    for (int i = 0; i < d; ++i)
      for (int l = 0; l < d; ++l) tr += m(i, l) * next(l, i);
    c[d - k] = -tr / k;
    mk = next;
  }
  return c;
}

// All roots of a real polynomial, requiring them to be (numerically) real.
inline std::vector<double> real_roots(const std::vector<double>& coeffs) {
  int degree = static_cast<int>(coeffs.size()) - 1;
  while (degree > 0 && coeffs[degree] == 0.0) --degree;
  std::vector<std::complex<double>> c(coeffs.begin(), coeffs.begin() + degree + 1);
  for (auto& v : c) v /= coeffs[degree];
  std::vector<std::complex<double>> roots(degree);
  std::complex<double> w(0.4, 0.9), acc(1.0, 0.0);
  for (int i = 0; i < degree; ++i) {
    acc *= w;
    roots[i] = acc;
  }
  for (int iter = 0; iter < 1000; ++iter) {
    double moved = 0;
    for (int i = 0; i < degree; ++i) {
      std::complex<double> num(1.0, 0.0);
      for (int k = degree - 1; k >= 0; --k) num = num * roots[i] + c[k];
      std::complex<double> den(1.0, 0.0);
      for (int j = 0; j < degree; ++j)
        if (j != i) den *= roots[i] - roots[j];
      const std::complex<double> delta = num / den;
      roots[i] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-14) break;
  }
  double scale = 1.0;
  for (auto& r : roots) scale = std::max(scale, std::abs(r));
  std::vector<double> out;
  for (auto& r : roots) {
    if (std::abs(r.imag()) > 1e-6 * scale)
      throw std::runtime_error("oracle: complex root encountered");
    out.push_back(r.real());
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

// Eigenvalues through the characteristic polynomial; practical up to d ~ 6.
inline std::vector<double> eigenvalues(const aalpha::Matrix& m) {
  return real_roots(charpoly(m));
}

// -1 where unreachable.
inline std::vector<int> bfs_distances(const aalpha::Graph& g, int source) {
  std::vector<int> dist(g.order(), -1);
  dist[source] = 0;
  std::queue<int> q;
  q.push(source);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v = 0; v < g.order(); ++v)
      if (g.adjacent(u, v) && dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
  }
  return dist;
}

}  // namespace oracle
