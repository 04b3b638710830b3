#include "signet/mirror.hpp"

#include <cmath>
#include <string>

namespace signet {

Vec cofactor_weights(const SignedDigraph& g) {
  if (!is_strongly_connected(g))
    throw Error(Errc::not_strongly_connected,
                "cofactor weights require a strongly connected graph");
  const std::size_t n = g.size();
  const Matrix lbar = laplacian(induced_unsigned(g));
  Vec w(n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix minor(n - 1, n - 1);
    for (std::size_t r = 0, mr = 0; r < n; ++r) {
      if (r == i) continue;
      for (std::size_t c = 0, mc = 0; c < n; ++c) {
        if (c == i) continue;
        minor(mr, mc++) = lbar(r, c);
      }
      ++mr;
    }
    w[i] = lu_determinant(std::move(minor));
    if (w[i] < 1e-12)
      throw Error(Errc::numerically_singular,
                  "cofactor weight " + std::to_string(i + 1) +
                      " is not positive; connectivity or conditioning failure");
  }
  return w;
}

MirrorArtifacts mirror_graph(const SignedDigraph& g, const Vec& w) {
  const std::size_t n = g.size();
  if (w.size() != n)
    throw Error(Errc::dimension_mismatch, "cofactor vector length mismatch");
  MirrorArtifacts art;
  art.cofactors = w;
  art.mirror_adjacency = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double a = 0.5 * (w[i] * g.weight(i, j) + w[j] * g.weight(j, i));
      art.mirror_adjacency(i, j) = a;
      art.mirror_adjacency(j, i) = a;
    }
  // (W L + L^T W)/2, assembled entrywise so the result is exactly symmetric.
  const Matrix l = laplacian(g);
  art.mirror_laplacian = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    art.mirror_laplacian(i, i) = w[i] * l(i, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = 0.5 * (w[i] * l(i, j) + w[j] * l(j, i));
      art.mirror_laplacian(i, j) = v;
      art.mirror_laplacian(j, i) = v;
    }
  }
  return art;
}

MirrorArtifacts mirror_graph(const SignedDigraph& g) {
  return mirror_graph(g, cofactor_weights(g));
}

double left_null_residual(const SignedDigraph& g, const Vec& w) {
  const std::size_t n = g.size();
  if (w.size() != n)
    throw Error(Errc::dimension_mismatch, "cofactor vector length mismatch");
  const Matrix lbar = laplacian(induced_unsigned(g));
  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += w[i] * lbar(i, j);
    worst = std::max(worst, std::abs(s));
  }
  return worst;
}

}  // namespace signet
