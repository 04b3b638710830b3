#include "signet/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "signet/mirror.hpp"

namespace signet {

Vec symmetric_eigenvalues(const Matrix& m) {
  if (!m.square()) throw Error(Errc::dimension_mismatch, "eigenvalues of non-square matrix");
  const double scale = std::max(1.0, max_abs(m));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (std::abs(m(i, j) - m(j, i)) > 1e-9 * scale)
        throw Error(Errc::not_symmetric, "matrix is not symmetric");
  return jacobi_eigensystem(m).values;
}

SpectrumReport classify_spectrum(const SignedDigraph& g) {
  const MirrorArtifacts art = mirror_graph(g);
  SpectrumReport rep;
  rep.eigenvalues = symmetric_eigenvalues(art.mirror_laplacian);
  rep.smallest = rep.eigenvalues.front();
  rep.fiedler_like = rep.eigenvalues[1];
  const double tol = 1e-8 * std::max(rep.eigenvalues.back(), 1e-300);
  if (rep.smallest > tol) {
    rep.classification = SpectrumClass::unbalanced_spectrum;
  } else {
    if (rep.fiedler_like <= tol)
      throw Error(Errc::numerically_singular,
                  "mirror Laplacian has more than one near-zero eigenvalue");
    rep.classification = SpectrumClass::balanced_spectrum;
  }
  return rep;
}

std::size_t null_space_dimension(const Matrix& m) {
  return m.cols() - echelon_rank(m, 1e-9);
}

bool is_negated_hurwitz(const Matrix& m) {
  if (!m.square()) throw Error(Errc::dimension_mismatch, "Hurwitz test of non-square matrix");
  const std::size_t n = m.rows();
  const double scale = max_abs(m);
  if (scale == 0.0)
    throw Error(Errc::lyapunov_singular, "zero matrix has a zero eigenvalue");

  // K vec(P) = vec(I) for m^T P + P m = I (column-major vec),
  // K = I (x) m^T + m^T (x) I; m is normalized for conditioning.
  Matrix k(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double mt = m(j, i) / scale;  // (m^T)(i, j)
      for (std::size_t b = 0; b < n; ++b) k(i + b * n, j + b * n) += mt;
      for (std::size_t b = 0; b < n; ++b) k(b + i * n, b + j * n) += mt;
    }
  Vec rhs(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) rhs[i + i * n] = 1.0;

  Vec p;
  try {
    p = lu_solve(std::move(k), rhs, 1e-9);
  } catch (const Error& e) {
    if (e.code() == Errc::numerically_singular)
      throw Error(Errc::lyapunov_singular,
                  "Lyapunov equation is singular: an eigenvalue pair of the "
                  "matrix sums to zero");
    throw;
  }

  // P positive definite <=> all Cholesky pivots positive. Symmetrize first;
  // the solution is symmetric up to roundoff.
  Matrix pm(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      pm(i, j) = 0.5 * (p[i + j * n] + p[j + i * n]);
  for (std::size_t kcol = 0; kcol < n; ++kcol) {
    double d = pm(kcol, kcol);
    for (std::size_t r = 0; r < kcol; ++r) d -= pm(kcol, r) * pm(kcol, r);
    if (d <= 0.0) return false;
    const double root = std::sqrt(d);
    pm(kcol, kcol) = root;
    for (std::size_t i = kcol + 1; i < n; ++i) {
      double s = pm(i, kcol);
      for (std::size_t r = 0; r < kcol; ++r) s -= pm(i, r) * pm(kcol, r);
      pm(i, kcol) = s / root;
    }
  }
  return true;
}

Matrix complement_restriction(const Matrix& m, const Vec& direction) {
  const std::size_t n = m.rows();
  if (!m.square() || direction.size() != n)
    throw Error(Errc::dimension_mismatch, "complement restriction shape mismatch");
  const double dnorm = std::sqrt(dot(direction, direction));
  if (dnorm == 0.0)
    throw Error(Errc::invalid_params, "cannot deflate along the zero vector");

  // Gram-Schmidt: unit direction first, then standard basis vectors.
  std::vector<Vec> basis;
  Vec d = direction;
  for (double& v : d) v /= dnorm;
  basis.push_back(d);
  for (std::size_t e = 0; e < n && basis.size() < n; ++e) {
    Vec cand(n, 0.0);
    cand[e] = 1.0;
    for (const Vec& b : basis) {
      const double proj = dot(cand, b);
      for (std::size_t i = 0; i < n; ++i) cand[i] -= proj * b[i];
    }
    const double norm = std::sqrt(dot(cand, cand));
    if (norm < 1e-8) continue;
    for (double& v : cand) v /= norm;
    basis.push_back(std::move(cand));
  }

  Matrix q(n, n - 1);  // complement columns only
  for (std::size_t c = 1; c < basis.size(); ++c)
    for (std::size_t i = 0; i < n; ++i) q(i, c - 1) = basis[c][i];
  return transpose(q) * m * q;
}

}  // namespace signet
