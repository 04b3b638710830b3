#pragma once

#include <cstddef>

#include "signet/graph.hpp"
#include "signet/linalg.hpp"

namespace signet {

enum class SpectrumClass { balanced_spectrum, unbalanced_spectrum };

/// Eigenvalue report for a mirror Laplacian. Balanced spectra have exactly
/// one (near-)zero eigenvalue; unbalanced spectra are bounded away from zero.
struct SpectrumReport {
  Vec eigenvalues;  // ascending
  double smallest = 0.0;
  double fiedler_like = 0.0;
  SpectrumClass classification = SpectrumClass::unbalanced_spectrum;
};

/// All eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi.
/// Throws Errc::not_symmetric when max|m - m^T| exceeds 1e-9 relative to the
/// matrix scale, and Errc::no_convergence after 100 sweeps.
Vec symmetric_eigenvalues(const Matrix& m);

/// Builds the mirror Laplacian of g and classifies its spectrum with the
/// zero tolerance 1e-8 * lambda_max. The classification agrees with
/// structural_balance on strongly connected inputs.
SpectrumReport classify_spectrum(const SignedDigraph& g);

/// Null-space dimension via row-echelon rank (pivot threshold 1e-9 relative
/// to the largest pivot).
std::size_t null_space_dimension(const Matrix& m);

/// Decides whether -m is Hurwitz by solving m^T P + P m = I through the
/// n^2 x n^2 Kronecker system and testing P for positive definiteness.
/// Throws Errc::lyapunov_singular when the system is singular, which happens
/// exactly when some pair of eigenvalues of m sums to zero (in particular
/// whenever m has a zero eigenvalue).
bool is_negated_hurwitz(const Matrix& m);

/// Restriction of m to the orthogonal complement of `direction`:
/// Q^T m Q for an explicit Gram-Schmidt basis Q of the complement.
/// Used to re-run the Lyapunov test after deflating a known zero mode.
Matrix complement_restriction(const Matrix& m, const Vec& direction);

}  // namespace signet
