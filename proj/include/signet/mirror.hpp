#pragma once

#include "signet/graph.hpp"
#include "signet/linalg.hpp"

namespace signet {

/// Cofactor weights plus the mirror signed graph they induce.
///
/// cofactors[i] is the determinant of the unsigned Laplacian with row and
/// column i removed; all positive for strongly connected inputs, and
/// together they form a left null vector of the unsigned Laplacian.
/// mirror_adjacency is (W A + A^T W)/2 (symmetric, zero diagonal) and
/// mirror_laplacian is (W L + L^T W)/2, which coincides with the Laplacian
/// built from the mirror adjacency by the degree rule.
struct MirrorArtifacts {
  Vec cofactors;
  Matrix mirror_adjacency;
  Matrix mirror_laplacian;
};

/// w_i = det of the i-th principal minor of the unsigned Laplacian, by LU
/// with partial pivoting. Throws Errc::not_strongly_connected, or
/// Errc::numerically_singular when any w_i falls below 1e-12.
Vec cofactor_weights(const SignedDigraph& g);

/// Builds the mirror graph from precomputed cofactor weights.
MirrorArtifacts mirror_graph(const SignedDigraph& g, const Vec& w);

/// Convenience: cofactor_weights + mirror_graph.
MirrorArtifacts mirror_graph(const SignedDigraph& g);

/// Max-norm of w^T Lbar. Self-check: must be <= 1e-9 * max|w| whenever w
/// came from cofactor_weights.
double left_null_residual(const SignedDigraph& g, const Vec& w);

}  // namespace signet
