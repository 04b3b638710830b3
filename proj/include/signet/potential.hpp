#pragma once

#include "signet/graph.hpp"
#include "signet/linalg.hpp"
#include "signet/mirror.hpp"

namespace signet {

/// Everything needed to evaluate disagreement potentials of one graph.
/// Built once per graph; from_graph checks the left-null self-test so the
/// cofactors are guaranteed consistent.
struct PotentialContext {
  SignedDigraph graph;
  Vec cofactors;
  Matrix laplacian;
  Matrix mirror_laplacian;

  static PotentialContext from_graph(const SignedDigraph& g);
};

/// Cofactor-weighted disagreement, evaluated as the explicit double sum
/// sum_ij w_i |a_ij| (x_i - sgn(a_ij) x_j)^2. Nonnegative by construction.
double phi_e_sum(const PotentialContext& ctx, const Vec& x);

/// The same quantity as the quadratic form x^T (W L + L^T W) x
/// (= 2 x^T Lhat x); a route independent of phi_e_sum.
double phi_e_quadratic(const PotentialContext& ctx, const Vec& x);

/// Unweighted variant sum_ij |a_ij| (x_i - sgn(a_ij) x_j)^2. Matches
/// x^T (L + L^T) x only under weight balance.
double classical_phi(const SignedDigraph& g, const Vec& x);

/// For strongly connected weight-balanced graphs the cofactors coincide;
/// returns their common value. Throws Errc::not_weight_balanced or, when the
/// relative spread exceeds 1e-9, Errc::cofactors_unequal.
double weight_balanced_alpha(const PotentialContext& ctx);

}  // namespace signet
