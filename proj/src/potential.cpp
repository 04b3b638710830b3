#include "signet/potential.hpp"

#include <algorithm>
#include <cmath>

namespace signet {

PotentialContext PotentialContext::from_graph(const SignedDigraph& g) {
  Vec w = cofactor_weights(g);
  if (left_null_residual(g, w) > 1e-9 * max_abs(w))
    throw Error(Errc::numerically_singular,
                "cofactor weights fail the left-null self-check");
  MirrorArtifacts art = mirror_graph(g, w);
  return PotentialContext{g, std::move(w), signet::laplacian(g),
                          std::move(art.mirror_laplacian)};
}

namespace {

double sgn(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

void require_state(const SignedDigraph& g, const Vec& x) {
  if (x.size() != g.size())
    throw Error(Errc::dimension_mismatch, "state length does not match node count");
}

}  // namespace

double phi_e_sum(const PotentialContext& ctx, const Vec& x) {
  require_state(ctx.graph, x);
  const std::size_t n = x.size();
  double phi = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double a = ctx.graph.weight(i, j);
      if (a == 0.0) continue;
      const double diff = x[i] - sgn(a) * x[j];
      phi += ctx.cofactors[i] * std::abs(a) * diff * diff;
    }
  return phi;
}

double phi_e_quadratic(const PotentialContext& ctx, const Vec& x) {
  require_state(ctx.graph, x);
  // x^T (W L + L^T W) x = 2 sum_i w_i x_i (L x)_i
  const Vec lx = ctx.laplacian * x;
  double phi = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    phi += ctx.cofactors[i] * x[i] * lx[i];
  return 2.0 * phi;
}

double classical_phi(const SignedDigraph& g, const Vec& x) {
  require_state(g, x);
  const std::size_t n = x.size();
  double phi = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double a = g.weight(i, j);
      if (a == 0.0) continue;
      const double diff = x[i] - sgn(a) * x[j];
      phi += std::abs(a) * diff * diff;
    }
  return phi;
}

double weight_balanced_alpha(const PotentialContext& ctx) {
  if (!degree_report(ctx.graph).weight_balanced)
    throw Error(Errc::not_weight_balanced,
                "graph is not weight balanced; no common cofactor value exists");
  const auto [lo, hi] = std::minmax_element(ctx.cofactors.begin(), ctx.cofactors.end());
  if (*hi - *lo > 1e-9 * *hi)
    throw Error(Errc::cofactors_unequal,
                "cofactor spread exceeds tolerance; numerical trouble");
  double sum = 0.0;
  for (double w : ctx.cofactors) sum += w;
  return sum / static_cast<double>(ctx.cofactors.size());
}

}  // namespace signet
