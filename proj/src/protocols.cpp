#include "signet/protocols.hpp"

#include <cmath>
#include <string>

namespace signet {

namespace {

bool positive_odd(int v) { return v > 0 && v % 2 == 1; }

void require_state(std::size_t n, const Vec& x) {
  if (x.size() != n)
    throw Error(Errc::dimension_mismatch, "state length does not match node count");
}

// Chattering guard: below this magnitude the fractional-power branches treat
// the sum as already at equilibrium.
constexpr double kSnap = 1e-12;

}  // namespace

void validate_params(const FixedTimeParams& p) {
  if (!(p.k1 > 0.0) || !(p.k2 > 0.0))
    throw Error(Errc::invalid_params, "gains k1, k2 must be positive");
  if (!positive_odd(p.m) || !positive_odd(p.r) || !positive_odd(p.p) || !positive_odd(p.q))
    throw Error(Errc::invalid_params, "exponents m, r, p, q must be positive odd integers");
  if (p.m <= p.r) throw Error(Errc::invalid_params, "need m > r");
  if (p.q <= p.p) throw Error(Errc::invalid_params, "need q > p");
}

void validate_params(const FiniteTimeParams& p) {
  if (!(p.alpha_exp > 0.0) || !(p.alpha_exp < 1.0))
    throw Error(Errc::invalid_params, "finite-time exponent must lie in (0, 1)");
}

void validate_spec(const ProtocolSpec& spec) {
  const bool needs_fixed = spec.kind == ProtocolKind::fixed_time;
  const bool needs_finite = spec.kind == ProtocolKind::finite_time;
  if (needs_fixed != spec.fixed_time.has_value())
    throw Error(Errc::invalid_params,
                needs_fixed ? "fixed-time protocol requires its parameter block"
                            : "fixed-time parameters given to a protocol that ignores them");
  if (needs_finite != spec.finite_time.has_value())
    throw Error(Errc::invalid_params,
                needs_finite ? "finite-time protocol requires its parameter block"
                             : "finite-time parameters given to a protocol that ignores them");
  if (spec.fixed_time) validate_params(*spec.fixed_time);
  if (spec.finite_time) validate_params(*spec.finite_time);
}

Vec control_classic(const SignedDigraph& g, const Vec& x) {
  require_state(g.size(), x);
  Vec u = laplacian(g) * x;
  for (double& v : u) v = -v;
  return u;
}

Vec control_mirror(const MirrorArtifacts& mirror, const Vec& x) {
  require_state(mirror.mirror_laplacian.rows(), x);
  Vec u = mirror.mirror_laplacian * x;
  for (double& v : u) v = -v;
  return u;
}

Vec control_cofactor(const SignedDigraph& g, const Vec& w, const Vec& x) {
  require_state(g.size(), x);
  if (w.size() != g.size())
    throw Error(Errc::dimension_mismatch, "cofactor vector length mismatch");
  Vec u = laplacian(g) * x;
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = -w[i] * u[i];
  return u;
}

double odd_power(double y, int num, int den) {
  if (y == 0.0) return 0.0;
  const double mag = std::pow(std::abs(y), static_cast<double>(num) / den);
  return y > 0.0 ? mag : -mag;
}

Vec control_fixed_time(const MirrorArtifacts& mirror, const Vec& x,
                       const FixedTimeParams& params) {
  validate_params(params);
  Vec s = control_mirror(mirror, x);  // s = -Lhat x
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double si = std::abs(s[i]) < kSnap ? 0.0 : s[i];
    s[i] = params.k1 * odd_power(si, params.m, params.r) +
           params.k2 * odd_power(si, params.p, params.q);
  }
  return s;
}

Vec control_finite_time(const MirrorArtifacts& mirror, const Vec& x,
                        const FiniteTimeParams& params) {
  validate_params(params);
  Vec s = control_mirror(mirror, x);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double si = std::abs(s[i]) < kSnap ? 0.0 : s[i];
    s[i] = si == 0.0 ? 0.0
                     : (si > 0.0 ? std::pow(si, params.alpha_exp)
                                 : -std::pow(-si, params.alpha_exp));
  }
  return s;
}

double settling_bound(const FixedTimeParams& params, double lambda, std::size_t n) {
  validate_params(params);
  if (!(lambda > 0.0))
    throw Error(Errc::invalid_params, "settling bound needs lambda > 0");
  if (n == 0) throw Error(Errc::invalid_params, "settling bound needs n >= 1");
  const double mr = static_cast<double>(params.m - params.r);
  const double qp = static_cast<double>(params.q - params.p);
  const double first = std::pow(static_cast<double>(n), mr / (2.0 * params.r)) /
                       params.k1 * (params.r / mr);
  const double second = (1.0 / params.k2) * (params.q / qp);
  return (first + second) / lambda;
}

std::function<Vec(const Vec&)> make_control(const ProtocolSpec& spec,
                                            const SignedDigraph& g,
                                            const MirrorArtifacts& mirror) {
  validate_spec(spec);
  switch (spec.kind) {
    case ProtocolKind::classic:
      return [g](const Vec& x) { return control_classic(g, x); };
    case ProtocolKind::mirror:
      return [mirror](const Vec& x) { return control_mirror(mirror, x); };
    case ProtocolKind::cofactor:
      return [g, w = mirror.cofactors](const Vec& x) { return control_cofactor(g, w, x); };
    case ProtocolKind::fixed_time:
      return [mirror, p = *spec.fixed_time](const Vec& x) {
        return control_fixed_time(mirror, x, p);
      };
    case ProtocolKind::finite_time:
      return [mirror, p = *spec.finite_time](const Vec& x) {
        return control_finite_time(mirror, x, p);
      };
  }
  throw Error(Errc::invalid_params, "unknown protocol kind");
}

}  // namespace signet
