#pragma once

#include <functional>
#include <optional>

#include "signet/graph.hpp"
#include "signet/linalg.hpp"
#include "signet/mirror.hpp"

namespace signet {

enum class ProtocolKind { classic, mirror, cofactor, fixed_time, finite_time };

/// Gains and exponents of the fixed-time control law. All four exponents
/// must be positive odd integers with m > r and q > p; k1, k2 > 0.
/// Rejection is strict: even exponents would void the settling guarantee,
/// so they are never coerced.
struct FixedTimeParams {
  double k1 = 1.0;
  double k2 = 1.0;
  int m = 9;
  int r = 7;
  int p = 3;
  int q = 5;
};

/// Exponent of the finite-time law, in (0, 1). Distinct from the
/// weight-balance scalar of the potential module.
struct FiniteTimeParams {
  double alpha_exp = 0.5;
};

struct ProtocolSpec {
  ProtocolKind kind = ProtocolKind::mirror;
  std::optional<FixedTimeParams> fixed_time;
  std::optional<FiniteTimeParams> finite_time;
};

void validate_params(const FixedTimeParams& p);   // throws Errc::invalid_params
void validate_params(const FiniteTimeParams& p);  // throws Errc::invalid_params
/// Parameter block must be present iff the kind requires it.
void validate_spec(const ProtocolSpec& spec);

/// u = -L x.
Vec control_classic(const SignedDigraph& g, const Vec& x);

/// u = -Lhat x.
Vec control_mirror(const MirrorArtifacts& mirror, const Vec& x);

/// u = -W L x.
Vec control_cofactor(const SignedDigraph& g, const Vec& w, const Vec& x);

/// sgn(y) * |y|^(num/den): the continuous odd extension of the rational
/// power, which is what raising a possibly negative sum to an odd-over-odd
/// exponent means. No parameter checks here; callers own oddness.
double odd_power(double y, int num, int den);

/// u_i = k1 * s_i^(m/r) + k2 * s_i^(p/q) with s = -Lhat x (odd powers as
/// above). |s_i| < 1e-12 snaps to zero first; the p/q branch is
/// non-Lipschitz at the origin and would otherwise chatter.
Vec control_fixed_time(const MirrorArtifacts& mirror, const Vec& x, const FixedTimeParams& params);

/// u_i = sgn(s_i) |s_i|^alpha with s = -Lhat x, same snap as fixed-time.
Vec control_finite_time(const MirrorArtifacts& mirror, const Vec& x, const FiniteTimeParams& params);

/// Settling-time bound
///   T = (1/lambda) * ( n^((m-r)/(2r)) / k1 * r/(m-r)  +  1/k2 * q/(q-p) ),
/// with lambda = lambda_2(Lhat) for balanced graphs and lambda_1(Lhat) for
/// unbalanced ones. Independent of the initial state. Throws
/// Errc::invalid_params when lambda <= 0 or the params are invalid.
double settling_bound(const FixedTimeParams& params, double lambda, std::size_t n);

/// Binds a protocol to a graph as a state -> control map for the simulator.
std::function<Vec(const Vec&)> make_control(const ProtocolSpec& spec,
                                            const SignedDigraph& g,
                                            const MirrorArtifacts& mirror);

}  // namespace signet
