#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "signet/balance.hpp"
#include "signet/graph.hpp"
#include "signet/protocols.hpp"

namespace signet {

struct SimulationConfig {
  double dt = 1e-3;
  double t_end = 30.0;
  double convergence_tol = 1e-4;
  ProtocolSpec protocol;
};

/// Uniform time grid (times[k] = k * dt, covering [0, t_end]) plus one state
/// per sample; states[0] = x0.
struct Trajectory {
  Vec times;
  std::vector<Vec> states;
};

enum class Outcome {
  signed_average_consensus,
  bipartite_consensus,
  state_stability,
  not_converged,
};

struct SimulationSummary {
  Outcome outcome = Outcome::not_converged;
  Vec limit_estimate;
  std::optional<double> consensus_value;
  std::optional<double> measured_settling_time;
  std::optional<Vec> predicted_limit;
  std::optional<double> prediction_error;
};

/// Classical fixed-step fourth-order Runge-Kutta for x' = control(x).
/// Deterministic; aborts with Errc::non_finite_state (reporting the time)
/// if any |x_i| exceeds 1e12 or turns non-finite.
Trajectory integrate(const std::function<Vec(const Vec&)>& control,
                     const Vec& x0, const SimulationConfig& config);

/// Terminal state (1_n^T D x0 / n) * D 1_n of the averaging protocols on a
/// balanced graph: entry i is sigma_i times the gauge-signed mean of x0.
/// Throws Errc::not_balanced for an invalid gauge.
Vec predicted_limit(const SignedDigraph& g, const std::vector<int>& gauge, const Vec& x0);

/// Reads the trajectory tail: balanced graphs are checked against
/// predicted_limit first (signed-average consensus), then for a common
/// gauge-signed modulus (bipartite consensus, the classic protocol's
/// outcome on weight-unbalanced graphs); unbalanced graphs for state
/// stability; anything else is not converged.
SimulationSummary classify(const Trajectory& traj, const SignedDigraph& g,
                           const BalanceResult& balance, double tol);

/// Earliest sampled time t* with ||x(t) - target||_inf <= tol for every
/// sampled t >= t*; nullopt if the tail is outside the tube.
std::optional<double> measured_settling_time(const Trajectory& traj,
                                             const Vec& target, double tol);

/// CSV export: header "t,x1,...,xn", one row per sample, full %.17g
/// precision; byte-identical across runs for identical inputs.
void write_trajectory_csv(const Trajectory& traj, std::ostream& out);

}  // namespace signet
