#include "signet/simulator.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

namespace signet {

namespace {

void check_finite(const Vec& x, double t) {
  for (double v : x)
    if (!std::isfinite(v) || std::abs(v) > 1e12)
      throw Error(Errc::non_finite_state,
                  "state diverged at t = " + std::to_string(t));
}

Vec axpy(const Vec& x, double a, const Vec& y) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + a * y[i];
  return out;
}

}  // namespace

Trajectory integrate(const std::function<Vec(const Vec&)>& control,
                     const Vec& x0, const SimulationConfig& config) {
  if (!(config.dt > 0.0) || !(config.t_end > config.dt) || !(config.convergence_tol > 0.0))
    throw Error(Errc::invalid_params, "need 0 < dt < t_end and tol > 0");
  const double dt = config.dt;
  const auto steps = static_cast<std::size_t>(std::ceil(config.t_end / dt - 1e-12));

  Trajectory traj;
  traj.times.reserve(steps + 1);
  traj.states.reserve(steps + 1);
  Vec x = x0;
  check_finite(x, 0.0);
  traj.times.push_back(0.0);
  traj.states.push_back(x);

  for (std::size_t k = 0; k < steps; ++k) {
    const Vec k1 = control(x);
    const Vec k2 = control(axpy(x, dt / 2.0, k1));
    const Vec k3 = control(axpy(x, dt / 2.0, k2));
    const Vec k4 = control(axpy(x, dt, k3));
    for (std::size_t i = 0; i < x.size(); ++i)
      x[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    const double t = static_cast<double>(k + 1) * dt;
    check_finite(x, t);
    traj.times.push_back(t);
    traj.states.push_back(x);
  }
  return traj;
}

Vec predicted_limit(const SignedDigraph& g, const std::vector<int>& gauge, const Vec& x0) {
  const std::size_t n = g.size();
  if (gauge.size() != n || x0.size() != n)
    throw Error(Errc::dimension_mismatch, "gauge/state length mismatch");
  if (!verify_gauge(g, gauge))
    throw Error(Errc::not_balanced, "gauge does not balance the graph");
  double signed_mean = 0.0;
  for (std::size_t j = 0; j < n; ++j) signed_mean += gauge[j] * x0[j];
  signed_mean /= static_cast<double>(n);
  Vec limit(n);
  for (std::size_t i = 0; i < n; ++i) limit[i] = gauge[i] * signed_mean;
  return limit;
}

std::optional<double> measured_settling_time(const Trajectory& traj,
                                             const Vec& target, double tol) {
  if (traj.states.empty()) return std::nullopt;
  auto inside = [&](const Vec& x) {
    for (std::size_t i = 0; i < x.size(); ++i)
      if (std::abs(x[i] - target[i]) > tol) return false;
    return true;
  };
  if (!inside(traj.states.back())) return std::nullopt;
  std::size_t k = traj.states.size() - 1;
  while (k > 0 && inside(traj.states[k - 1])) --k;
  return traj.times[k];
}

SimulationSummary classify(const Trajectory& traj, const SignedDigraph& g,
                           const BalanceResult& balance, double tol) {
  const std::size_t n = g.size();
  SimulationSummary sum;
  sum.limit_estimate = traj.states.back();
  const Vec& tail = sum.limit_estimate;

  if (balance.balanced) {
    const Vec pred = predicted_limit(g, balance.gauge, traj.states.front());
    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      err = std::max(err, std::abs(tail[i] - pred[i]));
    sum.predicted_limit = pred;
    sum.prediction_error = err;
    if (err <= tol) {
      sum.outcome = Outcome::signed_average_consensus;
      double c = 0.0;
      for (std::size_t j = 0; j < n; ++j) c += balance.gauge[j] * traj.states.front()[j];
      sum.consensus_value = c / static_cast<double>(n);
      sum.measured_settling_time = measured_settling_time(traj, pred, tol);
      return sum;
    }
    // Common gauge-signed value with modulus above tol => bipartite consensus.
    double lo = balance.gauge[0] * tail[0], hi = lo, mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double y = balance.gauge[i] * tail[i];
      lo = std::min(lo, y);
      hi = std::max(hi, y);
      mean += y;
    }
    mean /= static_cast<double>(n);
    if (hi - lo <= tol && std::abs(mean) > tol) {
      sum.outcome = Outcome::bipartite_consensus;
      sum.consensus_value = mean;
      Vec target(n);
      for (std::size_t i = 0; i < n; ++i) target[i] = balance.gauge[i] * mean;
      sum.measured_settling_time = measured_settling_time(traj, target, tol);
      return sum;
    }
    sum.outcome = Outcome::not_converged;
    return sum;
  }

  double mag = 0.0;
  for (double v : tail) mag = std::max(mag, std::abs(v));
  if (mag <= tol) {
    sum.outcome = Outcome::state_stability;
    sum.measured_settling_time = measured_settling_time(traj, Vec(n, 0.0), tol);
  } else {
    sum.outcome = Outcome::not_converged;
  }
  return sum;
}

void write_trajectory_csv(const Trajectory& traj, std::ostream& out) {
  const std::size_t n = traj.states.empty() ? 0 : traj.states.front().size();
  out << "t";
  for (std::size_t i = 1; i <= n; ++i) out << ",x" << i;
  out << "\n";
  char buf[40];
  for (std::size_t k = 0; k < traj.states.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%.17g", traj.times[k]);
    out << buf;
    for (double v : traj.states[k]) {
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out << "," << buf;
    }
    out << "\n";
  }
}

}  // namespace signet
