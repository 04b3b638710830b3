#include "signet/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "signet/balance.hpp"
#include "signet/graph_io.hpp"
#include "signet/mirror.hpp"
#include "signet/potential.hpp"
#include "signet/simulator.hpp"
#include "signet/spectral.hpp"

namespace signet::cli {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string num_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string vec_str(const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + num(v[i]);
  return s + "]";
}

std::string vec_csv(const Vec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + num_full(v[i]);
  return s;
}

std::string gauge_str(const std::vector<int>& gauge) {
  std::string s = "[";
  for (std::size_t i = 0; i < gauge.size(); ++i)
    s += std::string(i ? ", " : "") + (gauge[i] > 0 ? "+1" : "-1");
  return s + "]";
}

std::string witness_str(const std::vector<std::size_t>& cycle) {
  std::string s;
  for (std::size_t node : cycle) s += "v" + std::to_string(node + 1) + " -> ";
  return s + "v" + std::to_string(cycle.front() + 1);
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::signed_average_consensus: return "signed-average consensus";
    case Outcome::bipartite_consensus: return "bipartite consensus";
    case Outcome::state_stability: return "state stability";
    case Outcome::not_converged: return "not converged";
  }
  return "?";
}

const char* outcome_key(Outcome o) {
  switch (o) {
    case Outcome::signed_average_consensus: return "signed_average_consensus";
    case Outcome::bipartite_consensus: return "bipartite_consensus";
    case Outcome::state_stability: return "state_stability";
    case Outcome::not_converged: return "not_converged";
  }
  return "?";
}

const char* protocol_name(ProtocolKind k) {
  switch (k) {
    case ProtocolKind::classic: return "classic";
    case ProtocolKind::mirror: return "mirror";
    case ProtocolKind::cofactor: return "cofactor";
    case ProtocolKind::fixed_time: return "fixed-time";
    case ProtocolKind::finite_time: return "finite-time";
  }
  return "?";
}

Vec parse_x0(const std::string& text) {
  Vec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw Error(Errc::invalid_params, "cannot parse x0 entry '" + item + "'");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size())
      throw Error(Errc::invalid_params, "cannot parse x0 entry '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw Error(Errc::invalid_params, "x0 is empty");
  return out;
}

}  // namespace

int analyze(const std::string& graph_path, std::ostream& out, std::ostream& err) {
  try {
    const SignedDigraph g = load_graph(graph_path);
    const GraphReport rep = degree_report(g);
    out << "graph: " << graph_path << "\n";
    out << "nodes: " << g.size() << "\n";
    out << "strongly connected: " << (rep.strongly_connected ? "yes" : "no") << "\n";
    out << "weight balanced: " << (rep.weight_balanced ? "yes" : "no") << "\n";
    out << "in degrees:  " << vec_str(rep.in_degrees) << "\n";
    out << "out degrees: " << vec_str(rep.out_degrees) << "\n";

    const BalanceResult bal = structural_balance(g);
    if (bal.balanced)
      out << "structural balance: balanced, gauge " << gauge_str(bal.gauge) << "\n";
    else
      out << "structural balance: unbalanced, witness cycle " << witness_str(bal.witness) << "\n";

    if (!rep.strongly_connected) {
      out << "note: cofactor weights and mirror spectrum need strong connectivity; skipped\n";
      return 0;
    }

    const Vec w = cofactor_weights(g);
    const auto [lo, hi] = std::minmax_element(w.begin(), w.end());
    out << "cofactor weights w: " << vec_str(w) << " (conditioning max/min = "
        << num(*hi / *lo) << ")\n";
    const SpectrumReport spec = classify_spectrum(g);
    out << "mirror eigenvalues: " << vec_str(spec.eigenvalues) << "\n";
    out << "prediction: "
        << (bal.balanced ? "signed-average consensus" : "state stability")
        << " under the averaging protocols\n";
    return 0;
  } catch (const Error& e) {
    err << "analyze: " << e.what() << "\n";
    return 1;
  }
}

int simulate(const SimulateArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const SignedDigraph g = load_graph(args.graph_path);
    if (!is_strongly_connected(g))
      throw Error(Errc::not_strongly_connected,
                  "simulate requires a strongly connected graph");
    const BalanceResult bal = structural_balance(g);
    const GraphReport rep = degree_report(g);
    const MirrorArtifacts art = mirror_graph(g);

    ProtocolSpec spec;
    spec.kind = args.protocol;
    if (args.protocol == ProtocolKind::fixed_time) spec.fixed_time = args.fixed_time;
    if (args.protocol == ProtocolKind::finite_time) spec.finite_time = args.finite_time;

    SimulationConfig config;
    config.dt = args.dt;
    config.t_end = args.t_end;
    config.convergence_tol = args.tol;
    config.protocol = spec;

    const auto control = make_control(spec, g, art);
    const Trajectory traj = integrate(control, args.x0, config);
    const SimulationSummary sum = classify(traj, g, bal, config.convergence_tol);

    if (args.csv_path) {
      std::ofstream csv(*args.csv_path);
      if (!csv) throw Error(Errc::invalid_params, "cannot open " + *args.csv_path);
      write_trajectory_csv(traj, csv);
    }

    out << "graph: " << args.graph_path << " (" << g.size() << " nodes, "
        << (bal.balanced ? "balanced" : "unbalanced") << ", "
        << (rep.weight_balanced ? "weight balanced" : "weight unbalanced") << ")\n";
    out << "protocol: " << protocol_name(args.protocol) << "\n";
    out << "x0: " << vec_str(args.x0) << "  dt: " << num(args.dt)
        << "  t_end: " << num(args.t_end) << "  tol: " << num(args.tol) << "\n";
    out << "outcome: " << outcome_name(sum.outcome) << "\n";
    out << "limit estimate: " << vec_str(sum.limit_estimate) << "\n";
    if (sum.predicted_limit) {
      out << "predicted limit: " << vec_str(*sum.predicted_limit) << "\n";
      out << "prediction error: " << num(*sum.prediction_error) << "\n";
    }
    if (sum.consensus_value) out << "consensus value: " << num(*sum.consensus_value) << "\n";
    if (sum.measured_settling_time)
      out << "settling time (measured): " << num(*sum.measured_settling_time) << "\n";
    if (args.protocol == ProtocolKind::fixed_time) {
      const SpectrumReport srep = classify_spectrum(g);
      const double lambda = bal.balanced ? srep.fiedler_like : srep.smallest;
      const double bound = settling_bound(args.fixed_time, lambda, g.size());
      out << "settling bound (a priori): " << num(bound) << " using lambda = "
          << num(lambda) << "\n";
    }
    if (args.csv_path) out << "trajectory csv: " << *args.csv_path << "\n";

    out << "--\n";
    out << "outcome=" << outcome_key(sum.outcome) << "\n";
    out << "limit=" << vec_csv(sum.limit_estimate) << "\n";
    if (sum.predicted_limit) {
      out << "predicted=" << vec_csv(*sum.predicted_limit) << "\n";
      out << "prediction_error=" << num_full(*sum.prediction_error) << "\n";
    }
    if (sum.consensus_value) out << "consensus_value=" << num_full(*sum.consensus_value) << "\n";
    if (sum.measured_settling_time)
      out << "settling_time=" << num_full(*sum.measured_settling_time) << "\n";

    // Exit status encodes agreement with the analyze-style prediction.
    std::vector<Outcome> expected;
    if (!bal.balanced) {
      expected = {Outcome::state_stability};
    } else {
      switch (args.protocol) {
        case ProtocolKind::mirror:
        case ProtocolKind::cofactor:
          expected = {Outcome::signed_average_consensus};
          break;
        case ProtocolKind::classic:
          expected = rep.weight_balanced
                         ? std::vector<Outcome>{Outcome::signed_average_consensus}
                         : std::vector<Outcome>{Outcome::bipartite_consensus,
                                                Outcome::signed_average_consensus};
          break;
        case ProtocolKind::fixed_time:
        case ProtocolKind::finite_time:
          expected = {Outcome::bipartite_consensus, Outcome::signed_average_consensus};
          break;
      }
    }
    if (std::find(expected.begin(), expected.end(), sum.outcome) == expected.end()) {
      err << "simulate: outcome '" << outcome_name(sum.outcome)
          << "' does not match the prediction for this graph/protocol\n";
      return 1;
    }
    return 0;
  } catch (const Error& e) {
    err << "simulate: " << e.what() << "\n";
    return 1;
  }
}

int bound(const BoundArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const SignedDigraph g = load_graph(args.graph_path);
    const BalanceResult bal = structural_balance(g);
    const SpectrumReport spec = classify_spectrum(g);
    const double lambda = bal.balanced ? spec.fiedler_like : spec.smallest;
    const double t = settling_bound(args.params, lambda, g.size());
    out << "graph: " << args.graph_path << "\n";
    out << "structural balance: " << (bal.balanced ? "balanced" : "unbalanced")
        << " -> using " << (bal.balanced ? "lambda_2" : "lambda_1") << " = "
        << num(lambda) << "\n";
    out << "params: k1=" << num(args.params.k1) << " k2=" << num(args.params.k2)
        << " m=" << args.params.m << " r=" << args.params.r << " p=" << args.params.p
        << " q=" << args.params.q << "\n";
    out << "settling bound T = " << num(t) << "\n";
    out << "--\n";
    out << "lambda=" << num_full(lambda) << "\n";
    out << "bound=" << num_full(t) << "\n";
    return 0;
  } catch (const Error& e) {
    err << "bound: " << e.what() << "\n";
    return 1;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"distributed averaging over directed signed networks"};
  app.require_subcommand(1);

  std::string graph_path;
  auto* cmd_analyze = app.add_subcommand(
      "analyze", "connectivity, balance, cofactor and spectrum report");
  cmd_analyze->add_option("graph", graph_path, "graph file")->required();

  SimulateArgs sim;
  std::string protocol_text = "mirror";
  std::string x0_text;
  std::string csv_path;
  auto* cmd_sim = app.add_subcommand("simulate", "integrate a protocol and classify the outcome");
  cmd_sim->add_option("graph", graph_path, "graph file")->required();
  cmd_sim->add_option("--protocol", protocol_text,
                      "classic | mirror | cofactor | fixed-time | finite-time")
      ->required();
  cmd_sim->add_option("--x0", x0_text, "comma-separated initial state")->required();
  cmd_sim->add_option("--dt", sim.dt, "integration step");
  cmd_sim->add_option("--t-end", sim.t_end, "horizon");
  cmd_sim->add_option("--tol", sim.tol, "convergence tolerance");
  cmd_sim->add_option("--k1", sim.fixed_time.k1, "fixed-time gain k1");
  cmd_sim->add_option("--k2", sim.fixed_time.k2, "fixed-time gain k2");
  cmd_sim->add_option("--m", sim.fixed_time.m, "fixed-time exponent m");
  cmd_sim->add_option("--r", sim.fixed_time.r, "fixed-time exponent r");
  cmd_sim->add_option("--p", sim.fixed_time.p, "fixed-time exponent p");
  cmd_sim->add_option("--q", sim.fixed_time.q, "fixed-time exponent q");
  auto* alpha_opt =
      cmd_sim->add_option("--alpha", sim.finite_time.alpha_exp, "finite-time exponent");
  cmd_sim->add_option("--out", csv_path, "trajectory CSV path");

  BoundArgs bnd;
  auto* cmd_bound = app.add_subcommand("bound", "state-independent settling-time bound");
  cmd_bound->add_option("graph", graph_path, "graph file")->required();
  cmd_bound->add_option("--k1", bnd.params.k1, "gain k1");
  cmd_bound->add_option("--k2", bnd.params.k2, "gain k2");
  cmd_bound->add_option("--m", bnd.params.m, "exponent m");
  cmd_bound->add_option("--r", bnd.params.r, "exponent r");
  cmd_bound->add_option("--p", bnd.params.p, "exponent p");
  cmd_bound->add_option("--q", bnd.params.q, "exponent q");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (cmd_analyze->parsed()) return analyze(graph_path, out, err);

  if (cmd_sim->parsed()) {
    try {
      if (protocol_text == "classic") sim.protocol = ProtocolKind::classic;
      else if (protocol_text == "mirror") sim.protocol = ProtocolKind::mirror;
      else if (protocol_text == "cofactor") sim.protocol = ProtocolKind::cofactor;
      else if (protocol_text == "fixed-time") sim.protocol = ProtocolKind::fixed_time;
      else if (protocol_text == "finite-time") sim.protocol = ProtocolKind::finite_time;
      else throw Error(Errc::invalid_params, "unknown protocol '" + protocol_text + "'");
      if (sim.protocol == ProtocolKind::finite_time && alpha_opt->count() == 0)
        throw Error(Errc::invalid_params, "finite-time protocol requires --alpha");
      sim.graph_path = graph_path;
      sim.x0 = parse_x0(x0_text);
      if (!csv_path.empty()) sim.csv_path = csv_path;
    } catch (const Error& e) {
      err << "simulate: " << e.what() << "\n";
      return 2;
    }
    return simulate(sim, out, err);
  }

  bnd.graph_path = graph_path;
  return bound(bnd, out, err);
}

}  // namespace signet::cli
