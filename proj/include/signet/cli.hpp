#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "signet/protocols.hpp"

// Command-line front end, exposed as library functions so the commands can
// be driven in-process by tests. Exit status 0 means the command completed
// and, for simulate, the measured outcome matches the analyze-style
// prediction; anything else is nonzero with a one-line diagnostic on `err`.

namespace signet::cli {

struct SimulateArgs {
  std::string graph_path;
  ProtocolKind protocol = ProtocolKind::mirror;
  Vec x0;
  double dt = 1e-3;
  double t_end = 30.0;
  double tol = 1e-4;
  FixedTimeParams fixed_time;    // used when protocol == fixed_time
  FiniteTimeParams finite_time;  // used when protocol == finite_time
  std::optional<std::string> csv_path;
};

struct BoundArgs {
  std::string graph_path;
  FixedTimeParams params;
};

int analyze(const std::string& graph_path, std::ostream& out, std::ostream& err);
int simulate(const SimulateArgs& args, std::ostream& out, std::ostream& err);
int bound(const BoundArgs& args, std::ostream& out, std::ostream& err);

/// Full argv-style entry point (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace signet::cli
