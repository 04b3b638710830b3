#pragma once

#include <iosfwd>
#include <string>

#include "signet/graph.hpp"

namespace signet {

// Graph text format:
//   line 1:            n <count>
//   following lines:   <i> <j> <w>     meaning a_ij = w, 1-based indices
//   '#' starts a comment line; blank lines are skipped;
//   a duplicate (i, j) pair is an error.

/// Parses the text format; `source_name` is used in diagnostics. Throws
/// Errc::parse_error with a line number, or the validation errors.
SignedDigraph parse_graph(std::istream& in, const std::string& source_name = "<stream>");

/// Reads a graph file from disk.
SignedDigraph load_graph(const std::string& path);

/// Renders a graph back into the text format (for fixtures and tooling).
std::string format_graph(const SignedDigraph& g);

}  // namespace signet
