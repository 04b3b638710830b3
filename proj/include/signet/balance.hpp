#pragma once

#include <cstddef>
#include <vector>

#include "signet/graph.hpp"

namespace signet {

/// Verdict of the structural-balance test.
///
/// Balanced: `gauge` holds sigma_i in {+1, -1} with sigma[0] = +1 and
/// sigma_i * sigma_j * a_ij >= 0 on every edge (so D A D is nonnegative
/// for D = diag(gauge)).
///
/// Unbalanced: `witness` lists distinct 0-based nodes of a negative
/// semi-cycle; consecutive nodes (wrapping around) are joined by an edge of
/// the underlying undirected graph, and the product of edge signs around the
/// cycle is negative. Any negative semi-cycle is acceptable; the witness is
/// diagnostic, not canonical.
struct BalanceResult {
  bool balanced = false;
  std::vector<int> gauge;
  std::vector<std::size_t> witness;
};

/// Two-colors the underlying undirected graph by edge sign (positive edge =>
/// equal colors, negative => opposite). Throws
/// Errc::disconnected_underlying_graph when the verdict would not be unique.
BalanceResult structural_balance(const SignedDigraph& g);

/// True iff D L D equals the induced unsigned Laplacian entrywise
/// within 1e-12, with D = diag(gauge).
bool verify_gauge(const SignedDigraph& g, const std::vector<int>& gauge);

}  // namespace signet
