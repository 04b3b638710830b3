#pragma once

#include <cstddef>

#include "signet/linalg.hpp"

namespace signet {

// Edge direction convention, fixed project-wide:
//
//     a_ij != 0  <=>  edge (v_j -> v_i),
//
// i.e. weights(i, j) is the weight of the edge FROM node j INTO node i.
// Row i of the weight matrix therefore lists the in-neighbors of v_i.
// Getting this backwards is the dominant bug risk in this code base; every
// routine below assumes this orientation.

/// Weighted signed digraph on n >= 2 nodes. Immutable once constructed;
/// construction enforces: zero diagonal (no self-loops), digon sign
/// symmetry (a_ij * a_ji >= 0), and finite entries.
class SignedDigraph {
 public:
  /// Checks the standing assumptions and wraps the matrix. Throws
  /// Errc::bad_dimension, self_loop, digon_sign_violation or non_finite.
  static SignedDigraph validate(Matrix weights);

  std::size_t size() const noexcept { return weights_.rows(); }
  /// a_ij: weight of edge (v_j -> v_i); 0 means no edge.
  double weight(std::size_t i, std::size_t j) const { return weights_(i, j); }
  const Matrix& weights() const noexcept { return weights_; }

 private:
  explicit SignedDigraph(Matrix w) : weights_(std::move(w)) {}
  Matrix weights_;
};

struct GraphReport {
  bool strongly_connected = false;
  bool weight_balanced = false;
  Vec in_degrees;
  Vec out_degrees;
};

/// L = Delta - A with Delta = diag of in-degrees (sums of |a_ij| over row i).
Matrix laplacian(const SignedDigraph& g);

/// Same edges with absolute-value weights; idempotent.
SignedDigraph induced_unsigned(const SignedDigraph& g);

/// True iff the digraph on nonzero entries is one SCC covering all nodes.
bool is_strongly_connected(const SignedDigraph& g);

/// Degrees, weight balance (|in - out| <= 1e-9 per node) and connectivity.
GraphReport degree_report(const SignedDigraph& g);

}  // namespace signet
