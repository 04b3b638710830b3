#pragma once

#include <stdexcept>
#include <string>

namespace signet {

/// Machine-checkable failure categories for everything the library can reject.
enum class Errc {
  bad_dimension,
  self_loop,
  digon_sign_violation,
  non_finite,
  disconnected_underlying_graph,
  not_strongly_connected,
  numerically_singular,
  not_symmetric,
  no_convergence,
  lyapunov_singular,
  not_weight_balanced,
  cofactors_unequal,
  dimension_mismatch,
  non_finite_state,
  not_balanced,
  invalid_params,
  parse_error,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace signet
