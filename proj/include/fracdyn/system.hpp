#pragma once

#include <map>
#include <string>
#include <vector>

#include "fracdyn/order.hpp"
#include "fracdyn/poly.hpp"

namespace fracdyn {

/// A first-order dynamical system dx_i/dt = rhs_i(x) together with the
/// fractional order it is to be analyzed at.
///
/// With `phase_split` the first half of the variables are coordinates q_i and
/// the second half momenta p_i; rhs then holds (G^1..G^n, F^1..F^n) of
/// dq_i/dt = G^i, dp_i/dt = F^i.
struct SystemSpec {
  std::string name;
  std::vector<std::string> var_names;
  std::map<std::string, double> params;
  FracOrder order{1.0};
  bool phase_split = false;
  std::vector<GenPoly> rhs;
  /// Source text of each right-hand side, kept so parameters can be rebound.
  std::vector<std::string> rhs_text;

  std::size_t nvars() const { return var_names.size(); }
  /// Number of degrees of freedom n of a phase-space system (nvars / 2).
  std::size_t half() const { return var_names.size() / 2; }

  /// Index of a variable name, -1 when absent.
  int var_index(const std::string& name) const;

  /// Throws DomainError when the invariants are violated.
  void validate() const;

  /// Copy with some parameters replaced and every rhs reparsed.
  SystemSpec with_params(const std::map<std::string, double>& overrides) const;
  SystemSpec with_order(FracOrder order) const;
};

}  // namespace fracdyn
