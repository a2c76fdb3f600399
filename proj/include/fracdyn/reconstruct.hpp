#pragma once

#include <vector>

#include "fracdyn/order.hpp"
#include "fracdyn/poly.hpp"
#include "fracdyn/system.hpp"

namespace fracdyn {

/// Finds U with D^alpha_{x_k} U = targets[k] for every k, assuming the 1-form
/// sum_k targets[k] (dx_k)^alpha is closed. Variables are integrated one at a
/// time: U += preimage_k(targets[k] - D^alpha_{x_k} U). No kernel component
/// is ever added, so U is the minimal representative.
///
/// Throws VerificationError when the result does not reproduce every target
/// within `tol`.
GenPoly integrate_exact_form(const std::vector<GenPoly>& targets, FracOrder order,
                             double tol = 1e-9);

/// V with D^alpha_{x_i} V = -F_i. Throws NotClosedError (listing residuals)
/// when check_gradient fails.
GenPoly reconstruct_potential(const SystemSpec& sys);

/// H with G^i = D^alpha_{p_i} H and F^i = -D^alpha_{q_i} H. Throws
/// NotClosedError when check_hamiltonian fails.
GenPoly reconstruct_hamiltonian(const SystemSpec& sys);

}  // namespace fracdyn
