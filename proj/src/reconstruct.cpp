#include "fracdyn/reconstruct.hpp"

#include <algorithm>
#include <cmath>

#include "fracdyn/errors.hpp"
#include "fracdyn/forms.hpp"
#include "fracdyn/fracderiv.hpp"

namespace fracdyn {

namespace {

// Round-off left over from near cancellations must not be integrated.
constexpr double kRelativeNoise = 1e-12;

}  // namespace

GenPoly integrate_exact_form(const std::vector<GenPoly>& targets, FracOrder order, double tol) {
  const std::size_t n = targets.size();
  double scale = 1.0;
  for (const auto& t : targets) scale = std::max(scale, t.max_abs_coeff());
  const double noise = kRelativeNoise * scale;

  GenPoly u(n);
  for (std::size_t k = 0; k < n; ++k) {
    const int var = static_cast<int>(k);
    const GenPoly residual = (targets[k].widened(n) - frac_deriv(u, var, order)).pruned(noise);
    if (residual.is_zero()) continue;
    u += frac_preimage(residual, var, order);
  }
  u = u.pruned(noise);

  for (std::size_t k = 0; k < n; ++k) {
    const GenPoly mismatch = frac_deriv(u, static_cast<int>(k), order) - targets[k].widened(n);
    if (mismatch.max_abs_coeff() > tol) {
      throw VerificationError("reconstruction does not reproduce component " + std::to_string(k) +
                              ": mismatch " + mismatch.to_string());
    }
  }
  return u;
}

GenPoly reconstruct_potential(const SystemSpec& sys) {
  const ClosureReport rep = check_gradient(sys);
  if (!rep.closed) {
    throw NotClosedError("the 1-form F_i (dx_i)^alpha is not closed:\n" + describe(rep, sys.var_names));
  }
  std::vector<GenPoly> targets;
  for (const auto& f : sys.rhs) targets.push_back(-f.widened(sys.nvars()));
  return integrate_exact_form(targets, sys.order);
}

GenPoly reconstruct_hamiltonian(const SystemSpec& sys) {
  const ClosureReport rep = check_hamiltonian(sys);
  if (!rep.closed) {
    throw NotClosedError("the Helmholtz conditions fail:\n" + describe(rep, sys.var_names));
  }
  // d^alpha H = beta_alpha: coefficient -F^i on (dq_i)^alpha, G^i on (dp_i)^alpha.
  return integrate_exact_form(hamiltonian_one_form(sys).coeffs(), sys.order);
}

}  // namespace fracdyn
