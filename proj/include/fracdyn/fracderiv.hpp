#pragma once

#include <vector>

#include "fracdyn/order.hpp"
#include "fracdyn/poly.hpp"

namespace fracdyn {

/// Riemann-Liouville derivative (initial point 0) in variable `var`, applied
/// termwise:
///
///   c x^e R  ->  c Gamma(e+1)/Gamma(e+1-alpha) x^(e-alpha) R
///
/// where R collects the factors on other variables. Terms whose denominator
/// hits a pole of Gamma vanish. For integer alpha this is the classical
/// alpha-th partial derivative.
///
/// Throws NonIntegrablePowerError when some exponent on `var` is <= -1 and
/// DomainError for |x|^e factors on `var` unless e is an even integer.
GenPoly frac_deriv(const GenPoly& p, int var, FracOrder order);

/// Riemann-Liouville integral of order alpha in `var`:
///   c x^s R -> c Gamma(s+1)/Gamma(s+1+alpha) x^(s+alpha) R,  s > -1.
/// frac_deriv(frac_integral(p)) == p.
GenPoly frac_integral(const GenPoly& p, int var, FracOrder order);

/// Termwise solution u of frac_deriv(u, var, order) == p with no kernel
/// component. Unlike frac_integral this accepts exponents s <= -1 as long as
/// x^s is the image of some power x^e with e > -1. Throws
/// NonIntegrablePowerError for terms outside the image of the operator.
GenPoly frac_preimage(const GenPoly& p, int var, FracOrder order);

/// Homogeneous solutions {x^(alpha-k) : k = 1..m} in variable `var`.
std::vector<GenPoly> kernel_basis(std::size_t nvars, int var, FracOrder order);

/// Gamma(e+1)/Gamma(e+1-alpha); exact falling factorial for integer alpha.
double power_rule_coefficient(double e, FracOrder order);

}  // namespace fracdyn
