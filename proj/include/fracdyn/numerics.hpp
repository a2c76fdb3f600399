#pragma once

#include <functional>

namespace fracdyn {

/// Gamma function. Uses the reflection formula below 0.5.
/// Throws PoleError at 0, -1, -2, ... and OverflowError when |Gamma(x)| is not
/// representable.
double gamma(double x);

/// 1/Gamma(x); exactly 0 at the poles of Gamma, never throws.
double recip_gamma(double x);

/// sin(pi x) with exact zeros at integers.
double sin_pi(double x);

/// Grunwald-Letnikov approximation of the Riemann-Liouville derivative of
/// order `alpha` at `x` with initial point 0:
///
///   h^-alpha * sum_{j=0}^{N} w_j f(x - j h),   N = x / h,
///   w_0 = 1, w_j = w_{j-1} (j - 1 - alpha) / j.
///
/// First order accurate in h. `x / h` must be an integer >= 2.
double gl_derivative(const std::function<double(double)>& f, double alpha,
                     double x, double h);

}  // namespace fracdyn
