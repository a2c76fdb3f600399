#include "fracdyn/numerics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fracdyn/errors.hpp"

namespace fracdyn {

namespace {

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

}  // namespace

double sin_pi(double x) {
  // Reduce to [-1, 1] so that integers map to exact zeros.
  double r = std::fmod(x, 2.0);
  if (r > 1.0) r -= 2.0;
  if (r < -1.0) r += 2.0;
  if (r == 0.0 || std::fabs(r) == 1.0) return 0.0;
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(std::numbers::pi * r);
}

double gamma(double x) {
  if (std::isnan(x)) throw DomainError("gamma: argument is NaN");
  if (is_nonpositive_integer(x)) {
    throw PoleError("gamma: pole at x = " + std::to_string(x));
  }
  if (x < 0.5) {
    // Gamma(x) Gamma(1 - x) = pi / sin(pi x)
    const double g = std::tgamma(1.0 - x);
    if (std::isinf(g)) {
      // Gamma(x) underflows to zero far left of the origin.
      return 0.0;
    }
    return std::numbers::pi / (sin_pi(x) * g);
  }
  const double g = std::tgamma(x);
  if (std::isinf(g)) {
    throw OverflowError("gamma: overflow at x = " + std::to_string(x));
  }
  return g;
}

double recip_gamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  if (x < 0.5) {
    // 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi
    const double g = std::tgamma(1.0 - x);
    if (std::isinf(g)) return std::copysign(std::numeric_limits<double>::infinity(), sin_pi(x));
    return sin_pi(x) * g / std::numbers::pi;
  }
  const double g = std::tgamma(x);
  if (std::isinf(g)) return 0.0;
  return 1.0 / g;
}

double gl_derivative(const std::function<double(double)>& f, double alpha,
                     double x, double h) {
  if (!(alpha > 0.0)) throw DomainError("gl_derivative: alpha must be > 0");
  if (!(x > 0.0)) throw DomainError("gl_derivative: x must be > 0");
  if (!(h > 0.0) || h >= x) throw DomainError("gl_derivative: need 0 < h < x");
  const double ratio = x / h;
  const double steps = std::round(ratio);
  if (std::fabs(ratio - steps) > 1e-9 * ratio || steps < 2.0) {
    throw DomainError("gl_derivative: x / h must be an integer >= 2");
  }
  const auto n = static_cast<long>(steps);

  double w = 1.0;
  double sum = f(x);
  for (long j = 1; j <= n; ++j) {
    w *= (static_cast<double>(j) - 1.0 - alpha) / static_cast<double>(j);
    const double y = j == n ? 0.0 : x - static_cast<double>(j) * h;
    sum += w * f(y);
  }
  return sum / std::pow(h, alpha);
}

}  // namespace fracdyn
