#include "fracdyn/fracderiv.hpp"

#include <cmath>
#include <string>

#include "fracdyn/errors.hpp"
#include "fracdyn/numerics.hpp"

namespace fracdyn {

namespace {

// Replace (or insert / drop) the factor on `var` of a term.
GenTerm with_exponent(const GenTerm& t, int var, double e, double coeff) {
  GenTerm out{coeff, {}};
  out.factors.reserve(t.factors.size() + 1);
  bool placed = false;
  for (const auto& f : t.factors) {
    if (f.var == var) {
      placed = true;
      if (e != 0.0) out.factors.push_back({var, e, false});
      continue;
    }
    if (!placed && f.var > var) {
      placed = true;
      if (e != 0.0) out.factors.push_back({var, e, false});
    }
    out.factors.push_back(f);
  }
  if (!placed && e != 0.0) out.factors.push_back({var, e, false});
  return out;
}

double exponent_on(const GenTerm& t, int var) {
  const Factor* f = t.factor(var);
  if (!f) return 0.0;
  if (f->abs && !(is_integer_exponent(f->exponent) && std::fmod(f->exponent, 2.0) == 0.0)) {
    throw DomainError("fractional derivative of |x|^e is defined only for even integer e",
                      var, f->exponent);
  }
  return f->exponent;
}

}  // namespace

double power_rule_coefficient(double e, FracOrder order) {
  if (order.is_integer()) {
    double r = 1.0;
    for (int i = 0; i < order.m(); ++i) r *= e - i;
    return r;
  }
  // Snap to the exponent grid so that e + 1 - alpha hits a pole exactly when
  // x^e lies in the kernel.
  return gamma(e + 1.0) * recip_gamma(quantize_exponent(e + 1.0 - order.alpha()));
}

GenPoly frac_deriv(const GenPoly& p, int var, FracOrder order) {
  std::vector<GenTerm> out;
  out.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    const double e = exponent_on(t, var);
    if (e <= -1.0) {
      throw NonIntegrablePowerError("fractional derivative of x^" + format_real(e) +
                                    " (exponent <= -1) in variable index " + std::to_string(var));
    }
    const double r = power_rule_coefficient(e, order);
    if (r == 0.0) continue;
    out.push_back(with_exponent(t, var, quantize_exponent(e - order.alpha()), t.coeff * r));
  }
  return GenPoly(p.nvars(), std::move(out));
}

GenPoly frac_preimage(const GenPoly& p, int var, FracOrder order) {
  std::vector<GenTerm> out;
  out.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    const double s = exponent_on(t, var);
    const double e = quantize_exponent(s + order.alpha());
    const double r = e > -1.0 ? power_rule_coefficient(e, order) : 0.0;
    if (r == 0.0) {
      throw NonIntegrablePowerError("x^" + format_real(s) + " in variable index " +
                                    std::to_string(var) +
                                    " is not the fractional derivative of any power");
    }
    out.push_back(with_exponent(t, var, e, t.coeff / r));
  }
  return GenPoly(p.nvars(), std::move(out));
}

GenPoly frac_integral(const GenPoly& p, int var, FracOrder order) {
  for (const auto& t : p.terms()) {
    const double s = exponent_on(t, var);
    if (s <= -1.0) {
      throw NonIntegrablePowerError("fractional integral of x^" + format_real(s) +
                                    " (exponent <= -1) in variable index " + std::to_string(var));
    }
  }
  return frac_preimage(p, var, order);
}

std::vector<GenPoly> kernel_basis(std::size_t nvars, int var, FracOrder order) {
  std::vector<GenPoly> basis;
  for (int k = 1; k <= order.m(); ++k) {
    basis.push_back(GenPoly::monomial(nvars, 1.0, {Factor{var, order.alpha() - k, false}}));
  }
  return basis;
}

}  // namespace fracdyn
