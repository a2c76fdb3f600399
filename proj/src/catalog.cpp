#include "fracdyn/catalog.hpp"

#include <cmath>

#include "fracdyn/errors.hpp"
#include "fracdyn/fracderiv.hpp"
#include "fracdyn/numerics.hpp"
#include "fracdyn/parser.hpp"

namespace fracdyn {

namespace {

SystemSpec make(std::string name, std::vector<std::string> vars, std::map<std::string, double> params,
                double alpha, std::vector<std::string> rhs, bool phase = false) {
  SystemSpec s;
  s.name = std::move(name);
  s.var_names = std::move(vars);
  s.params = std::move(params);
  s.order = FracOrder(alpha);
  s.phase_split = phase;
  s.rhs_text = std::move(rhs);
  for (const auto& text : s.rhs_text) s.rhs.push_back(parse_expression(text, s.var_names, s.params));
  s.validate();
  return s;
}

std::string power(const std::string& var, double e) {
  if (e == 0.0) return "1";
  if (e == 1.0) return var;
  return var + "^" + format_real(e);
}

// Joins "coeff*rest" pieces, skipping zero coefficients.
std::string sum_text(const std::vector<std::pair<double, std::string>>& parts) {
  std::string out;
  for (const auto& [c, rest] : parts) {
    if (c == 0.0) continue;
    if (!out.empty()) out += " + ";
    out += format_real(c) + "*" + rest;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"lorenz", "rossler", "example1", "example2", "fracosc"};
}

SystemSpec example2_system(int n, int m, int k, int l, double alpha) {
  auto mono = [](const std::string& v, int e) { return power(v, e); };
  const std::string fx = format_real(n * (n - 1.0)) + "*a*" + mono("x", n - 2) + " + " +
                         format_real(k * (k - 1.0)) + "*c*" + mono("x", k - 2) + "*" + mono("y", l);
  const std::string fy = format_real(m * (m - 1.0)) + "*b*" + mono("y", m - 2) + " + " +
                         format_real(l * (l - 1.0)) + "*c*" + mono("x", k) + "*" + mono("y", l - 2);
  return make("example2", {"x", "y"}, {{"a", 1.0}, {"b", 1.0}, {"c", 1.0}}, alpha, {fx, fy});
}

SystemSpec catalog(const std::string& name, std::optional<double> alpha) {
  if (name == "lorenz") {
    return make("lorenz", {"x", "y", "z"}, {{"sigma", 10.0}, {"b", 8.0 / 3.0}, {"r", 470.0 / 19.0}},
                alpha.value_or(2.0), {"sigma*(y - x)", "(r - z)*x - y", "x*y - b*z"});
  }
  if (name == "rossler") {
    return make("rossler", {"x", "y", "z"}, {{"c", 1.0}}, alpha.value_or(2.0),
                {"-(y + z)", "x + 0.2*y", "0.2 + (x - c)*z"});
  }
  if (name == "example1") {
    const double k = alpha.value_or(0.5);
    if (k <= 0.0 || k == std::floor(k)) {
      throw DomainError("example1 needs a non-integer order k > 0");
    }
    const double c = gamma(1.0 - k) / gamma(2.0 - k);
    return make("example1", {"x", "y"}, {{"a", 1.0}, {"b", 1.0}, {"c", c}}, k,
                {"a*c*" + power("x", 1.0 - k) + " + b*" + power("x", -k),
                 "(a*x + b)*" + power("y", -k)});
  }
  if (name == "example2") {
    return example2_system(3, 3, 2, 3, alpha.value_or(2.0));
  }
  if (name == "fracosc") {
    // H = a p^2 + b q^2; dq/dt = D_p H, dp/dt = -D_q H.
    const FracOrder order(alpha.value_or(1.0));
    const double a = order.alpha();
    const double quad = power_rule_coefficient(2.0, order);
    const double cst = power_rule_coefficient(0.0, order);
    const std::string g = sum_text({{quad, "a*" + power("p", 2.0 - a)},
                                    {cst, "b*" + power("q", 2.0) + "*" + power("p", -a)}});
    const std::string f = sum_text({{-quad, "b*" + power("q", 2.0 - a)},
                                    {-cst, "a*" + power("p", 2.0) + "*" + power("q", -a)}});
    return make("fracosc", {"q", "p"}, {{"a", 1.0}, {"b", 1.0}}, a, {g, f}, true);
  }
  throw DomainError("unknown catalog system '" + name + "'");
}

}  // namespace fracdyn
