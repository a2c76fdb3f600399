#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "fracdyn/catalog.hpp"
#include "fracdyn/dynamics.hpp"
#include "fracdyn/errors.hpp"
#include "fracdyn/parser.hpp"
#include "oracles.hpp"

using namespace fracdyn;

namespace {

const std::vector<std::string> kQp{"q", "p"};
const std::vector<std::string> kX{"x"};

Eigen::VectorXd vec(std::initializer_list<double> v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

}  // namespace

TEST_CASE("gradient flows") {
  const SystemSpec s = build_gradient_flow(parse_expression("x^2", kX), FracOrder(1.0));
  CHECK(s.rhs[0] == parse_expression("-2*x", kX));
  CHECK(s.var_names == kX);

  const SystemSpec h = build_gradient_flow(parse_expression("x", kX), FracOrder(0.5));
  REQUIRE(h.rhs[0].terms().size() == 1);
  CHECK(h.rhs[0].terms()[0].coeff == doctest::Approx(-1.1283791671).epsilon(1e-10));
  CHECK(h.rhs[0].terms()[0].exponent(0) == 0.5);
}

TEST_CASE("Hamiltonian flows") {
  const GenPoly h = parse_expression("a*p^2 + b*q^2", kQp, {{"a", 2.0}, {"b", 3.0}});
  const SystemSpec s1 = build_hamiltonian_flow(h, FracOrder(1.0));
  CHECK(s1.phase_split);
  CHECK(s1.var_names == kQp);
  CHECK(s1.rhs[0] == parse_expression("4*p", kQp));
  CHECK(s1.rhs[1] == parse_expression("-6*q", kQp));

  const double a = 0.6;
  const SystemSpec sa = build_hamiltonian_flow(h, FracOrder(a));
  const GenPoly qdot = GenPoly::monomial(2, 2.0 * oracle::gamma(3) / oracle::gamma(3 - a), {{1, 2 - a, false}}) +
                       GenPoly::monomial(2, 3.0 / oracle::gamma(1 - a), {{0, 2.0, false}, {1, -a, false}});
  CHECK(approx_equal(sa.rhs[0], qdot, 1e-12));

  CHECK(build_hamiltonian_flow(GenPoly::constant(2, 4.0), FracOrder(1.0)).rhs[0].is_zero());
  CHECK(build_hamiltonian_flow(GenPoly::constant(2, 4.0), FracOrder(1.0)).rhs[1].is_zero());
  CHECK_THROWS_AS(build_hamiltonian_flow(GenPoly::constant(3, 1.0), FracOrder(1.0)), DomainError);
  CHECK(build_hamiltonian_flow(GenPoly::constant(4, 1.0), FracOrder(1.0)).var_names ==
        std::vector<std::string>{"q1", "q2", "p1", "p2"});
}

TEST_CASE("exponential decay") {
  const SystemSpec s = parse_system("vars: x\nF[x] = -2*x\n");
  const Trajectory t = integrate(s, vec({1.0}), 1.0, 1e-3);
  CHECK(t.times.size() == 1001);
  CHECK(t.times.back() == 1.0);
  CHECK(std::abs(t.states.back()[0] - std::exp(-2.0)) <= 1e-6);
  CHECK_FALSE(t.domain_exit);
}

TEST_CASE("RK4 is fourth order") {
  const SystemSpec s = parse_system("vars: x\nF[x] = -2*x\n");
  const double e1 = std::abs(integrate(s, vec({1.0}), 1.0, 0.1).states.back()[0] - std::exp(-2.0));
  const double e2 = std::abs(integrate(s, vec({1.0}), 1.0, 0.05).states.back()[0] - std::exp(-2.0));
  CHECK(e1 / e2 == doctest::Approx(16.0).epsilon(0.1));
}

TEST_CASE("final step is shortened to land on t_end") {
  const SystemSpec s = parse_system("vars: x\nF[x] = 1\n");
  const Trajectory t = integrate(s, vec({0.0}), 1.0, 0.3);
  CHECK(t.times.size() == 5);
  CHECK(t.times.back() == 1.0);
  CHECK(t.states.back()[0] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("oscillator conserves energy") {
  const SystemSpec s = catalog("fracosc", 1.0);
  const Trajectory t = integrate(s, vec({1.0, 0.0}), 10.0, 1e-3);
  const GenPoly h = parse_expression("q^2 + p^2", kQp);
  const auto e = diagnostics(t, h);
  double drift = 0.0;
  for (double v : e) drift = std::max(drift, std::abs(v - e.front()) / e.front());
  CHECK(drift <= 1e-6);
  CHECK(t.states.back()[0] == doctest::Approx(std::cos(20.0)).epsilon(1e-6));
}

TEST_CASE("fractional gradient flow matches the separable solution") {
  const SystemSpec s = build_gradient_flow(parse_expression("x", kX), FracOrder(0.5));
  const double c = 2.0 / std::sqrt(std::numbers::pi);  // D^0.5 x = c x^0.5
  const Trajectory t = integrate(s, vec({1.0}), 1.5, 1e-3);
  REQUIRE_FALSE(t.domain_exit);
  for (std::size_t i = 0; i < t.times.size(); i += 100) {
    const double exact = std::pow(1.0 - 0.5 * c * t.times[i], 2.0);
    CHECK(std::abs(t.states[i][0] - exact) <= 1e-9);
  }

  // The solution reaches 0 at t = 2 / c and leaves the domain of sqrt(x).
  const Trajectory past = integrate(s, vec({1.0}), 3.0, 1e-3);
  CHECK(past.domain_exit);
  CHECK(past.exit_time <= 2.0 / c);
  CHECK(past.exit_time > 2.0 / c - 0.01);
  CHECK(past.times.back() == past.exit_time);
}

TEST_CASE("gradient flow decreases the potential") {
  const std::vector<std::string> xy{"x", "y"};
  const GenPoly v = parse_expression("x^4 + x*y + y^2 - 3*x", xy);
  const SystemSpec s = build_gradient_flow(v, FracOrder(1.0), xy);
  const Trajectory t = integrate(s, vec({1.5, -2.0}), 5.0, 1e-3);
  const auto series = diagnostics(t, v);
  bool monotone = true;
  for (std::size_t i = 1; i < series.size(); ++i) monotone = monotone && series[i] <= series[i - 1];
  CHECK(monotone);
}

TEST_CASE("integration argument checks") {
  const SystemSpec s = build_gradient_flow(parse_expression("x", kX), FracOrder(0.5));
  CHECK_THROWS_AS(integrate(s, vec({-1.0}), 1.0, 1e-3), DomainError);
  CHECK_THROWS_AS(integrate(s, vec({1.0, 2.0}), 1.0, 1e-3), Error);
  CHECK_THROWS_AS(integrate(s, vec({1.0}), 1.0, 0.0), Error);
}
