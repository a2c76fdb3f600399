#include <cmath>
#include <numbers>

#include "doctest.h"
#include "fracdyn/errors.hpp"
#include "fracdyn/numerics.hpp"
#include "fracdyn/order.hpp"
#include "oracles.hpp"

using namespace fracdyn;

TEST_CASE("gamma at simple points") {
  CHECK(fracdyn::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(fracdyn::gamma(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
  CHECK(fracdyn::gamma(5.0) == doctest::Approx(24.0).epsilon(1e-14));
}

TEST_CASE("gamma below one half agrees with the reflection oracle") {
  const double expected = -2.0 * std::sqrt(std::numbers::pi);
  CHECK(std::abs(fracdyn::gamma(-0.5) - expected) <= 1e-12 * std::abs(expected));
  CHECK(std::abs(fracdyn::gamma(-0.5) - oracle::gamma(-0.5)) <= 1e-12 * std::abs(expected));
  CHECK(fracdyn::gamma(-0.5) == doctest::Approx(-3.5449077018).epsilon(1e-10));
}

TEST_CASE("gamma matches the Lanczos oracle across its range") {
  for (double x = -20.75; x <= 150.0; x += 0.37) {
    if (x <= 0.0 && x == std::floor(x)) continue;
    const double g = fracdyn::gamma(x);
    const double o = oracle::gamma(x);
    INFO("x = " << x);
    // The Lanczos oracle itself is good to a few 1e-15 near the origin and
    // loses a little through pow/exp at large arguments.
    CHECK(std::abs(g - o) <= 1e-12 * std::abs(o));
  }
}

TEST_CASE("gamma satisfies the recurrence and reflection identities") {
  for (double x = -9.7; x < 30.0; x += 0.61) {
    if (std::abs(x - std::round(x)) < 1e-9) continue;
    INFO("x = " << x);
    CHECK(std::abs(fracdyn::gamma(x + 1.0) - x * fracdyn::gamma(x)) <= 1e-12 * std::abs(fracdyn::gamma(x + 1.0)));
    if (x < 1.0) {
      const double lhs = fracdyn::gamma(x) * fracdyn::gamma(1.0 - x);
      const double rhs = std::numbers::pi / std::sin(std::numbers::pi * x);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
    }
  }
}

TEST_CASE("gamma rejects poles and overflow") {
  CHECK_THROWS_AS(fracdyn::gamma(0.0), PoleError);
  CHECK_THROWS_AS(fracdyn::gamma(-3.0), PoleError);
  CHECK_THROWS_AS(fracdyn::gamma(-3.0), DomainError);
  CHECK_THROWS_AS(fracdyn::gamma(200.0), OverflowError);
  CHECK_THROWS_AS(fracdyn::gamma(std::nan("")), DomainError);
}

TEST_CASE("recip_gamma vanishes at poles") {
  CHECK(fracdyn::recip_gamma(0.0) == 0.0);
  CHECK(fracdyn::recip_gamma(-3.0) == 0.0);
  CHECK(fracdyn::recip_gamma(-100.0) == 0.0);
  CHECK(fracdyn::recip_gamma(1.5) == doctest::Approx(1.0 / oracle::gamma(1.5)).epsilon(1e-13));
  CHECK(fracdyn::recip_gamma(1.5) == doctest::Approx(1.1283791671).epsilon(1e-10));
  // Finite and tiny beyond the overflow range of gamma.
  CHECK(fracdyn::recip_gamma(200.0) >= 0.0);
  CHECK(fracdyn::recip_gamma(200.0) < 1e-300);
}

TEST_CASE("recip_gamma times gamma is one off the poles") {
  for (double x = -12.3; x < 160.0; x += 0.77) {
    INFO("x = " << x);
    CHECK(std::abs(fracdyn::recip_gamma(x) * fracdyn::gamma(x) - 1.0) <= 1e-12);
  }
}

TEST_CASE("sin_pi is exact at integers") {
  CHECK(sin_pi(3.0) == 0.0);
  CHECK(sin_pi(-7.0) == 0.0);
  CHECK(sin_pi(0.5) == doctest::Approx(1.0));
  CHECK(sin_pi(-0.25) == doctest::Approx(-std::sqrt(0.5)));
}

TEST_CASE("Grunwald-Letnikov derivative of simple functions") {
  auto sq = [](double y) { return y * y; };
  auto id = [](double y) { return y; };
  auto one = [](double) { return 1.0; };
  CHECK(std::abs(gl_derivative(sq, 1.0, 1.0, 1e-4) - 2.0) <= 1e-3);
  CHECK(std::abs(gl_derivative(id, 0.5, 1.0, 1e-5) - 2.0 / std::sqrt(std::numbers::pi)) <= 1e-3);
  CHECK(std::abs(gl_derivative(one, 0.5, 1.0, 1e-5) - 1.0 / std::sqrt(std::numbers::pi)) <= 1e-3);
}

TEST_CASE("Grunwald-Letnikov error halves with the step") {
  // First-order method: the error ratio for h and h/2 is close to 2.
  auto f = [](double y) { return y * y * y; };
  const double alpha = 0.5;
  const double exact = oracle::gamma(4.0) / oracle::gamma(4.0 - alpha) * std::pow(1.0, 3.0 - alpha);
  const double e1 = std::abs(gl_derivative(f, alpha, 1.0, 1e-3) - exact);
  const double e2 = std::abs(gl_derivative(f, alpha, 1.0, 5e-4) - exact);
  CHECK(e1 / e2 == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("Grunwald-Letnikov validates its arguments") {
  auto id = [](double y) { return y; };
  CHECK_THROWS_AS(gl_derivative(id, 0.0, 1.0, 1e-3), DomainError);
  CHECK_THROWS_AS(gl_derivative(id, 0.5, -1.0, 1e-3), DomainError);
  CHECK_THROWS_AS(gl_derivative(id, 0.5, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(gl_derivative(id, 0.5, 1.0, 0.3), DomainError);
}

TEST_CASE("FracOrder") {
  CHECK(FracOrder(0.5).m() == 1);
  CHECK(FracOrder(2.0).m() == 2);
  CHECK(FracOrder(2.0).is_integer());
  CHECK_FALSE(FracOrder(1.5).is_integer());
  CHECK(FracOrder(1.5).m() == 2);
  CHECK_THROWS_AS(FracOrder(0.0), DomainError);
  CHECK_THROWS_AS(FracOrder(-1.0), DomainError);
}
