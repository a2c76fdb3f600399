#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fracdyn/system.hpp"

namespace fracdyn {

/// Built-in systems: "lorenz", "rossler", "example1", "example2", "fracosc".
///
/// `alpha` overrides the default order. For example1 the order is also the
/// exponent k of the field and fixes c = Gamma(1-alpha)/Gamma(2-alpha); for
/// fracosc it is the order of the Hamiltonian flow generated from
/// H = a p^2 + b q^2. Throws DomainError for unknown names.
SystemSpec catalog(const std::string& name, std::optional<double> alpha = std::nullopt);

std::vector<std::string> catalog_names();

/// F = (a n(n-1) x^(n-2) + c k(k-1) x^(k-2) y^l, b m(m-1) y^(m-2) + c l(l-1) x^k y^(l-2))
/// with a = b = c = 1 and the given integer exponents.
SystemSpec example2_system(int n, int m, int k, int l, double alpha = 2.0);

}  // namespace fracdyn
