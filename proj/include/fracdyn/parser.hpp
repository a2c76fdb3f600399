#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fracdyn/poly.hpp"
#include "fracdyn/system.hpp"

namespace fracdyn {

/// Parses a sum of power products.
///
///   expr   := ['+'|'-'] term (('+'|'-') ['+'|'-'] term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' ['+'|'-'] real_literal)?
///   base   := real_literal | name | '|' name '|' | '(' expr ')'
///
/// Parameter names are replaced by their numeric values. A sum may only be
/// raised to a non-negative integer power. Errors carry a 1-based column.
GenPoly parse_expression(std::string_view text, std::span<const std::string> vars,
                         const std::map<std::string, double>& params = {});

/// Parses a line-oriented system file:
///
///   vars: x y z
///   params: sigma=10 r=28
///   alpha: 2
///   phase: qp
///   F[x] = sigma*(y - x)
///
/// '#' starts a comment. Errors carry 1-based line and column.
SystemSpec parse_system(std::string_view text);

}  // namespace fracdyn
