#include "fracdyn/system.hpp"

#include "fracdyn/errors.hpp"
#include "fracdyn/parser.hpp"

namespace fracdyn {

int SystemSpec::var_index(const std::string& v) const {
  for (std::size_t i = 0; i < var_names.size(); ++i) {
    if (var_names[i] == v) return static_cast<int>(i);
  }
  return -1;
}

void SystemSpec::validate() const {
  if (var_names.empty()) throw DomainError("system has no variables");
  if (rhs.size() != var_names.size()) {
    throw DomainError("system needs exactly one right-hand side per variable");
  }
  for (const auto& p : rhs) {
    if (p.nvars() > var_names.size()) throw DomainError("right-hand side uses too many variables");
  }
  if (phase_split && var_names.size() % 2 != 0) {
    throw DomainError("phase-space system needs an even number of variables");
  }
}

SystemSpec SystemSpec::with_params(const std::map<std::string, double>& overrides) const {
  SystemSpec out = *this;
  for (const auto& [k, v] : overrides) {
    if (!params.count(k)) throw DomainError("unknown parameter '" + k + "'");
    out.params[k] = v;
  }
  for (std::size_t i = 0; i < rhs_text.size() && i < out.rhs.size(); ++i) {
    if (!rhs_text[i].empty()) out.rhs[i] = parse_expression(rhs_text[i], var_names, out.params);
  }
  return out;
}

SystemSpec SystemSpec::with_order(FracOrder o) const {
  SystemSpec out = *this;
  out.order = o;
  return out;
}

}  // namespace fracdyn
