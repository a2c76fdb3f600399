#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace fracdyn {

/// One power factor x_var^exponent, or |x_var|^exponent when `abs` is set.
struct Factor {
  int var = 0;
  double exponent = 1.0;
  bool abs = false;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// coeff * prod factors. Factors are sorted by variable, one per variable.
struct GenTerm {
  double coeff = 0.0;
  std::vector<Factor> factors;

  /// Factor on `var`, or nullptr when the term does not depend on it.
  const Factor* factor(int var) const;
  /// Exponent on `var` (0 when absent).
  double exponent(int var) const;
  bool same_signature(const GenTerm& other) const { return factors == other.factors; }
};

/// Exponents are snapped to a 1e-12 grid (and to exact integers) so that
/// signatures produced along different floating-point paths compare equal.
double quantize_exponent(double e);

bool is_integer_exponent(double e);

/// Finite sum of generalized monomials in `nvars` variables with real
/// exponents. Always held in canonical form: terms sorted by a fixed order on
/// signatures, equal signatures merged, zero coefficients removed.
class GenPoly {
 public:
  GenPoly() = default;
  explicit GenPoly(std::size_t nvars) : nvars_(nvars) {}
  GenPoly(std::size_t nvars, std::vector<GenTerm> terms);

  static GenPoly constant(std::size_t nvars, double c);
  static GenPoly variable(std::size_t nvars, int var);
  static GenPoly monomial(std::size_t nvars, double coeff, std::vector<Factor> factors);

  std::size_t nvars() const { return nvars_; }
  const std::vector<GenTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  double max_abs_coeff() const;

  /// True when every factor has a non-negative integer exponent and no abs flag.
  bool is_classical() const;

  /// Copy without the terms whose |coeff| <= tol.
  GenPoly pruned(double tol) const;

  /// Same terms viewed in a space with more variables.
  GenPoly widened(std::size_t nvars) const;

  /// Throws DomainError naming the offending variable when the point lies
  /// outside the domain of some factor.
  double eval(std::span<const double> point) const;
  double eval(const Eigen::VectorXd& point) const {
    return eval(std::span<const double>(point.data(), static_cast<std::size_t>(point.size())));
  }
  /// Non-throwing evaluation; nullopt outside the domain.
  std::optional<double> try_eval(std::span<const double> point) const;

  /// Expression text accepted back by parse_expression.
  std::string to_string(std::span<const std::string> var_names) const;
  std::string to_string() const;

  GenPoly& operator+=(const GenPoly& rhs);
  GenPoly& operator-=(const GenPoly& rhs);
  GenPoly& operator*=(const GenPoly& rhs);
  GenPoly& operator*=(double s);

  friend GenPoly operator+(GenPoly a, const GenPoly& b) { return a += b; }
  friend GenPoly operator-(GenPoly a, const GenPoly& b) { return a -= b; }
  friend GenPoly operator*(GenPoly a, const GenPoly& b) { return a *= b; }
  friend GenPoly operator*(GenPoly a, double s) { return a *= s; }
  friend GenPoly operator*(double s, GenPoly a) { return a *= s; }
  friend GenPoly operator-(GenPoly a) { return a *= -1.0; }

  /// Structural equality of canonical forms (bitwise coefficients).
  friend bool operator==(const GenPoly& a, const GenPoly& b);

 private:
  void canonicalize();

  std::size_t nvars_ = 0;
  std::vector<GenTerm> terms_;
};

/// Multiply two terms, merging factors on shared variables.
GenTerm multiply_terms(const GenTerm& a, const GenTerm& b);

/// max |coeff| of a - b <= tol.
bool approx_equal(const GenPoly& a, const GenPoly& b, double tol = 1e-9);

/// Shortest decimal text that reads back to the same double.
std::string format_real(double v);

/// Default names for unnamed variables: x, y, z up to three, else x1, x2, ...
std::vector<std::string> default_var_names(std::size_t nvars);

}  // namespace fracdyn
