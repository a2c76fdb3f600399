#pragma once

#include <span>
#include <string>
#include <vector>

#include "fracdyn/order.hpp"
#include "fracdyn/poly.hpp"
#include "fracdyn/system.hpp"

namespace fracdyn {

/// Coefficients are considered zero below this magnitude.
inline constexpr double kClosureTolerance = 1e-9;

/// sum_i coeff_i (dx_i)^alpha
class FracForm1 {
 public:
  FracForm1(FracOrder order, std::vector<GenPoly> coeffs);

  FracOrder order() const { return order_; }
  std::size_t nvars() const { return coeffs_.size(); }
  const GenPoly& operator[](std::size_t i) const { return coeffs_[i]; }
  const std::vector<GenPoly>& coeffs() const { return coeffs_; }

  /// Throws DomainError when the orders differ.
  FracForm1& operator+=(const FracForm1& rhs);
  friend FracForm1 operator+(FracForm1 a, const FracForm1& b) { return a += b; }

 private:
  FracOrder order_;
  std::vector<GenPoly> coeffs_;
};

/// sum_{i<j} coeff_ij (dx_i)^alpha ^ (dx_j)^alpha. Only i < j is stored;
/// coeff(j, i) = -coeff(i, j) and coeff(i, i) = 0.
class FracForm2 {
 public:
  FracForm2(FracOrder order, std::size_t nvars);

  FracOrder order() const { return order_; }
  std::size_t nvars() const { return nvars_; }

  GenPoly coeff(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, GenPoly value);

  bool is_zero(double tol = kClosureTolerance) const;
  double max_abs_coeff() const;

 private:
  std::size_t index(std::size_t i, std::size_t j) const;

  FracOrder order_;
  std::size_t nvars_;
  std::vector<GenPoly> upper_;
};

/// d^alpha f = sum_i (dx_i)^alpha D^alpha_{x_i} f.
FracForm1 exterior_d(const GenPoly& f, FracOrder order);

/// d^alpha of a 1-form: the (i<j) coefficient is
/// D^alpha_{x_i} w_j - D^alpha_{x_j} w_i.
FracForm2 exterior_d(const FracForm1& w);

struct Residual {
  std::string id;
  GenPoly poly;
};

struct ClosureReport {
  std::vector<Residual> residuals;
  bool closed = true;
  double max_coeff = 0.0;
};

/// Residuals D^alpha_{x_j} F_i - D^alpha_{x_i} F_j for i < j, ids "curl(xi,xj)".
ClosureReport check_gradient(const SystemSpec& sys);

/// Fractional Helmholtz conditions for dq_i/dt = G^i, dp_i/dt = F^i:
///   pp(i<j): D_{p_j} G^i - D_{p_i} G^j
///   qp(i,j): D_{q_i} G^j + D_{p_j} F^i
///   qq(i<j): D_{q_j} F^i - D_{q_i} F^j
/// Throws DomainError when the system has no phase split.
ClosureReport check_hamiltonian(const SystemSpec& sys);

/// One line per nonzero residual, "id: polynomial".
std::string describe(const ClosureReport& report, std::span<const std::string> var_names);

/// beta_alpha = G^i (dp_i)^alpha - F^i (dq_i)^alpha as a 1-form over (q, p).
FracForm1 hamiltonian_one_form(const SystemSpec& sys);

}  // namespace fracdyn
