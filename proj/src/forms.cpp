#include "fracdyn/forms.hpp"

#include <algorithm>

#include "fracdyn/errors.hpp"
#include "fracdyn/fracderiv.hpp"

namespace fracdyn {

FracForm1::FracForm1(FracOrder order, std::vector<GenPoly> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c = c.widened(std::max(c.nvars(), coeffs_.size()));
}

FracForm1& FracForm1::operator+=(const FracForm1& rhs) {
  if (!(order_ == rhs.order_)) throw DomainError("cannot combine forms of different orders");
  if (coeffs_.size() != rhs.coeffs_.size()) throw DomainError("forms live in different spaces");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

FracForm2::FracForm2(FracOrder order, std::size_t nvars)
    : order_(order), nvars_(nvars), upper_(nvars * (nvars > 0 ? nvars - 1 : 0) / 2, GenPoly(nvars)) {}

std::size_t FracForm2::index(std::size_t i, std::size_t j) const {
  // Row-major position of (i, j), i < j, in the strict upper triangle.
  return i * nvars_ - i * (i + 1) / 2 + (j - i - 1);
}

GenPoly FracForm2::coeff(std::size_t i, std::size_t j) const {
  if (i >= nvars_ || j >= nvars_) throw DomainError("form index out of range");
  if (i == j) return GenPoly(nvars_);
  if (i < j) return upper_[index(i, j)];
  return -upper_[index(j, i)];
}

void FracForm2::set(std::size_t i, std::size_t j, GenPoly value) {
  if (i >= nvars_ || j >= nvars_ || i == j) throw DomainError("form index out of range");
  if (i < j) {
    upper_[index(i, j)] = std::move(value);
  } else {
    upper_[index(j, i)] = -std::move(value);
  }
}

double FracForm2::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& c : upper_) m = std::max(m, c.max_abs_coeff());
  return m;
}

bool FracForm2::is_zero(double tol) const { return max_abs_coeff() <= tol; }

FracForm1 exterior_d(const GenPoly& f, FracOrder order) {
  std::vector<GenPoly> coeffs;
  coeffs.reserve(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    coeffs.push_back(frac_deriv(f, static_cast<int>(i), order));
  }
  return FracForm1(order, std::move(coeffs));
}

FracForm2 exterior_d(const FracForm1& w) {
  const std::size_t n = w.nvars();
  FracForm2 out(w.order(), n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      out.set(i, j, frac_deriv(w[j], static_cast<int>(i), w.order()) -
                        frac_deriv(w[i], static_cast<int>(j), w.order()));
    }
  }
  return out;
}

namespace {

void add_residual(ClosureReport& rep, std::string id, GenPoly poly) {
  const double m = poly.max_abs_coeff();
  rep.max_coeff = std::max(rep.max_coeff, m);
  if (m > kClosureTolerance) rep.closed = false;
  rep.residuals.push_back({std::move(id), std::move(poly)});
}

std::vector<GenPoly> widened_rhs(const SystemSpec& sys) {
  std::vector<GenPoly> out;
  for (const auto& p : sys.rhs) out.push_back(p.widened(sys.nvars()));
  return out;
}

}  // namespace

ClosureReport check_gradient(const SystemSpec& sys) {
  sys.validate();
  const auto F = widened_rhs(sys);
  const auto& names = sys.var_names;
  ClosureReport rep;
  for (std::size_t i = 0; i < F.size(); ++i) {
    for (std::size_t j = i + 1; j < F.size(); ++j) {
      add_residual(rep, "curl(" + names[i] + "," + names[j] + ")",
                   frac_deriv(F[i], static_cast<int>(j), sys.order) -
                       frac_deriv(F[j], static_cast<int>(i), sys.order));
    }
  }
  return rep;
}

ClosureReport check_hamiltonian(const SystemSpec& sys) {
  sys.validate();
  if (!sys.phase_split) throw DomainError("Helmholtz conditions need a phase-space (q, p) system");
  const auto rhs = widened_rhs(sys);
  const std::size_t n = sys.half();
  const auto& names = sys.var_names;
  const auto q = [](std::size_t i) { return static_cast<int>(i); };
  const auto p = [n](std::size_t i) { return static_cast<int>(n + i); };
  const auto& G = [&](std::size_t i) -> const GenPoly& { return rhs[i]; };
  const auto& F = [&](std::size_t i) -> const GenPoly& { return rhs[n + i]; };
  const FracOrder a = sys.order;

  ClosureReport rep;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      add_residual(rep, "pp(" + names[n + i] + "," + names[n + j] + ")",
                   frac_deriv(G(i), p(j), a) - frac_deriv(G(j), p(i), a));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      add_residual(rep, "qp(" + names[i] + "," + names[n + j] + ")",
                   frac_deriv(G(j), q(i), a) + frac_deriv(F(i), p(j), a));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      add_residual(rep, "qq(" + names[i] + "," + names[j] + ")",
                   frac_deriv(F(i), q(j), a) - frac_deriv(F(j), q(i), a));
    }
  }
  return rep;
}

FracForm1 hamiltonian_one_form(const SystemSpec& sys) {
  sys.validate();
  if (!sys.phase_split) throw DomainError("phase-space system required");
  const auto rhs = widened_rhs(sys);
  const std::size_t n = sys.half();
  std::vector<GenPoly> coeffs(2 * n, GenPoly(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    coeffs[i] = -rhs[n + i];
    coeffs[n + i] = rhs[i];
  }
  return FracForm1(sys.order, std::move(coeffs));
}

std::string describe(const ClosureReport& report, std::span<const std::string> var_names) {
  std::string out;
  for (const auto& r : report.residuals) {
    if (r.poly.max_abs_coeff() <= kClosureTolerance) continue;
    out += r.id + ": " + r.poly.to_string(var_names) + "\n";
  }
  return out;
}

}  // namespace fracdyn
