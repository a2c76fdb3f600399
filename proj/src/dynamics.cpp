#include "fracdyn/dynamics.hpp"

#include <cmath>
#include <optional>

#include "fracdyn/errors.hpp"
#include "fracdyn/fracderiv.hpp"

namespace fracdyn {

namespace {

std::vector<std::string> phase_names(std::size_t nvars) {
  const std::size_t n = nvars / 2;
  std::vector<std::string> names;
  for (const char* prefix : {"q", "p"}) {
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(n == 1 ? std::string(prefix) : prefix + std::to_string(i + 1));
    }
  }
  return names;
}

SystemSpec finish(std::vector<std::string> names, FracOrder order, std::vector<GenPoly> rhs, bool phase) {
  SystemSpec s;
  s.var_names = std::move(names);
  s.order = order;
  s.phase_split = phase;
  s.rhs = std::move(rhs);
  for (const auto& p : s.rhs) s.rhs_text.push_back(p.to_string(s.var_names));
  s.validate();
  return s;
}

std::optional<Eigen::VectorXd> field(const SystemSpec& sys, const Eigen::VectorXd& x) {
  Eigen::VectorXd out(x.size());
  const std::span<const double> pt(x.data(), static_cast<std::size_t>(x.size()));
  for (std::size_t i = 0; i < sys.rhs.size(); ++i) {
    auto v = sys.rhs[i].try_eval(pt);
    if (!v || !std::isfinite(*v)) return std::nullopt;
    out[static_cast<Eigen::Index>(i)] = *v;
  }
  return out;
}

}  // namespace

SystemSpec build_gradient_flow(const GenPoly& potential, FracOrder order, std::vector<std::string> var_names) {
  const std::size_t n = potential.nvars();
  if (var_names.empty()) var_names = default_var_names(n);
  if (var_names.size() != n) throw DomainError("one name per variable required");
  std::vector<GenPoly> rhs;
  for (std::size_t i = 0; i < n; ++i) rhs.push_back(-frac_deriv(potential, static_cast<int>(i), order));
  return finish(std::move(var_names), order, std::move(rhs), false);
}

SystemSpec build_hamiltonian_flow(const GenPoly& hamiltonian, FracOrder order,
                                  std::vector<std::string> var_names) {
  const std::size_t nv = hamiltonian.nvars();
  if (nv == 0 || nv % 2 != 0) throw DomainError("a Hamiltonian needs variables (q_1..q_n, p_1..p_n)");
  if (var_names.empty()) var_names = phase_names(nv);
  if (var_names.size() != nv) throw DomainError("one name per variable required");
  const std::size_t n = nv / 2;
  std::vector<GenPoly> rhs(nv, GenPoly(nv));
  for (std::size_t i = 0; i < n; ++i) {
    rhs[i] = frac_deriv(hamiltonian, static_cast<int>(n + i), order);
    rhs[n + i] = -frac_deriv(hamiltonian, static_cast<int>(i), order);
  }
  return finish(std::move(var_names), order, std::move(rhs), true);
}

Trajectory integrate(const SystemSpec& sys, const Eigen::VectorXd& x0, double t_end, double h) {
  sys.validate();
  if (static_cast<std::size_t>(x0.size()) != sys.nvars()) throw DomainError("initial state has wrong dimension");
  if (!(h > 0.0)) throw DomainError("step must be > 0");
  if (!(t_end >= 0.0)) throw DomainError("end time must be >= 0");
  auto k1 = field(sys, x0);
  if (!k1) throw DomainError("initial state lies outside the domain of the right-hand sides");

  Trajectory traj;
  traj.times.push_back(0.0);
  traj.states.push_back(x0);
  const auto steps = static_cast<long>(std::ceil(t_end / h - 1e-9));
  Eigen::VectorXd x = x0;
  double t = 0.0;
  for (long k = 1; k <= steps; ++k) {
    const double t_next = k == steps ? t_end : static_cast<double>(k) * h;
    const double dt = t_next - t;
    auto k2 = field(sys, x + 0.5 * dt * *k1);
    auto k3 = k2 ? field(sys, x + 0.5 * dt * *k2) : std::nullopt;
    auto k4 = k3 ? field(sys, x + dt * *k3) : std::nullopt;
    std::optional<Eigen::VectorXd> next_k1;
    Eigen::VectorXd x_next;
    if (k4) {
      x_next = x + dt / 6.0 * (*k1 + 2.0 * *k2 + 2.0 * *k3 + *k4);
      next_k1 = field(sys, x_next);
    }
    if (!next_k1) {
      traj.domain_exit = true;
      traj.exit_time = t;
      return traj;
    }
    x = std::move(x_next);
    t = t_next;
    k1 = std::move(next_k1);
    traj.times.push_back(t);
    traj.states.push_back(x);
  }
  return traj;
}

std::vector<double> diagnostics(const Trajectory& traj, const GenPoly& f) {
  std::vector<double> out;
  out.reserve(traj.states.size());
  for (std::size_t i = 0; i < traj.states.size(); ++i) {
    const auto& s = traj.states[i];
    auto v = f.try_eval(std::span<const double>(s.data(), static_cast<std::size_t>(s.size())));
    if (!v) throw DomainError("diagnostic function undefined at sample " + std::to_string(i));
    out.push_back(*v);
  }
  return out;
}

}  // namespace fracdyn
