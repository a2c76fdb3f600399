#pragma once

#include <map>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "fracdyn/order.hpp"
#include "fracdyn/poly.hpp"
#include "fracdyn/system.hpp"

namespace fracdyn {

/// dx_i/dt = -D^alpha_{x_i} V. Variables are named x1..xn unless given.
SystemSpec build_gradient_flow(const GenPoly& potential, FracOrder order,
                               std::vector<std::string> var_names = {});

/// dq_i/dt = D^alpha_{p_i} H, dp_i/dt = -D^alpha_{q_i} H over variables
/// (q_1..q_n, p_1..p_n). H must have an even number of variables.
SystemSpec build_hamiltonian_flow(const GenPoly& hamiltonian, FracOrder order,
                                  std::vector<std::string> var_names = {});

struct Trajectory {
  std::vector<double> times;
  std::vector<Eigen::VectorXd> states;
  /// The integration stopped because a step left the domain of the field.
  bool domain_exit = false;
  /// Time of the last accepted state when domain_exit is set.
  double exit_time = 0.0;
  std::map<std::string, std::vector<double>> diagnostics;
};

/// Classical fixed-step RK4 from t = 0 to t_end; the final step is shortened
/// to land on t_end. A step is accepted only if every stage and the new state
/// lie in the domain of the right-hand sides; otherwise integration stops with
/// domain_exit set. Throws DomainError when x0 itself is outside the domain.
Trajectory integrate(const SystemSpec& sys, const Eigen::VectorXd& x0, double t_end, double h);

/// f along the trajectory, one value per time. Throws DomainError naming the
/// first sample index outside f's domain.
std::vector<double> diagnostics(const Trajectory& traj, const GenPoly& f);

}  // namespace fracdyn
