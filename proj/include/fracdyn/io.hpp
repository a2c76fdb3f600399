#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "fracdyn/dynamics.hpp"
#include "fracdyn/surface.hpp"

namespace fracdyn {

/// Fixed 17-significant-digit text, independent of the global locale.
std::string format_fixed17(double v);

/// Header "<var1>,...,<varN>,phi", one row per unmasked sample, first axis
/// fastest.
void write_grid_csv(std::ostream& os, const ScalarGrid& grid, std::span<const std::string> var_names);

/// "v x y z" lines then "f i j k" lines with 1-based indices.
void write_obj(std::ostream& os, const Mesh& mesh);

/// Header "t,<vars>[,<watch>]", one row per time. A trajectory that left the
/// domain ends with "# domain-exit at t=<time>".
void write_trajectory_csv(std::ostream& os, const Trajectory& traj,
                          std::span<const std::string> var_names, const std::string& watch = {});

/// Header "<vars>", one row per point.
void write_points_csv(std::ostream& os, const std::vector<Eigen::VectorXd>& points,
                      std::span<const std::string> var_names);

}  // namespace fracdyn
