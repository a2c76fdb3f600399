#include "fracdyn/io.hpp"

#include <charconv>

namespace fracdyn {

std::string format_fixed17(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

namespace {

void header(std::ostream& os, std::span<const std::string> names) {
  for (std::size_t i = 0; i < names.size(); ++i) os << (i ? "," : "") << names[i];
}

}  // namespace

void write_grid_csv(std::ostream& os, const ScalarGrid& grid, std::span<const std::string> var_names) {
  header(os, var_names);
  os << ",phi\n";
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    if (grid.masked(idx)) continue;
    const Eigen::VectorXd p = grid.point(idx);
    for (Eigen::Index a = 0; a < p.size(); ++a) os << format_fixed17(p[a]) << ",";
    os << format_fixed17(grid.values[idx]) << "\n";
  }
}

void write_obj(std::ostream& os, const Mesh& mesh) {
  for (const auto& v : mesh.vertices) {
    os << "v " << format_fixed17(v.x()) << " " << format_fixed17(v.y()) << " " << format_fixed17(v.z()) << "\n";
  }
  for (const auto& t : mesh.triangles) {
    os << "f " << t[0] + 1 << " " << t[1] + 1 << " " << t[2] + 1 << "\n";
  }
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj,
                          std::span<const std::string> var_names, const std::string& watch) {
  os << "t,";
  header(os, var_names);
  if (!watch.empty()) os << "," << watch;
  os << "\n";
  const std::vector<double>* series = nullptr;
  if (!watch.empty()) {
    if (auto it = traj.diagnostics.find(watch); it != traj.diagnostics.end()) series = &it->second;
  }
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    os << format_fixed17(traj.times[i]);
    for (Eigen::Index a = 0; a < traj.states[i].size(); ++a) os << "," << format_fixed17(traj.states[i][a]);
    if (series) os << "," << format_fixed17((*series)[i]);
    os << "\n";
  }
  if (traj.domain_exit) os << "# domain-exit at t=" << format_fixed17(traj.exit_time) << "\n";
}

void write_points_csv(std::ostream& os, const std::vector<Eigen::VectorXd>& points,
                      std::span<const std::string> var_names) {
  header(os, var_names);
  os << "\n";
  for (const auto& p : points) {
    for (Eigen::Index a = 0; a < p.size(); ++a) os << (a ? "," : "") << format_fixed17(p[a]);
    os << "\n";
  }
}

}  // namespace fracdyn
