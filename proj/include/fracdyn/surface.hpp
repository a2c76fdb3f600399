#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "fracdyn/order.hpp"
#include "fracdyn/poly.hpp"

namespace fracdyn {

/// How the kernel combination enters Phi. The general stationary-state
/// formula subtracts it; the customary Lorenz/Rossler form V + C00 + ... adds it.
enum class ConstantSign { kSubtract, kAdd };

/// Multi-index (k_1, ..., k_n), 0 <= k_i <= m - 1.
using ConstantIndex = std::vector<int>;

/// Implicit stationary-state set Phi = 0 with
///   Phi = V -+ |prod_i x_i|^(alpha-m) sum_k C_k prod_i x_i^(k_i).
struct StationarySurface {
  GenPoly phi;
  FracOrder order{1.0};
  std::map<ConstantIndex, double> constants;
  ConstantSign sign = ConstantSign::kSubtract;
};

/// Throws DomainError on a constant index of the wrong length or out of
/// range. For alpha = m the |.| prefactor is 1.
StationarySurface stationary_surface(const GenPoly& potential, FracOrder order,
                                     const std::map<ConstantIndex, double>& constants,
                                     ConstantSign sign = ConstantSign::kSubtract);

/// Dense samples of a function on a regular axis-aligned grid. The first axis
/// varies fastest. Samples outside the function's domain are masked.
struct ScalarGrid {
  std::vector<double> lo;
  std::vector<double> hi;
  std::vector<int> resolution;
  std::vector<double> values;
  std::vector<std::uint8_t> mask;  // 1 = undefined

  std::size_t dims() const { return resolution.size(); }
  std::size_t size() const { return values.size(); }
  double spacing(std::size_t axis) const;
  double coord(std::size_t axis, int i) const;
  std::size_t stride(std::size_t axis) const;
  std::vector<int> unflatten(std::size_t index) const;
  Eigen::VectorXd point(std::size_t index) const;
  bool masked(std::size_t index) const { return mask[index] != 0; }
};

/// Throws DomainError when dimensions disagree or some resolution is < 2.
ScalarGrid sample_grid(const GenPoly& phi, const std::vector<double>& lo,
                       const std::vector<double>& hi, const std::vector<int>& resolution);
inline ScalarGrid sample_grid(const StationarySurface& s, const std::vector<double>& lo,
                              const std::vector<double>& hi, const std::vector<int>& resolution) {
  return sample_grid(s.phi, lo, hi, resolution);
}

struct Mesh {
  std::vector<Eigen::Vector3d> vertices;
  std::vector<std::array<int, 3>> triangles;
};

/// Zero level set of a 3-D grid by marching tetrahedra (six tetrahedra per
/// cell sharing the main diagonal), linear interpolation along edges.
/// Vertices are shared between cells, so the mesh is watertight wherever the
/// grid is unmasked. Triangles face the positive side of Phi.
Mesh extract_isosurface(const ScalarGrid& grid);

/// Connected components of {Phi > 0} and {Phi < 0} under face adjacency.
/// Masked samples and samples with |Phi| <= surface_tolerance belong to no
/// component.
struct RegionReport {
  int component_count = 0;
  int positive_components = 0;
  int negative_components = 0;
  /// Voxel count of every component, largest first.
  std::vector<long> component_sizes;
  long surface_voxels = 0;
  long masked_voxels = 0;
  std::vector<double> lo;
  std::vector<double> hi;
  std::vector<int> resolution;
};

inline constexpr double kSurfaceTolerance = 1e-12;

RegionReport count_regions(const ScalarGrid& grid);

/// Points on Phi = 0: every grid edge whose endpoints have opposite signs is
/// bisected on Phi itself down to round-off. Edges whose bracket closes on a
/// singularity of Phi rather than a root are dropped.
std::vector<Eigen::VectorXd> level_set_points(const GenPoly& phi, const ScalarGrid& grid);

}  // namespace fracdyn
