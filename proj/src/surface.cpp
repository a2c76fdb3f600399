#include "fracdyn/surface.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "fracdyn/errors.hpp"

namespace fracdyn {

StationarySurface stationary_surface(const GenPoly& potential, FracOrder order,
                                     const std::map<ConstantIndex, double>& constants,
                                     ConstantSign sign) {
  const std::size_t n = potential.nvars();
  GenPoly combination(n);
  for (const auto& [index, value] : constants) {
    if (index.size() != n) {
      throw DomainError("constant index must have one entry per variable (" + std::to_string(n) + ")");
    }
    std::vector<Factor> factors;
    for (std::size_t i = 0; i < n; ++i) {
      if (index[i] < 0 || index[i] >= order.m()) {
        throw DomainError("constant index entries must lie in 0.." + std::to_string(order.m() - 1));
      }
      if (index[i] > 0) factors.push_back({static_cast<int>(i), static_cast<double>(index[i]), false});
    }
    combination += GenPoly::monomial(n, value, std::move(factors));
  }

  const double shift = order.alpha() - order.m();
  if (shift != 0.0) {
    std::vector<Factor> prefactor;
    for (std::size_t i = 0; i < n; ++i) prefactor.push_back({static_cast<int>(i), shift, true});
    combination *= GenPoly::monomial(n, 1.0, std::move(prefactor));
  }

  StationarySurface s;
  s.phi = sign == ConstantSign::kSubtract ? potential - combination : potential + combination;
  s.order = order;
  s.constants = constants;
  s.sign = sign;
  return s;
}

double ScalarGrid::spacing(std::size_t axis) const {
  return (hi[axis] - lo[axis]) / static_cast<double>(resolution[axis] - 1);
}

double ScalarGrid::coord(std::size_t axis, int i) const {
  if (i == resolution[axis] - 1) return hi[axis];
  return lo[axis] + static_cast<double>(i) * spacing(axis);
}

std::size_t ScalarGrid::stride(std::size_t axis) const {
  std::size_t s = 1;
  for (std::size_t a = 0; a < axis; ++a) s *= static_cast<std::size_t>(resolution[a]);
  return s;
}

std::vector<int> ScalarGrid::unflatten(std::size_t index) const {
  std::vector<int> ijk(dims());
  for (std::size_t a = 0; a < dims(); ++a) {
    const auto r = static_cast<std::size_t>(resolution[a]);
    ijk[a] = static_cast<int>(index % r);
    index /= r;
  }
  return ijk;
}

Eigen::VectorXd ScalarGrid::point(std::size_t index) const {
  const auto ijk = unflatten(index);
  Eigen::VectorXd p(static_cast<Eigen::Index>(dims()));
  for (std::size_t a = 0; a < dims(); ++a) p[static_cast<Eigen::Index>(a)] = coord(a, ijk[a]);
  return p;
}

ScalarGrid sample_grid(const GenPoly& phi, const std::vector<double>& lo,
                       const std::vector<double>& hi, const std::vector<int>& resolution) {
  const std::size_t d = resolution.size();
  if (lo.size() != d || hi.size() != d) throw DomainError("box and resolution dimensions differ");
  if (d != phi.nvars()) throw DomainError("grid dimension must equal the number of variables");
  std::size_t total = 1;
  for (std::size_t a = 0; a < d; ++a) {
    if (resolution[a] < 2) throw DomainError("grid resolution must be >= 2 on every axis");
    if (!(hi[a] > lo[a])) throw DomainError("box must have max > min on every axis");
    total *= static_cast<std::size_t>(resolution[a]);
  }

  ScalarGrid g{lo, hi, resolution, std::vector<double>(total, 0.0),
               std::vector<std::uint8_t>(total, 0)};
  std::vector<int> ijk(d, 0);
  std::vector<double> x(d);
  for (std::size_t a = 0; a < d; ++a) x[a] = g.coord(a, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (auto v = phi.try_eval(x); v && std::isfinite(*v)) {
      g.values[idx] = *v;
    } else {
      g.mask[idx] = 1;
    }
    // Odometer increment, first axis fastest.
    for (std::size_t a = 0; a < d; ++a) {
      if (++ijk[a] < resolution[a]) {
        x[a] = g.coord(a, ijk[a]);
        break;
      }
      ijk[a] = 0;
      x[a] = g.coord(a, 0);
    }
  }
  return g;
}

namespace {

class MeshBuilder {
 public:
  explicit MeshBuilder(const ScalarGrid& g) : g_(g) {}

  int edge_vertex(std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    const std::uint64_t key = static_cast<std::uint64_t>(a) * g_.size() + b;
    if (auto it = ids_.find(key); it != ids_.end()) return it->second;
    const double va = g_.values[a];
    const double vb = g_.values[b];
    const double t = va / (va - vb);
    const Eigen::VectorXd pa = g_.point(a);
    const Eigen::VectorXd pb = g_.point(b);
    const Eigen::Vector3d p = pa.head<3>() + t * (pb - pa).head<3>();
    const int id = static_cast<int>(mesh_.vertices.size());
    mesh_.vertices.push_back(p);
    ids_.emplace(key, id);
    return id;
  }

  void triangle(int i, int j, int k, const Eigen::Vector3d& toward_positive) {
    const auto& v = mesh_.vertices;
    Eigen::Vector3d n = (v[j] - v[i]).cross(v[k] - v[i]);
    if (0.5 * n.norm() <= 1e-12) return;
    if (n.dot(toward_positive) < 0.0) std::swap(j, k);
    mesh_.triangles.push_back({i, j, k});
  }

  void tetrahedron(const std::array<std::size_t, 4>& ids) {
    std::array<bool, 4> neg{};
    int nneg = 0;
    Eigen::Vector3d cneg = Eigen::Vector3d::Zero();
    Eigen::Vector3d cpos = Eigen::Vector3d::Zero();
    for (int i = 0; i < 4; ++i) {
      neg[i] = g_.values[ids[i]] < 0.0;
      const Eigen::Vector3d p = g_.point(ids[i]).head<3>();
      if (neg[i]) {
        ++nneg;
        cneg += p;
      } else {
        cpos += p;
      }
    }
    if (nneg == 0 || nneg == 4) return;
    const Eigen::Vector3d dir = cpos / (4 - nneg) - cneg / nneg;

    if (nneg == 1 || nneg == 3) {
      int lone = 0;
      while (neg[lone] != (nneg == 1)) ++lone;
      std::array<int, 3> tri{};
      int t = 0;
      for (int i = 0; i < 4; ++i) {
        if (i != lone) tri[t++] = edge_vertex(ids[lone], ids[i]);
      }
      triangle(tri[0], tri[1], tri[2], dir);
      return;
    }
    std::array<int, 2> in{};
    std::array<int, 2> out{};
    int ni = 0;
    int no = 0;
    for (int i = 0; i < 4; ++i) (neg[i] ? in[ni++] : out[no++]) = i;
    // Cyclic order around the quad: (a,c) (a,d) (b,d) (b,c).
    const int q0 = edge_vertex(ids[in[0]], ids[out[0]]);
    const int q1 = edge_vertex(ids[in[0]], ids[out[1]]);
    const int q2 = edge_vertex(ids[in[1]], ids[out[1]]);
    const int q3 = edge_vertex(ids[in[1]], ids[out[0]]);
    triangle(q0, q1, q2, dir);
    triangle(q0, q2, q3, dir);
  }

  Mesh finish() {
    // Drop vertices referenced only by skipped degenerate triangles.
    std::vector<int> remap(mesh_.vertices.size(), -1);
    Mesh out;
    for (auto& t : mesh_.triangles) {
      for (int& v : t) {
        if (remap[static_cast<std::size_t>(v)] < 0) {
          remap[static_cast<std::size_t>(v)] = static_cast<int>(out.vertices.size());
          out.vertices.push_back(mesh_.vertices[static_cast<std::size_t>(v)]);
        }
        v = remap[static_cast<std::size_t>(v)];
      }
    }
    out.triangles = std::move(mesh_.triangles);
    return out;
  }

 private:
  const ScalarGrid& g_;
  Mesh mesh_;
  std::unordered_map<std::uint64_t, int> ids_;
};

}  // namespace

Mesh extract_isosurface(const ScalarGrid& g) {
  if (g.dims() != 3) throw DomainError("isosurface extraction needs a 3-D grid");
  const int nx = g.resolution[0];
  const int ny = g.resolution[1];
  const int nz = g.resolution[2];
  const std::size_t sy = g.stride(1);
  const std::size_t sz = g.stride(2);
  const std::array<std::size_t, 3> axis_step{1, sy, sz};
  // Each permutation of the axes is one tetrahedron 0 -> e_a -> e_a+e_b -> 7.
  constexpr std::array<std::array<int, 3>, 6> perms{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

  MeshBuilder mb(g);
  for (int k = 0; k + 1 < nz; ++k) {
    for (int j = 0; j + 1 < ny; ++j) {
      for (int i = 0; i + 1 < nx; ++i) {
        const std::size_t base = static_cast<std::size_t>(i) + j * sy + k * sz;
        bool skip = false;
        int nneg = 0;
        for (int c = 0; c < 8 && !skip; ++c) {
          const std::size_t id = base + (c & 1) + ((c >> 1) & 1) * sy + ((c >> 2) & 1) * sz;
          skip = g.masked(id);
          nneg += g.values[id] < 0.0 ? 1 : 0;
        }
        if (skip || nneg == 0 || nneg == 8) continue;
        const std::size_t far = base + 1 + sy + sz;
        for (const auto& p : perms) {
          const std::size_t v1 = base + axis_step[p[0]];
          const std::size_t v2 = v1 + axis_step[p[1]];
          mb.tetrahedron({base, v1, v2, far});
        }
      }
    }
  }
  return mb.finish();
}

RegionReport count_regions(const ScalarGrid& g) {
  const std::size_t total = g.size();
  const std::size_t d = g.dims();
  RegionReport rep;
  rep.lo = g.lo;
  rep.hi = g.hi;
  rep.resolution = g.resolution;

  // 0 = excluded, 1 = positive, 2 = negative.
  std::vector<std::uint8_t> cls(total, 0);
  for (std::size_t i = 0; i < total; ++i) {
    if (g.masked(i)) {
      ++rep.masked_voxels;
    } else if (std::fabs(g.values[i]) <= kSurfaceTolerance) {
      ++rep.surface_voxels;
    } else {
      cls[i] = g.values[i] > 0.0 ? 1 : 2;
    }
  }

  std::vector<std::size_t> strides(d);
  for (std::size_t a = 0; a < d; ++a) strides[a] = g.stride(a);

  std::vector<std::int32_t> label(total, -1);
  std::vector<std::size_t> stack;
  for (std::size_t seed = 0; seed < total; ++seed) {
    if (cls[seed] == 0 || label[seed] >= 0) continue;
    const std::int32_t id = rep.component_count++;
    (cls[seed] == 1 ? rep.positive_components : rep.negative_components)++;
    long size = 0;
    label[seed] = id;
    stack.push_back(seed);
    while (!stack.empty()) {
      const std::size_t cur = stack.back();
      stack.pop_back();
      ++size;
      std::size_t rest = cur;
      for (std::size_t a = 0; a < d; ++a) {
        const auto r = static_cast<std::size_t>(g.resolution[a]);
        const std::size_t coord = rest % r;
        rest /= r;
        if (coord > 0) {
          const std::size_t nb = cur - strides[a];
          if (cls[nb] == cls[seed] && label[nb] < 0) {
            label[nb] = id;
            stack.push_back(nb);
          }
        }
        if (coord + 1 < r) {
          const std::size_t nb = cur + strides[a];
          if (cls[nb] == cls[seed] && label[nb] < 0) {
            label[nb] = id;
            stack.push_back(nb);
          }
        }
      }
    }
    rep.component_sizes.push_back(size);
  }
  std::sort(rep.component_sizes.begin(), rep.component_sizes.end(), std::greater<>());
  return rep;
}

std::vector<Eigen::VectorXd> level_set_points(const GenPoly& phi, const ScalarGrid& g) {
  std::vector<Eigen::VectorXd> out;
  const std::size_t total = g.size();
  const std::size_t d = g.dims();
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (g.masked(idx)) continue;
    const auto ijk = g.unflatten(idx);
    for (std::size_t a = 0; a < d; ++a) {
      if (ijk[a] + 1 >= g.resolution[a]) continue;
      const std::size_t nb = idx + g.stride(a);
      if (g.masked(nb)) continue;
      double fa = g.values[idx];
      double fb = g.values[nb];
      if ((fa < 0.0) == (fb < 0.0)) continue;

      Eigen::VectorXd pa = g.point(idx);
      Eigen::VectorXd pb = g.point(nb);
      bool ok = true;
      for (int it = 0; it < 200; ++it) {
        Eigen::VectorXd mid = 0.5 * (pa + pb);
        if ((mid.array() == pa.array()).all() || (mid.array() == pb.array()).all()) break;
        const auto fm = phi.try_eval(std::span<const double>(mid.data(), d));
        if (!fm || !std::isfinite(*fm)) {
          ok = false;
          break;
        }
        if ((*fm < 0.0) == (fa < 0.0)) {
          pa = mid;
          fa = *fm;
        } else {
          pb = mid;
          fb = *fm;
        }
      }
      if (!ok) continue;
      const Eigen::VectorXd& best = std::fabs(fa) <= std::fabs(fb) ? pa : pb;
      const double fbest = std::min(std::fabs(fa), std::fabs(fb));
      // A sign change across a pole leaves |Phi| large at the bracket.
      const double scale = std::max({1.0, std::fabs(g.values[idx]), std::fabs(g.values[nb])});
      if (fbest > 1e-6 * scale) continue;
      out.push_back(best);
    }
  }
  return out;
}

}  // namespace fracdyn
