#include "fracdyn/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "fracdyn/catalog.hpp"
#include "fracdyn/dynamics.hpp"
#include "fracdyn/errors.hpp"
#include "fracdyn/forms.hpp"
#include "fracdyn/io.hpp"
#include "fracdyn/parser.hpp"
#include "fracdyn/reconstruct.hpp"
#include "fracdyn/surface.hpp"

namespace fracdyn {

namespace {

// Bad command-line values; reported with exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Loaded {
  SystemSpec sys;
  std::string builtin;  // catalog name when loaded from builtin:NAME
};

double to_real(const std::string& s, const std::string& what) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  auto res = std::from_chars(s.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end) throw UsageError("invalid number '" + s + "' in " + what);
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

std::pair<std::string, std::string> key_value(const std::string& s, const std::string& what) {
  const auto eq = s.find('=');
  if (eq == std::string::npos || eq == 0) throw UsageError("expected KEY=VALUE in " + what + ", got '" + s + "'");
  return {s.substr(0, eq), s.substr(eq + 1)};
}

Loaded load(const std::string& source, std::optional<double> alpha, const std::vector<std::string>& params,
            std::ostream& err, const std::string& path_label) {
  Loaded l;
  if (source.rfind("builtin:", 0) == 0) {
    l.builtin = source.substr(8);
    l.sys = catalog(l.builtin, alpha);
  } else {
    std::ifstream in(source);
    if (!in) throw UsageError("cannot open '" + source + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      l.sys = parse_system(buf.str());
    } catch (const ParseError& e) {
      err << path_label << ":" << e.line() << ":" << e.column() << ": error: " << e.what() << "\n";
      throw;
    }
    if (alpha) l.sys = l.sys.with_order(FracOrder(*alpha));
  }
  std::map<std::string, double> overrides;
  for (const auto& p : params) {
    auto [k, v] = key_value(p, "--param");
    overrides[k] = to_real(v, "--param");
  }
  if (!overrides.empty()) l.sys = l.sys.with_params(overrides);
  return l;
}

std::string alpha_text(const SystemSpec& s) { return format_real(s.order.alpha()); }

std::string classification(const SystemSpec& s, bool closed) {
  const bool classical = s.order.alpha() == 1.0;
  const std::string kind = s.phase_split ? "Hamiltonian" : "gradient";
  std::string out = closed ? "" : "not ";
  if (classical) return out + kind;
  return out + "fractional " + kind + " (alpha=" + alpha_text(s) + ")";
}

ClosureReport check(const SystemSpec& s) { return s.phase_split ? check_hamiltonian(s) : check_gradient(s); }

GenPoly reconstruct(const SystemSpec& s) {
  return s.phase_split ? reconstruct_hamiltonian(s) : reconstruct_potential(s);
}

std::map<ConstantIndex, double> parse_constants(const std::vector<std::string>& items, std::size_t n) {
  std::map<ConstantIndex, double> out;
  for (const auto& item : items) {
    for (const auto& entry : split(item, ',')) {
      if (entry.empty()) continue;
      auto [key, value] = key_value(entry, "--constant");
      std::string digits = key;
      if (!digits.empty() && digits.front() == 'C') digits.erase(0, 1);
      ConstantIndex idx(n, 0);
      const bool zero_alias = !digits.empty() && digits.find_first_not_of('0') == std::string::npos;
      if (!zero_alias) {
        if (digits.size() != n || digits.find_first_not_of("0123456789") != std::string::npos) {
          throw UsageError("constant index '" + key + "' needs one digit per variable (" + std::to_string(n) + ")");
        }
        for (std::size_t i = 0; i < n; ++i) idx[i] = digits[i] - '0';
      }
      out[idx] = to_real(value, "--constant");
    }
  }
  return out;
}

struct GridOptions {
  std::string box;
  std::string res;
};

void grid_shape(const GridOptions& o, const Loaded& l, std::vector<double>& lo, std::vector<double>& hi,
                std::vector<int>& res) {
  const std::size_t n = l.sys.nvars();
  double half = 2.0;
  int samples = 101;
  if (l.builtin == "lorenz") {
    half = 50.0;
    samples = 201;
  } else if (l.builtin == "rossler") {
    half = 30.0;
    samples = 201;
  }
  lo.assign(n, -half);
  hi.assign(n, half);
  res.assign(n, samples);
  if (!o.box.empty()) {
    const auto parts = split(o.box, ',');
    if (parts.size() == 1) {
      const double h = to_real(parts[0], "--box");
      lo.assign(n, -h);
      hi.assign(n, h);
    } else if (parts.size() == 2) {
      lo.assign(n, to_real(parts[0], "--box"));
      hi.assign(n, to_real(parts[1], "--box"));
    } else if (parts.size() == 2 * n) {
      for (std::size_t a = 0; a < n; ++a) {
        lo[a] = to_real(parts[2 * a], "--box");
        hi[a] = to_real(parts[2 * a + 1], "--box");
      }
    } else {
      throw UsageError("--box takes L, MIN,MAX or one MIN,MAX pair per variable");
    }
  }
  if (!o.res.empty()) {
    const auto parts = split(o.res, ',');
    if (parts.size() != 1 && parts.size() != n) throw UsageError("--res takes N or one N per variable");
    for (std::size_t a = 0; a < n; ++a) {
      const double v = to_real(parts.size() == 1 ? parts[0] : parts[a], "--res");
      if (v < 2 || v != static_cast<int>(v)) throw UsageError("--res entries must be integers >= 2");
      res[a] = static_cast<int>(v);
    }
  }
}

std::string box_text(const std::vector<double>& lo, const std::vector<double>& hi) {
  std::string s;
  for (std::size_t a = 0; a < lo.size(); ++a) {
    s += (a ? "x" : "") + std::string("[") + format_real(lo[a]) + "," + format_real(hi[a]) + "]";
  }
  return s;
}

std::string res_text(const std::vector<int>& res) {
  std::string s;
  for (std::size_t a = 0; a < res.size(); ++a) s += (a ? "x" : "") + std::to_string(res[a]);
  return s;
}

ConstantSign parse_sign(const std::string& s) {
  if (s == "minus") return ConstantSign::kSubtract;
  if (s == "plus") return ConstantSign::kAdd;
  throw UsageError("--sign must be 'minus' or 'plus'");
}

void open_out(const std::string& path, std::ofstream& f) {
  f.open(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fractional gradient and Hamiltonian systems: classify, reconstruct, sample, integrate",
               "fracdyn"};
  app.require_subcommand(1);

  std::string source;
  std::optional<double> alpha;
  std::vector<std::string> params;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("system", source, "System file, or builtin:NAME (" +
                                          [] {
                                            std::string s;
                                            for (const auto& n : catalog_names()) s += (s.empty() ? "" : ", ") + n;
                                            return s;
                                          }() + ")")
        ->required();
    sub->add_option("--alpha", alpha, "Fractional order (overrides the file)");
    sub->add_option("--param", params, "Parameter override NAME=VALUE (repeatable)");
  };

  auto* classify = app.add_subcommand("classify", "Decide (fractional) gradient / Hamiltonian and print residuals");
  add_common(classify);

  auto* potential = app.add_subcommand("potential", "Print the reconstructed potential V or Hamiltonian H");
  add_common(potential);

  std::vector<std::string> constants;
  std::string sign = "minus";
  GridOptions grid_opts;
  std::string out_path;
  std::string points_path;
  auto add_surface = [&](CLI::App* sub) {
    add_common(sub);
    sub->add_option("--constant,--constants", constants,
                    "Kernel constant INDEX=VALUE, INDEX = C00 (all zero) or C<one digit per variable>");
    sub->add_option("--sign", sign, "minus: Phi = V - sum (default); plus: Phi = V + sum");
    sub->add_option("--box", grid_opts.box, "L | MIN,MAX | MIN1,MAX1,...");
    sub->add_option("--res", grid_opts.res, "N | N1,N2,...");
  };
  auto* stationary = app.add_subcommand("stationary", "Sample or mesh the stationary-state surface");
  add_surface(stationary);
  stationary->add_option("--out", out_path, "grid.csv or surface.obj");
  stationary->add_option("--points", points_path, "CSV of refined points on Phi = 0");

  auto* regions = app.add_subcommand("regions", "Count connected regions of the complement of the surface");
  add_surface(regions);

  std::string x0_text;
  double t_end = 1.0;
  double step = 1e-3;
  std::string watch;
  auto* integ = app.add_subcommand("integrate", "Integrate the flow with fixed-step RK4");
  integ->set_help_flag("--help", "Print this help message and exit");  // -h is taken by the step size
  add_common(integ);
  integ->add_option("--x0", x0_text, "Initial state, comma separated")->required();
  integ->add_option("--t-end", t_end, "End time")->capture_default_str();
  integ->add_option("--h", step, "Step size")->capture_default_str();
  integ->add_option("--watch", watch, "Record V (gradient) or H (Hamiltonian)")->check(CLI::IsMember({"V", "H"}));
  integ->add_option("--out", out_path, "Trajectory CSV (default: standard output)");

  std::vector<std::string> argv_store{"fracdyn"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    const Loaded l = load(source, alpha, params, err, source);
    const SystemSpec& sys = l.sys;

    if (classify->parsed()) {
      const ClosureReport rep = check(sys);
      out << classification(sys, rep.closed) << "\n";
      for (const auto& r : rep.residuals) {
        if (r.poly.max_abs_coeff() > kClosureTolerance) {
          out << "  " << r.id << " = " << r.poly.to_string(sys.var_names) << "\n";
        }
      }
      return rep.closed ? kExitOk : kExitNotClosed;
    }

    // Everything except a plain integration needs the reconstructed V or H.
    GenPoly generator;
    if (!integ->parsed() || !watch.empty()) {
      try {
        generator = reconstruct(sys);
      } catch (const NotClosedError& e) {
        err << classification(sys, false) << "\n" << e.what();
        return kExitNotClosed;
      }
    }

    if (potential->parsed()) {
      out << generator.to_string(sys.var_names) << "\n";
      return kExitOk;
    }

    if (stationary->parsed() || regions->parsed()) {
      const auto surface = stationary_surface(generator, sys.order, parse_constants(constants, sys.nvars()),
                                              parse_sign(sign));
      std::vector<double> lo;
      std::vector<double> hi;
      std::vector<int> res;
      grid_shape(grid_opts, l, lo, hi, res);
      const ScalarGrid grid = sample_grid(surface, lo, hi, res);

      if (regions->parsed()) {
        if (sys.nvars() != 3) throw UsageError("regions needs a 3-variable system");
        const RegionReport rep = count_regions(grid);
        out << "components: " << rep.component_count << "\n";
        out << "positive: " << rep.positive_components << "\n";
        out << "negative: " << rep.negative_components << "\n";
        out << "sizes:";
        for (long s : rep.component_sizes) out << " " << s;
        out << "\n";
        out << "surface voxels: " << rep.surface_voxels << "\n";
        out << "masked voxels: " << rep.masked_voxels << "\n";
        out << "box: " << box_text(lo, hi) << "\n";
        out << "resolution: " << res_text(res) << "\n";
        return kExitOk;
      }

      out << "phi = " << surface.phi.to_string(sys.var_names) << "\n";
      if (out_path.empty() && points_path.empty()) throw UsageError("stationary needs --out and/or --points");
      if (!out_path.empty()) {
        std::ofstream f;
        if (ends_with(out_path, ".obj")) {
          if (sys.nvars() != 3) throw UsageError("OBJ mesh output needs a 3-variable system");
          const Mesh mesh = extract_isosurface(grid);
          open_out(out_path, f);
          write_obj(f, mesh);
          out << "mesh: " << mesh.vertices.size() << " vertices, " << mesh.triangles.size() << " triangles\n";
        } else if (ends_with(out_path, ".csv")) {
          open_out(out_path, f);
          write_grid_csv(f, grid, sys.var_names);
          out << "grid: " << res_text(res) << " over " << box_text(lo, hi) << "\n";
        } else {
          throw UsageError("--out must end in .csv or .obj");
        }
      }
      if (!points_path.empty()) {
        const auto pts = level_set_points(surface.phi, grid);
        std::ofstream f;
        open_out(points_path, f);
        write_points_csv(f, pts, sys.var_names);
        out << "points: " << pts.size() << "\n";
      }
      return kExitOk;
    }

    // integrate
    const auto parts = split(x0_text, ',');
    if (parts.size() != sys.nvars()) throw UsageError("--x0 needs " + std::to_string(sys.nvars()) + " values");
    Eigen::VectorXd x0(static_cast<Eigen::Index>(parts.size()));
    for (std::size_t i = 0; i < parts.size(); ++i) x0[static_cast<Eigen::Index>(i)] = to_real(parts[i], "--x0");
    if (!watch.empty() && (watch == "H") != sys.phase_split) {
      throw UsageError(watch == "H" ? "--watch H needs a phase-space system" : "--watch V needs a gradient system");
    }
    Trajectory traj = integrate(sys, x0, t_end, step);
    if (!watch.empty()) traj.diagnostics[watch] = diagnostics(traj, generator);
    if (out_path.empty()) {
      write_trajectory_csv(out, traj, sys.var_names, watch);
    } else {
      std::ofstream f;
      open_out(out_path, f);
      write_trajectory_csv(f, traj, sys.var_names, watch);
    }
    return kExitOk;
  } catch (const ParseError& e) {
    if (e.line() == 0) err << "error: column " << e.column() << ": " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace fracdyn
