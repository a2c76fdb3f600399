#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "fracdyn/cli.hpp"
#include "fracdyn/parser.hpp"
#include "fracdyn/reconstruct.hpp"
#include "fracdyn/catalog.hpp"

using namespace fracdyn;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(FRACDYN_DATA_DIR) + "/" + name; }

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "fracdyn_test_cli";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::vector<double> row(const std::string& line) {
  std::vector<double> v;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) v.push_back(std::stod(cell));
  return v;
}

}  // namespace

TEST_CASE("classify") {
  const Run lz1 = run({"classify", data("lorenz.sys"), "--alpha", "1"});
  CHECK(lz1.code == 1);
  const auto l = lines(lz1.out);
  REQUIRE(l.size() == 4);
  CHECK(l[0] == "not gradient");
  CHECK(l[1] == "  curl(x,y) = z - 14.736842105263158");
  CHECK(l[2] == "  curl(x,z) = -y");
  CHECK(l[3] == "  curl(y,z) = -2*x");

  const Run lz2 = run({"classify", data("lorenz.sys")});
  CHECK(lz2.code == 0);
  CHECK(lz2.out == "fractional gradient (alpha=2)\n");

  const Run osc = run({"classify", data("fracosc.sys")});
  CHECK(osc.code == 0);
  CHECK(osc.out == "Hamiltonian\n");

  CHECK(run({"classify", "builtin:example1", "--alpha", "0.5"}).out == "fractional gradient (alpha=0.5)\n");
  CHECK(run({"classify", "builtin:fracosc", "--alpha", "0.5"}).out == "fractional Hamiltonian (alpha=0.5)\n");
}

TEST_CASE("potential") {
  const Run p = run({"potential", data("paraboloid.sys")});
  CHECK(p.code == 0);
  CHECK(p.out == "x^2 + y^2\n");

  const Run lz = run({"potential", data("lorenz.sys")});
  CHECK(lz.code == 0);
  const std::vector<std::string> xyz{"x", "y", "z"};
  const GenPoly v = parse_expression(lines(lz.out).at(0), xyz);
  CHECK(v == reconstruct_potential(catalog("lorenz")));

  const Run osc = run({"potential", "builtin:fracosc"});
  CHECK(osc.out == "q^2 + p^2\n");

  const Run open = run({"potential", data("lorenz.sys"), "--alpha", "1"});
  CHECK(open.code == 1);
  CHECK(open.err.find("not gradient") != std::string::npos);
}

TEST_CASE("parameter overrides") {
  const Run p = run({"potential", data("lorenz.sys"), "--param", "b=3", "--param", "r=25"});
  CHECK(p.code == 0);
  CHECK(p.out.find("0.5*z^3") != std::string::npos);
  CHECK(p.out.find("12.5*x*y^2") != std::string::npos);
  CHECK(run({"potential", data("lorenz.sys"), "--param", "nonesuch=1"}).code == 2);
  CHECK(run({"potential", data("lorenz.sys"), "--param", "b"}).code == 2);
}

TEST_CASE("stationary points on the oscillator circle") {
  const fs::path pts = scratch("circle.csv");
  const Run r = run({"stationary", data("fracosc.sys"), "--constant", "C00=1", "--points", pts.string()});
  REQUIRE(r.code == 0);
  const auto l = lines(slurp(pts));
  REQUIRE(l.size() > 20);
  CHECK(l[0] == "q,p");
  for (std::size_t i = 1; i < l.size(); ++i) {
    const auto v = row(l[i]);
    REQUIRE(v.size() == 2);
    CHECK(std::abs(v[0] * v[0] + v[1] * v[1] - 1.0) <= 1e-9);
  }
}

TEST_CASE("stationary grid and mesh export") {
  const fs::path csv = scratch("sphere.csv");
  const Run g = run({"stationary", data("sphere.sys"), "--constant", "C000=0.5", "--box", "1.5", "--res", "5",
                     "--out", csv.string()});
  REQUIRE(g.code == 0);
  const auto l = lines(slurp(csv));
  REQUIRE(l.size() == 126);
  CHECK(l[0] == "x,y,z,phi");
  CHECK(row(l[1]) == std::vector<double>{-1.5, -1.5, -1.5, 0.5 * 3 * 2.25 - 0.5});

  const fs::path obj = scratch("lorenz.obj");
  const Run m = run({"stationary", data("lorenz.sys"), "--param", "b=3", "--param", "r=25", "--constant", "C00=1",
                     "--sign", "plus", "--box", "20", "--res", "41", "--out", obj.string()});
  REQUIRE(m.code == 0);
  std::size_t nv = 0;
  std::size_t nf = 0;
  bool faces_ok = true;
  for (const auto& line : lines(slurp(obj))) {
    if (line.rfind("v ", 0) == 0) ++nv;
    if (line.rfind("f ", 0) == 0) {
      ++nf;
      std::istringstream in(line.substr(2));
      for (long i; in >> i;) faces_ok = faces_ok && i >= 1 && static_cast<std::size_t>(i) <= nv;
    }
  }
  CHECK(nv > 0);
  CHECK(nf > 0);
  CHECK(faces_ok);
  CHECK(m.out.find("mesh: " + std::to_string(nv) + " vertices, " + std::to_string(nf) + " triangles") !=
        std::string::npos);
}

TEST_CASE("regions") {
  const Run r = run({"regions", data("sphere.sys"), "--constant", "C000=0.5", "--box", "2", "--res", "40"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).at(0) == "components: 2");
  CHECK(r.out.find("box: [-2,2]x[-2,2]x[-2,2]") != std::string::npos);
  CHECK(run({"regions", data("paraboloid.sys"), "--constant", "C00=1"}).code == 2);
}

TEST_CASE("integrate") {
  const Run d = run({"integrate", data("decay.sys"), "--x0", "1", "--t-end", "1", "--h", "1e-3"});
  REQUIRE(d.code == 0);
  const auto l = lines(d.out);
  CHECK(l.front() == "t,x");
  CHECK(l.size() == 1002);
  const auto last = row(l.back());
  CHECK(last[0] == 1.0);
  CHECK(std::abs(last[1] - 0.1353353) <= 1e-6);

  const fs::path traj = scratch("osc.csv");
  const Run o = run({"integrate", data("fracosc.sys"), "--x0", "1,0", "--t-end", "10", "--h", "1e-3", "--watch", "H",
                     "--out", traj.string()});
  REQUIRE(o.code == 0);
  const auto ol = lines(slurp(traj));
  CHECK(ol.front() == "t,q,p,H");
  double drift = 0.0;
  for (std::size_t i = 1; i < ol.size(); ++i) drift = std::max(drift, std::abs(row(ol[i])[3] - 1.0));
  CHECK(drift <= 1e-6);

  // The fractional oscillator is integrated and H recorded, no conservation expected.
  const Run f = run({"integrate", "builtin:fracosc", "--alpha", "0.8", "--x0", "1,0.5", "--t-end", "0.5", "--h",
                     "1e-3", "--watch", "H"});
  CHECK(f.code == 0);
  CHECK(lines(f.out).front() == "t,q,p,H");

  const Run exit = run({"integrate", "builtin:fracosc", "--alpha", "0.8", "--x0", "1,0.5", "--t-end", "10", "--h",
                        "1e-2"});
  CHECK(exit.code == 0);
  CHECK(exit.out.find("# domain-exit at t=") != std::string::npos);

  CHECK(run({"integrate", data("decay.sys"), "--x0", "1,2"}).code == 2);
  CHECK(run({"integrate", data("decay.sys"), "--x0", "1", "--watch", "H"}).code == 2);
  CHECK(run({"integrate", data("lorenz.sys"), "--alpha", "1", "--x0", "1,1,1", "--t-end", "0.01"}).code == 0);
  CHECK(run({"integrate", data("lorenz.sys"), "--alpha", "1", "--x0", "1,1,1", "--watch", "V"}).code == 1);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"stationary", "builtin:rossler", "--constant", "C00=1", "--sign", "plus",
                                      "--box", "5", "--res", "17", "--out", scratch("r1.obj").string()};
  REQUIRE(run(args).code == 0);
  auto again = args;
  again.back() = scratch("r2.obj").string();
  REQUIRE(run(again).code == 0);
  CHECK(slurp(scratch("r1.obj")) == slurp(scratch("r2.obj")));
  CHECK(run({"integrate", data("decay.sys"), "--x0", "1"}).out == run({"integrate", data("decay.sys"), "--x0", "1"}).out);
}

TEST_CASE("input errors exit with code 2") {
  const fs::path bad = scratch("bad.sys");
  {
    std::ofstream f(bad);
    f << "vars: x y\nF[x] = y\nF[y] = x/2\n";
  }
  const Run r = run({"classify", bad.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find(bad.string() + ":3:9: error: division is not supported") != std::string::npos);

  CHECK(run({"classify", "/nonexistent/file.sys"}).code == 2);
  CHECK(run({"classify", "builtin:nonesuch"}).code == 2);
  CHECK(run({"classify"}).code == 2);
  CHECK(run({"frobnicate", data("decay.sys")}).code == 2);
  CHECK(run({"classify", data("decay.sys"), "--alpha", "-1"}).code == 2);
  CHECK(run({"stationary", data("sphere.sys"), "--constant", "C000=1"}).code == 2);
  CHECK(run({"stationary", data("sphere.sys"), "--constant", "C01=1", "--out", scratch("x.csv").string()}).code == 2);
  CHECK(run({"stationary", data("sphere.sys"), "--constant", "C000=1", "--out", scratch("x.txt").string()}).code == 2);
  CHECK(run({"stationary", data("sphere.sys"), "--sign", "sideways", "--out", scratch("x.csv").string()}).code == 2);
  CHECK(run({"regions", data("sphere.sys"), "--res", "1"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"integrate", "--help"}).code == 0);
}
