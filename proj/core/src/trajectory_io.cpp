#include "replan/trajectory_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace replan {

namespace {

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void save_trajectory(std::ostream& os, const UniformBSpline& spline) {
  os << "# uniform_bspline dt=" << fmt17(spline.dt())
     << " t0=" << fmt17(spline.t0()) << " degree=" << UniformBSpline::kDegree
     << "\n";
  os << "x,y,z\n";
  for (const Eigen::Vector3d& p : spline.control_points())
    os << fmt17(p.x()) << ',' << fmt17(p.y()) << ',' << fmt17(p.z()) << "\n";
}

void save_trajectory(const std::string& path, const UniformBSpline& spline) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("save_trajectory: cannot open " + path);
  save_trajectory(os, spline);
}

UniformBSpline load_trajectory(std::istream& is) {
  std::string line;
  if (!std::getline(is, line))
    throw std::runtime_error("load_trajectory: empty input");

  double dt = 0.0, t0 = 0.0;
  int degree = -1;
  if (std::sscanf(line.c_str(), "# uniform_bspline dt=%lf t0=%lf degree=%d",
                  &dt, &t0, &degree) != 3)
    throw std::runtime_error("load_trajectory: bad header: " + line);
  if (degree != UniformBSpline::kDegree)
    throw std::runtime_error("load_trajectory: unsupported degree");

  std::vector<Eigen::Vector3d> points;
  while (std::getline(is, line)) {
    if (line.empty() || line == "x,y,z") continue;
    Eigen::Vector3d p;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &p.x(), &p.y(), &p.z()) != 3)
      throw std::runtime_error("load_trajectory: bad row: " + line);
    points.push_back(p);
  }
  return UniformBSpline(std::move(points), dt, t0);
}

UniformBSpline load_trajectory(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("load_trajectory: cannot open " + path);
  return load_trajectory(is);
}

}  // namespace replan
