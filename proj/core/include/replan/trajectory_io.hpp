#pragma once

#include <iosfwd>
#include <string>

#include "replan/bspline.hpp"

namespace replan {

/// Trajectory text format, one control point per row:
///
///   # uniform_bspline dt=<v> t0=<v> degree=5
///   x,y,z
///   <x>,<y>,<z>
///   ...
///
/// All values are written with 17 significant digits, so save/load round-trips
/// are bit-exact.
void save_trajectory(std::ostream& os, const UniformBSpline& spline);
void save_trajectory(const std::string& path, const UniformBSpline& spline);

UniformBSpline load_trajectory(std::istream& is);
UniformBSpline load_trajectory(const std::string& path);

}  // namespace replan
