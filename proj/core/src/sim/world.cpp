#include "replan/sim/world.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace replan::sim {

namespace {

double sphere_distance(const Sphere& s, const Eigen::Vector3d& p) {
  return (p - s.center).norm() - s.radius;
}

// Signed distance to the solid capped cylinder.
double cylinder_distance(const Cylinder& c, const Eigen::Vector3d& p) {
  const double dxy = (p.head<2>() - c.center).norm() - c.radius;
  const double dz = std::max(c.z_min - p.z(), p.z() - c.z_max);
  if (dxy <= 0.0 && dz <= 0.0) return std::max(dxy, dz);
  const double ox = std::max(dxy, 0.0);
  const double oz = std::max(dz, 0.0);
  return std::sqrt(ox * ox + oz * oz);
}

constexpr double kInfRange = std::numeric_limits<double>::infinity();

// Smallest t >= 0 with |o_xy + t d_xy - c| = r and z in band, or the cap
// disks; infinity when missed.
double cylinder_raycast(const Cylinder& c, const Eigen::Vector3d& o,
                        const Eigen::Vector3d& d) {
  double best = kInfRange;
  const Eigen::Vector2d oc = o.head<2>() - c.center;
  const Eigen::Vector2d dd = d.head<2>();
  const double a = dd.squaredNorm();
  if (a > 0.0) {
    const double b = oc.dot(dd);
    const double q = oc.squaredNorm() - c.radius * c.radius;
    const double disc = b * b - a * q;
    if (disc >= 0.0) {
      const double root = std::sqrt(disc);
      for (const double t : {(-b - root) / a, (-b + root) / a}) {
        if (t < 0.0 || t >= best) continue;
        const double z = o.z() + t * d.z();
        if (z >= c.z_min && z <= c.z_max) best = t;
      }
    }
  }
  if (d.z() != 0.0) {  // cap disks
    for (const double zc : {c.z_min, c.z_max}) {
      const double t = (zc - o.z()) / d.z();
      if (t < 0.0 || t >= best) continue;
      if ((oc + t * dd).squaredNorm() <= c.radius * c.radius) best = t;
    }
  }
  return best;
}

double sphere_raycast(const Sphere& s, const Eigen::Vector3d& o,
                      const Eigen::Vector3d& d) {
  const Eigen::Vector3d oc = o - s.center;
  const double b = oc.dot(d);
  const double q = oc.squaredNorm() - s.radius * s.radius;
  const double disc = b * b - q;  // |d| == 1
  if (disc < 0.0) return kInfRange;
  const double root = std::sqrt(disc);
  for (const double t : {-b - root, -b + root})
    if (t >= 0.0) return t;
  return kInfRange;
}

}  // namespace

double World::distance(const Eigen::Vector3d& p) const {
  double d = kNoObstacle;
  for (const Cylinder& c : cylinders) d = std::min(d, cylinder_distance(c, p));
  for (const Sphere& s : spheres) d = std::min(d, sphere_distance(s, p));
  return d;
}

double World::raycast(const Eigen::Vector3d& origin, const Eigen::Vector3d& dir,
                      double max_range) const {
  double best = kInfRange;
  for (const Cylinder& c : cylinders)
    best = std::min(best, cylinder_raycast(c, origin, dir));
  for (const Sphere& s : spheres)
    best = std::min(best, sphere_raycast(s, origin, dir));
  return best <= max_range ? best : kInfRange;
}

World generate_forest(std::uint64_t seed, const ForestParams& params) {
  if (params.density < 0.0)
    throw std::invalid_argument("generate_forest: density must be >= 0");
  if (!(params.radius_min > 0.0) || params.radius_max < params.radius_min)
    throw std::invalid_argument("generate_forest: bad radius range");
  const Eigen::Vector3d extent = params.box.extent();
  if (std::min(extent.x(), extent.y()) <= 2.0 * params.radius_max)
    throw std::invalid_argument("generate_forest: radii larger than the box");
  const double packing =
      params.density * M_PI * params.radius_max * params.radius_max;
  if (packing > 0.9)
    throw std::invalid_argument("generate_forest: density saturates the box");

  World world;
  world.box = params.box;
  world.seed = seed;

  std::mt19937_64 rng(seed);
  const double area = extent.x() * extent.y();
  std::poisson_distribution<int> count_dist(params.density * area);
  const int count = params.density > 0.0 ? count_dist(rng) : 0;

  std::uniform_real_distribution<double> radius_dist(params.radius_min,
                                                     params.radius_max);
  world.cylinders.reserve(count);
  for (int i = 0; i < count; ++i) {
    Cylinder c;
    c.radius = radius_dist(rng);
    // Keep the whole disk inside the box footprint.
    std::uniform_real_distribution<double> x_dist(
        params.box.min.x() + c.radius, params.box.max.x() - c.radius);
    std::uniform_real_distribution<double> y_dist(
        params.box.min.y() + c.radius, params.box.max.y() - c.radius);
    c.center = {x_dist(rng), y_dist(rng)};
    c.z_min = params.box.min.z();
    c.z_max = params.box.max.z();
    world.cylinders.push_back(c);
  }
  return world;
}

}  // namespace replan::sim
