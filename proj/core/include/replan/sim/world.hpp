#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace replan::sim {

struct Box {
  Eigen::Vector3d min = Eigen::Vector3d::Zero();
  Eigen::Vector3d max = Eigen::Vector3d::Zero();

  Eigen::Vector3d extent() const { return max - min; }
  bool contains(const Eigen::Vector3d& p) const {
    return (p.array() >= min.array()).all() && (p.array() <= max.array()).all();
  }
};

/// Vertical cylinder standing on the box floor.
struct Cylinder {
  Eigen::Vector2d center = Eigen::Vector2d::Zero();  // xy of the axis
  double radius = 0.0;
  double z_min = 0.0;
  double z_max = 0.0;
};

struct Sphere {
  Eigen::Vector3d center = Eigen::Vector3d::Zero();
  double radius = 0.0;
};

/// Ground-truth obstacle world: a bounding box plus primitive obstacles.
/// Distances and ray intersections are analytic; this is the collision and
/// sensing reference, never derived from the reconstructed map.
class World {
 public:
  Box box;
  std::vector<Cylinder> cylinders;
  std::vector<Sphere> spheres;
  std::uint64_t seed = 0;

  static constexpr double kNoObstacle = 1e9;

  bool empty() const { return cylinders.empty() && spheres.empty(); }

  /// Signed distance to the nearest obstacle surface (negative inside);
  /// kNoObstacle when there are no obstacles.
  double distance(const Eigen::Vector3d& p) const;

  /// True when a sphere of the given radius centered at p touches any
  /// obstacle.
  bool collides(const Eigen::Vector3d& p, double radius) const {
    return distance(p) < radius;
  }

  /// Range along the unit direction to the first obstacle surface, or
  /// +infinity past max_range. The origin must be outside all obstacles.
  double raycast(const Eigen::Vector3d& origin, const Eigen::Vector3d& dir,
                 double max_range) const;
};

struct ForestParams {
  Box box = {{0.0, 0.0, 0.0}, {10.0, 10.0, 10.0}};
  double density = 0.1;  // trees per m^2 of floor area (Poisson mean)
  double radius_min = 0.2;
  double radius_max = 0.5;
};

/// Poisson-count, uniformly placed vertical cylinders spanning the box
/// height; deterministic per seed. Throws std::invalid_argument for
/// infeasible parameters (radii that cannot fit, saturating density).
World generate_forest(std::uint64_t seed, const ForestParams& params);

}  // namespace replan::sim
