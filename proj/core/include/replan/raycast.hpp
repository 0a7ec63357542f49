#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace replan {

/// Visits every voxel pierced by the segment between the centers of a and b,
/// in order from a to b. Traversal is exact: plane crossings are compared in
/// integer arithmetic, and a crossing shared by several axes advances all of
/// them at once, so voxels the segment only grazes at a corner or edge are
/// not visited.
template <typename Visitor>
void raycast_visit(const Eigen::Vector3i& a, const Eigen::Vector3i& b,
                   Visitor&& visit) {
  using std::int64_t;
  Eigen::Vector3i cur = a;
  visit(cur);
  if (a == b) return;

  // Doubled coordinates: centers are odd integers, voxel faces even.
  int64_t dir[3], num[3], den[3];
  int step[3];
  for (int axis = 0; axis < 3; ++axis) {
    dir[axis] = 2 * (static_cast<int64_t>(b(axis)) - a(axis));
    step[axis] = dir[axis] > 0 ? 1 : (dir[axis] < 0 ? -1 : 0);
    den[axis] = dir[axis] > 0 ? dir[axis] : -dir[axis];
    num[axis] = den[axis] > 0 ? 1 : 0;  // first face is 1 doubled unit away
  }

  while (cur != b) {
    // Smallest crossing parameter num/den among active axes.
    int best = -1;
    for (int axis = 0; axis < 3; ++axis) {
      if (step[axis] == 0) continue;
      if (best < 0 || num[axis] * den[best] < num[best] * den[axis])
        best = axis;
    }
    // Advance every axis whose crossing ties the minimum.
    for (int axis = 0; axis < 3; ++axis) {
      if (step[axis] == 0) continue;
      if (num[axis] * den[best] == num[best] * den[axis] && axis != best) {
        cur(axis) += step[axis];
        num[axis] += 2;
      }
    }
    cur(best) += step[best];
    num[best] += 2;
    visit(cur);
  }
}

/// Convenience form collecting the visited chain.
std::vector<Eigen::Vector3i> raycast_indices(const Eigen::Vector3i& a,
                                             const Eigen::Vector3i& b);

}  // namespace replan
