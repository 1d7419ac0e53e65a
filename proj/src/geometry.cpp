#include "swaybeam/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace swaybeam {

std::pair<double, double> sample_displacement(const DisplacementBounds& bounds, RandomStream& rng) {
  const double dx = rng.uniform(-bounds.x_west, bounds.x_east);
  const double dy = rng.uniform(-bounds.y_south, bounds.y_north);
  return {dx, dy};
}

double g_ratio(const NodePose& pose_a, const NodePose& pose_b, double d1) {
  const double axial = d1 - pose_a.dy - pose_b.dy;
  const double transverse = pose_a.dx + pose_b.dx;
  const double separation = std::hypot(transverse, axial);
  if (separation == 0.0) {
    throw std::invalid_argument("g_ratio: node positions coincide");
  }
  return axial / separation;
}

double estimate_aod(const NodePose& pose_a, const NodePose& pose_b, double d1) {
  const double g = g_ratio(pose_a, pose_b, d1);
  return pose_b.dx >= pose_a.dx ? std::asin(g) : std::numbers::pi - std::asin(g);
}

double estimate_aoa(double aod_phi1, const NodePose& pose_a, const NodePose& pose_b) {
  return pose_b.dx >= pose_a.dx ? std::numbers::pi + aod_phi1
                                : 2.0 * std::numbers::pi - aod_phi1;
}

LosAngleEstimate true_los_angles(const NodePose& pose_a, const NodePose& pose_b, double d1) {
  LosAngleEstimate out;
  out.g_ratio = g_ratio(pose_a, pose_b, d1);
  out.aod = estimate_aod(pose_a, pose_b, d1);
  out.aoa = estimate_aoa(out.aod, pose_a, pose_b);
  return out;
}

}  // namespace swaybeam
