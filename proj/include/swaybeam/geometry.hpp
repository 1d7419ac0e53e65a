#pragma once

#include <utility>

#include "swaybeam/rng.hpp"

namespace swaybeam {

struct Point2D {
  double x = 0.0;
  double y = 0.0;
};

// Per-node sway limits in meters. West/south are magnitudes of the negative
// excursion, east/north of the positive one.
struct DisplacementBounds {
  double x_west = 0.0;
  double x_east = 0.0;
  double y_south = 0.0;
  double y_north = 0.0;

  bool valid() const {
    return x_west >= 0.0 && x_east >= 0.0 && y_south >= 0.0 && y_north >= 0.0;
  }
};

// A node's displacement from its installation anchor plus the resulting
// global-frame coordinates. Node A is anchored at (0, 0); node B at (0, d1)
// with its y displacement pointing back toward A.
struct NodePose {
  double dx = 0.0;
  double dy = 0.0;
  Point2D coords{};

  static NodePose node_a(double dx, double dy) { return {dx, dy, {dx, dy}}; }
  static NodePose node_b(double dx, double dy, double d1) { return {dx, dy, {dx, d1 - dy}}; }
};

struct LosAngleEstimate {
  double aod = 0.0;     // radians, in (0, pi)
  double aoa = 0.0;     // radians, in (pi, 2*pi)
  double g_ratio = 0.0; // in (0, 1]
};

// One uniform displacement draw per axis inside the given bounds.
std::pair<double, double> sample_displacement(const DisplacementBounds& bounds, RandomStream& rng);

// Ratio of the axial separation to the full separation of the two nodes.
// Throws std::invalid_argument when the nodes coincide. The transverse term
// is dx_a + dx_b: each node's x displacement lives in its own frame, mirrored
// about the installation axis.
double g_ratio(const NodePose& pose_a, const NodePose& pose_b, double d1);

// LOS angle of departure seen at node A.
double estimate_aod(const NodePose& pose_a, const NodePose& pose_b, double d1);

// LOS angle of arrival at node B, given the departure angle.
double estimate_aoa(double aod_phi1, const NodePose& pose_a, const NodePose& pose_b);

// Ground-truth LOS angles for the current instant; identical to running the
// estimators on fresh (non-stale) poses.
LosAngleEstimate true_los_angles(const NodePose& pose_a, const NodePose& pose_b, double d1);

}  // namespace swaybeam
