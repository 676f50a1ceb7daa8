#pragma once

#include "clifflines/linalg.hpp"

#include <span>
#include <string>

namespace clifflines {

// "Circle" in the inclusive sense: a Euclidean circle, a straight line, or
// a single point.
enum class CircleKind { point, line, circle };

const char* to_string(CircleKind kind);

inline constexpr double kDefaultCircleTolerance = 1e-8;
// Fitted radius beyond this multiple of the data diameter reports as a line.
inline constexpr double kLineRadiusRatio = 1e8;

struct CircleClassification {
  CircleKind kind = CircleKind::point;
  Vec anchor;  // centroid of the input
  Vec center;  // circle only
  double radius = 0.0;  // circle only
  // Circle: orthonormal 2-frame (n x 2). Line: unit direction (n x 1).
  Mat plane;
  double residual = 0.0;  // max orthogonal deviation, absolute
  double scale = 0.0;  // data diameter used to normalize residual

  double relative_residual() const { return scale > 0 ? residual / scale : residual; }
};

/// Decides point / line / circle for a finite point set, within `tol`
/// relative to the data diameter. Throws EmptyInput, or NotACircle when the
/// points leave every affine 2-plane or stray from the fitted circle.
CircleClassification classify_points(std::span<const Vec> points,
                                     double tol = kDefaultCircleTolerance);

/// Same kind and same parameters within `tol` (centers and radii relative to
/// the larger radius; lines and planes compared by principal angles).
bool same_circle(const CircleClassification& a, const CircleClassification& b,
                 double tol);

}  // namespace clifflines
