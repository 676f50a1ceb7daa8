#include "clifflines/circle.hpp"

#include "clifflines/error.hpp"

#include <algorithm>
#include <cmath>

namespace clifflines {

const char* to_string(CircleKind kind) {
  switch (kind) {
    case CircleKind::point: return "point";
    case CircleKind::line: return "line";
    case CircleKind::circle: return "circle";
  }
  return "?";
}

namespace {

// Flip so the largest-magnitude entry is positive; keeps output stable.
Vec canonical_sign(Vec v) {
  Eigen::Index idx = 0;
  v.cwiseAbs().maxCoeff(&idx);
  return v[idx] < 0 ? Vec(-v) : v;
}

double diameter_of(std::span<const Vec> points) {
  double d2 = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      d2 = std::max(d2, (points[i] - points[j]).squaredNorm());
  return std::sqrt(d2);
}

// sin of the largest principal angle between the column spans of two
// orthonormal frames of equal width.
double subspace_gap(const Mat& a, const Mat& b) {
  const Mat off = b - a * (a.transpose() * b);
  Eigen::JacobiSVD<Mat> svd(off);
  return svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
}

}  // namespace

CircleClassification classify_points(std::span<const Vec> points, double tol) {
  if (points.empty()) throw EmptyInput();
  if (!(tol > 0)) throw InvalidArgument("tolerance must be positive");
  const Eigen::Index n = points[0].size();
  for (const Vec& p : points)
    if (p.size() != n) throw DimensionMismatch("points have different dimensions");
  const auto m = static_cast<Eigen::Index>(points.size());

  CircleClassification out;
  out.anchor = Vec::Zero(n);
  for (const Vec& p : points) out.anchor += p;
  out.anchor /= static_cast<double>(m);

  double max_norm = 0.0;
  double spread = 0.0;
  for (const Vec& p : points) {
    max_norm = std::max(max_norm, p.norm());
    spread = std::max(spread, (p - out.anchor).norm());
  }
  const double diameter = diameter_of(points);

  if (diameter == 0.0 || diameter <= tol * max_norm) {
    out.kind = CircleKind::point;
    out.residual = spread;
    out.scale = max_norm;
    return out;
  }
  out.scale = diameter;

  Mat centered(n, m);
  for (Eigen::Index k = 0; k < m; ++k) centered.col(k) = points[k] - out.anchor;
  Eigen::JacobiSVD<Mat> svd(centered, Eigen::ComputeThinU);
  const Mat& u = svd.matrixU();
  const Vec u1 = canonical_sign(u.col(0));

  double line_residual = 0.0;
  for (Eigen::Index k = 0; k < m; ++k) {
    const Vec x = centered.col(k);
    line_residual = std::max(line_residual, (x - x.dot(u1) * u1).norm());
  }
  auto as_line = [&](double residual) {
    out.kind = CircleKind::line;
    out.plane = u1;
    out.residual = residual;
    return out;
  };
  if (line_residual <= tol * diameter || u.cols() < 2) return as_line(line_residual);

  const Vec u2 = canonical_sign(u.col(1));
  Mat frame(n, 2);
  frame << u1, u2;

  // In-plane coordinates scaled to unit diameter.
  Mat coords = frame.transpose() * centered / diameter;
  Vec off_plane(m);
  for (Eigen::Index k = 0; k < m; ++k)
    off_plane[k] = (centered.col(k) - frame * (frame.transpose() * centered.col(k))).norm();
  const double plane_residual = off_plane.maxCoeff();
  if (plane_residual > tol * diameter)
    throw NotACircle(plane_residual, diameter, "points do not lie in an affine 2-plane");

  // Algebraic fit a|y|^2 + b.y + d = 0, normalized so |b|^2 - 4ad = 1. Then
  // a = 1/(2R) and the signed distance to the curve is 2F / (1 + sqrt(1 + 4aF)),
  // which stays accurate as a -> 0 (the line limit).
  Mat design(std::max<Eigen::Index>(m, 4), 4);
  design.setZero();
  for (Eigen::Index k = 0; k < m; ++k) {
    const double y1 = coords(0, k);
    const double y2 = coords(1, k);
    design.row(k) << y1 * y1 + y2 * y2, y1, y2, 1.0;
  }
  Eigen::JacobiSVD<Mat> fit(design, Eigen::ComputeFullV);
  Eigen::Vector4d v = fit.matrixV().col(3);
  const double disc = v[1] * v[1] + v[2] * v[2] - 4.0 * v[0] * v[3];
  if (!(disc > 0.0))
    throw NotACircle(plane_residual, diameter, "degenerate conic in circle fit");
  v /= std::sqrt(disc);
  if (v[0] < 0) v = -v;

  double residual = 0.0;
  for (Eigen::Index k = 0; k < m; ++k) {
    const double y1 = coords(0, k);
    const double y2 = coords(1, k);
    const double f = v[0] * (y1 * y1 + y2 * y2) + v[1] * y1 + v[2] * y2 + v[3];
    const double dist = 2.0 * f / (1.0 + std::sqrt(std::max(0.0, 1.0 + 4.0 * v[0] * f)));
    residual = std::max(residual, std::hypot(dist * diameter, off_plane[k]));
  }
  if (residual > tol * diameter)
    throw NotACircle(residual, diameter, "points deviate from the best-fit circle");

  if (v[0] * 2.0 * kLineRadiusRatio <= 1.0) return as_line(line_residual);

  const double radius_unit = 1.0 / (2.0 * v[0]);
  const Eigen::Vector2d center_unit(-v[1] * radius_unit, -v[2] * radius_unit);
  out.kind = CircleKind::circle;
  out.center = out.anchor + diameter * (frame * center_unit);
  out.radius = diameter * radius_unit;
  out.plane = frame;
  out.residual = residual;
  return out;
}

bool same_circle(const CircleClassification& a, const CircleClassification& b,
                 double tol) {
  if (a.kind != b.kind) return false;
  if (a.anchor.size() != b.anchor.size()) return false;
  switch (a.kind) {
    case CircleKind::point: {
      const double ref = std::max({a.scale, b.scale, a.anchor.norm(), b.anchor.norm()});
      return (a.anchor - b.anchor).norm() <= tol * ref;
    }
    case CircleKind::line: {
      if (subspace_gap(a.plane, b.plane) > tol) return false;
      const Vec dir = a.plane.col(0);
      const Vec offset = b.anchor - a.anchor;
      const double ref = std::max(a.scale, b.scale);
      return (offset - offset.dot(dir) * dir).norm() <= tol * ref;
    }
    case CircleKind::circle: {
      const double ref = std::max(a.radius, b.radius);
      return std::abs(a.radius - b.radius) <= tol * ref &&
             (a.center - b.center).norm() <= tol * ref &&
             subspace_gap(a.plane, b.plane) <= tol;
    }
  }
  return false;
}

}  // namespace clifflines
