#include "doctest.h"

#include "clifflines/circle.hpp"
#include "clifflines/error.hpp"
#include "clifflines/random.hpp"
#include "support/oracles.hpp"

#include <cmath>
#include <complex>
#include <numbers>

using namespace clifflines;

namespace {

std::vector<Vec> sample_circle(const Vec& center, double radius, const Mat& frame, int m,
                               double noise, Rng& rng, double arc = 2 * std::numbers::pi) {
  std::vector<Vec> pts;
  for (int k = 0; k < m; ++k) {
    const double th = arc * k / m;
    Vec p = center + radius * (std::cos(th) * frame.col(0) + std::sin(th) * frame.col(1));
    if (noise > 0) p += noise * rng.normal_vec(center.size());
    pts.push_back(p);
  }
  return pts;
}

}  // namespace

TEST_CASE("points") {
  const std::vector<Vec> same(50, Vec::Constant(3, 1.5));
  const auto c = classify_points(same);
  CHECK(c.kind == CircleKind::point);
  CHECK((c.anchor - Vec::Constant(3, 1.5)).norm() == 0.0);
  CHECK(classify_points(std::vector<Vec>(5, Vec::Zero(4))).kind == CircleKind::point);
  CHECK(classify_points(std::vector<Vec>{Vec::Ones(2)}).kind == CircleKind::point);
}

TEST_CASE("lines") {
  Vec v(4);
  v << 1, -2, 0.5, 3;
  std::vector<Vec> pts;
  for (int k = -10; k <= 10; ++k) pts.push_back(0.3 * k * v);
  const auto c = classify_points(pts);
  REQUIRE(c.kind == CircleKind::line);
  CHECK(std::abs(std::abs(c.plane.col(0).dot(v.normalized())) - 1.0) < 1e-14);
  CHECK(c.relative_residual() < 1e-14);
  // two distinct points are collinear
  CHECK(classify_points(std::vector<Vec>{Vec::Zero(3), Vec::Ones(3)}).kind == CircleKind::line);
}

TEST_CASE("unit circle in R^4") {
  std::vector<Vec> pts;
  for (int k = 0; k < 40; ++k) {
    const double t = 2 * std::numbers::pi * k / 40;
    Vec p(4);
    p << std::cos(t), std::sin(t), 0, 0;
    pts.push_back(p);
  }
  const auto c = classify_points(pts);
  REQUIRE(c.kind == CircleKind::circle);
  CHECK(c.center.norm() < 1e-14);
  CHECK(c.radius == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(c.residual < 1e-12);
  // every point within residual of the circle and of the plane
  for (const auto& p : pts) CHECK(std::abs((p - c.center).norm() - c.radius) <= c.residual + 1e-15);
}

TEST_CASE("Moebius image of a real line is a circle") {
  // x -> (x c + d)^-1 (x a + b) over C with c = 1, d = i, a = 1, b = 0
  const std::complex<double> c0{1, 0}, d0{0, 1}, a0{1, 0}, b0{0, 0};
  std::vector<Vec> pts;
  for (int k = -30; k <= 30; ++k) {
    const std::complex<double> x{0.2 * k, 0.0};
    const auto y = (x * a0 + b0) / (x * c0 + d0);
    Vec p(2);
    p << y.real(), y.imag();
    pts.push_back(p);
  }
  const auto c = classify_points(pts, 1e-10);
  REQUIRE(c.kind == CircleKind::circle);
  // x / (x + i) = x (x - i) / (x^2 + 1): circle through 0 and 1 centred at 1/2
  CHECK((c.center - Eigen::Vector2d(0.5, 0)).norm() < 1e-12);
  CHECK(c.radius == doctest::Approx(0.5).epsilon(1e-12));
  const auto [oc, orad] = oracle::circumcircle(pts[0], pts[20], pts[50]);
  CHECK((oc - c.center).norm() < 1e-12);
  CHECK(orad == doctest::Approx(c.radius).epsilon(1e-12));
}

TEST_CASE("failures") {
  CHECK_THROWS_AS(classify_points(std::vector<Vec>{}), EmptyInput);
  std::vector<Vec> tetra = {Vec::Zero(3), Vec::Unit(3, 0), Vec::Unit(3, 1), Vec::Unit(3, 2)};
  CHECK_THROWS_AS(classify_points(tetra), NotACircle);
  // coplanar but off the circle: a square plus its center
  std::vector<Vec> square;
  for (auto [x, y] : {std::pair{1., 1.}, {1., -1.}, {-1., -1.}, {-1., 1.}, {0., 0.}}) {
    Vec p(2);
    p << x, y;
    square.push_back(p);
  }
  CHECK_THROWS_AS(classify_points(square), NotACircle);
  CHECK_THROWS_AS(classify_points(tetra, 0.0), InvalidArgument);
  CHECK_THROWS_AS(classify_points(std::vector<Vec>{Vec::Zero(2), Vec::Zero(3)}), DimensionMismatch);
}

TEST_CASE("huge circles report as lines") {
  // unit-length arc of radius 2e8: the sagitta (~6e-10) is above tol, the
  // radius above the line threshold
  const double radius = 2e8;
  std::vector<Vec> pts;
  for (int k = -15; k <= 15; ++k) {
    const double th = (k / 30.0) / radius;
    Vec p(3);
    p << radius * std::sin(th), 2.0 * radius * std::pow(std::sin(0.5 * th), 2), 0.0;
    pts.push_back(p);
  }
  const auto c = classify_points(pts, 1e-10);
  CHECK(c.kind == CircleKind::line);
  CHECK(std::abs(c.plane(0, 0)) == doctest::Approx(1.0));
}

TEST_CASE("rigid motions preserve the classification") {
  Rng rng(52);
  for (int t = 0; t < 30; ++t) {
    const int n = 2 + static_cast<int>(rng.next() % 8);
    const Mat frame = rng.orthogonal(n).leftCols(2);
    const auto pts = sample_circle(rng.normal_vec(n), rng.uniform(0.1, 10), frame, 24, 0.0, rng, 4.0);
    const auto c = classify_points(pts);
    REQUIRE(c.kind == CircleKind::circle);

    const Mat rot = rng.orthogonal(n);
    const Vec shift = rng.normal_vec(n);
    std::vector<Vec> moved;
    for (const auto& p : pts) moved.push_back(rot * p + shift);
    const auto m = classify_points(moved);
    REQUIRE(m.kind == CircleKind::circle);
    CHECK((m.center - (rot * c.center + shift)).norm() < 1e-10 * c.radius);
    CHECK(m.radius == doctest::Approx(c.radius).epsilon(1e-10));
    CHECK(m.residual <= 2 * c.residual + 1e-14 * c.scale);
  }
}

TEST_CASE("noisy circles recover parameters to O(noise)") {
  Rng rng(53);
  for (int t = 0; t < 30; ++t) {
    const int n = 2 + static_cast<int>(rng.next() % 15);
    const Mat frame = rng.orthogonal(n).leftCols(2);
    const Vec center = rng.normal_vec(n);
    const double radius = rng.uniform(0.5, 3.0);
    const double noise = 1e-7;
    const auto pts = sample_circle(center, radius, frame, 64, noise, rng);
    const auto c = classify_points(pts, 1e-5);
    REQUIRE(c.kind == CircleKind::circle);
    CHECK((c.center - center).norm() < 100 * noise);
    CHECK(std::abs(c.radius - radius) < 100 * noise);
  }
}

TEST_CASE("classification is deterministic") {
  Rng rng(54);
  const Mat frame = rng.orthogonal(5).leftCols(2);
  const auto pts = sample_circle(rng.normal_vec(5), 2.0, frame, 64, 1e-12, rng);
  const auto a = classify_points(pts);
  const auto b = classify_points(pts);
  CHECK(a.center == b.center);
  CHECK(a.radius == b.radius);
  CHECK(a.plane == b.plane);
  CHECK(a.residual == b.residual);
}

TEST_CASE("same_circle") {
  Rng rng(55);
  Mat frame(3, 2);
  frame << 1, 0, 0, 1, 0, 0;
  const auto a = classify_points(sample_circle(Vec::Zero(3), 1.0, frame, 16, 0, rng));
  CHECK(same_circle(a, a, 1e-9));

  // frame rotated within its plane: same set
  Mat turned(3, 2);
  turned << std::cos(0.7), -std::sin(0.7), std::sin(0.7), std::cos(0.7), 0, 0;
  const auto b = classify_points(sample_circle(Vec::Zero(3), 1.0, turned, 16, 0, rng));
  CHECK(same_circle(a, b, 1e-9));

  const double tol = 1e-6;
  const auto big = classify_points(sample_circle(Vec::Zero(3), 1.0 + 10 * tol, frame, 16, 0, rng));
  CHECK_FALSE(same_circle(a, big, tol));

  Mat tilted(3, 2);
  tilted << 1, 0, 0, std::cos(1e-3), 0, std::sin(1e-3);
  const auto tilt = classify_points(sample_circle(Vec::Zero(3), 1.0, tilted, 16, 0, rng));
  CHECK_FALSE(same_circle(a, tilt, tol));

  std::vector<Vec> line;
  for (int k = 0; k < 5; ++k) line.push_back(k * Vec::Unit(3, 0));
  CHECK_FALSE(same_circle(a, classify_points(line), tol));
  std::vector<Vec> line2;
  for (int k = 0; k < 5; ++k) line2.push_back(-2.0 * k * Vec::Unit(3, 0));
  CHECK(same_circle(classify_points(line), classify_points(line2), tol));
}
