#pragma once

#include "clifflines/linalg.hpp"

namespace clifflines {

/// Quaternion w + x i + y j + z k. Vector forms always use the basis order
/// (1, i, j, k).
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  static Quaternion from_vec(const Vec4& v) { return {v[0], v[1], v[2], v[3]}; }
  Vec4 vec() const { return {w, x, y, z}; }

  Quaternion conj() const { return {w, -x, -y, -z}; }
  double norm2() const { return w * w + x * x + y * y + z * z; }
  double norm() const;

  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

// Hamilton product.
Quaternion mul(const Quaternion& p, const Quaternion& q);

inline Quaternion operator*(const Quaternion& p, const Quaternion& q) { return mul(p, q); }
inline Quaternion operator+(const Quaternion& p, const Quaternion& q) {
  return {p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z};
}
inline Quaternion operator-(const Quaternion& p, const Quaternion& q) {
  return {p.w - q.w, p.x - q.x, p.y - q.y, p.z - q.z};
}
inline Quaternion operator-(const Quaternion& p) { return {-p.w, -p.x, -p.y, -p.z}; }
inline Quaternion operator*(double s, const Quaternion& q) {
  return {s * q.w, s * q.x, s * q.y, s * q.z};
}

inline constexpr double kDefaultPoleEpsilon = 1e-10;

/// Multiplicative inverse conj(q)/|q|^2. Throws ZeroQuaternion when
/// |q| < epsilon.
Quaternion inverse(const Quaternion& q, double epsilon = kDefaultPoleEpsilon);

/// M with M * vec(x) = vec(a * x).
Mat4 left_mul_matrix(const Quaternion& a);
/// M with M * vec(x) = vec(x * a).
Mat4 right_mul_matrix(const Quaternion& a);

/// Real-affine map R^4 -> R^4, applied as matrix * x + translation.
struct AffineMap4 {
  Mat4 matrix = Mat4::Identity();
  Vec4 translation = Vec4::Zero();

  Vec4 operator()(const Vec4& x) const { return matrix * x + translation; }

  static AffineMap4 identity() { return {}; }
  static AffineMap4 constant(const Quaternion& c) {
    return {Mat4::Zero(), c.vec()};
  }
};

struct AffineQuaternionPair {
  AffineMap4 a;
  AffineMap4 b;
};

enum class Side { left, right };

/// side == left: A(x) B(x)^-1; side == right: B(x)^-1 A(x). Throws
/// PoleReached when |B(x)| < epsilon.
Vec4 fractional_transform(const AffineQuaternionPair& pair, const Vec4& x,
                          Side side, double epsilon = kDefaultPoleEpsilon);

}  // namespace clifflines
