#include "clifflines/quaternion.hpp"

#include "clifflines/error.hpp"

#include <cmath>

namespace clifflines {

double Quaternion::norm() const { return std::sqrt(norm2()); }

Quaternion mul(const Quaternion& p, const Quaternion& q) {
  return {
      p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
      p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
      p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
      p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
  };
}

Quaternion inverse(const Quaternion& q, double epsilon) {
  const double n2 = q.norm2();
  if (std::sqrt(n2) < epsilon) throw ZeroQuaternion(std::sqrt(n2));
  return (1.0 / n2) * q.conj();
}

Mat4 left_mul_matrix(const Quaternion& a) {
  Mat4 m;
  // clang-format off
  m << a.w, -a.x, -a.y, -a.z,
       a.x,  a.w, -a.z,  a.y,
       a.y,  a.z,  a.w, -a.x,
       a.z, -a.y,  a.x,  a.w;
  // clang-format on
  return m;
}

Mat4 right_mul_matrix(const Quaternion& a) {
  Mat4 m;
  // clang-format off
  m << a.w, -a.x, -a.y, -a.z,
       a.x,  a.w,  a.z, -a.y,
       a.y, -a.z,  a.w,  a.x,
       a.z,  a.y, -a.x,  a.w;
  // clang-format on
  return m;
}

Vec4 fractional_transform(const AffineQuaternionPair& pair, const Vec4& x,
                          Side side, double epsilon) {
  const Quaternion num = Quaternion::from_vec(pair.a(x));
  const Quaternion den = Quaternion::from_vec(pair.b(x));
  if (den.norm() < epsilon) throw PoleReached(den.norm());
  const Quaternion inv = inverse(den, 0.0);
  return (side == Side::left ? num * inv : inv * num).vec();
}

}  // namespace clifflines
