#include "tomomorph/se3.hpp"

#include <cmath>
#include <numbers>

namespace tomomorph {

bool is_rotation(const RotationMatrix& r, double tol) {
  const RotationMatrix rtr = r.transpose() * r;
  return (rtr - RotationMatrix::Identity()).cwiseAbs().maxCoeff() <= tol &&
         std::abs(r.determinant() - 1.0) <= tol;
}

RotationMatrix s2s2_to_rotation(const S2S2Params& p) {
  const double n1 = p.a1.norm();
  require(n1 > 1e-12, Errc::DegenerateFrame, "s2s2: first vector is (near) zero");
  const Vec3 b1 = p.a1 / n1;
  const Vec3 u2 = p.a2 - p.a2.dot(b1) * b1;
  const double n2 = u2.norm();
  // Rejection norm = |a2| sin(angle between a1 and a2).
  require(n2 > 1e-6 * p.a2.norm() && n2 > 1e-12, Errc::DegenerateFrame,
          "s2s2: vectors are (near) parallel");
  const Vec3 b2 = u2 / n2;
  const Vec3 b3 = b1.cross(b2);
  RotationMatrix r;
  r.col(0) = b1;
  r.col(1) = b2;
  r.col(2) = b3;
  return r;
}

RotationMatrix axis_angle_to_rotation(const AxisAngleVec& v) {
  const double angle = v.norm();
  if (angle < 1e-12) return RotationMatrix::Identity();
  const Vec3 axis = v / angle;
  Eigen::Matrix3d k;
  k << 0, -axis.z(), axis.y(), axis.z(), 0, -axis.x(), -axis.y(), axis.x(), 0;
  return RotationMatrix::Identity() + std::sin(angle) * k + (1.0 - std::cos(angle)) * k * k;
}

namespace {
RotationMatrix sample_axis_angle_box(Rng& rng, double half_range) {
  AxisAngleVec v;
  for (int i = 0; i < 3; ++i) v[i] = rng.uniform(-half_range, half_range);
  return axis_angle_to_rotation(v);
}
}  // namespace

RotationMatrix sample_rotation_wide(Rng& rng) {
  return sample_axis_angle_box(rng, std::numbers::pi / 2.0);
}

RotationMatrix sample_rotation_near_identity(Rng& rng) {
  return sample_axis_angle_box(rng, std::numbers::pi / 6.0);
}

RotationMatrix sample_rotation_haar(Rng& rng) {
  // Uniform unit quaternion from four normals.
  double q[4];
  double n2 = 0.0;
  do {
    n2 = 0.0;
    for (double& c : q) {
      c = rng.normal();
      n2 += c * c;
    }
  } while (n2 < 1e-12);
  const double inv = 1.0 / std::sqrt(n2);
  const double w = q[0] * inv, x = q[1] * inv, y = q[2] * inv, z = q[3] * inv;
  RotationMatrix r;
  r << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
       2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
       2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
  return r;
}

Vec3 sample_translation(Rng& rng, double bound) {
  require(bound >= 0.0, Errc::InvalidArgument, "translation bound must be >= 0");
  Vec3 t;
  for (int i = 0; i < 3; ++i) t[i] = bound == 0.0 ? 0.0 : rng.uniform(-bound, bound);
  return t;
}

double rotation_distance(const RotationMatrix& r1, const RotationMatrix& r2) {
  const double tr = (r1.transpose() * r2).trace();
  const double c = std::clamp((tr - 1.0) / 2.0, -1.0, 1.0);
  return std::acos(c);
}

// With pivot c: T(x) = R(x-c) + c + t. Composing T1(T2(x)) gives rotation
// R1 R2 and translation R1 t2 + t1.
RigidTransform compose(const RigidTransform& t1, const RigidTransform& t2) {
  RigidTransform out;
  out.rotation = t1.rotation * t2.rotation;
  out.translation = t1.rotation * t2.translation + t1.translation;
  return out;
}

RigidTransform invert(const RigidTransform& t) {
  RigidTransform out;
  out.rotation = t.rotation.transpose();
  out.translation = -(t.rotation.transpose() * t.translation);
  return out;
}

RigidTransform inplane_rotation(double angle) {
  RigidTransform out;
  const double c = std::cos(angle), s = std::sin(angle);
  out.rotation << c, -s, 0, s, c, 0, 0, 0, 1;
  return out;
}

Vec3 apply_to_point(const RigidTransform& t, const Vec3& x, const Vec3& c) {
  return t.rotation * (x - c) + c + t.translation;
}

}  // namespace tomomorph
