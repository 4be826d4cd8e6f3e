#pragma once

#include <Eigen/Dense>

#include "tomomorph/errors.hpp"
#include "tomomorph/rng.hpp"

namespace tomomorph {

using RotationMatrix = Eigen::Matrix3d;
using Vec3 = Eigen::Vector3d;

/// Continuous 6-parameter rotation representation: two unnormalized
/// 3-vectors orthonormalized by Gram-Schmidt.
struct S2S2Params {
  Vec3 a1{1, 0, 0};
  Vec3 a2{0, 1, 0};
};

/// Axis-angle 3-vector: direction = axis, norm = angle in radians.
using AxisAngleVec = Vec3;

/// Rigid transform acting on volumes: active rotation about the volume
/// center followed by a translation in voxel units.
struct RigidTransform {
  RotationMatrix rotation = RotationMatrix::Identity();
  Vec3 translation = Vec3::Zero();

  static RigidTransform identity() { return {}; }
};

bool is_rotation(const RotationMatrix& r, double tol = 1e-6);

/// Gram-Schmidt: b1 = a1/|a1|, b2 = normalized rejection of a2 on b1,
/// b3 = b1 x b2, columns [b1 b2 b3]. Throws DegenerateFrame when a1 is
/// (near) zero or a1, a2 are (near) parallel.
RotationMatrix s2s2_to_rotation(const S2S2Params& p);

/// Rodrigues formula; the zero vector maps to the identity.
RotationMatrix axis_angle_to_rotation(const AxisAngleVec& v);

/// Axis-angle components uniform in [-pi/2, pi/2] (the wide training phase).
/// Component-uniform sampling, not Haar.
RotationMatrix sample_rotation_wide(Rng& rng);

/// Axis-angle components uniform in [-pi/6, pi/6] (the late training phase).
RotationMatrix sample_rotation_near_identity(Rng& rng);

/// Haar-uniform rotation via a uniform unit quaternion. Used for ground
/// truth poses and available for sampling-schedule ablations.
RotationMatrix sample_rotation_haar(Rng& rng);

/// Each component uniform in [-bound, bound] voxels.
Vec3 sample_translation(Rng& rng, double bound);

/// Geodesic distance (rotation angle of r1^T r2) in radians.
double rotation_distance(const RotationMatrix& r1, const RotationMatrix& r2);

/// Composition under the center-rotate-then-translate convention:
/// applying the result equals applying t2 first, then t1.
RigidTransform compose(const RigidTransform& t1, const RigidTransform& t2);

RigidTransform invert(const RigidTransform& t);

/// Rotation about the z axis by angle, zero translation.
RigidTransform inplane_rotation(double angle);

/// Point action x -> R(x - c) + c + t about pivot c.
Vec3 apply_to_point(const RigidTransform& t, const Vec3& x, const Vec3& c);

}  // namespace tomomorph
