#pragma once

#include <array>
#include <cmath>

#include "tomomorph/se3.hpp"
#include "tomomorph/volume.hpp"

namespace tomomorph {

/// Trilinear interpolation weights for one continuous coordinate.
/// Coordinates within 1e-9 of a lattice node snap to it so that
/// lattice-preserving transforms reproduce voxel values exactly.
struct TrilinearCell {
  int base[3];        // lower corner (may be out of bounds)
  double frac[3];     // fractional offsets in [0, 1)
};

inline TrilinearCell trilinear_cell(double px, double py, double pz) {
  TrilinearCell c;
  const double p[3] = {px, py, pz};
  for (int a = 0; a < 3; ++a) {
    double r = std::round(p[a]);
    double v = (std::abs(p[a] - r) < 1e-9) ? r : p[a];
    double fl = std::floor(v);
    c.base[a] = static_cast<int>(fl);
    c.frac[a] = v - fl;
  }
  return c;
}

/// Trilinear sample with zero padding outside [0, d-1]^3.
double trilinear_sample(const Volume& v, double px, double py, double pz);

/// output(x) = v(T^{-1} x) with T = rotate about the volume center, then
/// translate. Non-differentiable counterpart of the trainer's grid sampler;
/// both share trilinear_cell so their values agree exactly.
Volume resample_rigid(const Volume& v, const RigidTransform& t);

}  // namespace tomomorph
