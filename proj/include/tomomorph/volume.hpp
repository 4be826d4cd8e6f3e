#pragma once

#include <cstddef>
#include <vector>

#include "tomomorph/errors.hpp"

namespace tomomorph {

/// Cubic scalar field of d*d*d voxels. Data is stored x-fastest (the MRC
/// convention): index = (z*d + y)*d + x. voxel_size is in Angstrom.
struct Volume {
  int d = 0;
  double voxel_size = 1.0;
  std::vector<double> data;

  Volume() = default;
  Volume(int d_, double voxel_size_)
      : d(d_), voxel_size(voxel_size_), data(static_cast<std::size_t>(d_) * d_ * d_, 0.0) {
    require(d_ >= 2, Errc::InvalidArgument, "volume edge must be >= 2 voxels");
    require(voxel_size_ > 0.0, Errc::InvalidArgument, "voxel size must be positive");
  }

  std::size_t size() const { return data.size(); }

  double& at(int x, int y, int z) {
    return data[(static_cast<std::size_t>(z) * d + y) * d + x];
  }
  double at(int x, int y, int z) const {
    return data[(static_cast<std::size_t>(z) * d + y) * d + x];
  }

  /// Geometric center in voxel coordinates; rotations pivot here.
  double center() const { return (d - 1) / 2.0; }

  bool same_shape(const Volume& o) const { return d == o.d; }

  /// Full invariant check (finite values, consistent sizes). O(n), intended
  /// for API boundaries such as file IO, not inner loops.
  void validate() const;
};

double mean(const Volume& v);
/// Population variance (divides by n).
double variance(const Volume& v);

/// (v - mean) / stddev. Throws ZeroVariance on (near-)constant input.
Volume standardize(const Volume& v);

/// Soft-edged spherical mask about the volume center: weight 1 inside
/// radius-edge_width, 0 outside radius, raised cosine in between.
Volume spherical_mask(const Volume& v, double radius, double edge_width);

/// The mask weights themselves (for support checks and reuse).
std::vector<double> spherical_mask_weights(int d, double radius, double edge_width);

}  // namespace tomomorph
