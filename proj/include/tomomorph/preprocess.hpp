#pragma once

#include "tomomorph/volume.hpp"

namespace tomomorph {

struct PreprocessConfig {
  double target_resolution = 15.0;  // Angstrom
  int box_out = 48;
  double mask_radius = 24.0;  // voxels
  double mask_edge = 3.0;     // voxels

  void validate() const {
    require(box_out >= 16, Errc::InvalidConfig, "preprocess box_out must be >= 16");
    require(mask_radius > 0.0 && mask_radius <= box_out / 2.0, Errc::InvalidConfig,
            "mask_radius must be in (0, box_out/2]");
    require(mask_edge >= 0.0, Errc::InvalidConfig, "mask_edge must be >= 0");
    require(target_resolution > 0.0, Errc::InvalidConfig, "target_resolution must be > 0");
  }
};

/// Fixed chain: low-pass to target_resolution, Fourier-crop to box_out,
/// standardize, then soft spherical mask. The order is load-bearing: the
/// output is standardized before masking and not re-standardized after.
Volume preprocess(const Volume& v, const PreprocessConfig& c);

}  // namespace tomomorph
