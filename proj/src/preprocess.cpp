#include "tomomorph/preprocess.hpp"

#include "tomomorph/fourier.hpp"

namespace tomomorph {

Volume preprocess(const Volume& v, const PreprocessConfig& c) {
  c.validate();
  require(v.d >= c.box_out, Errc::InvalidTargetSize,
          "input volume is smaller than the preprocess output box");
  Volume out = lowpass_filter(v, c.target_resolution);
  out = fourier_crop(out, c.box_out);
  out = standardize(out);
  out = spherical_mask(out, c.mask_radius, c.mask_edge);
  return out;
}

}  // namespace tomomorph
