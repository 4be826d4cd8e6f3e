#include "tomomorph/volume.hpp"

#include <cmath>

namespace tomomorph {

void Volume::validate() const {
  require(d >= 2, Errc::InvalidArgument, "volume edge must be >= 2 voxels");
  require(voxel_size > 0.0, Errc::InvalidArgument, "voxel size must be positive");
  require(data.size() == static_cast<std::size_t>(d) * d * d, Errc::ShapeMismatch,
          "volume data size does not match d^3");
  for (double x : data)
    require(std::isfinite(x), Errc::NonFinite, "volume contains non-finite values");
}

double mean(const Volume& v) {
  double s = 0.0;
  for (double x : v.data) s += x;
  return s / static_cast<double>(v.data.size());
}

double variance(const Volume& v) {
  const double m = mean(v);
  double s = 0.0;
  for (double x : v.data) s += (x - m) * (x - m);
  return s / static_cast<double>(v.data.size());
}

Volume standardize(const Volume& v) {
  const double m = mean(v);
  const double var = variance(v);
  require(var > 1e-30, Errc::ZeroVariance, "cannot standardize a constant volume");
  const double inv_sd = 1.0 / std::sqrt(var);
  Volume out = v;
  for (double& x : out.data) x = (x - m) * inv_sd;
  return out;
}

std::vector<double> spherical_mask_weights(int d, double radius, double edge_width) {
  require(radius > 0.0 && radius <= d / 2.0, Errc::InvalidRadius,
          "mask radius must be in (0, d/2]");
  require(edge_width >= 0.0, Errc::InvalidRadius, "mask edge width must be >= 0");
  const double c = (d - 1) / 2.0;
  const double inner = std::max(radius - edge_width, 0.0);
  std::vector<double> w(static_cast<std::size_t>(d) * d * d);
  std::size_t i = 0;
  for (int z = 0; z < d; ++z)
    for (int y = 0; y < d; ++y)
      for (int x = 0; x < d; ++x, ++i) {
        const double r = std::sqrt((x - c) * (x - c) + (y - c) * (y - c) + (z - c) * (z - c));
        double weight;
        if (r <= inner)
          weight = 1.0;
        else if (r >= radius)
          weight = 0.0;
        else
          weight = 0.5 * (1.0 + std::cos(M_PI * (r - inner) / (radius - inner)));
        w[i] = weight;
      }
  return w;
}

Volume spherical_mask(const Volume& v, double radius, double edge_width) {
  const auto w = spherical_mask_weights(v.d, radius, edge_width);
  Volume out = v;
  for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] *= w[i];
  return out;
}

}  // namespace tomomorph
