#include "tomomorph/resample.hpp"

namespace tomomorph {

double trilinear_sample(const Volume& v, double px, double py, double pz) {
  const TrilinearCell c = trilinear_cell(px, py, pz);
  double acc = 0.0;
  for (int dz = 0; dz < 2; ++dz) {
    const int z = c.base[2] + dz;
    if (z < 0 || z >= v.d) continue;
    const double wz = dz ? c.frac[2] : 1.0 - c.frac[2];
    if (wz == 0.0) continue;
    for (int dy = 0; dy < 2; ++dy) {
      const int y = c.base[1] + dy;
      if (y < 0 || y >= v.d) continue;
      const double wy = dy ? c.frac[1] : 1.0 - c.frac[1];
      if (wy == 0.0) continue;
      for (int dx = 0; dx < 2; ++dx) {
        const int x = c.base[0] + dx;
        if (x < 0 || x >= v.d) continue;
        const double wx = dx ? c.frac[0] : 1.0 - c.frac[0];
        if (wx == 0.0) continue;
        acc += wz * wy * wx * v.at(x, y, z);
      }
    }
  }
  return acc;
}

Volume resample_rigid(const Volume& v, const RigidTransform& t) {
  Volume out(v.d, v.voxel_size);
  const RotationMatrix rt = t.rotation.transpose();
  const double c = v.center();
  const Vec3 cv(c, c, c);
  for (int z = 0; z < v.d; ++z)
    for (int y = 0; y < v.d; ++y)
      for (int x = 0; x < v.d; ++x) {
        // T^{-1}(x) = R^T (x - c - t) + c
        const Vec3 p = rt * (Vec3(x, y, z) - cv - t.translation) + cv;
        out.at(x, y, z) = trilinear_sample(v, p.x(), p.y(), p.z());
      }
  return out;
}

}  // namespace tomomorph
