#pragma once

#include <complex>
#include <vector>

#include "tomomorph/volume.hpp"

namespace tomomorph {

/// Centered (fftshifted) complex spectrum of a cubic volume. The coefficient
/// for integer frequency (kx,ky,kz), each in [-d/2, d/2), lives at array
/// index ((kz+d/2)*d + (ky+d/2))*d + (kx+d/2). Forward transform is
/// unnormalized; the inverse carries the 1/d^3 factor, so Parseval reads
/// sum(v^2) == sum(|F|^2)/d^3.
struct Spectrum {
  int d = 0;
  double voxel_size = 1.0;
  std::vector<std::complex<double>> coeffs;

  std::size_t size() const { return coeffs.size(); }
  std::complex<double>& at(int ix, int iy, int iz) {
    return coeffs[(static_cast<std::size_t>(iz) * d + iy) * d + ix];
  }
  std::complex<double> at(int ix, int iy, int iz) const {
    return coeffs[(static_cast<std::size_t>(iz) * d + iy) * d + ix];
  }
  /// Centered integer frequency along one axis for array index i.
  int freq(int i) const { return i - d / 2; }
};

Spectrum dft3(const Volume& v);

/// Inverse transform. Throws HermitianViolation if the imaginary residual of
/// the output exceeds 1e-6 of the output norm.
Volume idft3(const Spectrum& s);

/// Hard spherical low-pass at 1/resolution cycles per Angstrom. A cutoff at
/// (or numerically at) Nyquist keeps every coefficient, corners included.
Volume lowpass_filter(const Volume& v, double resolution);

/// Downsample by keeping the central d_out^3 block of the centered spectrum.
/// voxel_size scales by d/d_out; the mean is preserved.
Volume fourier_crop(const Volume& v, int d_out);

}  // namespace tomomorph
