#include "tomomorph/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>

namespace tomomorph {

namespace {

// FFTW plan creation is not thread-safe and fftw_execute must run on the
// arrays a plan was created with, so all FFT work funnels through one lock
// with cached per-size plans. Volumes are tiny; contention is irrelevant.
struct FftPlans {
  fftw_complex* buf = nullptr;
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
  std::size_t n = 0;
};

std::mutex g_fft_mutex;
std::map<int, FftPlans>& plan_cache() {
  static std::map<int, FftPlans> cache;
  return cache;
}

FftPlans& plans_for(int d) {
  auto& cache = plan_cache();
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  FftPlans p;
  p.n = static_cast<std::size_t>(d) * d * d;
  p.buf = fftw_alloc_complex(p.n);
  p.fwd = fftw_plan_dft_3d(d, d, d, p.buf, p.buf, FFTW_FORWARD, FFTW_ESTIMATE);
  p.bwd = fftw_plan_dft_3d(d, d, d, p.buf, p.buf, FFTW_BACKWARD, FFTW_ESTIMATE);
  return cache.emplace(d, p).first->second;
}

// FFTW natural order <-> centered order. shift = d/2: centered index
// i_c = (i_nat + d/2) mod d.
template <typename Src, typename Dst, typename Fn>
void reorder(int d, const Src& src, Dst& dst, bool to_centered, Fn&& get) {
  const int h = d / 2;
  for (int z = 0; z < d; ++z)
    for (int y = 0; y < d; ++y)
      for (int x = 0; x < d; ++x) {
        const int zc = (z + h) % d, yc = (y + h) % d, xc = (x + h) % d;
        const std::size_t nat = (static_cast<std::size_t>(z) * d + y) * d + x;
        const std::size_t cen = (static_cast<std::size_t>(zc) * d + yc) * d + xc;
        if (to_centered)
          dst[cen] = get(src, nat);
        else
          dst[nat] = get(src, cen);
      }
}

}  // namespace

Spectrum dft3(const Volume& v) {
  Spectrum s;
  s.d = v.d;
  s.voxel_size = v.voxel_size;
  s.coeffs.resize(v.size());

  std::lock_guard<std::mutex> lock(g_fft_mutex);
  auto& p = plans_for(v.d);
  for (std::size_t i = 0; i < p.n; ++i) {
    p.buf[i][0] = v.data[i];
    p.buf[i][1] = 0.0;
  }
  fftw_execute(p.fwd);
  reorder(v.d, p.buf, s.coeffs, true, [](fftw_complex* b, std::size_t i) {
    return std::complex<double>(b[i][0], b[i][1]);
  });
  return s;
}

Volume idft3(const Spectrum& s) {
  require(s.d >= 2 && s.coeffs.size() == static_cast<std::size_t>(s.d) * s.d * s.d,
          Errc::ShapeMismatch, "spectrum size does not match d^3");
  Volume v(s.d, s.voxel_size);
  double imag_sq = 0.0, real_sq = 0.0;
  {
    std::lock_guard<std::mutex> lock(g_fft_mutex);
    auto& p = plans_for(s.d);
    std::vector<std::complex<double>> natural(p.n);
    reorder(s.d, s.coeffs, natural, false,
            [](const std::vector<std::complex<double>>& c, std::size_t i) { return c[i]; });
    for (std::size_t i = 0; i < p.n; ++i) {
      p.buf[i][0] = natural[i].real();
      p.buf[i][1] = natural[i].imag();
    }
    fftw_execute(p.bwd);
    const double norm = 1.0 / static_cast<double>(p.n);
    for (std::size_t i = 0; i < p.n; ++i) {
      const double re = p.buf[i][0] * norm;
      const double im = p.buf[i][1] * norm;
      v.data[i] = re;
      real_sq += re * re;
      imag_sq += im * im;
    }
  }
  const double out_norm = std::sqrt(real_sq);
  require(std::sqrt(imag_sq) <= 1e-6 * std::max(out_norm, 1e-300), Errc::HermitianViolation,
          "spectrum is not Hermitian-symmetric; inverse transform is not real");
  return v;
}

Volume lowpass_filter(const Volume& v, double resolution) {
  const double nyquist_res = 2.0 * v.voxel_size;
  require(resolution >= nyquist_res * (1.0 - 1e-12), Errc::ResolutionBelowNyquist,
          "low-pass resolution is finer than Nyquist");
  // Cutoff at Nyquist passes the full representable band.
  if (resolution <= nyquist_res * (1.0 + 1e-12)) return v;

  Spectrum s = dft3(v);
  const double cutoff = 1.0 / resolution;  // cycles per Angstrom
  const double freq_step = 1.0 / (v.d * v.voxel_size);
  for (int z = 0; z < s.d; ++z)
    for (int y = 0; y < s.d; ++y)
      for (int x = 0; x < s.d; ++x) {
        const double kx = s.freq(x) * freq_step;
        const double ky = s.freq(y) * freq_step;
        const double kz = s.freq(z) * freq_step;
        if (std::sqrt(kx * kx + ky * ky + kz * kz) > cutoff * (1.0 + 1e-12))
          s.at(x, y, z) = 0.0;
      }
  return idft3(s);
}

Volume fourier_crop(const Volume& v, int d_out) {
  require(d_out >= 2 && d_out <= v.d, Errc::InvalidTargetSize,
          "fourier_crop target must satisfy 2 <= d_out <= d");
  if (d_out == v.d) return v;

  Spectrum s = dft3(v);
  Spectrum out;
  out.d = d_out;
  out.voxel_size = v.voxel_size * static_cast<double>(v.d) / d_out;
  out.coeffs.assign(static_cast<std::size_t>(d_out) * d_out * d_out, 0.0);

  // Keep the central block; rescale so real-space amplitudes (and the mean)
  // are preserved under the 1/d^3 inverse normalization.
  const double scale = std::pow(static_cast<double>(d_out) / v.d, 3);
  const int off = v.d / 2 - d_out / 2;
  for (int z = 0; z < d_out; ++z)
    for (int y = 0; y < d_out; ++y)
      for (int x = 0; x < d_out; ++x)
        out.at(x, y, z) = s.at(x + off, y + off, z + off) * scale;

  // A cropped Hermitian grid is only exactly Hermitian after zeroing the new
  // unpaired boundary plane (centered index -d_out/2 has no +d_out/2 mate).
  for (int z = 0; z < d_out; ++z)
    for (int y = 0; y < d_out; ++y)
      for (int x = 0; x < d_out; ++x)
        if (out.freq(x) == -d_out / 2 || out.freq(y) == -d_out / 2 || out.freq(z) == -d_out / 2)
          out.at(x, y, z) = 0.0;

  Volume res = idft3(out);
  return res;
}

}  // namespace tomomorph
