#include <doctest.h>

#include <cmath>
#include <complex>

#include "test_util.hpp"
#include "tomomorph/fourier.hpp"

using namespace tomomorph;

namespace {

double relative_l2(const Volume& a, const Volume& b) {
  double num = 0, den = 0;
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    num += (a.data[i] - b.data[i]) * (a.data[i] - b.data[i]);
    den += b.data[i] * b.data[i];
  }
  return std::sqrt(num / den);
}

}  // namespace

TEST_SUITE("fourier") {

TEST_CASE("round trip and Parseval across sizes") {
  for (int d : {8, 16, 24, 32, 48}) {
    Rng rng(100 + d);
    Volume v = tt::random_volume(d, rng);
    Spectrum s = dft3(v);
    Volume back = idft3(s);

    double vmax = tt::max_abs(v);
    CHECK(tt::max_abs_diff(v, back) / vmax < 1e-9);

    // Parseval under the 1/d^3 inverse normalization, against direct sums
    double sum_sq = 0;
    for (double x : v.data) sum_sq += x * x;
    double spec_sq = 0;
    for (auto c : s.coeffs) spec_sq += std::norm(c);
    CHECK(sum_sq == doctest::Approx(spec_sq / v.size()).epsilon(1e-9));
  }
}

TEST_CASE("constant volume concentrates at DC") {
  Volume v(16, 2.0);
  for (double& x : v.data) x = 3.5;
  Spectrum s = dft3(v);
  const int h = s.d / 2;
  CHECK(s.at(h, h, h).real() == doctest::Approx(3.5 * v.size()).epsilon(1e-12));
  double off_dc = 0;
  for (int z = 0; z < s.d; ++z)
    for (int y = 0; y < s.d; ++y)
      for (int x = 0; x < s.d; ++x)
        if (!(x == h && y == h && z == h)) off_dc = std::max(off_dc, std::abs(s.at(x, y, z)));
  CHECK(off_dc < 1e-9 * 3.5 * v.size());
}

TEST_CASE("delta spectrum at zero frequency gives a constant volume") {
  Spectrum s;
  s.d = 8;
  s.voxel_size = 1.0;
  s.coeffs.assign(8 * 8 * 8, 0.0);
  s.at(4, 4, 4) = 512.0;  // d^3, so the constant is 1
  Volume v = idft3(s);
  for (double x : v.data) CHECK(x == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("analytic spectrum of a shifted impulse inverts to the impulse") {
  // Oracle: direct DFT of a one-hot volume, F(k) = exp(-2pi i k.x0 / d).
  const int d = 8;
  const int x0 = 5, y0 = 2, z0 = 7;
  Spectrum s;
  s.d = d;
  s.voxel_size = 1.0;
  s.coeffs.resize(d * d * d);
  for (int z = 0; z < d; ++z)
    for (int y = 0; y < d; ++y)
      for (int x = 0; x < d; ++x) {
        const double phase =
            -2.0 * M_PI * (s.freq(x) * x0 + s.freq(y) * y0 + s.freq(z) * z0) / d;
        s.at(x, y, z) = std::polar(1.0, phase);
      }
  Volume v = idft3(s);
  for (int z = 0; z < d; ++z)
    for (int y = 0; y < d; ++y)
      for (int x = 0; x < d; ++x) {
        const double expected = (x == x0 && y == y0 && z == z0) ? 1.0 : 0.0;
        CHECK(v.at(x, y, z) == doctest::Approx(expected).epsilon(1e-9));
      }

  // and the library forward transform agrees with the analytic oracle
  Volume impulse(d, 1.0);
  impulse.at(x0, y0, z0) = 1.0;
  Spectrum s2 = dft3(impulse);
  double max_err = 0;
  for (std::size_t i = 0; i < s.coeffs.size(); ++i)
    max_err = std::max(max_err, std::abs(s.coeffs[i] - s2.coeffs[i]));
  CHECK(max_err < 1e-9);
}

TEST_CASE("idft3 rejects non-Hermitian spectra") {
  Rng rng(7);
  Spectrum s;
  s.d = 8;
  s.voxel_size = 1.0;
  s.coeffs.resize(512);
  for (auto& c : s.coeffs) c = std::complex<double>(rng.normal(), rng.normal());
  CHECK_THROWS_WITH_AS(idft3(s), doctest::Contains("HermitianViolation"), Error);
}

TEST_CASE("lowpass: Nyquist cutoff is identity, stopband kills sinusoids") {
  const int d = 32;
  Rng rng(9);
  Volume v = tt::random_volume(d, rng, 1.0);

  SUBCASE("cutoff at Nyquist keeps everything") {
    Volume f = lowpass_filter(v, 2.0 * v.voxel_size);
    CHECK(tt::max_abs_diff(v, f) < 1e-9 * tt::max_abs(v));
  }

  SUBCASE("below Nyquist is rejected") {
    CHECK_THROWS_WITH_AS(lowpass_filter(v, 1.9 * v.voxel_size),
                         doctest::Contains("ResolutionBelowNyquist"), Error);
  }

  SUBCASE("pure high-frequency sinusoid above the cutoff vanishes") {
    Volume hf(d, 1.0);
    for (int z = 0; z < d; ++z)
      for (int y = 0; y < d; ++y)
        for (int x = 0; x < d; ++x)
          hf.at(x, y, z) = std::cos(2.0 * M_PI * 12.0 * x / d);  // |k| = 12/d cycles/vox
    Volume f = lowpass_filter(hf, 4.0 * hf.voxel_size);  // cutoff 8/d
    double in_e = 0, out_e = 0;
    for (double x : hf.data) in_e += x * x;
    for (double x : f.data) out_e += x * x;
    CHECK(out_e < 1e-6 * in_e);
  }

  SUBCASE("white noise retains the in-band energy fraction") {
    // Oracle: count in-band coefficients; flat spectrum implies the retained
    // energy fraction matches the count fraction.
    Volume f = lowpass_filter(v, 4.0 * v.voxel_size);
    Spectrum s = dft3(v);
    const double freq_step = 1.0 / (d * v.voxel_size);
    const double cutoff = 1.0 / (4.0 * v.voxel_size);
    std::size_t in_band = 0;
    for (int z = 0; z < d; ++z)
      for (int y = 0; y < d; ++y)
        for (int x = 0; x < d; ++x) {
          const double kx = s.freq(x) * freq_step, ky = s.freq(y) * freq_step,
                       kz = s.freq(z) * freq_step;
          if (std::sqrt(kx * kx + ky * ky + kz * kz) <= cutoff * (1 + 1e-12)) ++in_band;
        }
    const double count_fraction = static_cast<double>(in_band) / v.size();
    double in_e = 0, out_e = 0;
    for (double x : v.data) in_e += x * x;
    for (double x : f.data) out_e += x * x;
    CHECK(out_e / in_e == doctest::Approx(count_fraction).epsilon(0.02));
  }

  SUBCASE("linearity") {
    Volume w = tt::random_volume(d, rng, 1.0);
    Volume sum(d, 1.0);
    for (std::size_t i = 0; i < sum.data.size(); ++i)
      sum.data[i] = 2.0 * v.data[i] - 3.0 * w.data[i];
    Volume fs = lowpass_filter(sum, 4.0);
    Volume fv = lowpass_filter(v, 4.0);
    Volume fw = lowpass_filter(w, 4.0);
    double max_err = 0;
    for (std::size_t i = 0; i < sum.data.size(); ++i)
      max_err = std::max(max_err, std::abs(fs.data[i] - (2.0 * fv.data[i] - 3.0 * fw.data[i])));
    CHECK(max_err < 1e-9);
  }
}

TEST_CASE("fourier_crop: identity, DC preservation, analytic Gaussian") {
  SUBCASE("d_out == d is the identity") {
    Rng rng(3);
    Volume v = tt::random_volume(16, rng);
    Volume c = fourier_crop(v, 16);
    CHECK(tt::max_abs_diff(v, c) == 0.0);
  }

  SUBCASE("invalid target size") {
    Rng rng(3);
    Volume v = tt::random_volume(16, rng);
    CHECK_THROWS_WITH_AS(fourier_crop(v, 17), doctest::Contains("InvalidTargetSize"), Error);
    CHECK_THROWS_WITH_AS(fourier_crop(v, 1), doctest::Contains("InvalidTargetSize"), Error);
  }

  SUBCASE("constant volume keeps its mean") {
    Volume v(32, 1.5);
    for (double& x : v.data) x = -2.25;
    Volume c = fourier_crop(v, 16);
    CHECK(c.d == 16);
    CHECK(c.voxel_size == doctest::Approx(3.0));
    for (double x : c.data) CHECK(x == doctest::Approx(-2.25).epsilon(1e-9));
  }

  SUBCASE("48^3 Gaussian cropped to 24^3 matches the coarse-grid Gaussian") {
    const int d = 48, dout = 24;
    const double voxel = 1.0, sigma = 6.0;  // voxels on the fine grid
    Volume fine = tt::gaussian_blob(d, sigma, voxel);
    Volume crop = fourier_crop(fine, dout);

    // Oracle: evaluate the same physical Gaussian at the coarse sample
    // positions x_j = j * (d/dout) * voxel, center at (d-1)/2 * voxel.
    Volume oracle(dout, voxel * d / dout);
    const double step = static_cast<double>(d) / dout;
    const double c0 = (d - 1) / 2.0;
    for (int z = 0; z < dout; ++z)
      for (int y = 0; y < dout; ++y)
        for (int x = 0; x < dout; ++x) {
          const double dx = x * step - c0, dy = y * step - c0, dz = z * step - c0;
          oracle.at(x, y, z) = std::exp(-(dx * dx + dy * dy + dz * dz) / (2 * sigma * sigma));
        }
    CHECK(relative_l2(crop, oracle) < 0.05);
  }
}

}  // TEST_SUITE
