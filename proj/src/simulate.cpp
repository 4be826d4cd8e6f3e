#include "tomomorph/simulate.hpp"

#include <cmath>

#include "tomomorph/fourier.hpp"

namespace tomomorph {

namespace {

// Soft indicator: 1 well inside, 0 outside, smooth over ~1.5 voxels.
double soft_step(double signed_dist, double softness = 1.5) {
  return 1.0 / (1.0 + std::exp(signed_dist / (softness / 4.0)));
}

double sphere_dist(const Vec3& p, const Vec3& center, double radius) {
  return (p - center).norm() - radius;
}

double box_dist(const Vec3& p, const Vec3& center, const Vec3& half) {
  const Vec3 q = (p - center).cwiseAbs() - half;
  const double outside = q.cwiseMax(0.0).norm();
  const double inside = std::min(q.maxCoeff(), 0.0);
  return outside + inside;
}

Volume recenter_and_bandlimit(Volume v) {
  // Shift center of mass onto the geometric center, then smooth so the
  // density is band-limited and transforms cleanly under interpolation.
  double m = 0.0;
  Vec3 com = Vec3::Zero();
  for (int z = 0; z < v.d; ++z)
    for (int y = 0; y < v.d; ++y)
      for (int x = 0; x < v.d; ++x) {
        const double w = v.at(x, y, z);
        m += w;
        com += w * Vec3(x, y, z);
      }
  if (m > 0) {
    com /= m;
    RigidTransform shift;
    shift.translation = Vec3(v.center(), v.center(), v.center()) - com;
    v = resample_rigid(v, shift);
  }
  v = lowpass_filter(v, 6.0 * v.voxel_size);
  double peak = 0.0;
  for (double x : v.data) peak = std::max(peak, std::abs(x));
  if (peak > 0)
    for (double& x : v.data) x /= peak;
  return v;
}

}  // namespace

PhantomKind phantom_kind_from_name(const std::string& name) {
  if (name == "sphere") return PhantomKind::Sphere;
  if (name == "dumbbell") return PhantomKind::Dumbbell;
  if (name == "hollow_shell") return PhantomKind::HollowShell;
  if (name == "ell_prism") return PhantomKind::EllPrism;
  fail(Errc::UnsupportedKind, "unknown phantom kind '" + name + "'");
}

const char* phantom_kind_name(PhantomKind kind) {
  switch (kind) {
    case PhantomKind::Sphere: return "sphere";
    case PhantomKind::Dumbbell: return "dumbbell";
    case PhantomKind::HollowShell: return "hollow_shell";
    case PhantomKind::EllPrism: return "ell_prism";
  }
  fail(Errc::UnsupportedKind, "unknown phantom kind");
}

Template make_phantom(PhantomKind kind, int d, double voxel_size) {
  require(d >= 16, Errc::InvalidArgument, "phantoms need d >= 16");
  Volume v(d, voxel_size);
  const double c = v.center();
  const Vec3 cv(c, c, c);
  const double s = d;  // all feature sizes scale with the box

  for (int z = 0; z < d; ++z)
    for (int y = 0; y < d; ++y)
      for (int x = 0; x < d; ++x) {
        const Vec3 p(x, y, z);
        double dist;
        switch (kind) {
          case PhantomKind::Sphere:
            dist = sphere_dist(p, cv, 0.26 * s);
            break;
          case PhantomKind::Dumbbell:
            dist = std::min(sphere_dist(p, cv + Vec3(0.21 * s, 0, 0), 0.14 * s),
                            sphere_dist(p, cv - Vec3(0.21 * s, 0, 0), 0.14 * s));
            break;
          case PhantomKind::HollowShell:
            dist = std::max(sphere_dist(p, cv, 0.30 * s), -sphere_dist(p, cv, 0.17 * s));
            break;
          case PhantomKind::EllPrism:
            dist = std::min(
                box_dist(p, cv + Vec3(0.0, -0.10 * s, 0.0), Vec3(0.30 * s, 0.09 * s, 0.09 * s)),
                box_dist(p, cv + Vec3(-0.21 * s, 0.12 * s, 0.0), Vec3(0.09 * s, 0.13 * s, 0.09 * s)));
            break;
          default:
            fail(Errc::UnsupportedKind, "unknown phantom kind");
        }
        v.at(x, y, z) = soft_step(dist);
      }

  Template t;
  t.volume = recenter_and_bandlimit(std::move(v));
  t.class_id = static_cast<int>(kind);
  t.name = phantom_kind_name(kind);
  return t;
}

double electron_wavelength(double voltage_kv) {
  require(voltage_kv > 0.0, Errc::InvalidArgument, "voltage must be positive");
  const double v = voltage_kv * 1e3;  // volts
  return 12.2639 / std::sqrt(v * (1.0 + 0.97845e-6 * v));
}

double ctf_value(double k, const CtfParams& p) {
  const double lambda = electron_wavelength(p.voltage_kv);
  const double dz = p.defocus_um * 1e4;  // Angstrom, underfocus positive
  const double cs = p.cs_mm * 1e7;       // Angstrom
  const double k2 = k * k;
  const double gamma = M_PI * lambda * dz * k2 - 0.5 * M_PI * cs * lambda * lambda * lambda * k2 * k2;
  const double a = p.amplitude_contrast;
  return -(std::sqrt(1.0 - a * a) * std::sin(gamma) + a * std::cos(gamma));
}

Volume apply_ctf(const Volume& v, const ImagingParams& p) {
  p.validate();
  Spectrum s = dft3(v);
  const double freq_step = 1.0 / (v.d * v.voxel_size);
  for (int z = 0; z < s.d; ++z)
    for (int y = 0; y < s.d; ++y)
      for (int x = 0; x < s.d; ++x) {
        const double kx = s.freq(x) * freq_step;
        const double ky = s.freq(y) * freq_step;
        const double kz = s.freq(z) * freq_step;
        s.at(x, y, z) *= ctf_value(std::sqrt(kx * kx + ky * ky + kz * kz), p.ctf);
      }
  return idft3(s);
}

namespace {
inline bool in_wedge(int fx, int fz, double tan_half_angle) {
  if (fx == 0 && fz == 0) return false;  // measured at every tilt
  return std::abs(static_cast<double>(fx)) <= std::abs(static_cast<double>(fz)) * tan_half_angle;
}
}  // namespace

Volume apply_missing_wedge(const Volume& v, double wedge_half_angle) {
  require(wedge_half_angle >= 0.0 && wedge_half_angle < 90.0, Errc::InvalidArgument,
          "wedge half-angle must be in [0, 90)");
  if (wedge_half_angle == 0.0) return v;
  const double tn = std::tan(wedge_half_angle * M_PI / 180.0);
  Spectrum s = dft3(v);
  for (int z = 0; z < s.d; ++z)
    for (int y = 0; y < s.d; ++y)
      for (int x = 0; x < s.d; ++x)
        if (in_wedge(s.freq(x), s.freq(z), tn)) s.at(x, y, z) = 0.0;
  return idft3(s);
}

double missing_wedge_zero_fraction(int d, double wedge_half_angle) {
  const double tn = std::tan(wedge_half_angle * M_PI / 180.0);
  std::size_t zeroed = 0, offaxis = 0;
  for (int z = 0; z < d; ++z)
    for (int x = 0; x < d; ++x) {
      const int fx = x - d / 2, fz = z - d / 2;
      if (fx == 0 && fz == 0) continue;
      ++offaxis;
      if (in_wedge(fx, fz, tn)) ++zeroed;
    }
  return static_cast<double>(zeroed) / static_cast<double>(offaxis);
}

Volume add_noise_to_snr(const Volume& v, double snr, Rng& rng) {
  require(snr > 0.0, Errc::InvalidArgument, "snr must be positive");
  const double var = variance(v);
  require(var > 1e-30, Errc::ZeroVariance, "cannot target an SNR on a constant volume");
  const double sigma = std::sqrt(var / snr);
  Volume out = v;
  for (double& x : out.data) x += sigma * rng.normal();
  return out;
}

std::pair<Volume, GroundTruthRecord> simulate_subtomogram(
    const Template& t, const ImagingParams& p, Rng& rng,
    const std::optional<RigidTransform>& pose_override) {
  p.validate();
  GroundTruthRecord rec;
  rec.class_id = t.class_id;
  rec.seed = rng.seed();

  if (pose_override) {
    rec.pose = *pose_override;
  } else {
    rec.pose.rotation = sample_rotation_haar(rng);
    rec.pose.translation = sample_translation(rng, p.translation_bound);
  }

  Volume v = resample_rigid(t.volume, rec.pose);
  if (!p.ctf_after_wedge && p.apply_ctf) v = apply_ctf(v, p);
  if (p.wedge_half_angle > 0.0) v = apply_missing_wedge(v, p.wedge_half_angle);
  if (p.ctf_after_wedge && p.apply_ctf) v = apply_ctf(v, p);
  v = add_noise_to_snr(v, p.snr, rng);
  return {std::move(v), rec};
}

SimulatedDataset simulate_dataset(const std::vector<Template>& templates, int n_per_class,
                                  const ImagingParams& p, std::uint64_t seed) {
  require(templates.size() >= 2, Errc::InvalidArgument, "need at least 2 templates");
  require(n_per_class >= 1, Errc::InvalidArgument, "n_per_class must be >= 1");
  SimulatedDataset ds;
  const int n_total = n_per_class * static_cast<int>(templates.size());
  ds.volumes.reserve(n_total);
  ds.records.reserve(n_total);
  for (int i = 0; i < n_total; ++i) {
    const Template& t = templates[i / n_per_class];
    Rng item_rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
    auto [vol, rec] = simulate_subtomogram(t, p, item_rng);
    rec.index = i;
    ds.volumes.push_back(std::move(vol));
    ds.records.push_back(rec);
  }
  return ds;
}

}  // namespace tomomorph
