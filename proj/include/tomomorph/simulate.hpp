#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tomomorph/resample.hpp"
#include "tomomorph/rng.hpp"
#include "tomomorph/se3.hpp"
#include "tomomorph/volume.hpp"

namespace tomomorph {

/// Canonical, centered class density used as simulation ground truth.
struct Template {
  Volume volume;
  int class_id = 0;
  std::string name;
};

enum class PhantomKind { Sphere, Dumbbell, HollowShell, EllPrism };

PhantomKind phantom_kind_from_name(const std::string& name);
const char* phantom_kind_name(PhantomKind kind);

/// Smooth centered density with peak 1. The four kinds are pairwise
/// distinguishable under any of the 24 proper cube rotations.
Template make_phantom(PhantomKind kind, int d, double voxel_size);

struct CtfParams {
  double voltage_kv = 300.0;
  double cs_mm = 2.7;
  double defocus_um = 5.0;  // underfocus positive
  double amplitude_contrast = 0.07;
};

struct ImagingParams {
  double snr = 0.1;
  double wedge_half_angle = 30.0;  // degrees
  CtfParams ctf;
  bool apply_ctf = true;
  double translation_bound = 2.0;  // voxels, per axis
  bool ctf_after_wedge = false;    // stage-order ablation flag

  void validate() const {
    require(snr > 0.0, Errc::InvalidArgument, "snr must be positive");
    require(wedge_half_angle >= 0.0 && wedge_half_angle < 90.0, Errc::InvalidArgument,
            "wedge half-angle must be in [0, 90)");
    require(ctf.amplitude_contrast >= 0.0 && ctf.amplitude_contrast <= 1.0,
            Errc::InvalidArgument, "amplitude contrast must be in [0, 1]");
  }
};

struct GroundTruthRecord {
  int index = 0;
  int class_id = 0;
  RigidTransform pose;
  std::uint64_t seed = 0;
};

/// Relativistic electron wavelength in Angstrom for an accelerating voltage
/// in kV.
double electron_wavelength(double voltage_kv);

/// Weak-phase CTF multiplier at spatial frequency k (cycles/Angstrom):
/// -(sqrt(1-A^2) sin(gamma) + A cos(gamma)),
/// gamma = pi*lambda*dz*k^2 - (pi/2)*Cs*lambda^3*k^4.
double ctf_value(double k, const CtfParams& p);

/// Multiply the spectrum radially by the CTF.
Volume apply_ctf(const Volume& v, const ImagingParams& p);

/// Zero all coefficients whose (kx,kz) direction lies within
/// wedge_half_angle degrees of the kz axis (single tilt axis along y).
Volume apply_missing_wedge(const Volume& v, double wedge_half_angle);

/// Fraction of coefficients the wedge zeroes among those with
/// (kx,kz) != (0,0), for a d^3 grid.
double missing_wedge_zero_fraction(int d, double wedge_half_angle);

/// v + eta with eta ~ N(0, var(v)/snr) i.i.d. per voxel.
Volume add_noise_to_snr(const Volume& v, double snr, Rng& rng);

/// Full degradation pipeline: random pose -> CTF -> missing wedge -> noise.
/// pose_override replaces the random pose (test hook).
std::pair<Volume, GroundTruthRecord> simulate_subtomogram(
    const Template& t, const ImagingParams& p, Rng& rng,
    const std::optional<RigidTransform>& pose_override = std::nullopt);

struct SimulatedDataset {
  std::vector<Volume> volumes;
  std::vector<GroundTruthRecord> records;
};

/// n_per_class subtomograms per template. Item i uses an RNG derived as
/// hash(seed, i), so results are independent of evaluation order.
SimulatedDataset simulate_dataset(const std::vector<Template>& templates, int n_per_class,
                                  const ImagingParams& p, std::uint64_t seed);

}  // namespace tomomorph
