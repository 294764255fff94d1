#pragma once
// Piecewise two-component bound state at a root of the quantization
// condition. With xi = (m + g|x|)/sqrt(g) and E = +-sqrt(2 nu g):
//
//   x >= 0:  psi1 = C  H_nu(xi) e^{-xi^2/2},          psi2 = C (E/sqrt g) H_{nu-1}(xi) e^{-xi^2/2}
//   x <= 0:  psi1 = C' (E/sqrt g) H_{nu-1}(xi) e^{-xi^2/2},  psi2 = C' H_nu(xi) e^{-xi^2/2}
//
// C' follows from continuity of psi2 at the origin (psi1 when H_nu(alpha)
// vanishes); both constants are then scaled to unit L2 norm with C > 0.
// Only the decaying branch is represented.

#include <cstddef>
#include <vector>

#include "dirac1d/spectral.hpp"

namespace dirac1d {

enum class EnergySign { Positive, Negative };

struct ProfileSample {
  double x;
  double psi1;
  double psi2;
};

struct WavefunctionProfile {
  double nu = 0.0;
  EnergySign e_sign = EnergySign::Positive;
  double energy = 0.0;
  double c_right = 0.0;
  double c_left = 0.0;
  // Left half-line from -x_max up to 0^- followed by the right half-line
  // from 0^+ to x_max; x = 0 therefore appears twice.
  std::vector<ProfileSample> grid;
  double norm = 0.0;      // after normalization
  double raw_norm = 0.0;  // integral before rescaling, with C = 1
  double continuity_defect = 0.0;

  std::size_t half_size() const { return grid.size() / 2; }
  const ProfileSample& origin_left() const { return grid[half_size() - 1]; }
  const ProfileSample& origin_right() const { return grid[half_size()]; }
  double x_max() const { return grid.back().x; }
};

inline constexpr int kDefaultProfilePoints = 2001;
inline constexpr double kTailEnvelope = 1e-10;

/// Half-width of the default grid: eight units of xi past the larger of
/// alpha and the turning point sqrt(2 nu + 1).
double default_x_max(double nu, const PhysicalParams& params);

/// Profile of an eigenvalue record; rejects records whose residual exceeds
/// kResidualTolerance. `x_max <= 0` selects default_x_max.
WavefunctionProfile assemble(const EigenvalueRecord& record, const PhysicalParams& params,
                             EnergySign e_sign = EnergySign::Positive, double x_max = 0.0,
                             int n_points = kDefaultProfilePoints);

/// Same construction at an arbitrary nu, without the eigenvalue check.
/// Useful for probing how the continuity defect behaves off a root.
WavefunctionProfile assemble_at(double nu, const PhysicalParams& params,
                                EnergySign e_sign = EnergySign::Positive, double x_max = 0.0,
                                int n_points = kDefaultProfilePoints);

/// max(|psi1(0+) - psi1(0-)|, |psi2(0+) - psi2(0-)|) over the peak amplitude.
double continuity_defect(const WavefunctionProfile& profile);

/// Largest |psi1| or |psi2| on the grid.
double peak_amplitude(const WavefunctionProfile& profile);

/// int (psi1^2 + psi2^2) dx by composite Simpson per half-line. Throws
/// TailTruncation when the envelope at +-x_max exceeds 1e-10 of the peak.
double norm(const WavefunctionProfile& profile);

}  // namespace dirac1d
