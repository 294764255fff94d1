#pragma once
// Independent check on the spectrum: shooting on the first-order Dirac
// system
//   psi1' = -W(x) psi1 + E psi2,   psi2' = W(x) psi2 - E psi1,   W = m + g|x|,
// integrated inward from both ends with RK4 and matched at the origin.
// Nothing here touches Hermite functions.

#include <vector>

#include <Eigen/Core>

#include "dirac1d/spectral.hpp"

namespace dirac1d {

using Spinor = Eigen::Vector2d;

struct OracleResult {
  double energy = 0.0;
  double mismatch = 0.0;
  bool converged = false;
  Method method = Method::ShootingOracle;
};

struct OracleOptions {
  double step = 1e-3;         // RK4 step, units of 1/sqrt(g)
  double scan_step = 0.02;    // energy grid, units of sqrt(g)
  double energy_tol = 1e-8;   // bisection width, units of sqrt(g)
  double mismatch_tol = 1e-5; // |mismatch| accepted as converged
};

/// Right-hand side of the Dirac system at position x.
Spinor dirac_rhs(double x, const Spinor& psi, double energy, const PhysicalParams& params);

/// (|E| + 12 sqrt(g)) / g: twelve envelope widths past the turning point.
double default_shoot_x_max(double energy, const PhysicalParams& params);

/// Normalized matching determinant psi1^L psi2^R - psi1^R psi2^L at x = 0,
/// with both sides integrated inward from +-x_max. Zero at eigenvalues.
double shoot_mismatch(double energy, const PhysicalParams& params, double x_max, double h);

/// The `count` lowest positive energies from sign changes of the mismatch.
std::vector<OracleResult> shoot_eigenvalues(const PhysicalParams& params, int count,
                                            const OracleOptions& opts = {});

}  // namespace dirac1d
