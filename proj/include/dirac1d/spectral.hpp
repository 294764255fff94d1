#pragma once
// Quantization condition for the 1+1D Dirac equation with scalar potential
// g|x|, and the machinery to locate its roots.
//
// With nu = E^2 / (2g) and alpha = m / sqrt(g), bound states satisfy
//   f(nu; alpha) = H_nu(alpha)^2 - 2 nu H_{nu-1}(alpha)^2 = 0 .
// The roots depend on (m, g) only through alpha.
//
// Completeness of the roots for alpha > 0 rests on the sign-change scan;
// uniqueness per unit interval is only established for alpha = 0.

#include <string_view>
#include <vector>

#include "dirac1d/specfun.hpp"

namespace dirac1d {

/// Fermion mass m >= 0 and coupling g > 0 of the potential V(x) = g|x|.
class PhysicalParams {
 public:
  static PhysicalParams from_mass_coupling(double mass, double coupling);
  /// Dimensionless mass alpha with the energy scale fixed by g = 1.
  static PhysicalParams from_alpha(double alpha);

  double mass() const { return mass_; }
  double coupling() const { return coupling_; }
  double alpha() const { return alpha_; }
  double sqrt_coupling() const { return sqrt_coupling_; }

 private:
  PhysicalParams(double mass, double coupling);

  double mass_;
  double coupling_;
  double sqrt_coupling_;
  double alpha_;
};

/// nu-interval with a strict sign change of f at its ends.
struct Bracket {
  double nu_lo;
  double nu_hi;
  double f_lo;
  double f_hi;
};

enum class Method { SpectralCondition, ShootingOracle };

std::string_view to_string(Method method);
Method method_from_string(std::string_view text);

struct EigenvalueRecord {
  int index = 0;
  double nu = 0.0;
  double e_plus = 0.0;
  double e_minus = 0.0;
  // |f| relative to H_nu^2 + 2 nu H_{nu-1}^2, i.e. the size of the
  // cancellation left over; dimensionless and O(eps) at a converged root.
  double residual = 0.0;
  Method method = Method::SpectralCondition;

  bool operator==(const EigenvalueRecord&) const = default;
};

struct SpectralOptions {
  double scan_step = 0.05;
  double min_scan_step = 0.01;
  double refine_tol = 1e-9;
};

inline constexpr double kDefaultRefineTol = 1e-9;
// Scaled residual a refined root has to meet.
inline constexpr double kResidualTolerance = 1e-9;

/// f(nu; alpha) = H_nu(alpha)^2 - 2 nu H_{nu-1}(alpha)^2.
double spectral_fn(double nu, double alpha, const SeriesConfig& cfg = {});

/// |f| / (H_nu^2 + 2 nu H_{nu-1}^2) at (nu, alpha).
double scaled_residual(double nu, double alpha, const SeriesConfig& cfg = {});

/// Sign changes of f(.; alpha) on (0, nu_max], sampled every `step`.
/// A sample that lands exactly on a root is nudged by step * 1e-3.
std::vector<Bracket> bracket_roots(double alpha, double nu_max, double step);

/// Brent refinement inside `bracket` until its width is at most `tol`.
double refine_root(const Bracket& bracket, double alpha, double tol = kDefaultRefineTol);

/// The `count` smallest roots nu_0 < nu_1 < ... with energies +-sqrt(2 nu g).
std::vector<EigenvalueRecord> eigenvalues(const PhysicalParams& params, int count,
                                          const SpectralOptions& opts = {});

/// Residuals of the integer-level condition H_{n+1}(alpha) = +-sqrt(2(n+1)) H_n(alpha).
struct IntegerLevelResiduals {
  double r_plus;   // H_{n+1} - sqrt(2(n+1)) H_n
  double r_minus;  // H_{n+1} + sqrt(2(n+1)) H_n
};

IntegerLevelResiduals br_condition_residual(int n, double alpha);

/// Energy sqrt(2 nu g) of integer level n under E = sqrt(2 (n+1) g).
double br_energy(int n, const PhysicalParams& params);

}  // namespace dirac1d
