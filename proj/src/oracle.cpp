#include "dirac1d/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/LU>

namespace dirac1d {

namespace {

double potential(double x, const PhysicalParams& params) {
  return params.mass() + params.coupling() * std::abs(x);
}

// Decaying direction at the outer boundary, from psi ~ exp(-+kappa x);
// kappa = sqrt(W^2 - E^2).
Spinor boundary_seed(double w, double energy, bool right_side) {
  const double kappa = std::sqrt(std::max(w * w - energy * energy, 0.0));
  Spinor seed(1.0, right_side ? (w - kappa) / energy : (w + kappa) / energy);
  return seed.normalized();
}

// Fixed-step RK4 from x_start to 0, rescaling to unit length after every step
// so the growing (physical inward) solution never overflows.
Spinor integrate_to_origin(double x_start, double energy, const PhysicalParams& params, double h,
                           bool right_side) {
  const auto n = static_cast<long>(std::ceil(std::abs(x_start) / h));
  const double dx = -x_start / static_cast<double>(n);
  Spinor psi = boundary_seed(potential(x_start, params), energy, right_side);
  for (long i = 0; i < n; ++i) {
    const double x = x_start + static_cast<double>(i) * dx;
    const Spinor k1 = dirac_rhs(x, psi, energy, params);
    const Spinor k2 = dirac_rhs(x + 0.5 * dx, psi + 0.5 * dx * k1, energy, params);
    const Spinor k3 = dirac_rhs(x + 0.5 * dx, psi + 0.5 * dx * k2, energy, params);
    const Spinor k4 = dirac_rhs(x + dx, psi + dx * k3, energy, params);
    psi += dx / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    const double len = psi.norm();
    if (!std::isfinite(len) || len == 0.0) {
      throw Overflow("shoot_mismatch: state renormalization failed at x = " + std::to_string(x));
    }
    psi /= len;
  }
  return psi;
}

}  // namespace

Spinor dirac_rhs(double x, const Spinor& psi, double energy, const PhysicalParams& params) {
  const double w = potential(x, params);
  return {-w * psi(0) + energy * psi(1), w * psi(1) - energy * psi(0)};
}

double default_shoot_x_max(double energy, const PhysicalParams& params) {
  return (std::abs(energy) + 12.0 * params.sqrt_coupling()) / params.coupling();
}

double shoot_mismatch(double energy, const PhysicalParams& params, double x_max, double h) {
  if (energy == 0.0 || !std::isfinite(energy)) throw std::invalid_argument("shoot_mismatch: E must be finite and nonzero");
  if (!(h > 0.0)) throw std::invalid_argument("shoot_mismatch: h must be > 0");
  const double h_phys = h / params.sqrt_coupling();
  const Spinor right = integrate_to_origin(x_max, energy, params, h_phys, true);
  const Spinor left = integrate_to_origin(-x_max, energy, params, h_phys, false);
  Eigen::Matrix2d match;
  match << left, right;
  return match.determinant();
}

std::vector<OracleResult> shoot_eigenvalues(const PhysicalParams& params, int count,
                                            const OracleOptions& opts) {
  if (count < 1) throw std::invalid_argument("shoot_eigenvalues: count must be >= 1");
  const double sqrt_g = params.sqrt_coupling();
  const double alpha = params.alpha();
  const double de = opts.scan_step * sqrt_g;
  const double tol = opts.energy_tol * sqrt_g;

  // Levels sit below sqrt(2 g (n + alpha^2 + 1)); start there and widen.
  double e_max = std::sqrt(2.0 * params.coupling() * (count + alpha * alpha + 1.0)) * 1.2;
  std::vector<OracleResult> out;
  for (;;) {
    out.clear();
    const double x_max = default_shoot_x_max(e_max, params);
    auto mismatch = [&](double e) { return shoot_mismatch(e, params, x_max, opts.step); };

    double e_prev = de;
    double m_prev = mismatch(e_prev);
    for (long k = 2; e_prev < e_max && static_cast<int>(out.size()) < count; ++k) {
      const double e = static_cast<double>(k) * de;
      const double m = mismatch(e);
      if (std::signbit(m) != std::signbit(m_prev)) {
        double lo = e_prev, hi = e, m_lo = m_prev;
        while (hi - lo > tol) {
          const double mid = 0.5 * (lo + hi);
          const double m_mid = mismatch(mid);
          if (std::signbit(m_mid) == std::signbit(m_lo)) {
            lo = mid;
            m_lo = m_mid;
          } else {
            hi = mid;
          }
        }
        const double root = 0.5 * (lo + hi);
        const double m_root = mismatch(root);
        out.push_back({root, m_root, std::abs(m_root) < opts.mismatch_tol, Method::ShootingOracle});
      }
      e_prev = e;
      m_prev = m;
    }
    if (static_cast<int>(out.size()) >= count) return out;
    e_max *= 1.5;
  }
}

}  // namespace dirac1d
