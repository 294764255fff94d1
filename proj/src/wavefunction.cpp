#include "dirac1d/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>

namespace dirac1d {

namespace {

// Composite Simpson on equally spaced samples; an odd interval count ends
// with a 3/8 panel.
double simpson(std::span<const double> f, double h) {
  const std::size_t intervals = f.size() - 1;
  if (intervals == 1) return 0.5 * h * (f[0] + f[1]);
  std::size_t simpson_end = intervals % 2 == 0 ? intervals : intervals - 3;
  double acc = 0.0;
  for (std::size_t i = 0; i + 2 <= simpson_end; i += 2) {
    acc += f[i] + 4.0 * f[i + 1] + f[i + 2];
  }
  acc *= h / 3.0;
  if (simpson_end != intervals) {
    const std::size_t i = simpson_end;
    acc += 3.0 * h / 8.0 * (f[i] + 3.0 * f[i + 1] + 3.0 * f[i + 2] + f[i + 3]);
  }
  return acc;
}

double raw_norm_of(const std::vector<ProfileSample>& grid) {
  const std::size_t half = grid.size() / 2;
  std::vector<double> density(grid.size());
  std::transform(grid.begin(), grid.end(), density.begin(),
                 [](const ProfileSample& s) { return s.psi1 * s.psi1 + s.psi2 * s.psi2; });
  const double h = grid[1].x - grid[0].x;
  const std::span<const double> all(density);
  return simpson(all.first(half), h) + simpson(all.subspan(half), h);
}

}  // namespace

double default_x_max(double nu, const PhysicalParams& params) {
  const double alpha = params.alpha();
  const double xi_turn = std::sqrt(std::max(2.0 * nu + 1.0, 0.0));
  const double xi_max = std::max(alpha, xi_turn) + 8.0;
  return (xi_max - alpha) / params.sqrt_coupling();
}

WavefunctionProfile assemble_at(double nu, const PhysicalParams& params, EnergySign e_sign,
                                double x_max, int n_points) {
  if (!(nu > 0.0)) throw std::invalid_argument("assemble: nu must be > 0");
  if (n_points < 3 || n_points % 2 == 0) throw std::invalid_argument("assemble: n_points must be odd and >= 3");
  if (x_max <= 0.0) x_max = default_x_max(nu, params);

  const double sqrt_g = params.sqrt_coupling();
  const double alpha = params.alpha();
  const double energy = (e_sign == EnergySign::Positive ? 1.0 : -1.0) * std::sqrt(2.0 * nu * params.coupling());
  const double e_over = energy / sqrt_g;
  const HermiteOrder order{nu};

  // Matching at x = 0, where xi = alpha on both sides.
  const auto at_origin = hermite_fn_pair(order, alpha);
  double c_left;
  if (at_origin.value != 0.0) {
    c_left = e_over * at_origin.lower / at_origin.value;
  } else if (e_over * at_origin.lower != 0.0) {
    c_left = at_origin.value / (e_over * at_origin.lower);
  } else {
    throw DegenerateMatch("assemble: both matching denominators vanish at nu = " + std::to_string(nu));
  }

  const int half = (n_points - 1) / 2;
  const double h = x_max / half;
  WavefunctionProfile out;
  out.nu = nu;
  out.e_sign = e_sign;
  out.energy = energy;
  out.grid.resize(static_cast<std::size_t>(2 * (half + 1)));

  // Both sides share the same xi values, so evaluate once per |x|.
  for (int i = 0; i <= half; ++i) {
    const double ax = i * h;
    const double xi = (params.mass() + params.coupling() * ax) / sqrt_g;
    const auto hp = hermite_fn_pair(order, xi);
    const double envelope = std::exp(-0.5 * xi * xi);
    const double main = hp.value * envelope;
    const double partner = e_over * hp.lower * envelope;
    out.grid[static_cast<std::size_t>(half + 1 + i)] = {ax, main, partner};
    out.grid[static_cast<std::size_t>(half - i)] = {-ax, c_left * partner, c_left * main};
  }

  out.raw_norm = raw_norm_of(out.grid);
  const double scale = 1.0 / std::sqrt(out.raw_norm);
  for (auto& s : out.grid) {
    s.psi1 *= scale;
    s.psi2 *= scale;
  }
  out.c_right = scale;
  out.c_left = c_left * scale;
  out.norm = norm(out);
  out.continuity_defect = continuity_defect(out);
  return out;
}

WavefunctionProfile assemble(const EigenvalueRecord& record, const PhysicalParams& params,
                             EnergySign e_sign, double x_max, int n_points) {
  if (!(record.residual <= kResidualTolerance)) {
    throw NotAnEigenvalue("assemble: residual " + std::to_string(record.residual) +
                          " exceeds tolerance");
  }
  return assemble_at(record.nu, params, e_sign, x_max, n_points);
}

double peak_amplitude(const WavefunctionProfile& profile) {
  double peak = 0.0;
  for (const auto& s : profile.grid) peak = std::max({peak, std::abs(s.psi1), std::abs(s.psi2)});
  return peak;
}

double continuity_defect(const WavefunctionProfile& profile) {
  const auto& left = profile.origin_left();
  const auto& right = profile.origin_right();
  const double jump = std::max(std::abs(right.psi1 - left.psi1), std::abs(right.psi2 - left.psi2));
  return jump / peak_amplitude(profile);
}

double norm(const WavefunctionProfile& profile) {
  const double peak = peak_amplitude(profile);
  for (const auto* end : {&profile.grid.front(), &profile.grid.back()}) {
    const double envelope = std::max(std::abs(end->psi1), std::abs(end->psi2));
    if (envelope > kTailEnvelope * peak) {
      throw TailTruncation("norm: envelope at the grid edge is " + std::to_string(envelope / peak) +
                           " of the peak");
    }
  }
  return raw_norm_of(profile.grid);
}

}  // namespace dirac1d
