#include "dirac1d/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace dirac1d {

PhysicalParams::PhysicalParams(double mass, double coupling)
    : mass_(mass), coupling_(coupling), sqrt_coupling_(std::sqrt(coupling)),
      alpha_(mass / std::sqrt(coupling)) {}

PhysicalParams PhysicalParams::from_mass_coupling(double mass, double coupling) {
  if (!std::isfinite(mass) || mass < 0.0) throw std::invalid_argument("mass must be finite and >= 0");
  if (!std::isfinite(coupling) || coupling <= 0.0) throw std::invalid_argument("coupling must be finite and > 0");
  return PhysicalParams(mass, coupling);
}

PhysicalParams PhysicalParams::from_alpha(double alpha) { return from_mass_coupling(alpha, 1.0); }

std::string_view to_string(Method method) {
  return method == Method::SpectralCondition ? "spectral-condition" : "shooting-oracle";
}

Method method_from_string(std::string_view text) {
  if (text == "spectral-condition") return Method::SpectralCondition;
  if (text == "shooting-oracle") return Method::ShootingOracle;
  throw std::invalid_argument("unknown method tag: " + std::string(text));
}

double spectral_fn(double nu, double alpha, const SeriesConfig& cfg) {
  const auto h = hermite_fn_pair(HermiteOrder{nu}, alpha, cfg);
  return h.value * h.value - 2.0 * nu * h.lower * h.lower;
}

double scaled_residual(double nu, double alpha, const SeriesConfig& cfg) {
  const auto h = hermite_fn_pair(HermiteOrder{nu}, alpha, cfg);
  const double a = h.value * h.value;
  const double b = 2.0 * nu * h.lower * h.lower;
  const double scale = std::abs(a) + std::abs(b);
  return scale > 0.0 ? std::abs(a - b) / scale : 0.0;
}

std::vector<Bracket> bracket_roots(double alpha, double nu_max, double step) {
  if (!(nu_max > 0.0)) throw std::invalid_argument("bracket_roots: nu_max must be > 0");
  if (!(step > 0.0 && step <= 0.5)) throw std::invalid_argument("bracket_roots: step must be in (0, 0.5]");

  auto sample = [&](double nu) {
    const double f = spectral_fn(nu, alpha);
    if (!std::isfinite(f)) {
      throw ScanFailure("bracket_roots: f(" + std::to_string(nu) + ") is not finite");
    }
    return f;
  };

  std::vector<Bracket> out;
  double nu_prev = 0.0;
  double f_prev = 1.0;  // f(0; alpha) = H_0^2 = 1
  const auto n_steps = static_cast<long>(std::ceil(nu_max / step - 1e-9));
  for (long i = 1; i <= n_steps; ++i) {
    double nu = std::min(static_cast<double>(i) * step, nu_max);
    double f = sample(nu);
    if (f == 0.0) {
      nu += step * 1e-3;
      f = sample(nu);
    }
    if (std::signbit(f) != std::signbit(f_prev)) out.push_back({nu_prev, nu, f_prev, f});
    nu_prev = nu;
    f_prev = f;
  }
  return out;
}

double refine_root(const Bracket& bracket, double alpha, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("refine_root: tol must be > 0");
  if (!(bracket.nu_lo < bracket.nu_hi) || std::signbit(bracket.f_lo) == std::signbit(bracket.f_hi) ||
      bracket.f_lo == 0.0 || bracket.f_hi == 0.0) {
    throw std::invalid_argument("refine_root: invalid bracket");
  }
  constexpr int kMaxIter = 200;
  const double eps = std::numeric_limits<double>::epsilon();

  // Brent's method: inverse quadratic / secant steps guarded by bisection.
  double a = bracket.nu_lo, fa = bracket.f_lo;
  double b = bracket.nu_hi, fb = bracket.f_hi;
  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int iter = 0; iter < kMaxIter; ++iter) {
    if (std::signbit(fb) == std::signbit(fc)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 = 2.0 * eps * std::abs(b) + 0.5 * tol;
    const double m = 0.5 * (c - b);
    if (std::abs(m) <= tol1 || fb == 0.0) {
      if (b <= bracket.nu_lo || b >= bracket.nu_hi) return 0.5 * (b + c);
      return b;
    }
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p, q, r;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {
        q = fa / fc;
        r = fb / fc;
        p = s * (2.0 * m * q * (q - r) - (b - a) * (r - 1.0));
        q = (q - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q; else p = -p;
      if (2.0 * p < std::min(3.0 * m * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = m;
        e = d;
      }
    } else {
      d = m;
      e = d;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol1 ? d : std::copysign(tol1, m);
    fb = spectral_fn(b, alpha);
    if (!std::isfinite(fb)) throw ScanFailure("refine_root: f is not finite at " + std::to_string(b));
  }
  throw MaxIterations("refine_root: no convergence in 200 iterations");
}

namespace {

bool brackets_touch(const std::vector<Bracket>& brackets) {
  for (std::size_t i = 1; i < brackets.size(); ++i) {
    if (brackets[i].nu_lo == brackets[i - 1].nu_hi) return true;
  }
  return false;
}

}  // namespace

std::vector<EigenvalueRecord> eigenvalues(const PhysicalParams& params, int count,
                                          const SpectralOptions& opts) {
  if (count < 1) throw std::invalid_argument("eigenvalues: count must be >= 1");
  const double alpha = params.alpha();

  double nu_max = static_cast<double>(count) + alpha * alpha + 1.0;
  std::vector<Bracket> brackets;
  for (;;) {
    double step = opts.scan_step;
    brackets = bracket_roots(alpha, nu_max, step);
    while (brackets_touch(brackets) && step > opts.min_scan_step) {
      step = std::max(step / 2.0, opts.min_scan_step);
      brackets = bracket_roots(alpha, nu_max, step);
    }
    if (brackets.size() >= static_cast<std::size_t>(count)) break;
    nu_max *= 2.0;
    if (nu_max > 1e4) throw ScanFailure("eigenvalues: scan window exceeded nu = 1e4");
  }

  std::vector<EigenvalueRecord> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double nu = refine_root(brackets[static_cast<std::size_t>(i)], alpha, opts.refine_tol);
    const double energy = std::sqrt(2.0 * nu * params.coupling());
    out.push_back({i, nu, energy, -energy, scaled_residual(nu, alpha), Method::SpectralCondition});
  }
  return out;
}

IntegerLevelResiduals br_condition_residual(int n, double alpha) {
  if (n < 0) throw std::invalid_argument("br_condition_residual: n must be >= 0");
  const auto h = hermite_fn_pair(HermiteOrder{static_cast<double>(n + 1)}, alpha);
  const double scaled = std::sqrt(2.0 * (n + 1)) * h.lower;
  return {h.value - scaled, h.value + scaled};
}

double br_energy(int n, const PhysicalParams& params) {
  if (n < 0) throw std::invalid_argument("br_energy: n must be >= 0");
  return std::sqrt(2.0 * (n + 1) * params.coupling());
}

}  // namespace dirac1d
