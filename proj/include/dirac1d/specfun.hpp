#pragma once
// Special functions on the real axis: Kummer's confluent hypergeometric
// series, the reciprocal gamma function and Hermite functions H_nu(z) of
// arbitrary real order.
//
// Everything here is header-only and templated on the scalar type so the
// same code serves double and long double callers.

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "dirac1d/errors.hpp"

namespace dirac1d {

/// Truncation policy for the hypergeometric series.
struct SeriesConfig {
  double rel_tol = 1e-16;
  int max_terms = 500;

  void validate() const {
    if (!(rel_tol > 0.0)) throw std::invalid_argument("SeriesConfig: rel_tol must be > 0");
    if (max_terms < 50) throw std::invalid_argument("SeriesConfig: max_terms must be >= 50");
  }
};

/// Order nu of a Hermite function. Any finite real is admissible.
template <typename Scalar = double>
class HermiteOrder {
 public:
  explicit HermiteOrder(Scalar nu) : nu_(nu) {
    if (!std::isfinite(nu)) throw std::invalid_argument("HermiteOrder: order must be finite");
  }
  Scalar value() const { return nu_; }
  HermiteOrder shifted(Scalar delta) const { return HermiteOrder(nu_ + delta); }

 private:
  Scalar nu_;
};

template <typename Scalar>
HermiteOrder(Scalar) -> HermiteOrder<Scalar>;

/// H_{nu-1}(z) and H_nu(z) evaluated together.
template <typename Scalar>
struct HermitePair {
  Scalar lower;  // H_{nu-1}(z)
  Scalar value;  // H_nu(z)
};

// Series are evaluated for z at most this large; beyond it the positive
// half-line uses the integral/recurrence route. Negative arguments are
// accepted down to -kHermiteSeriesWindow.
inline constexpr double kHermiteSeriesSwitch = 3.0;
inline constexpr double kHermiteSeriesWindow = 6.0;

namespace detail {

// Neumaier's variant of Kahan summation.
template <typename Scalar>
class CompensatedSum {
 public:
  void add(Scalar x) {
    const Scalar t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  Scalar value() const { return sum_ + comp_; }

 private:
  Scalar sum_{0};
  Scalar comp_{0};
};

template <typename Scalar>
bool is_nonpositive_integer(Scalar x) {
  return x <= Scalar(0) && x == std::floor(x);
}

// sin(pi x) with exact argument reduction, so integer x gives an exact zero.
template <typename Scalar>
Scalar sin_pi(Scalar x) {
  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  Scalar r = x - Scalar(2) * std::round(x / Scalar(2));  // r in [-1, 1], exact
  if (r > Scalar(0.5)) {
    r = Scalar(1) - r;
  } else if (r < Scalar(-0.5)) {
    r = Scalar(-1) - r;
  }
  return std::sin(pi * r);
}

// Double-exponential (exp-sinh) quadrature of
//   (1/Gamma(s)) * int_0^inf u^(s-1) exp(-u - c u^2) du ,   s >= 1/2, c >= 0.
template <typename Scalar>
Scalar gamma_weighted_integral(Scalar s, Scalar c);

// H_{-s}(z) for s >= 1/2 and z > 0 through
//   H_{-s}(z) = 1/Gamma(s) int_0^inf t^(s-1) exp(-t^2 - 2 z t) dt .
template <typename Scalar>
Scalar hermite_negative_order(Scalar s, Scalar z) {
  const Scalar two_z = Scalar(2) * z;
  return std::pow(two_z, -s) * gamma_weighted_integral(s, Scalar(1) / (two_z * two_z));
}

// Positive-argument route: seed two orders in (-2.5, -0.5] from the integral
// representation and run the three-term recurrence upward, which is the
// dominant direction for z > 0.
template <typename Scalar>
HermitePair<Scalar> hermite_pair_continued(Scalar nu, Scalar z) {
  if (nu < Scalar(-0.5)) {
    return {hermite_negative_order(Scalar(1) - nu, z), hermite_negative_order(-nu, z)};
  }
  const Scalar steps = std::floor(nu + Scalar(1.5));
  const Scalar mu0 = nu - steps;  // in (-1.5, -0.5]
  Scalar prev = hermite_negative_order(Scalar(1) - mu0, z);
  Scalar cur = hermite_negative_order(-mu0, z);
  const long n = static_cast<long>(steps);
  for (long i = 0; i < n; ++i) {
    const Scalar mu = mu0 + Scalar(i);
    const Scalar next = Scalar(2) * z * cur - Scalar(2) * mu * prev;
    prev = cur;
    cur = next;
  }
  return {prev, cur};
}

}  // namespace detail

/// Kummer's function Phi(a, b; z) = sum_k (a)_k / (b)_k z^k / k!.
///
/// Summation is compensated. A non-positive integer `a` gives a polynomial,
/// which is summed to its last term; otherwise the series stops once two
/// consecutive terms fall below `rel_tol` times the running sum.
template <typename Scalar>
Scalar kummer_phi(Scalar a, Scalar b, Scalar z, const SeriesConfig& cfg = {}) {
  cfg.validate();
  if (detail::is_nonpositive_integer(b)) {
    throw InvalidPole("kummer_phi: b = " + std::to_string(static_cast<double>(b)) +
                      " is a pole");
  }
  detail::CompensatedSum<Scalar> sum;
  Scalar term{1};
  sum.add(term);

  if (detail::is_nonpositive_integer(a)) {
    const long last = static_cast<long>(-a);
    for (long k = 0; k < last; ++k) {
      const Scalar kk = Scalar(k);
      term *= (a + kk) / (b + kk) * z / (kk + Scalar(1));
      sum.add(term);
    }
    return sum.value();
  }

  const Scalar tol = static_cast<Scalar>(cfg.rel_tol);
  const Scalar abs_z = std::abs(z);
  int small_run = 0;
  for (int k = 0; k + 1 < cfg.max_terms; ++k) {
    const Scalar kk = Scalar(k);
    term *= (a + kk) / (b + kk) * z / (kk + Scalar(1));
    sum.add(term);
    // Terms only decay for good once k exceeds |z|; before that a tiny term
    // near the sign change of (a + k) says nothing about the tail.
    if (std::abs(term) < tol * std::abs(sum.value()) && kk + Scalar(1) > abs_z) {
      if (++small_run == 2) return sum.value();
    } else {
      small_run = 0;
    }
  }
  throw NoConvergence("kummer_phi: no convergence after " + std::to_string(cfg.max_terms) +
                      " terms");
}

/// 1/Gamma(x). Entire; exactly zero at x = 0, -1, -2, ...
template <typename Scalar>
Scalar reciprocal_gamma(Scalar x) {
  if (std::isnan(x)) return x;
  if (x > Scalar(0)) return Scalar(1) / std::tgamma(x);
  if (x == std::floor(x)) return Scalar(0);
  // Reflection: 1/Gamma(x) = Gamma(1 - x) sin(pi x) / pi.
  constexpr Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar reflected = Scalar(1) - x;
  const Scalar s = detail::sin_pi(x);
  const Scalar g = std::tgamma(reflected);
  if (std::isfinite(g)) return g * s / pi;
  const Scalar mag = std::exp(std::lgamma(reflected) + std::log(std::abs(s) / pi));
  return s < Scalar(0) ? -mag : mag;
}

/// Hermite function H_nu(z) for real order nu and real z >= -6.
///
/// For |z| <= 3 this is the two-series Kummer representation
///   H_nu(z) = 2^nu sqrt(pi) [ Phi(-nu/2, 1/2; z^2) / Gamma((1-nu)/2)
///                           - 2 z Phi((1-nu)/2, 3/2; z^2) / Gamma(-nu/2) ],
/// which reduces to the Hermite polynomial H_n at non-negative integer order.
/// At larger positive z the two series cancel, so the value there comes
/// from the integral representation of negative orders continued upward by
/// H_{mu+1} = 2 z H_mu - 2 mu H_{mu-1}.
template <typename Scalar>
Scalar hermite_fn(HermiteOrder<Scalar> order, Scalar z, const SeriesConfig& cfg = {}) {
  if (!std::isfinite(z) || z < Scalar(-kHermiteSeriesWindow)) {
    throw std::domain_error("hermite_fn: argument outside [-6, inf)");
  }
  const Scalar nu = order.value();
  if (z > Scalar(kHermiteSeriesSwitch)) return detail::hermite_pair_continued(nu, z).value;

  const Scalar z2 = z * z;
  const Scalar even_coef = reciprocal_gamma((Scalar(1) - nu) / Scalar(2));
  const Scalar odd_coef = reciprocal_gamma(-nu / Scalar(2));
  Scalar bracket{0};
  if (even_coef != Scalar(0)) {
    bracket += even_coef * kummer_phi(-nu / Scalar(2), Scalar(0.5), z2, cfg);
  }
  if (odd_coef != Scalar(0) && z != Scalar(0)) {
    bracket -= Scalar(2) * odd_coef * z * kummer_phi((Scalar(1) - nu) / Scalar(2), Scalar(1.5), z2, cfg);
  }
  return std::exp2(nu) * std::sqrt(std::numbers::pi_v<Scalar>) * bracket;
}

/// H_{nu-1}(z) and H_nu(z) in one call; shares the recurrence on the
/// large-argument route.
template <typename Scalar>
HermitePair<Scalar> hermite_fn_pair(HermiteOrder<Scalar> order, Scalar z, const SeriesConfig& cfg = {}) {
  if (std::isfinite(z) && z > Scalar(kHermiteSeriesSwitch)) {
    return detail::hermite_pair_continued(order.value(), z);
  }
  return {hermite_fn(order.shifted(Scalar(-1)), z, cfg), hermite_fn(order, z, cfg)};
}

/// dH_nu/dz = 2 nu H_{nu-1}(z).
template <typename Scalar>
Scalar hermite_fn_deriv(HermiteOrder<Scalar> order, Scalar z, const SeriesConfig& cfg = {}) {
  const Scalar nu = order.value();
  if (nu == Scalar(0)) return Scalar(0);
  return Scalar(2) * nu * hermite_fn(order.shifted(Scalar(-1)), z, cfg);
}

/// Leading large-z behaviour (2z)^nu, z > 0.
template <typename Scalar>
Scalar hermite_asymptotic(HermiteOrder<Scalar> order, Scalar z) {
  if (!(z > Scalar(0))) throw std::domain_error("hermite_asymptotic: requires z > 0");
  return std::pow(Scalar(2) * z, order.value());
}

namespace detail {

template <typename Scalar>
Scalar gamma_weighted_integral(Scalar s, Scalar c) {
  using std::cosh;
  using std::exp;
  using std::sinh;
  constexpr Scalar half_pi = std::numbers::pi_v<Scalar> / Scalar(2);
  constexpr Scalar tau_max = Scalar(6);
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();

  // Integrand after u = exp(pi/2 sinh tau), including the Jacobian.
  auto integrand = [&](Scalar tau) {
    const Scalar v = half_pi * sinh(tau);
    const Scalar u = exp(v);
    return exp(s * v - u - c * u * u) * half_pi * cosh(tau);
  };

  // Adds samples at tau = offset + k*step on both sides, stopping a
  // direction once it is past the peak and negligible.
  auto sweep = [&](Scalar offset, Scalar step, Scalar scale) {
    CompensatedSum<Scalar> acc;
    for (int dir : {1, -1}) {
      for (Scalar tau = offset * Scalar(dir); std::abs(tau) <= tau_max; tau += Scalar(dir) * step) {
        const Scalar f = integrand(tau);
        acc.add(f);
        if (std::abs(tau) > Scalar(1) && f < eps * eps * scale) break;
      }
    }
    return acc.value();
  };

  Scalar h = Scalar(0.5);
  Scalar raw = integrand(Scalar(0)) + sweep(h, h, Scalar(1));
  Scalar estimate = h * raw;
  for (int level = 0; level < 10; ++level) {
    const Scalar fresh = sweep(h / Scalar(2), h, raw);  // odd points of the finer grid
    raw += fresh;
    h /= Scalar(2);
    const Scalar refined = h * raw;
    const bool done = level >= 2 && std::abs(refined - estimate) <= Scalar(1e-13) * std::abs(refined);
    estimate = refined;
    if (done) break;
  }
  return estimate * reciprocal_gamma(s);
}

}  // namespace detail

}  // namespace dirac1d
