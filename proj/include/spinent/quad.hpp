#pragma once
// Globally adaptive Gauss-Kronrod (7/15) quadrature for complex-valued
// integrands of one real variable, plus the two specialised drivers the
// physics modules need: Gaussian-weighted semi-infinite integrals and
// integrals through an isolated essential singularity of the form
// exp(i A / (x - s)^2).

#include <complex>
#include <cstddef>
#include <functional>
#include <span>

namespace spinent {

/// Real value with an absolute error estimate.
struct Estimate {
  double value = 0.0;
  double error_estimate = 0.0;
};

}  // namespace spinent

namespace spinent::quad {

using cplx = std::complex<double>;
using RealToComplex = std::function<cplx(double)>;
using AnalyticFn = std::function<cplx(cplx)>;

inline constexpr int kDefaultMaxDepth = 60;
/// Gaussian-weighted integrals are truncated at mean +- kGaussianCut * width.
inline constexpr double kGaussianCut = 12.0;

struct QuadResult {
  cplx value{};
  double error_estimate = 0.0;  // absolute
  std::size_t panels = 0;
};

/// Integral of f over [a, b] with |error| estimated <= tol.
///
/// Panels are bisected worst-first until the summed Kronrod-Gauss
/// differences fall below `tol`. A panel that would need more than
/// `max_depth` bisections raises ConvergenceError carrying the best value
/// and the achieved estimate. Deterministic: no randomisation anywhere.
QuadResult integrate_adaptive(const RealToComplex& f, double a, double b, double tol,
                              int max_depth = kDefaultMaxDepth);

/// As integrate_adaptive, but starts from the given ascending breakpoints
/// (first and last are the integration limits).
QuadResult integrate_adaptive(const RealToComplex& f, std::span<const double> breaks, double tol,
                              int max_depth = kDefaultMaxDepth);

/// Normalised Gaussian density with the |G|^2 convention:
/// exp(-(x - mean)^2 / width^2) / (sqrt(pi) width), variance width^2 / 2.
double gaussian_density(double x, double mean, double width);

/// Integral of gaussian_density(x) * g(x) over
/// (max(lower_cut, mean - 12 width), mean + 12 width). The density is not
/// renormalised on the truncated interval; see gaussian_mass for that.
QuadResult integrate_gaussian_weighted(const RealToComplex& g, double mean, double width,
                                       double lower_cut, double tol,
                                       int max_depth = kDefaultMaxDepth);

/// Mass of gaussian_density on the interval used by integrate_gaussian_weighted.
double gaussian_mass(double mean, double width, double lower_cut);

/// Phase model exp(i phase_scale / (x - singular_at)^2 * (smooth)) that
/// dictates the detour direction around the singular point. Only the sign
/// of phase_scale matters for the contour; zero disables the detour.
struct ResonantPhase {
  double singular_at = 0.0;
  double phase_scale = 0.0;
  /// Half-width of the complex detour. Non-positive selects a default of
  /// min(1, (s - a) / 2, (b - s) / 2, |s| / 2).
  double detour_half_width = 0.0;
};

/// Integral over [a, b] of an integrand that is analytic in a neighbourhood
/// of the real segment except for an essential singularity at
/// `singular_at`, where it behaves like exp(i A / (x - s)^2) with
/// sign(A) = sign(phase_scale).
///
/// The window (s - h, s + h) is replaced by a contour through s along the
/// direction in which exp(i A / (x - s)^2) decays (angle -pi/4 for A > 0),
/// joined to the real axis by two vertical legs. By Cauchy's theorem the
/// value is unchanged; the integrand on the detour is smooth and
/// non-oscillatory. Falls back to integrate_adaptive when phase_scale == 0
/// or when singular_at is not strictly inside (a, b).
QuadResult integrate_oscillatory_window(const AnalyticFn& f, double a, double b,
                                        const ResonantPhase& phase, double tol,
                                        int max_depth = kDefaultMaxDepth);

}  // namespace spinent::quad
