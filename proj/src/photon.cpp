#include "spinent/photon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "spinent/error.hpp"

namespace spinent::photon {

void PhotonMediumParams::validate() const {
  auto fail = [](const std::string& what) { throw DomainError("PhotonMediumParams: " + what); };
  if (!(p0 > 0.0)) fail("p0 must be positive");
  if (!(sigma > 0.0)) fail("sigma must be positive");
  if (!(w0 > 0.0)) fail("w0 must be positive");
  if (!(L >= 0.0)) fail("L must be non-negative");
  if (!(wc >= 0.0)) fail("wc must be non-negative");
  if (!(plasma >= 0.0)) fail("plasma must be non-negative");
  if (!(btildeL >= 0.0)) fail("btildeL must be non-negative");
  if (!(quad_tol > 0.0)) fail("quad_tol must be positive");
}

Susceptibility susceptibility(double w, const PhotonMediumParams& params) {
  const double detuning = params.w0 * params.w0 - w * w;
  const double den = detuning * detuning + w * w * params.wc * params.wc;
  if (den == 0.0) {
    throw DomainError("susceptibility: undamped resonance at w = " + std::to_string(w));
  }
  return {params.plasma * detuning / den, params.plasma * w * params.wc / den};
}

RefractionIndices refraction_indices(double w, const PhotonMediumParams& params) {
  const auto chi = susceptibility(w, params);
  const double right = 1.0 + chi.chi11 + chi.chi12;
  const double left = 1.0 + chi.chi11 - chi.chi12;
  if (!(right > 0.0) || !(left > 0.0)) {
    throw DomainError("refraction_indices: non-positive radicand at w = " + std::to_string(w) +
                      " (1 + chi11 + chi12 = " + std::to_string(right) +
                      ", 1 + chi11 - chi12 = " + std::to_string(left) + ")");
  }
  return {std::sqrt(right), std::sqrt(left)};
}

cplx transmission_phase(double w, Polarization s, const PhotonMediumParams& params) {
  const auto n = refraction_indices(w, params);
  const double index = s == Polarization::Right ? n.n_right : n.n_left;
  return std::polar(1.0, w * index * params.L);
}

cplx relative_phase(double w, const PhotonMediumParams& params) {
  const auto n = refraction_indices(w, params);
  const auto chi = susceptibility(w, params);
  const double dn = 2.0 * chi.chi12 / (n.n_right + n.n_left);
  return std::polar(1.0, w * params.L * dn);
}

Estimate negativity_photon_full(const PhotonMediumParams& params) {
  params.validate();
  const double mass = quad::gaussian_mass(params.p0, params.sigma, 0.0);
  const auto r = quad::integrate_gaussian_weighted(
      [&](double w) { return relative_phase(w, params); }, params.p0, params.sigma, 0.0,
      params.quad_tol * mass);
  return {std::abs(r.value) / mass, r.error_estimate / mass};
}

Estimate negativity_photon_approx(const PhotonMediumParams& params) {
  return negativity_photon_approx(params, 0.0);
}

Estimate negativity_photon_approx(const PhotonMediumParams& params, double detour_half_width) {
  params.validate();
  const double lo = std::max(0.0, params.p0 - quad::kGaussianCut * params.sigma);
  const double hi = params.p0 + quad::kGaussianCut * params.sigma;
  const double norm = 1.0 / (std::sqrt(std::numbers::pi) * params.sigma);
  const double w0sq = params.w0 * params.w0;
  const cplx i(0.0, 1.0);

  auto integrand = [&](cplx w) {
    const cplx u = (w - params.p0) / params.sigma;
    if (params.btildeL == 0.0) return norm * std::exp(-u * u);
    const cplx d = w * w - w0sq;
    return norm * std::exp(-u * u + i * params.btildeL * w * w / (d * d));
  };

  quad::ResonantPhase phase{params.w0, params.btildeL, detour_half_width};
  if (phase.detour_half_width <= 0.0 && lo < params.w0 && params.w0 < hi) {
    // Keep the detour within a couple of widths so the Gaussian grows at most e^2 off-axis.
    phase.detour_half_width = std::min({2.0 * params.sigma, 0.5 * params.w0,
                                        0.5 * (params.w0 - lo), 0.5 * (hi - params.w0)});
  }
  const auto r = quad::integrate_oscillatory_window(integrand, lo, hi, phase, params.quad_tol);
  return {std::abs(r.value), r.error_estimate};
}

}  // namespace spinent::photon
