#pragma once
// Photon crossing a magneto-optically active dielectric (Faraday geometry):
// Lorentz-oscillator susceptibility in a longitudinal field, circular
// refraction indices, pure-phase transmission and the resulting
// polarisation negativity. Units hbar = c = 1.

#include <complex>

#include "spinent/quad.hpp"

namespace spinent::photon {

using cplx = std::complex<double>;

struct PhotonMediumParams {
  double p0 = 10.0;       // mean frequency
  double sigma = 2.0;     // frequency width; variance of the weight is sigma^2 / 2
  double w0 = 10.0;       // resonance frequency of the medium
  double wc = 0.01;       // cyclotron frequency e|B0|/m
  double plasma = 0.05;   // N e^2 / (m eps0)
  double L = 1.0;         // medium length
  double btildeL = 4.0;   // B~ L, used by the small-wc approximation
  double quad_tol = 1e-9;

  /// Throws DomainError unless p0, sigma, w0, quad_tol > 0 and L, wc, plasma, btildeL >= 0.
  void validate() const;
};

/// B~ = N e^3 |B0| / (m^2 eps0) = plasma * wc.
constexpr double btilde(double plasma, double wc) noexcept { return plasma * wc; }

struct Susceptibility {
  double chi11;
  double chi12;
};

/// chi11 = P (w0^2 - w^2) / D, chi12 = P w wc / D, D = (w0^2 - w^2)^2 + w^2 wc^2.
Susceptibility susceptibility(double w, const PhotonMediumParams& params);

struct RefractionIndices {
  double n_right;  // sqrt(1 + chi11 + chi12)
  double n_left;   // sqrt(1 + chi11 - chi12)
};

/// Throws DomainError naming w when either radicand is not positive.
RefractionIndices refraction_indices(double w, const PhotonMediumParams& params);

enum class Polarization { Right, Left };

/// exp(i w n_s(w) L).
cplx transmission_phase(double w, Polarization s, const PhotonMediumParams& params);

/// T_R(w) T_L*(w) = exp(i w L (n_R - n_L)), with the index difference
/// formed as 2 chi12 / (n_R + n_L).
cplx relative_phase(double w, const PhotonMediumParams& params);

/// |int rho(w) T_R(w) T_L*(w) dw| with rho the Gaussian weight renormalised
/// on the truncated window inside (0, inf). Keeps wc in the resonance
/// denominators, so the integrand is regular at w0.
Estimate negativity_photon_full(const PhotonMediumParams& params);

/// (1 / (sqrt(pi) sigma)) |int_0^inf exp(-(w - p0)^2 / sigma^2)
///                              exp(i B~L w^2 / (w^2 - w0^2)^2) dw|.
/// The essential singularity at w0 is handled by a complex detour.
Estimate negativity_photon_approx(const PhotonMediumParams& params);

/// Same integral with an explicit detour half-width (<= 0 picks the default).
Estimate negativity_photon_approx(const PhotonMediumParams& params, double detour_half_width);

}  // namespace spinent::photon
