#pragma once
// Neutral spin-1/2 fermion crossing a slab of homogeneous magnetic field:
// spin-dependent transmission through the resulting mesa (up) / well (down)
// potential, the overlap integrals of the post-selected spin state, and
// Bob's reduced states with and without post-selection. Units hbar = 1.

#include "spinent/qmat.hpp"
#include "spinent/quad.hpp"

namespace spinent::fermion {

enum class Spin { Up, Down };

/// +1/2 for Up, -1/2 for Down.
constexpr double projection(Spin s) noexcept { return s == Spin::Up ? 0.5 : -0.5; }

struct FermionBarrierParams {
  double m = 100.0;       // mass
  double p0 = 10.0;       // mean longitudinal momentum
  double sigma = 2.0;     // momentum width of G(p); variance of |G|^2 is sigma^2 / 2
  double L = 3.0;         // slab length
  double gB0 = 0.2;       // coupling gamma * B0 (energy)
  double quad_tol = 1e-9;

  /// Throws DomainError unless m, p0, sigma, quad_tol > 0, L, gB0 >= 0 and sigma < p0.
  void validate() const;
};

struct ScatterAmplitudes {
  cplx t_up, t_down, r_up, r_down;
};

/// sqrt(p^2 - 2 s m gB0) on the branch with Im >= 0 (evanescent inside the
/// slab below threshold).
cplx momentum_inside(double p, Spin s, const FermionBarrierParams& params);

/// Amplitude of the transmitted plane wave e^{ipx} behind the slab:
/// 2 p p_s e^{-ipL} / (2 p p_s cos(p_s L) - i (p^2 + p_s^2) sin(p_s L)),
/// evaluated in an overflow-free form valid across the threshold.
cplx transmission(double p, Spin s, const FermionBarrierParams& params);

/// Amplitude of the reflected wave e^{-ipx}:
/// i (p_s^2 - p^2) sin(p_s L) / (same denominator).
cplx reflection(double p, Spin s, const FermionBarrierParams& params);

ScatterAmplitudes scatter(double p, const FermionBarrierParams& params);

/// I_ss' = int rho(p) T_s(p) T*_s'(p) / (|T_up|^2 + |T_down|^2) dp, with
/// rho the Gaussian |G|^2 renormalised on the truncated window inside (0, inf).
quad::QuadResult overlap_integral(Spin s, Spin s2, const FermionBarrierParams& params);

/// N = 2 |I_ud|.
Estimate negativity_fermion(const FermionBarrierParams& params);

enum class Postselection {
  /// |T_up|^2 + |T_down|^2 divides the integrand at each momentum.
  PerMomentum,
  /// Transmitted block integrated first, then divided by its trace.
  AfterTrace,
};

/// Post-selected two-spin state: only the (ud, du) block is populated,
/// [[I_uu, -I_ud], [-I_du, I_dd]].
struct PostselectedState {
  SpinDensity rho;
  double error_estimate;
};
PostselectedState postselected_state(const FermionBarrierParams& params,
                                     Postselection convention = Postselection::PerMomentum);

struct BobState {
  ComplexMatrix rho;  // 2x2 in (up, down)
  double error_estimate;
};

/// diag(I_dd, I_uu): B is down whenever A is up.
BobState bob_reduced_postselected(const FermionBarrierParams& params);

/// (1/2) diag(int rho (|R_d|^2 + |T_d|^2), int rho (|R_u|^2 + |T_u|^2)),
/// keeping reflected and transmitted packets; equals I/2 by flux conservation.
BobState bob_reduced_full(const FermionBarrierParams& params);

/// Smallest coupling gB0 for which Bob's post-selected up-population I_dd
/// reaches `up_fraction` (in (0.5, 1)), found by bisection.
double field_for_postselected_bias(FermionBarrierParams params, double up_fraction);

}  // namespace spinent::fermion
