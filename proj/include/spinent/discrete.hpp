#pragma once
// Singlet pairs whose spins are rotated conditionally on momentum: the
// brute-force joint-state route and the closed-form negativities it checks.

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "spinent/qmat.hpp"
#include "spinent/quad.hpp"

namespace spinent::discrete {

/// Largest momentum grid per particle accepted by the joint-state builder
/// (amplitude vector length 4 n^2 <= 1024).
inline constexpr std::size_t kMaxModes = 16;

/// Rotation angle theta_p for each discrete momentum label.
struct AngleProfile {
  std::vector<double> momenta;
  std::vector<double> angles;  // radians

  /// Labels 0, 1, ..., n-1.
  static AngleProfile from_angles(std::vector<double> angles);
  std::size_t size() const noexcept { return angles.size(); }
};

/// Probability of each momentum label; must sum to 1.
struct MomentumWeights {
  std::vector<double> w;

  static MomentumWeights uniform(std::size_t n);
  std::size_t size() const noexcept { return w.size(); }
};

struct ParticleModes {
  AngleProfile angles;
  MomentumWeights weights;
};

enum class Rotation {
  BothParticles,  // equal interaction angles on A and B
  ParticleAOnly,
};

/// Two-particle amplitude vector indexed (p_a, s_a, p_b, s_b), spin 0 = up.
class JointState {
 public:
  JointState(std::size_t n_a, std::size_t n_b);

  std::size_t n_a() const noexcept { return n_a_; }
  std::size_t n_b() const noexcept { return n_b_; }
  std::size_t index(std::size_t pa, int sa, std::size_t pb, int sb) const noexcept {
    return ((pa * 2 + static_cast<std::size_t>(sa)) * n_b_ + pb) * 2 + static_cast<std::size_t>(sb);
  }
  cplx& at(std::size_t pa, int sa, std::size_t pb, int sb) noexcept {
    return amps_[index(pa, sa, pb, sb)];
  }
  cplx at(std::size_t pa, int sa, std::size_t pb, int sb) const noexcept {
    return amps_[index(pa, sa, pb, sb)];
  }
  std::span<const cplx> amplitudes() const noexcept { return amps_; }

  double norm2() const;
  void normalize();

 private:
  std::size_t n_a_;
  std::size_t n_b_;
  std::vector<cplx> amps_;
};

/// Singlet with momentum amplitudes sqrt(w_i), then the real rotation
/// |up> -> cos t |up> + sin t |down>, |down> -> -sin t |up> + cos t |down>
/// with t = theta(p) applied to A (and to B when rotation == BothParticles).
/// Throws DomainError for an empty or inconsistent profile, unnormalised
/// weights or non-finite angles; DimensionError above kMaxModes.
JointState build_joint_state(const AngleProfile& angles, const MomentumWeights& weights,
                             Rotation rotation);
JointState build_joint_state(const ParticleModes& a, const ParticleModes& b, Rotation rotation);

/// Density matrix of the full state traced over both momentum registers.
SpinDensity spin_density_from_state(const JointState& state);

/// Brute-force route: build the state, trace, partially transpose, diagonalise.
double negativity_oracle(const AngleProfile& angles, const MomentumWeights& weights,
                         Rotation rotation = Rotation::BothParticles);
std::vector<double> pt_spectrum_oracle(const AngleProfile& angles, const MomentumWeights& weights,
                                       Rotation rotation = Rotation::BothParticles);

/// cos^2(theta1 - theta2).
double negativity_bimodal(double theta1, double theta2);

/// |1 - (2/n^2) sum_ij cos^2(theta_i - theta_j)| for uniformly weighted modes.
double negativity_uniform(std::span<const double> angles);

/// {1/2, 1/2, +-(1/2 - (1/n^2) sum_ij cos^2(theta_i - theta_j))}, ascending.
std::array<double, 4> pt_spectrum_uniform(std::span<const double> angles);

using DensityFn = std::function<double(double)>;
using AngleFn = std::function<double(double)>;

/// |1 - 2 int int rho(p) rho(p') cos^2(theta(p) - theta(p')) dp dp'| over
/// [low, high]^2, evaluated on the upper triangle p' > p and doubled.
/// Throws DomainError if rho does not integrate to 1 within 1e-8, and
/// ConvergenceError if either quadrature level fails to reach tol.
Estimate negativity_continuous(const DensityFn& density, const AngleFn& theta, double low,
                               double high, double tol);

}  // namespace spinent::discrete
