#include "spinent/discrete.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "spinent/error.hpp"

namespace spinent::discrete {

AngleProfile AngleProfile::from_angles(std::vector<double> angles) {
  AngleProfile p;
  p.momenta.resize(angles.size());
  std::iota(p.momenta.begin(), p.momenta.end(), 0.0);
  p.angles = std::move(angles);
  return p;
}

MomentumWeights MomentumWeights::uniform(std::size_t n) {
  if (n == 0) throw DomainError("MomentumWeights::uniform: n must be positive");
  return {std::vector<double>(n, 1.0 / static_cast<double>(n))};
}

JointState::JointState(std::size_t n_a, std::size_t n_b)
    : n_a_(n_a), n_b_(n_b), amps_(4 * n_a * n_b) {}

double JointState::norm2() const {
  double s = 0.0;
  for (const auto& z : amps_) s += std::norm(z);
  return s;
}

void JointState::normalize() {
  const double n = std::sqrt(norm2());
  if (n == 0.0) throw DomainError("JointState::normalize: zero state");
  for (auto& z : amps_) z /= n;
}

namespace {

void validate(const ParticleModes& m, const char* who) {
  const auto& th = m.angles.angles;
  if (th.empty()) throw DomainError(std::string(who) + ": empty angle profile");
  if (m.angles.momenta.size() != th.size())
    throw DomainError(std::string(who) + ": momenta and angles differ in length");
  if (m.weights.size() != th.size())
    throw DomainError(std::string(who) + ": weights and angles differ in length");
  if (th.size() > kMaxModes)
    throw DimensionError(std::string(who) + ": more than " + std::to_string(kMaxModes) +
                         " momentum modes");
  for (double t : th)
    if (!std::isfinite(t)) throw DomainError(std::string(who) + ": non-finite angle");
  double total = 0.0;
  for (double w : m.weights.w) {
    if (!(w >= 0.0)) throw DomainError(std::string(who) + ": negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-10)
    throw DomainError(std::string(who) + ": weights sum to " + std::to_string(total));
}

// Columns of the rotation: image of |up> and |down>.
struct SpinRotation {
  double c, s;
  // <out|R|in>
  double operator()(int out, int in) const {
    if (in == 0) return out == 0 ? c : s;
    return out == 0 ? -s : c;
  }
};

}  // namespace

JointState build_joint_state(const ParticleModes& a, const ParticleModes& b, Rotation rotation) {
  validate(a, "build_joint_state (particle A)");
  validate(b, "build_joint_state (particle B)");
  const std::size_t na = a.angles.size();
  const std::size_t nb = b.angles.size();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  JointState state(na, nb);
  for (std::size_t pa = 0; pa < na; ++pa) {
    const SpinRotation ra{std::cos(a.angles.angles[pa]), std::sin(a.angles.angles[pa])};
    for (std::size_t pb = 0; pb < nb; ++pb) {
      const SpinRotation rb = rotation == Rotation::BothParticles
                                  ? SpinRotation{std::cos(b.angles.angles[pb]),
                                                 std::sin(b.angles.angles[pb])}
                                  : SpinRotation{1.0, 0.0};
      const double amp = std::sqrt(a.weights.w[pa] * b.weights.w[pb]) * inv_sqrt2;
      // Singlet: +|up, down> - |down, up>.
      for (int sa = 0; sa < 2; ++sa)
        for (int sb = 0; sb < 2; ++sb)
          state.at(pa, sa, pb, sb) = amp * (ra(sa, 0) * rb(sb, 1) - ra(sa, 1) * rb(sb, 0));
    }
  }
  state.normalize();
  return state;
}

JointState build_joint_state(const AngleProfile& angles, const MomentumWeights& weights,
                             Rotation rotation) {
  const ParticleModes m{angles, weights};
  return build_joint_state(m, m, rotation);
}

SpinDensity spin_density_from_state(const JointState& state) {
  const auto rho = ComplexMatrix::outer(state.amplitudes());
  const std::size_t dims[] = {state.n_a(), 2, state.n_b(), 2};
  const std::size_t keep[] = {1, 3};
  auto spin = partial_trace(rho, dims, keep);
  // Remove the last-ulp asymmetry of the summation before validation.
  for (std::size_t i = 0; i < 4; ++i) {
    spin(i, i) = spin(i, i).real();
    for (std::size_t j = i + 1; j < 4; ++j) spin(j, i) = std::conj(spin(i, j));
  }
  return SpinDensity(std::move(spin));
}

double negativity_oracle(const AngleProfile& angles, const MomentumWeights& weights,
                         Rotation rotation) {
  return negativity(spin_density_from_state(build_joint_state(angles, weights, rotation)));
}

std::vector<double> pt_spectrum_oracle(const AngleProfile& angles, const MomentumWeights& weights,
                                       Rotation rotation) {
  const auto rho = spin_density_from_state(build_joint_state(angles, weights, rotation));
  return hermitian_eigenvalues(partial_transpose(rho.matrix(), 2, 2, Subsystem::B));
}

double negativity_bimodal(double theta1, double theta2) {
  const double c = std::cos(theta1 - theta2);
  return c * c;
}

namespace {
double mean_cos2(std::span<const double> angles) {
  if (angles.empty()) throw DomainError("closed-form negativity: empty angle list");
  const double n = static_cast<double>(angles.size());
  double sum = 0.0;
  for (double ti : angles)
    for (double tj : angles) {
      const double c = std::cos(ti - tj);
      sum += c * c;
    }
  return sum / (n * n);
}
}  // namespace

double negativity_uniform(std::span<const double> angles) {
  return std::abs(1.0 - 2.0 * mean_cos2(angles));
}

std::array<double, 4> pt_spectrum_uniform(std::span<const double> angles) {
  const double x = 0.5 - mean_cos2(angles);
  std::array<double, 4> ev{0.5, 0.5, x, -x};
  std::sort(ev.begin(), ev.end());
  return ev;
}

Estimate negativity_continuous(const DensityFn& density, const AngleFn& theta, double low,
                               double high, double tol) {
  if (!(low < high)) throw DomainError("negativity_continuous: empty domain");
  if (!(tol > 0.0)) throw DomainError("negativity_continuous: tolerance must be positive");

  auto rho = [&density](double p) { return quad::cplx(density(p), 0.0); };
  const auto mass = quad::integrate_adaptive(rho, low, high, std::min(1e-10, tol));
  if (std::abs(mass.value.real() - 1.0) > 1e-8) {
    throw DomainError("negativity_continuous: density integrates to " +
                      std::to_string(mass.value.real()) + " on the domain");
  }

  const double inner_tol = tol / 4.0;
  double worst_inner = 0.0;
  auto outer = [&](double p) -> quad::cplx {
    const double rp = density(p);
    if (rp == 0.0 || p >= high) return 0.0;
    const double tp = theta(p);
    auto row = [&](double q) {
      const double c = std::cos(tp - theta(q));
      return quad::cplx(density(q) * c * c, 0.0);
    };
    const auto in = quad::integrate_adaptive(row, p, high, inner_tol);
    worst_inner = std::max(worst_inner, in.error_estimate);
    return 2.0 * rp * in.value;
  };
  const auto total = quad::integrate_adaptive(outer, low, high, tol / 2.0);
  const double mass_bound = std::max(1.0, mass.value.real());
  // total is the full double integral C; N = |1 - 2 C|
  return {std::abs(1.0 - 2.0 * total.value.real()),
          2.0 * (total.error_estimate + 2.0 * worst_inner * mass_bound)};
}

}  // namespace spinent::discrete
