#pragma once
// Plane-wave scattering off a square step of height V on [0, L], solved by
// imposing continuity of psi and psi' at both edges as a 4x4 linear system.

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

namespace oracle {

using cplx = std::complex<double>;

/// Gaussian elimination with partial pivoting; the system is consumed.
template <std::size_t N>
std::array<cplx, N> solve(std::array<std::array<cplx, N>, N> a, std::array<cplx, N> b) {
  for (std::size_t k = 0; k < N; ++k) {
    std::size_t piv = k;
    for (std::size_t r = k + 1; r < N; ++r)
      if (std::abs(a[r][k]) > std::abs(a[piv][k])) piv = r;
    if (std::abs(a[piv][k]) == 0.0) throw std::runtime_error("singular matching system");
    std::swap(a[k], a[piv]);
    std::swap(b[k], b[piv]);
    for (std::size_t r = k + 1; r < N; ++r) {
      const cplx f = a[r][k] / a[k][k];
      for (std::size_t c = k; c < N; ++c) a[r][c] -= f * a[k][c];
      b[r] -= f * b[k];
    }
  }
  std::array<cplx, N> x{};
  for (std::size_t k = N; k-- > 0;) {
    cplx s = b[k];
    for (std::size_t c = k + 1; c < N; ++c) s -= a[k][c] * x[c];
    x[k] = s / a[k][k];
  }
  return x;
}

struct StepAmplitudes {
  cplx t;  // psi = t e^{ipx} for x > L
  cplx r;  // psi = e^{ipx} + r e^{-ipx} for x < 0
};

/// Inside the step psi = A e^{iqx} + B e^{-iq(x - L)} with q = sqrt(p^2 - 2 m V),
/// Im q >= 0, so both basis functions stay bounded on [0, L].
inline StepAmplitudes step_scattering(double p, double m, double V, double L) {
  const cplx i(0.0, 1.0);
  const cplx q = std::sqrt(cplx(p * p - 2.0 * m * V, 0.0));
  const cplx eqL = std::exp(i * q * L);
  const cplx epL = std::exp(i * p * L);
  // unknowns: r, A, B, t
  std::array<std::array<cplx, 4>, 4> a{{
      {-1.0, 1.0, eqL, 0.0},
      {i * p, i * q, -i * q * eqL, 0.0},
      {0.0, eqL, 1.0, -epL},
      {0.0, i * q * eqL, -i * q, -i * p * epL},
  }};
  std::array<cplx, 4> b{1.0, i * p, 0.0, 0.0};
  const auto x = solve(a, b);
  return {x[3], x[0]};
}

}  // namespace oracle
