#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "simpson.hpp"
#include "spinent/error.hpp"
#include "spinent/photon.hpp"

using namespace spinent;
using namespace spinent::photon;

namespace {

const cplx I(0.0, 1.0);

PhotonMediumParams make(double btildeL, double sigma, double w0, double p0 = 10.0) {
  PhotonMediumParams p;
  p.btildeL = btildeL;
  p.sigma = sigma;
  p.w0 = w0;
  p.p0 = p0;
  return p;
}

/// Real-axis evaluation of the near-resonance integral. Around w0 the
/// substitution y = 1 / |w - w0| turns the essential singularity into a
/// chirp exp(i c y^2) on [1 / X, Y]; the remainder beyond Y is below
/// rho_max / (c Y^3).
double approx_oracle(const PhotonMediumParams& p) {
  const double lo = std::max(0.0, p.p0 - 12 * p.sigma), hi = p.p0 + 12 * p.sigma;
  auto f = [&](double w) {
    const double u = (w - p.p0) / p.sigma, d = w * w - p.w0 * p.w0;
    return std::exp(-u * u + I * p.btildeL * w * w / (d * d)) / (std::sqrt(std::numbers::pi) * p.sigma);
  };
  const double X = std::min({1.0, (p.w0 - lo) / 2, (hi - p.w0) / 2});
  const double Y = 300.0;
  const std::size_t n = 4000000;
  cplx total = oracle::simpson(f, lo, p.w0 - X, n / 4) + oracle::simpson(f, p.w0 + X, hi, n / 4);
  total += oracle::simpson([&](double y) { return f(p.w0 + 1.0 / y) / (y * y); }, 1.0 / X, Y, n);
  total += oracle::simpson([&](double y) { return f(p.w0 - 1.0 / y) / (y * y); }, 1.0 / X, Y, n);
  return std::abs(total);
}

}  // namespace

TEST_CASE("susceptibility components") {
  PhotonMediumParams p;
  p.w0 = 3.0;
  p.wc = 0.5;
  p.plasma = 2.0;
  const double w = 2.0;
  const double det = 9.0 - 4.0, den = det * det + 4.0 * 0.25;
  const auto chi = susceptibility(w, p);
  CHECK(chi.chi11 == doctest::Approx(2.0 * det / den));
  CHECK(chi.chi12 == doctest::Approx(2.0 * w * 0.5 / den));
  p.wc = 0.0;
  CHECK_THROWS_AS(susceptibility(3.0, p), DomainError);
}

TEST_CASE("refraction indices") {
  PhotonMediumParams p;
  p.wc = 0.0;
  const auto n = refraction_indices(4.0, p);
  CHECK(n.n_right == doctest::Approx(n.n_left));
  p.wc = 0.3;
  const auto chi = susceptibility(4.0, p);
  const auto m = refraction_indices(4.0, p);
  CHECK(m.n_right * m.n_right == doctest::Approx(1 + chi.chi11 + chi.chi12));
  CHECK(m.n_left * m.n_left == doctest::Approx(1 + chi.chi11 - chi.chi12));
  // just above a strong resonance 1 + chi11 turns negative
  p.plasma = 50.0;
  p.wc = 0.01;
  try {
    refraction_indices(10.05, p);
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("10.05") != std::string::npos);
  }
}

TEST_CASE("transmission phases are unimodular and their ratio is the relative phase") {
  PhotonMediumParams p;
  p.L = 3.0;
  p.wc = 0.2;
  p.plasma = 0.5;
  for (double w : {1.0, 7.3, 9.9, 12.0}) {
    const auto tr = transmission_phase(w, Polarization::Right, p);
    const auto tl = transmission_phase(w, Polarization::Left, p);
    CHECK(std::abs(tr) == doctest::Approx(1.0));
    CHECK(std::abs(tr * std::conj(tl) - relative_phase(w, p)) < 1e-12);
  }
}

TEST_CASE("zero field: both models reduce to the window mass") {
  for (double sigma : {0.5, 2.0, 8.0}) {
    const auto p = make(0.0, sigma, 10.0);
    CHECK(negativity_photon_approx(p).value ==
          doctest::Approx(0.5 * (1 + std::erf(10.0 / sigma))).epsilon(1e-10));
    auto q = p;
    q.wc = 0.0;
    q.w0 = 200.0;  // keep the undamped resonance out of the window
    CHECK(negativity_photon_full(q).value == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("near-resonance model against the real-axis oracle") {
  struct Case {
    double btildeL, sigma, w0;
  };
  for (auto c : {Case{4.0, 2.0, 10.0}, Case{1.0, 1.0, 9.0}, Case{10.0, 2.0, 10.5}, Case{0.5, 0.5, 10.2},
                 Case{2.0, 3.0, 6.0}}) {
    CAPTURE(c.btildeL);
    CAPTURE(c.sigma);
    CAPTURE(c.w0);
    const auto p = make(c.btildeL, c.sigma, c.w0);
    CHECK(std::abs(negativity_photon_approx(p).value - approx_oracle(p)) < 1e-6);
  }
}

TEST_CASE("detour half-width does not change the result") {
  const auto p = make(4.0, 2.0, 10.0);
  const double ref = negativity_photon_approx(p).value;
  for (double h : {0.05, 0.3, 1.0, 3.0}) CHECK(std::abs(negativity_photon_approx(p, h).value - ref) < 1e-9);
}

TEST_CASE("near-resonance model is the weak-field limit of the full dispersion") {
  // Off resonance with small plasma and damping, w L (n_R - n_L) ->
  // B~L w^2 / (w^2 - w0^2)^2 up to relative corrections of order chi11.
  PhotonMediumParams p = make(0.0, 1.0, 20.0);
  p.plasma = 0.01;
  p.wc = 0.01;
  p.L = 1e8;
  p.btildeL = btilde(p.plasma, p.wc) * p.L;
  const double full = negativity_photon_full(p).value;
  const double approx = negativity_photon_approx(p).value;
  CHECK(full < 0.9);  // the field does something
  CHECK(std::abs(full - approx) < 1e-3);
}

TEST_CASE("parameter validation") {
  auto p = make(1.0, 0.0, 10.0);
  CHECK_THROWS_AS(negativity_photon_approx(p), DomainError);
  p = make(-1.0, 1.0, 10.0);
  CHECK_THROWS_AS(negativity_photon_approx(p), DomainError);
  p = make(1.0, 1.0, 0.0);
  CHECK_THROWS_AS(negativity_photon_full(p), DomainError);
}

TEST_CASE("property: N stays in [0, 1] with a small error estimate") {
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> b(0.0, 10.0), s(0.2, 3.0), w(5.0, 15.0);
  for (int k = 0; k < 60; ++k) {
    const auto p = make(b(rng), s(rng), w(rng));
    const auto n = negativity_photon_approx(p);
    CHECK(n.value >= 0.0);
    CHECK(n.value <= 1.0 + p.quad_tol);
    CHECK(n.error_estimate <= 10 * p.quad_tol);
  }
}
