#include "spinent/fermion.hpp"

#include <cmath>
#include <string>

#include "spinent/error.hpp"

namespace spinent::fermion {

void FermionBarrierParams::validate() const {
  auto fail = [](const std::string& what) {
    throw DomainError("FermionBarrierParams: " + what);
  };
  if (!(m > 0.0)) fail("m must be positive");
  if (!(p0 > 0.0)) fail("p0 must be positive");
  if (!(sigma > 0.0)) fail("sigma must be positive");
  if (!(L >= 0.0)) fail("L must be non-negative");
  if (!(gB0 >= 0.0)) fail("gB0 must be non-negative");
  if (!(sigma < p0)) fail("sigma must be smaller than p0");
  if (!(quad_tol > 0.0)) fail("quad_tol must be positive");
}

cplx momentum_inside(double p, Spin s, const FermionBarrierParams& params) {
  const double arg = p * p - 2.0 * projection(s) * params.m * params.gB0;
  // +0.0 imaginary part selects i sqrt(|arg|) for negative arg.
  return std::sqrt(cplx(arg, 0.0));
}

namespace {

// (e^{2iz} - 1) / (2iz), which equals e^{iz} sin(z) / z.
cplx phased_sinc(cplx z) {
  const cplx w = cplx(0.0, 2.0) * z;
  if (std::abs(w) < 0.1) {
    cplx term = 1.0, sum = 1.0;
    for (int k = 1; k < 14; ++k) {
      term *= w / static_cast<double>(k + 1);
      sum += term;
    }
    return sum;
  }
  return (std::exp(w) - 1.0) / w;
}

// Numerators share the scaled denominator
//   D' = 2p (1 + e^{2iz}) - 2iL (p^2 + q^2) h(z),  z = q L,
// obtained from the textbook one by dividing through by q e^{-iz} / 2.
struct Amplitudes {
  cplx t, r;
};

Amplitudes slab_amplitudes(double p, cplx q, double L) {
  const cplx z = q * L;
  const cplx e1 = std::exp(cplx(0.0, 1.0) * z);
  const cplx e2 = e1 * e1;
  const cplx h = phased_sinc(z);
  const cplx i2L(0.0, 2.0 * L);
  const cplx den = 2.0 * p * (1.0 + e2) - i2L * (p * p + q * q) * h;
  const cplx t = 4.0 * p * std::exp(cplx(0.0, -p * L)) * e1 / den;
  const cplx r = -i2L * (p * p - q * q) * h / den;
  return {t, r};
}

}  // namespace

cplx transmission(double p, Spin s, const FermionBarrierParams& params) {
  return slab_amplitudes(p, momentum_inside(p, s, params), params.L).t;
}

cplx reflection(double p, Spin s, const FermionBarrierParams& params) {
  return slab_amplitudes(p, momentum_inside(p, s, params), params.L).r;
}

ScatterAmplitudes scatter(double p, const FermionBarrierParams& params) {
  const auto up = slab_amplitudes(p, momentum_inside(p, Spin::Up, params), params.L);
  const auto down = slab_amplitudes(p, momentum_inside(p, Spin::Down, params), params.L);
  return {up.t, down.t, up.r, down.r};
}

namespace {

// Gaussian-weighted integral of g over the truncated positive window,
// divided by the window mass so the weight is a probability density.
quad::QuadResult weighted_average(const quad::RealToComplex& g,
                                  const FermionBarrierParams& params, double tol) {
  const double mass = quad::gaussian_mass(params.p0, params.sigma, 0.0);
  auto r = quad::integrate_gaussian_weighted(g, params.p0, params.sigma, 0.0, tol * mass);
  r.value /= mass;
  r.error_estimate /= mass;
  return r;
}

cplx pick(const ScatterAmplitudes& a, Spin s) { return s == Spin::Up ? a.t_up : a.t_down; }

}  // namespace

quad::QuadResult overlap_integral(Spin s, Spin s2, const FermionBarrierParams& params) {
  params.validate();
  auto g = [&](double p) {
    const auto a = scatter(p, params);
    return pick(a, s) * std::conj(pick(a, s2)) / (std::norm(a.t_up) + std::norm(a.t_down));
  };
  return weighted_average(g, params, params.quad_tol);
}

Estimate negativity_fermion(const FermionBarrierParams& params) {
  const auto iud = overlap_integral(Spin::Up, Spin::Down, params);
  return {2.0 * std::abs(iud.value), 2.0 * iud.error_estimate};
}

PostselectedState postselected_state(const FermionBarrierParams& params,
                                     Postselection convention) {
  params.validate();
  cplx iuu, idd, iud;
  double err = 0.0;
  if (convention == Postselection::PerMomentum) {
    const auto uu = overlap_integral(Spin::Up, Spin::Up, params);
    const auto dd = overlap_integral(Spin::Down, Spin::Down, params);
    const auto ud = overlap_integral(Spin::Up, Spin::Down, params);
    iuu = uu.value;
    idd = dd.value;
    iud = ud.value;
    err = uu.error_estimate + dd.error_estimate + ud.error_estimate;
  } else {
    const double tol = params.quad_tol / 4.0;
    const auto uu = weighted_average([&](double p) { return cplx(std::norm(transmission(p, Spin::Up, params))); }, params, tol);
    const auto dd = weighted_average([&](double p) { return cplx(std::norm(transmission(p, Spin::Down, params))); }, params, tol);
    const auto ud = weighted_average(
        [&](double p) {
          const auto a = scatter(p, params);
          return a.t_up * std::conj(a.t_down);
        },
        params, tol);
    const double trace = uu.value.real() + dd.value.real();
    iuu = uu.value / trace;
    idd = dd.value / trace;
    iud = ud.value / trace;
    err = (uu.error_estimate + dd.error_estimate + ud.error_estimate) / trace;
  }
  // Exact unit trace and Hermiticity; the quadrature defect goes into err.
  const double trace = iuu.real() + idd.real();
  err += std::abs(trace - 1.0);
  ComplexMatrix m(4, 4);
  m(1, 1) = iuu.real() / trace;
  m(2, 2) = idd.real() / trace;
  m(1, 2) = -iud / trace;
  m(2, 1) = std::conj(m(1, 2));
  return {SpinDensity(std::move(m)), err};
}

BobState bob_reduced_postselected(const FermionBarrierParams& params) {
  const auto uu = overlap_integral(Spin::Up, Spin::Up, params);
  const auto dd = overlap_integral(Spin::Down, Spin::Down, params);
  ComplexMatrix rho(2, 2);
  rho(0, 0) = dd.value.real();
  rho(1, 1) = uu.value.real();
  return {rho, uu.error_estimate + dd.error_estimate};
}

BobState bob_reduced_full(const FermionBarrierParams& params) {
  params.validate();
  const double tol = params.quad_tol / 4.0;
  auto average = [&](auto amplitude) {
    return weighted_average([&](double p) { return cplx(std::norm(amplitude(p))); }, params, tol);
  };
  const auto rd = average([&](double p) { return reflection(p, Spin::Down, params); });
  const auto td = average([&](double p) { return transmission(p, Spin::Down, params); });
  const auto ru = average([&](double p) { return reflection(p, Spin::Up, params); });
  const auto tu = average([&](double p) { return transmission(p, Spin::Up, params); });
  ComplexMatrix rho(2, 2);
  rho(0, 0) = 0.5 * (rd.value.real() + td.value.real());
  rho(1, 1) = 0.5 * (ru.value.real() + tu.value.real());
  const double err =
      0.5 * std::max(rd.error_estimate + td.error_estimate, ru.error_estimate + tu.error_estimate);
  return {rho, err};
}

double field_for_postselected_bias(FermionBarrierParams params, double up_fraction) {
  if (!(up_fraction > 0.5 && up_fraction < 1.0))
    throw DomainError("field_for_postselected_bias: target must lie in (0.5, 1)");
  auto up_population = [&](double g) {
    params.gB0 = g;
    return overlap_integral(Spin::Down, Spin::Down, params).value.real();
  };
  double lo = 0.0;
  double hi = params.p0 * params.p0 / params.m;  // mesa threshold at the mean momentum
  for (int k = 0; up_population(hi) < up_fraction; ++k) {
    if (k == 40) throw ConvergenceError("field_for_postselected_bias: target not reachable", hi, 0.0);
    lo = hi;
    hi *= 2.0;
  }
  for (int it = 0; it < 60 && hi - lo > 1e-12 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (up_population(mid) < up_fraction ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace spinent::fermion
