// Acceptance suite. Prints one PASS/FAIL line per criterion; with arguments,
// runs only the listed criterion numbers. Exit status 1 if any ran and failed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "matching_oracle.hpp"
#include "random_states.hpp"
#include "spinent/config.hpp"
#include "spinent/discrete.hpp"
#include "spinent/fermion.hpp"
#include "spinent/photon.hpp"
#include "spinent/qmat.hpp"
#include "spinent/sweep.hpp"

using namespace spinent;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    if (!detail.empty()) detail += "; ";
    detail += (ok ? "" : "FAILED ") + what;
  }
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

/// N column `series` of a sweep, in grid order.
std::vector<double> curve(const std::vector<cli::SweepRow>& rows, std::size_t series) {
  std::vector<double> v;
  for (const auto& r : rows) v.push_back(r.values[series].negativity);
  return v;
}

bool all_ok(const std::vector<cli::SweepRow>& rows) {
  for (const auto& r : rows)
    for (const auto& v : r.values)
      if (!v.ok) return false;
  return true;
}

/// Largest step up along the curve (<= 0 for a non-increasing curve).
double max_rise(const std::vector<double>& v) {
  double worst = -INFINITY;
  for (std::size_t i = 1; i < v.size(); ++i) worst = std::max(worst, v[i] - v[i - 1]);
  return worst;
}

Outcome bimodal_closed_form() {
  Outcome o;
  double worst = 0.0;
  const int n = 50;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double a = std::numbers::pi * i / (n - 1), b = std::numbers::pi * j / (n - 1);
      const auto prof = discrete::AngleProfile::from_angles({a, b});
      const double oracle_n = discrete::negativity_oracle(prof, discrete::MomentumWeights::uniform(2));
      worst = std::max(worst, std::abs(oracle_n - discrete::negativity_bimodal(a, b)));
    }
  o.require(worst <= 1e-12, "max |closed - oracle| = " + num(worst) + " over 50x50 (<= 1e-12)");
  return o;
}

Outcome n_mode_closed_form() {
  Outcome o;
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::uniform_int_distribution<std::size_t> modes(1, 8);
  double worst_n = 0.0, worst_spec = 0.0;
  for (int k = 0; k < 200; ++k) {
    std::vector<double> t(modes(rng));
    for (auto& x : t) x = angle(rng);
    const auto prof = discrete::AngleProfile::from_angles(t);
    const auto w = discrete::MomentumWeights::uniform(t.size());
    worst_n = std::max(worst_n, std::abs(discrete::negativity_oracle(prof, w) - discrete::negativity_uniform(t)));
    const auto spec = discrete::pt_spectrum_oracle(prof, w);
    const auto closed = discrete::pt_spectrum_uniform(t);
    for (std::size_t e = 0; e < 4; ++e) worst_spec = std::max(worst_spec, std::abs(spec[e] - closed[e]));
  }
  o.require(worst_n <= 1e-10, "negativity max dev " + num(worst_n) + " (<= 1e-10)");
  o.require(worst_spec <= 1e-10, "spectrum max dev " + num(worst_spec) + " (<= 1e-10)");
  return o;
}

Outcome continuous_limit() {
  Outcome o;
  // Gaussian |G|^2 with variance sigma^2 / 2 and theta = alpha p:
  // N = |E exp(2 i alpha p)|^2 = exp(-2 alpha^2 sigma^2).
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> alpha(0.02, 1.0), sigma(0.2, 2.0);
  const double p0 = 5.0;
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double a = alpha(rng), s = sigma(rng);
    auto rho = [&](double p) { return std::exp(-std::pow((p - p0) / s, 2)) / (std::sqrt(std::numbers::pi) * s); };
    const auto r = discrete::negativity_continuous(rho, [&](double p) { return a * p; }, p0 - 12 * s,
                                                   p0 + 12 * s, 1e-9);
    worst = std::max(worst, std::abs(r.value - std::exp(-2 * a * a * s * s)));
  }
  o.require(worst <= 1e-6, "linear profile max dev " + num(worst) + " over 20 pairs (<= 1e-6)");
  auto rho = [&](double p) { return std::exp(-std::pow(p - p0, 2)) / std::sqrt(std::numbers::pi); };
  const auto c = discrete::negativity_continuous(rho, [](double) { return 0.8; }, p0 - 12, p0 + 12, 1e-12);
  o.require(std::abs(c.value - 1.0) <= 1e-10, "constant profile |N - 1| = " + num(std::abs(c.value - 1.0)) + " (<= 1e-10)");
  return o;
}

Outcome fermion_scattering() {
  Outcome o;
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> mom(0.05, 20.0), field(0.0, 2.0), len(0.0, 10.0), mass(10.0, 200.0);
  double worst_flux = 0.0;
  int evanescent = 0;
  for (int k = 0; k < 10000; ++k) {
    fermion::FermionBarrierParams p;
    p.m = mass(rng);
    p.gB0 = field(rng);
    p.L = len(rng);
    const double q = mom(rng);
    const auto s = (k % 2) ? fermion::Spin::Up : fermion::Spin::Down;
    if (fermion::momentum_inside(q, s, p).imag() > 0) ++evanescent;
    const double flux = std::norm(fermion::transmission(q, s, p)) + std::norm(fermion::reflection(q, s, p));
    worst_flux = std::max(worst_flux, std::abs(flux - 1.0));
  }
  o.require(worst_flux <= 1e-12, "flux max dev " + num(worst_flux) + " over 1e4 points (<= 1e-12)");
  o.require(evanescent > 0, std::to_string(evanescent) + " evanescent points sampled");
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    fermion::FermionBarrierParams p;
    p.gB0 = field(rng);
    p.L = len(rng);
    const double q = mom(rng);
    const auto s = (k % 2) ? fermion::Spin::Up : fermion::Spin::Down;
    const auto ref = oracle::step_scattering(q, p.m, fermion::projection(s) * p.gB0, p.L);
    worst = std::max({worst, std::abs(fermion::transmission(q, s, p) - ref.t),
                      std::abs(fermion::reflection(q, s, p) - ref.r)});
  }
  o.require(worst <= 1e-10, "T, R vs matching-condition solve max dev " + num(worst) + " (<= 1e-10)");
  return o;
}

Outcome fermion_negativity() {
  Outcome o;
  fermion::FermionBarrierParams zero_field;
  zero_field.gB0 = 0.0;
  fermion::FermionBarrierParams zero_length;
  zero_length.L = 0.0;
  const double d0 = std::abs(fermion::negativity_fermion(zero_field).value - 1.0);
  const double dl = std::abs(fermion::negativity_fermion(zero_length).value - 1.0);
  o.require(d0 <= 1e-9, "gB0=0 |N-1| = " + num(d0));
  o.require(dl <= 1e-9, "L=0 |N-1| = " + num(dl));

  const auto f3 = cli::run_sweep(cli::figure_preset("fig3", 100));
  o.require(all_ok(f3), "fig3 sweep evaluated");
  std::vector<std::vector<double>> c3;
  for (std::size_t s = 0; s < 3; ++s) c3.push_back(curve(f3, s));
  for (std::size_t s = 0; s < 3; ++s) {
    const double rise = max_rise(c3[s]);
    o.require(rise <= 1e-9, "fig3 sigma=" + std::to_string(s + 1) + " max rise " + num(rise) + " (<= 1e-9)");
  }
  int disorder = 0;
  double worst_order = 0.0;
  for (std::size_t i = 0; i < c3[0].size(); ++i) {
    const double v = std::max(c3[1][i] - c3[0][i], c3[2][i] - c3[1][i]);
    if (v > 1e-9) ++disorder;
    worst_order = std::max(worst_order, v);
  }
  o.require(disorder == 0, "fig3 N(s1) >= N(s2) >= N(s3) violated at " + std::to_string(disorder) +
                               " points, worst " + num(worst_order));

  const auto f4 = cli::run_sweep(cli::figure_preset("fig4", 100));
  o.require(all_ok(f4), "fig4 sweep evaluated");
  const double rise4 = max_rise(curve(f4, 0));
  o.require(rise4 <= 1e-9, "fig4 max rise " + num(rise4) + " (<= 1e-9)");
  return o;
}

Outcome no_go_identity() {
  Outcome o;
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> mass(20.0, 200.0), p0(5.0, 15.0), frac(0.1, 0.5), len(0.0, 8.0),
      field(0.0, 2.0);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    fermion::FermionBarrierParams p;
    p.m = mass(rng);
    p.p0 = p0(rng);
    p.sigma = frac(rng) * p.p0;
    p.L = len(rng);
    p.gB0 = field(rng);
    worst = std::max(worst, max_abs_diff(fermion::bob_reduced_full(p).rho, 0.5 * ComplexMatrix::identity(2)) /
                                (10 * p.quad_tol));
  }
  o.require(worst <= 1.0, "full state max dev / (10 quad_tol) = " + num(worst) + " over 20 sets");
  fermion::FermionBarrierParams strong;
  strong.gB0 = 1.5;
  strong.sigma = 1.0;
  const double dev =
      max_abs_diff(fermion::bob_reduced_postselected(strong).rho, 0.5 * ComplexMatrix::identity(2));
  o.require(dev >= 0.05, "strong-field post-selected deviation " + num(dev) + " (>= 0.05)");
  return o;
}

Outcome photon_model() {
  Outcome o;
  double worst = 0.0;
  for (double sigma : {0.5, 2.0, 5.0, 10.0, 20.0}) {
    photon::PhotonMediumParams p;
    p.btildeL = 0.0;
    p.sigma = sigma;
    worst = std::max(worst, std::abs(photon::negativity_photon_approx(p).value - 0.5 * (1 + std::erf(p.p0 / sigma))));
  }
  o.require(worst <= 1e-6, "B~L=0 max dev from (1+erf)/2 " + num(worst));

  const auto f5 = cli::run_sweep(cli::figure_preset("fig5"));
  o.require(all_ok(f5), "fig5 sweep evaluated");
  const double rise5 = max_rise(curve(f5, 0));
  o.require(rise5 <= 1e-6, "fig5 max rise " + num(rise5) + " (<= 1e-6)");

  const auto f6 = cli::run_sweep(cli::figure_preset("fig6"));
  o.require(all_ok(f6), "fig6 sweep evaluated");
  const auto c6 = curve(f6, 0);
  const auto m6 = std::min_element(c6.begin() + 1, c6.end() - 1);
  o.require(*m6 < c6.front() && *m6 < c6.back(),
            "fig6 interior min " + num(*m6) + " vs endpoints " + num(c6.front()) + ", " + num(c6.back()));

  const auto spec7 = cli::figure_preset("fig7");
  const auto f7 = cli::run_sweep(spec7);
  o.require(all_ok(f7), "fig7 sweep evaluated");
  const double p0 = spec7.fixed.at("p0");
  for (std::size_t s = 0; s < spec7.series.size(); ++s) {
    const auto c = curve(f7, s);
    const auto at = std::min_element(c.begin(), c.end()) - c.begin();
    const double w0 = f7[at].coords[0], sigma = spec7.series[s].overrides.at("sigma");
    o.require(std::abs(w0 - p0) <= 2 * sigma, "fig7 sigma=" + num(sigma) + " min at w0=" + num(w0));
  }
  // series are sigma = 0.5, 1, 2
  int disorder = 0;
  double worst_order = 0.0, first_w0 = 0.0;
  for (const auto& r : f7) {
    const double v = std::max(r.values[1].negativity - r.values[2].negativity,
                              r.values[0].negativity - r.values[1].negativity);
    if (v > 0.0) {
      if (disorder++ == 0) first_w0 = r.coords[0];
    }
    worst_order = std::max(worst_order, v);
  }
  o.require(disorder == 0, "fig7 N(s2) >= N(s1) >= N(s0.5) violated at " + std::to_string(disorder) +
                               " of " + std::to_string(f7.size()) + " points (first w0=" + num(first_w0) +
                               ", worst " + num(worst_order) + ")");
  return o;
}

Outcome quadrature_self_consistency() {
  Outcome o;
  for (const auto& name : cli::figure_names()) {
    auto spec = cli::figure_preset(name);
    const auto coarse = cli::run_sweep(spec);
    if (spec.model != cli::Model::DiscreteSurface) {
      const double tol = spec.model == cli::Model::FermionField || spec.model == cli::Model::FermionLength
                             ? fermion::FermionBarrierParams{}.quad_tol
                             : photon::PhotonMediumParams{}.quad_tol;
      spec.fixed["quad_tol"] = tol / 2;
    }
    const auto fine = cli::run_sweep(spec);
    int bad = 0, total = 0;
    double ratio = 0.0;
    for (std::size_t i = 0; i < coarse.size(); ++i)
      for (std::size_t s = 0; s < coarse[i].values.size(); ++s) {
        const auto& a = coarse[i].values[s];
        const auto& b = fine[i].values[s];
        ++total;
        if (!a.ok || !b.ok) {
          ++bad;
          continue;
        }
        const double change = std::abs(a.negativity - b.negativity);
        // closed-form values report zero error and must not move at all
        if (change > a.error_estimate) ++bad;
        if (a.error_estimate > 0) ratio = std::max(ratio, change / a.error_estimate);
      }
    o.require(bad == 0, name + ": " + std::to_string(total - bad) + "/" + std::to_string(total) +
                            " within estimate, worst change/err " + num(ratio));
  }
  return o;
}

Outcome local_unitary_invariance() {
  Outcome o;
  std::mt19937_64 rng(9);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const auto rho = oracle::random_density4(rng, 1 + k % 4);
    const auto U = kron(oracle::random_unitary2(rng), oracle::random_unitary2(rng));
    const auto moved = U * rho * U.adjoint();
    auto sym = moved + moved.adjoint();
    sym *= 0.5;
    worst = std::max(worst, std::abs(negativity(SpinDensity(rho)) - negativity(SpinDensity(sym))));
  }
  o.require(worst <= 1e-9, "max deviation " + num(worst) + " over 100 states (<= 1e-9)");
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "bimodal closed form", 5, bimodal_closed_form},
      {2, "n-mode closed form and spectrum", 10, n_mode_closed_form},
      {3, "continuous limit", 0, continuous_limit},
      {4, "fermion scattering amplitudes", 0, fermion_scattering},
      {5, "fermion negativity", 30, fermion_negativity},
      {6, "no-go identity", 0, no_go_identity},
      {7, "photon model", 60, photon_model},
      {8, "quadrature self-consistency", 0, quadrature_self_consistency},
      {9, "local-unitary invariance", 0, local_unitary_invariance},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  bool all = true;
  for (const auto& c : criteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0) o.require(secs < c.budget_s, "runtime " + num(secs) + " s (< " + num(c.budget_s) + " s)");
    else o.detail += "; runtime " + num(secs) + " s";
    std::printf("%s criterion %d (%s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
    all = all && o.pass;
  }
  std::fflush(stdout);
  return all ? 0 : 1;
}
