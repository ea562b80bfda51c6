#include "spinent/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "spinent/config.hpp"
#include "spinent/discrete.hpp"
#include "spinent/error.hpp"

namespace spinent::cli {

namespace {

std::string fixed(double x, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

void print_matrix(std::ostream& out, const ComplexMatrix& m, const std::string& indent) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << indent << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const cplx v = m(r, c);
      out << (c ? "  " : " ") << fixed(v.real());
      if (std::abs(v.imag()) > 1e-12) out << (v.imag() < 0 ? "-" : "+") << fixed(std::abs(v.imag())) << "i";
    }
    out << " ]\n";
  }
}

double deviation_from_half_identity(const ComplexMatrix& m) {
  return max_abs_diff(m, 0.5 * ComplexMatrix::identity(2));
}

}  // namespace

std::vector<fermion::FermionBarrierParams> default_nogo_sets() {
  fermion::FermionBarrierParams zero;
  zero.gB0 = 0.0;

  fermion::FermionBarrierParams base;

  fermion::FermionBarrierParams tuned;
  tuned.gB0 = fermion::field_for_postselected_bias(tuned, 0.75);

  fermion::FermionBarrierParams strong;
  strong.gB0 = 1.5;
  strong.sigma = 1.0;
  return {zero, base, tuned, strong};
}

std::string run_nogo_report(const std::vector<fermion::FermionBarrierParams>& sets) {
  if (sets.empty()) throw DomainError("run_nogo_report: no parameter sets");
  std::ostringstream out;
  out << "Reduced spin state of B after A crosses the field region\n"
      << "basis (up, down); I/2 means B's statistics carry no trace of A's field\n\n";
  for (std::size_t k = 0; k < sets.size(); ++k) {
    const auto& p = sets[k];
    p.validate();
    out << "set " << k + 1 << ": m=" << format_number(p.m) << " p0=" << format_number(p.p0)
        << " sigma=" << format_number(p.sigma) << " L=" << format_number(p.L)
        << " gB0=" << format_number(p.gB0) << " quad_tol=" << format_number(p.quad_tol) << "\n";
    const auto post = fermion::bob_reduced_postselected(p);
    out << "  keeping only transmitted A (post-selected):\n";
    print_matrix(out, post.rho, "    ");
    out << "    up fraction " << fixed(post.rho(0, 0).real() * 100.0, 2) << "%\n";
    const auto full = fermion::bob_reduced_full(p);
    out << "  keeping transmitted and reflected A (full):\n";
    print_matrix(out, full.rho, "    ");
    const double dev = deviation_from_half_identity(full.rho);
    out << "    max |full - I/2| = " << format_number(dev)
        << (dev <= 10.0 * p.quad_tol ? "  (within 10*quad_tol)" : "  (EXCEEDS 10*quad_tol)")
        << "\n";
    out << "    max |post-selected - I/2| = "
        << format_number(deviation_from_half_identity(post.rho)) << "\n\n";
  }
  return out.str();
}

bool run_selftest(std::ostream& out) {
  bool all = true;
  auto report = [&](const std::string& name, bool pass, double worst) {
    out << (pass ? "PASS " : "FAIL ") << name << "  worst=" << format_number(worst) << "\n";
    all = all && pass;
  };
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);

  double worst = 0.0;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) {
      const double t1 = std::numbers::pi * i / 9.0, t2 = std::numbers::pi * j / 9.0;
      const auto prof = discrete::AngleProfile::from_angles({t1, t2});
      const double o = discrete::negativity_oracle(prof, discrete::MomentumWeights::uniform(2));
      worst = std::max(worst, std::abs(o - discrete::negativity_bimodal(t1, t2)));
    }
  report("bimodal closed form vs density-matrix route", worst <= 1e-12, worst);

  worst = 0.0;
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = 1 + static_cast<std::size_t>(k % 8);
    std::vector<double> a(n);
    for (auto& x : a) x = angle(rng);
    const auto prof = discrete::AngleProfile::from_angles(a);
    const auto w = discrete::MomentumWeights::uniform(n);
    worst = std::max(worst, std::abs(discrete::negativity_oracle(prof, w) -
                                     discrete::negativity_uniform(a)));
    const auto spec = discrete::pt_spectrum_oracle(prof, w);
    const auto closed = discrete::pt_spectrum_uniform(a);
    for (std::size_t e = 0; e < 4; ++e) worst = std::max(worst, std::abs(spec[e] - closed[e]));
  }
  report("n-mode negativity and spectrum vs density-matrix route", worst <= 1e-10, worst);

  worst = 0.0;
  std::uniform_real_distribution<double> mom(0.05, 20.0), field(0.0, 2.0), len(0.0, 10.0);
  for (int k = 0; k < 1000; ++k) {
    fermion::FermionBarrierParams p;
    p.gB0 = field(rng);
    p.L = len(rng);
    const double q = mom(rng);
    for (auto s : {fermion::Spin::Up, fermion::Spin::Down}) {
      const double flux = std::norm(fermion::transmission(q, s, p)) +
                          std::norm(fermion::reflection(q, s, p));
      worst = std::max(worst, std::abs(flux - 1.0));
    }
  }
  report("flux conservation |T|^2 + |R|^2 = 1", worst <= 1e-12, worst);

  worst = 0.0;
  for (double g : {0.0, 0.2, 0.8}) {
    fermion::FermionBarrierParams p;
    p.gB0 = g;
    worst = std::max(worst, deviation_from_half_identity(fermion::bob_reduced_full(p).rho));
  }
  report("full reduced state of B is I/2", worst <= 1e-8, worst);

  return all;
}

}  // namespace spinent::cli
