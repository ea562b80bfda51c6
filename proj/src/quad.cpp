#include "spinent/quad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>
#include <vector>

#include "spinent/error.hpp"

namespace spinent::quad {

namespace {

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1] (QUADPACK qk15).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5 and the centre.
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr std::size_t kMaxPanels = 400000;

struct Panel {
  double a, b;
  cplx value;
  double err;
  double floor;  // roundoff level of this panel
  int depth;
};

struct WorseFirst {
  bool operator()(const Panel& x, const Panel& y) const { return x.err < y.err; }
};

Panel gk15(const RealToComplex& f, double a, double b, int depth) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const cplx fc = f(centre);
  cplx kron = fc * kWgk[7];
  cplx gauss = fc * kWg[3];
  double resabs = std::abs(fc) * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const cplx f1 = f(centre - dx);
    const cplx f2 = f(centre + dx);
    kron += kWgk[j] * (f1 + f2);
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  kron *= half;
  gauss *= half;
  resabs *= std::abs(half);
  const double floor = 50.0 * kEps * resabs;
  return {a, b, kron, std::max(std::abs(kron - gauss), floor), floor, depth};
}

}  // namespace

QuadResult integrate_adaptive(const RealToComplex& f, std::span<const double> breaks, double tol,
                              int max_depth) {
  if (breaks.size() < 2) throw DomainError("integrate_adaptive: need at least two breakpoints");
  if (!(tol > 0.0)) throw DomainError("integrate_adaptive: tolerance must be positive");
  for (std::size_t i = 1; i < breaks.size(); ++i)
    if (!(breaks[i - 1] < breaks[i]))
      throw DomainError("integrate_adaptive: limits must be strictly ascending");

  std::priority_queue<Panel, std::vector<Panel>, WorseFirst> heap;
  double total_err = 0.0;
  for (std::size_t i = 1; i < breaks.size(); ++i) {
    auto p = gk15(f, breaks[i - 1], breaks[i], 0);
    total_err += p.err;
    heap.push(p);
  }

  auto summarise = [&heap] {
    // Drain in a fixed order so the sum is reproducible bit-for-bit.
    std::vector<Panel> all;
    all.reserve(heap.size());
    auto copy = heap;
    while (!copy.empty()) {
      all.push_back(copy.top());
      copy.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    QuadResult r;
    for (const auto& p : all) {
      r.value += p.value;
      r.error_estimate += p.err;
    }
    r.panels = all.size();
    return r;
  };

  while (total_err > tol) {
    const Panel worst = heap.top();
    if (worst.err <= worst.floor * (1.0 + 1e-12)) {
      auto r = summarise();
      throw ConvergenceError("integrate_adaptive: tolerance " + std::to_string(tol) +
                                 " is below the roundoff level of the integrand",
                             r.value, r.error_estimate);
    }
    if (worst.depth >= max_depth || heap.size() >= kMaxPanels) {
      auto r = summarise();
      throw ConvergenceError("integrate_adaptive: subdivision limit reached on [" +
                                 std::to_string(worst.a) + ", " + std::to_string(worst.b) + "]",
                             r.value, r.error_estimate);
    }
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    auto left = gk15(f, worst.a, mid, worst.depth + 1);
    auto right = gk15(f, mid, worst.b, worst.depth + 1);
    total_err += left.err + right.err - worst.err;
    heap.push(left);
    heap.push(right);
    // Guard against drift of the running sum.
    if (total_err <= tol) {
      double exact = 0.0;
      auto copy = heap;
      while (!copy.empty()) {
        exact += copy.top().err;
        copy.pop();
      }
      total_err = exact;
    }
  }
  return summarise();
}

QuadResult integrate_adaptive(const RealToComplex& f, double a, double b, double tol,
                              int max_depth) {
  const double breaks[] = {a, b};
  return integrate_adaptive(f, breaks, tol, max_depth);
}

double gaussian_density(double x, double mean, double width) {
  const double u = (x - mean) / width;
  return std::exp(-u * u) / (std::sqrt(std::numbers::pi) * width);
}

namespace {
std::pair<double, double> gaussian_limits(double mean, double width, double lower_cut) {
  return {std::max(lower_cut, mean - kGaussianCut * width), mean + kGaussianCut * width};
}
}  // namespace

double gaussian_mass(double mean, double width, double lower_cut) {
  const auto [lo, hi] = gaussian_limits(mean, width, lower_cut);
  return 0.5 * (std::erf((hi - mean) / width) - std::erf((lo - mean) / width));
}

QuadResult integrate_gaussian_weighted(const RealToComplex& g, double mean, double width,
                                       double lower_cut, double tol, int max_depth) {
  if (!(width > 0.0)) throw DomainError("integrate_gaussian_weighted: width must be positive");
  const auto [lo, hi] = gaussian_limits(mean, width, lower_cut);
  if (!(lo < hi)) {
    return {};  // lower cut beyond the upper truncation: empty interval
  }
  // Start from panels one width wide so the initial rule sees the peak.
  std::vector<double> breaks{lo};
  for (double x = mean - kGaussianCut * width + width; x < hi - 0.5 * width; x += width)
    if (x > lo + 1e-9 * width) breaks.push_back(x);
  breaks.push_back(hi);
  auto integrand = [&](double x) { return gaussian_density(x, mean, width) * g(x); };
  return integrate_adaptive(integrand, breaks, tol, max_depth);
}

QuadResult integrate_oscillatory_window(const AnalyticFn& f, double a, double b,
                                        const ResonantPhase& phase, double tol, int max_depth) {
  auto on_real = [&f](double x) { return f(cplx(x, 0.0)); };
  const double s = phase.singular_at;
  if (phase.phase_scale == 0.0 || !(a < s && s < b)) {
    return integrate_adaptive(on_real, a, b, tol, max_depth);
  }

  double h = phase.detour_half_width;
  if (h <= 0.0) {
    h = std::min({1.0, 0.5 * (s - a), 0.5 * (b - s)});
    if (s != 0.0) h = std::min(h, 0.5 * std::abs(s));
  } else if (h > 0.25 * (b - a) || s - h <= a || s + h >= b) {
    throw DomainError("integrate_oscillatory_window: detour half-width " + std::to_string(h) +
                      " does not fit inside [" + std::to_string(a) + ", " + std::to_string(b) +
                      "]");
  }

  // exp(i A / t^2 e^{-2i beta}) decays along t e^{i beta} when A sin(2 beta) < 0.
  const double beta = phase.phase_scale > 0.0 ? -std::numbers::pi / 4 : std::numbers::pi / 4;
  const cplx dir = std::polar(1.0, beta);
  const cplx left_corner = s - h * dir;
  const cplx right_corner = s + h * dir;
  const double d = std::abs(s - left_corner.real());

  const double piece_tol = tol / 6.0;
  QuadResult total;
  auto add = [&total](const QuadResult& r) {
    total.value += r.value;
    total.error_estimate += r.error_estimate;
    total.panels += r.panels;
  };
  // Straight segment z0 -> z1 parameterised on [0, 1]; the end points are
  // never sampled, so the path may end exactly on the singular point.
  auto segment = [&](cplx z0, cplx z1) {
    const cplx dz = z1 - z0;
    return integrate_adaptive([&f, z0, dz](double u) { return f(z0 + u * dz) * dz; }, 0.0, 1.0,
                              piece_tol, max_depth);
  };

  add(integrate_adaptive(on_real, a, s - d, piece_tol, max_depth));
  add(segment(cplx(s - d, 0.0), left_corner));
  add(segment(left_corner, cplx(s, 0.0)));
  add(segment(cplx(s, 0.0), right_corner));
  add(segment(right_corner, cplx(s + d, 0.0)));
  add(integrate_adaptive(on_real, s + d, b, piece_tol, max_depth));
  return total;
}

}  // namespace spinent::quad
