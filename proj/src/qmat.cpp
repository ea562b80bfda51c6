#include "spinent/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "spinent/error.hpp"

namespace spinent {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw DimensionError("ComplexMatrix: " + std::to_string(data_.size()) +
                         " entries for a " + std::to_string(rows_) + "x" +
                         std::to_string(cols_) + " matrix");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ComplexMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const cplx> v) {
  const std::size_t n = v.size();
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] == cplx{}) continue;
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i] * std::conj(v[j]);
  }
  return m;
}

cplx ComplexMatrix::trace() const {
  if (!square()) throw DimensionError("trace of a non-square matrix");
  cplx t{};
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

double ComplexMatrix::hermiticity_defect() const {
  if (!square()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return worst;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

std::vector<cplx> operator*(const ComplexMatrix& a, std::span<const cplx> v) {
  if (a.cols() != v.size()) throw DimensionError("matrix-vector product: size mismatch");
  std::vector<cplx> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
  return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
          k(i * b.rows() + r, j * b.cols() + c) = aij * b(r, c);
    }
  return k;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  const std::size_t nsys = dims.size();
  if (nsys == 0) throw DimensionError("partial_trace: no subsystems given");
  const std::size_t total =
      std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  if (!rho.square() || rho.rows() != total) {
    throw DimensionError("partial_trace: matrix of dimension " + std::to_string(rho.rows()) +
                         " does not match subsystem product " + std::to_string(total));
  }
  if (keep.empty()) throw DimensionError("partial_trace: keep list is empty");

  std::vector<bool> kept(nsys, false);
  for (std::size_t k : keep) {
    if (k >= nsys) throw DimensionError("partial_trace: subsystem index out of range");
    if (kept[k]) throw DimensionError("partial_trace: duplicate subsystem index");
    kept[k] = true;
  }

  // Strides of the full index, and the kept / traced index spaces.
  std::vector<std::size_t> stride(nsys);
  {
    std::size_t s = 1;
    for (std::size_t i = nsys; i-- > 0;) {
      stride[i] = s;
      s *= dims[i];
    }
  }
  std::vector<std::size_t> kept_sys, traced_sys;
  for (std::size_t i = 0; i < nsys; ++i) (kept[i] ? kept_sys : traced_sys).push_back(i);

  auto space_size = [&](const std::vector<std::size_t>& sys) {
    std::size_t n = 1;
    for (auto i : sys) n *= dims[i];
    return n;
  };
  // Offset in the full index of a multi-index over `sys`, encoded row-major.
  auto offsets = [&](const std::vector<std::size_t>& sys) {
    const std::size_t n = space_size(sys);
    std::vector<std::size_t> off(n, 0);
    for (std::size_t lin = 0; lin < n; ++lin) {
      std::size_t rem = lin;
      std::size_t o = 0;
      for (std::size_t q = sys.size(); q-- > 0;) {
        const std::size_t d = dims[sys[q]];
        o += (rem % d) * stride[sys[q]];
        rem /= d;
      }
      off[lin] = o;
    }
    return off;
  };

  const auto kept_off = offsets(kept_sys);
  const auto traced_off = offsets(traced_sys);
  const std::size_t nk = kept_off.size();

  ComplexMatrix out(nk, nk);
  for (std::size_t i = 0; i < nk; ++i)
    for (std::size_t j = 0; j < nk; ++j) {
      cplx acc{};
      for (std::size_t t : traced_off) acc += rho(kept_off[i] + t, kept_off[j] + t);
      out(i, j) = acc;
    }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, std::size_t dim_a, std::size_t dim_b,
                                Subsystem on) {
  if (!rho.square() || rho.rows() != dim_a * dim_b) {
    throw DimensionError("partial_transpose: matrix of dimension " + std::to_string(rho.rows()) +
                         " is not " + std::to_string(dim_a) + "x" + std::to_string(dim_b));
  }
  ComplexMatrix out(rho.rows(), rho.cols());
  for (std::size_t a = 0; a < dim_a; ++a)
    for (std::size_t b = 0; b < dim_b; ++b)
      for (std::size_t a2 = 0; a2 < dim_a; ++a2)
        for (std::size_t b2 = 0; b2 < dim_b; ++b2) {
          const cplx v = rho(a * dim_b + b, a2 * dim_b + b2);
          if (on == Subsystem::B)
            out(a * dim_b + b2, a2 * dim_b + b) = v;
          else
            out(a2 * dim_b + b, a * dim_b + b2) = v;
        }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  if (!h.square()) throw DimensionError("hermitian_eigenvalues: matrix is not square");
  const std::size_t n = h.rows();
  const double scale = std::max(1.0, h.max_abs());
  const double defect = h.hermiticity_defect();
  if (defect > 1e-10 * scale) {
    throw DomainError("hermitian_eigenvalues: matrix is not Hermitian (defect " +
                      std::to_string(defect) + ")");
  }

  // Work on the exactly Hermitian part.
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = h(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
      a(j, i) = std::conj(a(i, j));
    }
  }

  double frob2 = 0.0;
  for (const auto& z : a.entries()) frob2 += std::norm(z);
  const double target = 1e-14 * std::max(1.0, std::sqrt(frob2));

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * std::norm(a(i, j));
    return std::sqrt(s);
  };

  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  for (; sweep < kMaxSweeps && off_norm() >= target; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Phase e^{i phi} of a_pq; V = diag(1, e^{-i phi}) * R(c, s) makes (V^H A V)_pq = 0.
        const cplx ph = apq / mag;
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const cplx vpp = c, vpq = s;
        const cplx vqp = -s * std::conj(ph), vqq = c * std::conj(ph);

        // A <- A V (columns p, q).
        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * vpp + akq * vqp;
          a(k, q) = akp * vpq + akq * vqq;
        }
        // A <- V^H A (rows p, q).
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(vpp) * apk + std::conj(vqp) * aqk;
          a(q, k) = std::conj(vpq) * apk + std::conj(vqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
  }
  if (sweep == kMaxSweeps && off_norm() >= target) {
    throw ConvergenceError("hermitian_eigenvalues: Jacobi sweeps did not converge", off_norm(),
                           off_norm());
  }

  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

SpinDensity::SpinDensity(ComplexMatrix mat) : mat_(std::move(mat)) {
  if (mat_.rows() != 4 || mat_.cols() != 4)
    throw DimensionError("SpinDensity: expected a 4x4 matrix");
  const double herm = mat_.hermiticity_defect();
  if (herm > kHermitianTol)
    throw DomainError("SpinDensity: not Hermitian (defect " + std::to_string(herm) + ")");
  const cplx tr = mat_.trace();
  if (std::abs(tr - 1.0) > kTraceTol)
    throw DomainError("SpinDensity: trace " + std::to_string(tr.real()) + " is not 1");
  const auto ev = hermitian_eigenvalues(mat_);
  if (ev.front() < kPsdTol)
    throw DomainError("SpinDensity: negative eigenvalue " + std::to_string(ev.front()));
}

std::vector<cplx> singlet_amplitudes() {
  const double r = 1.0 / std::sqrt(2.0);
  return {0.0, r, -r, 0.0};
}

SpinDensity SpinDensity::singlet() {
  const auto psi = singlet_amplitudes();
  return SpinDensity(ComplexMatrix::outer(psi));
}

ComplexMatrix reduced_qubit(const SpinDensity& rho, Subsystem keep) {
  const std::size_t dims[] = {2, 2};
  const std::size_t k[] = {keep == Subsystem::A ? std::size_t{0} : std::size_t{1}};
  return partial_trace(rho.matrix(), dims, k);
}

double negativity(const SpinDensity& rho) {
  const auto pt = partial_transpose(rho.matrix(), 2, 2, Subsystem::B);
  const auto ev = hermitian_eigenvalues(pt);
  return std::max(0.0, -2.0 * ev.front());
}

namespace pauli {
ComplexMatrix x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix y() { return {{0.0, cplx(0, -1)}, {cplx(0, 1), 0.0}}; }
ComplexMatrix z() { return {{1.0, 0.0}, {0.0, -1.0}}; }
}  // namespace pauli

}  // namespace spinent
