#pragma once
// Small dense complex linear algebra for two-qubit spin states and the
// joint (momentum x spin) states they are traced from.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace spinent {

using cplx = std::complex<double>;

/// Row-major dense complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
  /// Row-by-row literal, e.g. {{1, 0}, {0, 1}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> d);
  /// |v><v|
  static ComplexMatrix outer(std::span<const cplx> v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * cols_ + c];
  }

  std::span<const cplx> entries() const noexcept { return data_; }
  std::span<cplx> entries() noexcept { return data_; }

  cplx trace() const;
  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;

  /// Largest |a_ij - conj(a_ji)|.
  double hermiticity_defect() const;
  double max_abs() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cplx s);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
std::vector<cplx> operator*(const ComplexMatrix& a, std::span<const cplx> v);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product a (x) b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduced matrix on the subsystems listed in `keep` (ascending order is
/// not required; the result is ordered as the subsystems appear in `dims`).
/// Throws DimensionError when rho does not match prod(dims) or `keep` is
/// empty or out of range.
ComplexMatrix partial_trace(const ComplexMatrix& rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

enum class Subsystem { A, B };

/// Transpose of one tensor factor of a bipartite operator on C^dA (x) C^dB.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, std::size_t dim_a, std::size_t dim_b,
                                Subsystem on);

/// Ascending eigenvalues of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Throws DomainError if the input is not Hermitian within
/// 1e-10 (relative to max(1, max|h_ij|)).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

/// Validated two-qubit density matrix in the basis (uu, ud, du, dd),
/// first factor = particle A.
class SpinDensity {
 public:
  static constexpr double kHermitianTol = 1e-12;
  static constexpr double kTraceTol = 1e-12;
  static constexpr double kPsdTol = -1e-10;

  /// Throws DimensionError for a non-4x4 matrix and DomainError when the
  /// Hermiticity, unit-trace or positivity checks fail.
  explicit SpinDensity(ComplexMatrix mat);

  /// The singlet projector |Psi-><Psi-|.
  static SpinDensity singlet();

  const ComplexMatrix& matrix() const noexcept { return mat_; }

 private:
  ComplexMatrix mat_;
};

/// Reduced matrix of one qubit (A or B) of a two-qubit density.
ComplexMatrix reduced_qubit(const SpinDensity& rho, Subsystem keep);

/// N = max(0, -2 lambda_min(rho^{T_B})).
double negativity(const SpinDensity& rho);

/// Amplitudes of |Psi-> = (|ud> - |du>)/sqrt(2).
std::vector<cplx> singlet_amplitudes();

namespace pauli {
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

}  // namespace spinent
