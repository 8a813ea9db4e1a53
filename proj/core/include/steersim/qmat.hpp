#pragma once

// Dense complex matrices of dimension 2, 4 or 8 and the three-qubit density
// matrix built on top of them.
//
// Basis convention: |q1 q2 q3> has index 4*q1 + 2*q2 + q3, i.e. qubit 1 is the
// leftmost tensor factor and the most significant bit.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace steersim::qmat {

using Complex = std::complex<double>;

inline constexpr double kHermiticityTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPositivityTol = -1e-10;
inline constexpr double kImagTol = 1e-10;
inline constexpr std::size_t kSystemDim = 8;

class ComplexMatrix {
 public:
  // Zero matrix. dim must be 2, 4 or 8.
  explicit ComplexMatrix(std::size_t dim);

  // Row-major entries; size must be dim * dim and every entry finite.
  ComplexMatrix(std::size_t dim, std::initializer_list<Complex> entries);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::initializer_list<Complex> diag);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) noexcept {
    return entries_[row * dim_ + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const noexcept {
    return entries_[row * dim_ + col];
  }

  std::span<const Complex> entries() const noexcept { return entries_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  bool all_finite() const;

  // max |a_ij - conj(a_ji)|
  double hermiticity_defect() const;
  bool is_hermitian(double tol = kHermiticityTol) const {
    return hermiticity_defect() <= tol;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scalar);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    return lhs += rhs;
  }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    return lhs -= rhs;
  }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scalar) {
    return lhs *= scalar;
  }
  friend ComplexMatrix operator*(Complex scalar, ComplexMatrix rhs) {
    return rhs *= scalar;
  }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

// max_ij |a_ij - b_ij|
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Tr(a * b) without forming the product.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

// Kronecker product a (x) b. Throws DimensionError if the result exceeds 8x8.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b,
                     const ComplexMatrix& c);

// 8x8 operator acting as `op` on qubit 1, 2 or 3 and as identity elsewhere.
ComplexMatrix embed_single(const ComplexMatrix& op, int qubit);

// Eigenvalues of a Hermitian matrix in ascending order.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& mat);

// Validated three-qubit state: Hermitian, unit trace, positive semidefinite.
// Only obtainable through check_density().
class DensityMatrix {
 public:
  const ComplexMatrix& matrix() const noexcept { return mat_; }
  std::size_t dim() const noexcept { return mat_.dim(); }

  // Zero-based element access.
  Complex operator()(std::size_t row, std::size_t col) const noexcept {
    return mat_(row, col);
  }

  friend bool operator==(const DensityMatrix&, const DensityMatrix&) = default;

 private:
  friend DensityMatrix check_density(ComplexMatrix mat);
  explicit DensityMatrix(ComplexMatrix mat) : mat_(std::move(mat)) {}

  ComplexMatrix mat_;
};

// Throws DimensionError for dim != 8 and DensityError naming the first
// violated invariant (checked in the order hermiticity, trace, positivity).
DensityMatrix check_density(ComplexMatrix mat);

// Tr(rho * obs). obs must be Hermitian (ContractError) with matching
// dimension (DimensionError); a residual imaginary part above kImagTol is a
// ContractError as well.
double expval(const DensityMatrix& rho, const ComplexMatrix& obs);

}  // namespace steersim::qmat
