#include "steersim/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "steersim/errors.hpp"

namespace steersim::qmat {
namespace {

void require_supported_dim(std::size_t dim) {
  if (dim != 2 && dim != 4 && dim != 8) {
    throw DimensionError("matrix dimension must be 2, 4 or 8, got " +
                         std::to_string(dim));
  }
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("dimension mismatch: " + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim) {
  require_supported_dim(dim);
  entries_.assign(dim * dim, Complex{});
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::initializer_list<Complex> entries)
    : ComplexMatrix(dim, std::vector<Complex>(entries)) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  require_supported_dim(dim);
  if (entries_.size() != dim * dim) {
    throw DimensionError("expected " + std::to_string(dim * dim) + " entries, got " +
                         std::to_string(entries_.size()));
  }
  if (!all_finite()) throw ContractError("matrix entries must be finite");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix out(dim);
  for (std::size_t i = 0; i < dim; ++i) out(i, i) = 1.0;
  return out;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<Complex> diag) {
  ComplexMatrix out(diag.size());
  std::size_t i = 0;
  for (const Complex& d : diag) {
    out(i, i) = d;
    ++i;
  }
  if (!out.all_finite()) throw ContractError("matrix entries must be finite");
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t{};
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

double ComplexMatrix::hermiticity_defect() const {
  double worst = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = r; c < dim_; ++c) {
      worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    }
  }
  return worst;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (Complex& z : entries_) z *= scalar;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  require_same_dim(lhs, rhs);
  const std::size_t n = lhs.dim();
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex a = lhs(r, k);
      if (a == Complex{}) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += a * rhs(k, c);
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return worst;
}

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  Complex t{};
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) t += a(r, c) * b(c, r);
  }
  return t;
}

ComplexMatrix pauli_x() { return ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0}); }

ComplexMatrix pauli_y() {
  return ComplexMatrix(2, {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0});
}

ComplexMatrix pauli_z() { return ComplexMatrix::diagonal({1.0, -1.0}); }

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  if (na * nb > kSystemDim) {
    throw DimensionError("tensor product dimension " + std::to_string(na * nb) +
                         " exceeds " + std::to_string(kSystemDim));
  }
  ComplexMatrix out(na * nb);
  for (std::size_t ar = 0; ar < na; ++ar) {
    for (std::size_t ac = 0; ac < na; ++ac) {
      const Complex s = a(ar, ac);
      for (std::size_t br = 0; br < nb; ++br) {
        for (std::size_t bc = 0; bc < nb; ++bc) {
          out(ar * nb + br, ac * nb + bc) = s * b(br, bc);
        }
      }
    }
  }
  return out;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b,
                     const ComplexMatrix& c) {
  return tensor(tensor(a, b), c);
}

ComplexMatrix embed_single(const ComplexMatrix& op, int qubit) {
  if (op.dim() != 2) throw DimensionError("embed_single expects a 2x2 operator");
  const ComplexMatrix id = ComplexMatrix::identity(2);
  switch (qubit) {
    case 1: return tensor(op, id, id);
    case 2: return tensor(id, op, id);
    case 3: return tensor(id, id, op);
    default:
      throw RangeError("qubit index must be 1, 2 or 3, got " + std::to_string(qubit));
  }
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& mat) {
  const auto n = static_cast<Eigen::Index>(mat.dim());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      m(r, c) = mat(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

DensityMatrix check_density(ComplexMatrix mat) {
  if (mat.dim() != kSystemDim) {
    throw DimensionError("density matrix must be 8x8, got " + std::to_string(mat.dim()));
  }
  if (!mat.all_finite()) {
    throw DensityError(DensityError::Kind::hermiticity, "density matrix has non-finite entries");
  }
  if (const double d = mat.hermiticity_defect(); d > kHermiticityTol) {
    throw DensityError(DensityError::Kind::hermiticity,
                       "density matrix not Hermitian (defect " + std::to_string(d) + ")");
  }
  if (const Complex tr = mat.trace(); std::abs(tr - 1.0) > kTraceTol) {
    throw DensityError(DensityError::Kind::trace,
                       "density matrix trace " + std::to_string(tr.real()) + " != 1");
  }
  if (const double lowest = hermitian_eigenvalues(mat).front(); lowest < kPositivityTol) {
    throw DensityError(DensityError::Kind::positivity,
                       "density matrix has negative eigenvalue " + std::to_string(lowest));
  }
  return DensityMatrix(std::move(mat));
}

double expval(const DensityMatrix& rho, const ComplexMatrix& obs) {
  if (obs.dim() != rho.dim()) {
    throw DimensionError("observable dimension " + std::to_string(obs.dim()) +
                         " does not match state dimension " + std::to_string(rho.dim()));
  }
  if (!obs.is_hermitian()) throw ContractError("observable must be Hermitian");
  const Complex value = trace_product(rho.matrix(), obs);
  if (std::abs(value.imag()) > kImagTol) {
    throw ContractError("expectation value has imaginary part " +
                        std::to_string(value.imag()));
  }
  return value.real();
}

}  // namespace steersim::qmat
