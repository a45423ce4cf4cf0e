#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

namespace dicke {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Tolerances used throughout: algebraic identities vs cross-implementation checks.
inline constexpr double kAlgebraTol = 1e-12;
inline constexpr double kOracleTol = 1e-10;

inline double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

// exp(-i t H) for Hermitian H via eigendecomposition; unitary up to roundoff.
inline Matrix expm_hermitian(const Matrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("expm_hermitian: eigendecomposition failed");
  const RealVector& lam = es.eigenvalues();
  Vector phases(lam.size());
  for (Eigen::Index k = 0; k < lam.size(); ++k)
    phases[k] = std::exp(Complex(0.0, -t * lam[k]));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

// Apply exp(-i t H) to a state without forming the full operator.
inline Vector apply_expm_hermitian(const Matrix& h, double t, const Vector& psi) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("apply_expm_hermitian: eigendecomposition failed");
  Vector coeffs = es.eigenvectors().adjoint() * psi;
  const RealVector& lam = es.eigenvalues();
  for (Eigen::Index k = 0; k < lam.size(); ++k)
    coeffs[k] *= std::exp(Complex(0.0, -t * lam[k]));
  return es.eigenvectors() * coeffs;
}

inline double unitarity_defect(const Matrix& u) {
  return max_abs(u.adjoint() * u - Matrix::Identity(u.rows(), u.cols()));
}

inline double hermiticity_defect(const Matrix& m) {
  return max_abs(m - m.adjoint());
}

inline bool is_unitary(const Matrix& u, double tol = kOracleTol) {
  return u.rows() == u.cols() && unitarity_defect(u) <= tol;
}

inline bool is_hermitian(const Matrix& m, double tol = kAlgebraTol) {
  return m.rows() == m.cols() && hermiticity_defect(m) <= tol;
}

}  // namespace dicke
