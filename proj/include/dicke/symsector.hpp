#pragma once

// Operators of the Ising + global-transverse-control problem restricted to the
// permutationally-invariant (symmetric) sector of N qubits. The sector is
// spanned by the Dicke states |D^N_a>, a = 0..N (a = excitation number), so
// every operator here is a dense (N+1)x(N+1) complex matrix. hbar = 1 and all
// times are in units of 1/J.

#include "matrix_utils.hpp"

#include <cmath>
#include <stdexcept>

namespace dicke {

// Diagonal of H_ZZ/J in the Dicke basis: entry a is 2(a - N/2)^2 - N/2.
// Symmetric under a <-> N-a.
inline RealVector hzz_diagonal(int n_qubits) {
  if (n_qubits < 2)
    throw std::invalid_argument("hzz_diagonal: need n_qubits >= 2 (no interaction terms)");
  RealVector d(n_qubits + 1);
  const double half_n = 0.5 * n_qubits;
  for (int a = 0; a <= n_qubits; ++a) {
    const double s = a - half_n;
    d[a] = 2.0 * s * s - half_n;
  }
  return d;
}

// Free evolution exp(-i xi H_ZZ/J); diagonal unitary. Negative xi is time
// reversal.
inline Matrix u_zz(int n_qubits, double xi) {
  if (!std::isfinite(xi))
    throw std::invalid_argument("u_zz: xi must be finite");
  const RealVector d = hzz_diagonal(n_qubits);
  Matrix u = Matrix::Zero(n_qubits + 1, n_qubits + 1);
  for (int a = 0; a <= n_qubits; ++a)
    u(a, a) = std::exp(Complex(0.0, -xi * d[a]));
  return u;
}

// Global control generator S1 = cos(phi) X + sin(phi) Y in the Dicke basis:
// tridiagonal with <D_a|S1|D_{a+1}> = e^{-i phi} sqrt((a+1)(N-a)) and its
// conjugate below the diagonal.
inline Matrix s1_matrix(int n_qubits, double phi) {
  if (n_qubits < 1)
    throw std::invalid_argument("s1_matrix: need n_qubits >= 1");
  if (!std::isfinite(phi))
    throw std::invalid_argument("s1_matrix: phi must be finite");
  Matrix m = Matrix::Zero(n_qubits + 1, n_qubits + 1);
  const Complex up = std::exp(Complex(0.0, -phi));
  for (int a = 0; a < n_qubits; ++a) {
    const double f = std::sqrt(double(a + 1) * double(n_qubits - a));
    m(a, a + 1) = f * up;
    m(a + 1, a) = f * std::conj(up);
  }
  return m;
}

// Control pulse U_C = exp(-i alpha S1(phi)): a global rotation through 2*alpha
// about the axis (cos phi, sin phi, 0). Sign of alpha sets the rotation sense.
inline Matrix u_c(int n_qubits, double alpha, double phi) {
  if (!std::isfinite(alpha))
    throw std::invalid_argument("u_c: alpha must be finite");
  return expm_hermitian(s1_matrix(n_qubits, phi), alpha);
}

namespace detail {

// phi-independent part of the sector-projected elementary symmetric operators
// S_m; the full matrix carries a phase e^{i(a-b)phi} on entry (a,b).
inline Matrix s_m_base(int n_qubits, int m) {
  const double r3 = std::sqrt(3.0);
  const double r6 = std::sqrt(6.0);
  Matrix b = Matrix::Zero(n_qubits + 1, n_qubits + 1);
  if (n_qubits == 3) {
    switch (m) {
      case 0:
        return Matrix::Identity(4, 4);
      case 1:
        b(0, 1) = b(1, 0) = r3;
        b(1, 2) = b(2, 1) = 2.0;
        b(2, 3) = b(3, 2) = r3;
        return b;
      case 2:
        b(0, 2) = b(2, 0) = r3;
        b(1, 3) = b(3, 1) = r3;
        b(1, 1) = b(2, 2) = 2.0;
        return b;
      case 3:
        b(0, 3) = b(3, 0) = 1.0;
        b(1, 2) = b(2, 1) = 1.0;
        return b;
      default:
        break;
    }
  } else if (n_qubits == 4) {
    switch (m) {
      case 0:
        return Matrix::Identity(5, 5);
      case 1:
        b(0, 1) = b(1, 0) = 2.0;
        b(1, 2) = b(2, 1) = r6;
        b(2, 3) = b(3, 2) = r6;
        b(3, 4) = b(4, 3) = 2.0;
        return b;
      case 2:
        b(0, 2) = b(2, 0) = r6;
        b(2, 4) = b(4, 2) = r6;
        b(1, 3) = b(3, 1) = 3.0;
        b(1, 1) = b(3, 3) = 3.0;
        b(2, 2) = 4.0;
        return b;
      case 3:
        b(0, 3) = b(3, 0) = 2.0;
        b(1, 4) = b(4, 1) = 2.0;
        b(1, 2) = b(2, 1) = r6;
        b(2, 3) = b(3, 2) = r6;
        return b;
      case 4:
        b(0, 4) = b(4, 0) = 1.0;
        b(1, 3) = b(3, 1) = 1.0;
        b(2, 2) = 1.0;
        return b;
      default:
        break;
    }
  }
  throw std::invalid_argument("s_m_matrix: order m out of range");
}

}  // namespace detail

// Sector projection of the elementary symmetric combinations S_m of the
// single-qubit in-plane operators; closed-form tables for N = 3 and N = 4.
inline Matrix s_m_matrix(int n_qubits, int m, double phi) {
  if (n_qubits != 3 && n_qubits != 4)
    throw std::invalid_argument("s_m_matrix: only n_qubits 3 and 4 have closed forms");
  if (m < 0 || m > n_qubits)
    throw std::invalid_argument("s_m_matrix: order m out of range");
  Matrix b = detail::s_m_base(n_qubits, m);
  for (int a = 0; a <= n_qubits; ++a)
    for (int c = 0; c <= n_qubits; ++c)
      if (b(a, c) != 0.0) b(a, c) *= std::exp(Complex(0.0, (a - c) * phi));
  return b;
}

// Closed-form control pulse for N = 3, 4 (binomial expansion of the product of
// single-qubit rotations); same unitary as u_c, kept as an independent route.
inline Matrix u_c_closed_form(int n_qubits, double alpha, double phi) {
  if (n_qubits != 3 && n_qubits != 4)
    throw std::invalid_argument("u_c_closed_form: only n_qubits 3 and 4 supported");
  if (!std::isfinite(alpha) || !std::isfinite(phi))
    throw std::invalid_argument("u_c_closed_form: parameters must be finite");
  const double c = std::cos(alpha);
  const double s = std::sin(alpha);
  Matrix u = Matrix::Zero(n_qubits + 1, n_qubits + 1);
  for (int m = 0; m <= n_qubits; ++m) {
    // cos^{N-m} alpha * (-i sin alpha)^m
    Complex coeff(1.0, 0.0);
    for (int k = 0; k < n_qubits - m; ++k) coeff *= c;
    for (int k = 0; k < m; ++k) coeff *= Complex(0.0, -s);
    u += coeff * s_m_matrix(n_qubits, m, phi);
  }
  return u;
}

}  // namespace dicke
