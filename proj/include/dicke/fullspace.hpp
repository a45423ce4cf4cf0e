#pragma once

// Brute-force reference in the full 2^N-dimensional Hilbert space, used to
// cross-check every symmetric-sector computation. Basis ordering: bitstring b
// with qubit 1 as the most significant bit, |0> before |1>. Not built for
// speed; dimension is capped at N = 12 (4096).

#include "pulse_sequence.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace dicke {

inline constexpr int kMaxFullQubits = 12;

enum class PauliAxis { X, Y, Z };

namespace detail {

inline void check_full_dim(int n_qubits) {
  if (n_qubits < 1)
    throw std::invalid_argument("full space: need n_qubits >= 1");
  if (n_qubits > kMaxFullQubits)
    throw std::invalid_argument(
        "full space: n_qubits exceeds the dimension cap of 12; use the symmetric sector");
}

inline Matrix single_pauli(PauliAxis which) {
  Matrix p(2, 2);
  switch (which) {
    case PauliAxis::X:
      p << 0, 1, 1, 0;
      break;
    case PauliAxis::Y:
      p << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
      break;
    case PauliAxis::Z:
      p << 1, 0, 0, -1;
      break;
  }
  return p;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r *= double(n - k + i) / double(i);
  return r;
}

}  // namespace detail

struct FullState {
  int n_qubits = 0;
  Vector amplitudes;  // length 2^n_qubits
};

// Pauli operator on one qubit, identity elsewhere. qubit_index is 1-based
// and counts from the most significant bit.
inline Matrix pauli_on_qubit(int n_qubits, int qubit_index, PauliAxis which) {
  detail::check_full_dim(n_qubits);
  if (qubit_index < 1 || qubit_index > n_qubits)
    throw std::invalid_argument("pauli_on_qubit: qubit_index out of range");
  Matrix op = Matrix::Identity(1, 1);
  for (int q = 1; q <= n_qubits; ++q) {
    op = detail::kron(op, q == qubit_index ? detail::single_pauli(which)
                                           : Matrix::Identity(2, 2));
  }
  return op;
}

// H_ZZ/J = sum_{n<n'} Z_n Z_{n'}: diagonal in the computational basis; the
// entry for a bitstring of Hamming weight a is 2(a - N/2)^2 - N/2.
inline Matrix full_hzz(int n_qubits) {
  detail::check_full_dim(n_qubits);
  if (n_qubits < 2)
    throw std::invalid_argument("full_hzz: need n_qubits >= 2");
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  Matrix h = Matrix::Zero(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    const double z_sum = n_qubits - 2.0 * std::popcount(static_cast<unsigned long long>(b));
    h(b, b) = 0.5 * (z_sum * z_sum - n_qubits);
  }
  return h;
}

// cos(phi) sum_n X_n + sin(phi) sum_n Y_n on the full space.
inline Matrix full_control_generator(int n_qubits, double phi) {
  detail::check_full_dim(n_qubits);
  if (n_qubits < 2)
    throw std::invalid_argument("full_control_generator: need n_qubits >= 2");
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  Matrix g = Matrix::Zero(dim, dim);
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  for (int q = 1; q <= n_qubits; ++q)
    g += c * pauli_on_qubit(n_qubits, q, PauliAxis::X) +
         s * pauli_on_qubit(n_qubits, q, PauliAxis::Y);
  return g;
}

// Dicke state |D^N_a>: equal weight binom(N,a)^{-1/2} on every bitstring of
// Hamming weight a.
inline FullState dicke_state_full(int n_qubits, int a) {
  detail::check_full_dim(n_qubits);
  if (a < 0 || a > n_qubits)
    throw std::invalid_argument("dicke_state_full: excitation count out of range");
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  Vector amps = Vector::Zero(dim);
  const double w = 1.0 / std::sqrt(detail::binomial(n_qubits, a));
  for (Eigen::Index b = 0; b < dim; ++b)
    if (std::popcount(static_cast<unsigned long long>(b)) == a) amps[b] = w;
  return FullState{n_qubits, std::move(amps)};
}

// (N+1) x 2^N isometry whose rows are the Dicke states; P P^dag = identity.
inline Matrix symmetric_isometry(int n_qubits) {
  detail::check_full_dim(n_qubits);
  if (n_qubits < 2)
    throw std::invalid_argument("symmetric_isometry: need n_qubits >= 2");
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  Matrix p = Matrix::Zero(n_qubits + 1, dim);
  for (int a = 0; a <= n_qubits; ++a)
    p.row(a) = dicke_state_full(n_qubits, a).amplitudes.transpose();
  return p;
}

// Apply the full pulse sequence in the 2^N space, control exponentials via
// Hermitian eigendecomposition, Ising stages elementwise (H_ZZ is diagonal).
inline FullState evolve_full(const PulseSequence& seq, const FullState& initial) {
  validate(seq);
  detail::check_full_dim(seq.n_qubits);
  if (initial.n_qubits != seq.n_qubits)
    throw std::invalid_argument("evolve_full: qubit-count mismatch");
  const Eigen::Index dim = Eigen::Index(1) << seq.n_qubits;
  if (initial.amplitudes.size() != dim)
    throw std::invalid_argument("evolve_full: state dimension mismatch");

  const Matrix hzz = full_hzz(seq.n_qubits);
  Vector psi = initial.amplitudes;
  psi = apply_expm_hermitian(full_control_generator(seq.n_qubits, seq.phi[0]),
                             seq.alpha[0], psi);
  for (Eigen::Index b = 0; b < dim; ++b)
    psi[b] *= std::exp(Complex(0.0, -seq.xi[0] * hzz(b, b).real()));
  psi = apply_expm_hermitian(full_control_generator(seq.n_qubits, seq.phi[1]),
                             seq.alpha[1], psi);
  for (Eigen::Index b = 0; b < dim; ++b)
    psi[b] *= std::exp(Complex(0.0, -seq.xi[1] * hzz(b, b).real()));
  psi = apply_expm_hermitian(full_control_generator(seq.n_qubits, seq.phi[2]),
                             seq.alpha[2], psi);
  return FullState{seq.n_qubits, std::move(psi)};
}

// Components of a full state on the Dicke basis.
inline Vector project_to_sector(const FullState& state) {
  return symmetric_isometry(state.n_qubits) * state.amplitudes;
}

// Norm of the component outside the symmetric sector.
inline double sector_leakage(const FullState& state) {
  const Matrix p = symmetric_isometry(state.n_qubits);
  const Vector inside = p.adjoint() * (p * state.amplitudes);
  return (state.amplitudes - inside).norm();
}

}  // namespace dicke
