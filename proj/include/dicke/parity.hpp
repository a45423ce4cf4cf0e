#pragma once

// Parity-operator block structure of the symmetric sector and the Bloch-sphere
// rendering of the three-qubit sequence. The x-parity operator X_p = X^{oN}
// (and Y_p = Y^{oN}) commutes with H_ZZ and with the matching global control
// generator, splitting the sector into +1/-1 eigenblocks; for N = 3 the -1
// block is two-dimensional and the whole sequence after the first pulse can be
// drawn on a Bloch sphere.

#include "pulse_sequence.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace dicke {

struct SymmetricState {
  int n_qubits = 0;
  Vector amplitudes;  // length N+1, over the Dicke basis
};

enum class ParityKind { X, Y };

// Orthonormal bases of the +1 and -1 parity eigenblocks, expressed over the
// Dicke basis. Blocks are labelled by the actual eigenvalue of the parity
// operator restricted to the sector.
struct ParityBasis {
  int n_qubits = 0;
  ParityKind kind = ParityKind::X;
  std::vector<SymmetricState> plus_vectors;
  std::vector<SymmetricState> minus_vectors;
};

// X_p maps |D_a> -> |D_{N-a}>, so c_k (|D_{k-1}> +- |D_{N-k+1}>) has X_p
// eigenvalue +-1; c_k = 1/sqrt(2) for paired indices, 1 for the even-N
// self-paired vector (whose minus partner vanishes).
inline ParityBasis x_parity_basis(int n_qubits) {
  if (n_qubits < 2)
    throw std::invalid_argument("x_parity_basis: need n_qubits >= 2");
  ParityBasis basis{n_qubits, ParityKind::X, {}, {}};
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int k = 1; k <= n_qubits / 2 + 1; ++k) {
    const int lo = k - 1;
    const int hi = n_qubits - k + 1;
    Vector plus = Vector::Zero(n_qubits + 1);
    if (lo == hi) {
      plus[lo] = 1.0;
      basis.plus_vectors.push_back({n_qubits, std::move(plus)});
      continue;
    }
    plus[lo] = inv_sqrt2;
    plus[hi] = inv_sqrt2;
    Vector minus = Vector::Zero(n_qubits + 1);
    minus[lo] = inv_sqrt2;
    minus[hi] = -inv_sqrt2;
    basis.plus_vectors.push_back({n_qubits, std::move(plus)});
    basis.minus_vectors.push_back({n_qubits, std::move(minus)});
  }
  return basis;
}

// Y_p maps |D_a> -> i^N (-1)^a |D_{N-a}>. The vectors
// c_k [|D_{k-1}> +- i^N (-1)^k |D_{N-k+1}>] are Y_p eigenvectors, the + phase
// choice carrying eigenvalue -1 and the - choice +1 (standard Pauli-Y
// convention); blocks below are labelled by the eigenvalue.
inline ParityBasis y_parity_basis(int n_qubits) {
  if (n_qubits < 2)
    throw std::invalid_argument("y_parity_basis: need n_qubits >= 2");
  ParityBasis basis{n_qubits, ParityKind::Y, {}, {}};
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const std::array<Complex, 4> i_pow{Complex(1, 0), Complex(0, 1), Complex(-1, 0),
                                     Complex(0, -1)};
  for (int k = 1; k <= n_qubits / 2 + 1; ++k) {
    const int lo = k - 1;
    const int hi = n_qubits - k + 1;
    const Complex phase = i_pow[n_qubits % 4] * ((k % 2 == 0) ? 1.0 : -1.0);
    if (lo == hi) {
      // self-paired: the + choice vanishes, the survivor has eigenvalue +1
      Vector v = Vector::Zero(n_qubits + 1);
      v[lo] = 1.0;
      basis.plus_vectors.push_back({n_qubits, std::move(v)});
      continue;
    }
    Vector w_plus = Vector::Zero(n_qubits + 1);   // eigenvalue -1
    Vector w_minus = Vector::Zero(n_qubits + 1);  // eigenvalue +1
    w_plus[lo] = inv_sqrt2;
    w_plus[hi] = phase * inv_sqrt2;
    w_minus[lo] = inv_sqrt2;
    w_minus[hi] = -phase * inv_sqrt2;
    basis.minus_vectors.push_back({n_qubits, std::move(w_plus)});
    basis.plus_vectors.push_back({n_qubits, std::move(w_minus)});
  }
  return basis;
}

// B^dag op B with the block vectors as columns of B.
inline Matrix project_operator(const Matrix& op,
                               const std::vector<SymmetricState>& block) {
  if (block.empty()) throw std::invalid_argument("project_operator: empty block");
  const Eigen::Index dim = op.rows();
  if (op.cols() != dim) throw std::invalid_argument("project_operator: op not square");
  Matrix b(dim, Eigen::Index(block.size()));
  for (std::size_t j = 0; j < block.size(); ++j) {
    if (block[j].amplitudes.size() != dim)
      throw std::invalid_argument("project_operator: block vector dimension mismatch");
    b.col(Eigen::Index(j)) = block[j].amplitudes;
  }
  if (max_abs(b.adjoint() * b - Matrix::Identity(b.cols(), b.cols())) > kAlgebraTol)
    throw std::invalid_argument("project_operator: block vectors are not orthonormal");
  return b.adjoint() * op * b;
}

// Decomposition of a Hermitian 2x2 matrix as c0*I + rate*(axis . Pauli vector).
// axis_defined is false when the input is proportional to the identity.
struct AxisDecomposition {
  double offset = 0.0;
  std::array<double, 3> axis{0.0, 0.0, 0.0};
  double rate = 0.0;
  bool axis_defined = false;
};

inline AxisDecomposition rotation_axis_decomposition(const Matrix& op) {
  if (op.rows() != 2 || op.cols() != 2)
    throw std::invalid_argument("rotation_axis_decomposition: need a 2x2 matrix");
  if (hermiticity_defect(op) > kAlgebraTol)
    throw std::invalid_argument("rotation_axis_decomposition: matrix is not Hermitian");
  AxisDecomposition d;
  d.offset = 0.5 * (op(0, 0).real() + op(1, 1).real());
  const double cx = op(0, 1).real();
  const double cy = -op(0, 1).imag();
  const double cz = 0.5 * (op(0, 0).real() - op(1, 1).real());
  d.rate = std::sqrt(cx * cx + cy * cy + cz * cz);
  if (d.rate > kAlgebraTol) {
    d.axis = {cx / d.rate, cy / d.rate, cz / d.rate};
    d.axis_defined = true;
  } else {
    d.rate = 0.0;
  }
  return d;
}

struct BlochPoint {
  double x = 0.0, y = 0.0, z = 0.0;
};

// One trajectory sample; stage is "A-B", "B-C" or "C-D", t the cumulative
// evolution time (control pulses contribute none).
struct BlochSample {
  std::string stage;
  double t = 0.0;
  BlochPoint point;
};

struct LeakageError : std::runtime_error {
  explicit LeakageError(const std::string& stage)
      : std::runtime_error("trajectory not confined to -1 block (stage " + stage + ")"),
        stage_name(stage) {}
  std::string stage_name;
};

namespace detail {

// Bloch map in the {|v3> = north, |v4> = south} convention of the N=3 -1
// x-parity block.
inline BlochPoint bloch_from_block(Complex c3, Complex c4) {
  const Complex cross = std::conj(c3) * c4;
  return BlochPoint{2.0 * cross.real(), 2.0 * cross.imag(),
                    std::norm(c3) - std::norm(c4)};
}

}  // namespace detail

// Trajectory of the state after the first control pulse, sampled uniformly in
// evolution "time" within each of the three remaining stages (the control
// stage is parameterized by its angle). Emits 3*samples_per_stage + 1 points:
// the starting point A, then the samples of each stage ending exactly at B, C
// and D. Requires the post-first-pulse state to lie in the -1 block of X_p.
inline std::vector<BlochSample> bloch_trajectory(const PulseSequence& seq,
                                                 int samples_per_stage) {
  validate(seq);
  if (seq.n_qubits != 3)
    throw std::invalid_argument("bloch_trajectory: only n_qubits = 3 is supported");
  if (samples_per_stage < 1)
    throw std::invalid_argument("bloch_trajectory: samples_per_stage must be >= 1");

  const double leak_tol = 1e-9;
  const ParityBasis xb = x_parity_basis(3);
  const Vector v3 = xb.minus_vectors[0].amplitudes;  // (1,0,0,-1)/sqrt(2)
  const Vector v4 = xb.minus_vectors[1].amplitudes;  // (0,1,-1,0)/sqrt(2)

  Vector start = Vector::Zero(4);
  start[0] = 1.0;
  const Vector psi_a = apply_expm_hermitian(s1_matrix(3, seq.phi[0]), seq.alpha[0], start);

  const RealVector hzz = hzz_diagonal(3);
  const Matrix s1_mid = s1_matrix(3, seq.phi[1]);

  std::vector<BlochSample> out;
  out.reserve(3 * samples_per_stage + 1);

  auto sample = [&](const std::string& stage, double t, const Vector& psi) {
    const Complex c3 = v3.dot(psi);
    const Complex c4 = v4.dot(psi);
    const Vector residual = psi - c3 * v3 - c4 * v4;
    if (residual.norm() > leak_tol) throw LeakageError(stage);
    out.push_back({stage, t, detail::bloch_from_block(c3, c4)});
  };

  sample("A-B", 0.0, psi_a);

  // stage 1: free evolution for xi1
  Vector psi_b = psi_a;
  for (int j = 1; j <= samples_per_stage; ++j) {
    const double tau = seq.xi[0] * j / samples_per_stage;
    Vector psi = psi_a;
    for (int a = 0; a <= 3; ++a) psi[a] *= std::exp(Complex(0.0, -tau * hzz[a]));
    if (j == samples_per_stage) psi_b = psi;
    sample("A-B", tau, psi);
  }

  // stage 2: the second control pulse, swept through its angle
  Vector psi_c = psi_b;
  for (int j = 1; j <= samples_per_stage; ++j) {
    const double frac = double(j) / samples_per_stage;
    Vector psi = apply_expm_hermitian(s1_mid, frac * seq.alpha[1], psi_b);
    if (j == samples_per_stage) psi_c = psi;
    sample("B-C", seq.xi[0], psi);
  }

  // stage 3: free evolution for xi2
  for (int j = 1; j <= samples_per_stage; ++j) {
    const double tau = seq.xi[1] * j / samples_per_stage;
    Vector psi = psi_c;
    for (int a = 0; a <= 3; ++a) psi[a] *= std::exp(Complex(0.0, -tau * hzz[a]));
    sample("C-D", seq.xi[0] + tau, psi);
  }

  return out;
}

}  // namespace dicke
