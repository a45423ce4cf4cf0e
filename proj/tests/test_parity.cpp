#include "dicke/parity.hpp"

#include "dicke/fullspace.hpp"
#include "dicke/optimizer.hpp"  // SplitMix64
#include "reference_sequences.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

using namespace dicke;
using Catch::Approx;

namespace {
constexpr double pi = std::numbers::pi;

// full-space parity operator X^{oN} or Y^{oN}
Matrix full_parity(int n, ParityKind kind) {
  Matrix p = Matrix::Identity(1 << n, 1 << n);
  for (int q = 1; q <= n; ++q)
    p = p * pauli_on_qubit(n, q, kind == ParityKind::X ? PauliAxis::X : PauliAxis::Y);
  return p;
}

// check every block vector against the full-space parity operator
void check_eigenvectors(const ParityBasis& basis) {
  const Matrix parity = full_parity(basis.n_qubits, basis.kind);
  const Matrix iso = symmetric_isometry(basis.n_qubits);
  for (int sign : {+1, -1}) {
    const auto& block = sign > 0 ? basis.plus_vectors : basis.minus_vectors;
    for (const SymmetricState& v : block) {
      const Vector full = iso.adjoint() * v.amplitudes;
      REQUIRE((parity * full - double(sign) * full).norm() < 1e-12);
    }
  }
}
}  // namespace

TEST_CASE("x-parity basis for N = 3 matches the printed vectors") {
  const ParityBasis b = x_parity_basis(3);
  REQUIRE(b.plus_vectors.size() == 2);
  REQUIRE(b.minus_vectors.size() == 2);
  const double s = 1.0 / std::sqrt(2.0);

  const Vector& v1 = b.plus_vectors[0].amplitudes;
  REQUIRE(std::abs(v1[0] - s) < 1e-15);
  REQUIRE(std::abs(v1[3] - s) < 1e-15);
  const Vector& v2 = b.plus_vectors[1].amplitudes;
  REQUIRE(std::abs(v2[1] - s) < 1e-15);
  REQUIRE(std::abs(v2[2] - s) < 1e-15);
  const Vector& v3 = b.minus_vectors[0].amplitudes;
  REQUIRE(std::abs(v3[0] - s) < 1e-15);
  REQUIRE(std::abs(v3[3] + s) < 1e-15);
  const Vector& v4 = b.minus_vectors[1].amplitudes;
  REQUIRE(std::abs(v4[1] - s) < 1e-15);
  REQUIRE(std::abs(v4[2] + s) < 1e-15);
}

TEST_CASE("x-parity block dimensions") {
  const ParityBasis b4 = x_parity_basis(4);
  REQUIRE(b4.plus_vectors.size() == 3);
  REQUIRE(b4.minus_vectors.size() == 2);
  for (int n = 2; n <= 8; ++n) {
    const ParityBasis b = x_parity_basis(n);
    if (n % 2 == 0) {
      REQUIRE(int(b.plus_vectors.size()) == n / 2 + 1);
      REQUIRE(int(b.minus_vectors.size()) == n / 2);
    } else {
      REQUIRE(int(b.plus_vectors.size()) == (n + 1) / 2);
      REQUIRE(int(b.minus_vectors.size()) == (n + 1) / 2);
    }
  }
}

TEST_CASE("parity bases are eigenbases of the full-space parity operators") {
  for (int n = 2; n <= 6; ++n) {
    check_eigenvectors(x_parity_basis(n));
    check_eigenvectors(y_parity_basis(n));
  }
}

TEST_CASE("y-parity basis phases") {
  // N = 3, k = 1: the +-labelled combination (|D0> + i|D3>)/sqrt(2); it
  // carries Y_p eigenvalue -1 and therefore lives in the minus block.
  const ParityBasis b3 = y_parity_basis(3);
  const Vector& w = b3.minus_vectors[0].amplitudes;
  const double s = 1.0 / std::sqrt(2.0);
  REQUIRE(std::abs(w[0] - s) < 1e-15);
  REQUIRE(std::abs(w[3] - Complex(0.0, s)) < 1e-15);

  // blocks are mutually orthogonal and orthonormal
  for (int n = 2; n <= 6; ++n) {
    const ParityBasis b = y_parity_basis(n);
    std::vector<SymmetricState> all = b.plus_vectors;
    all.insert(all.end(), b.minus_vectors.begin(), b.minus_vectors.end());
    REQUIRE(int(all.size()) == n + 1);
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = 0; j < all.size(); ++j) {
        const Complex g = all[i].amplitudes.dot(all[j].amplitudes);
        REQUIRE(std::abs(g - (i == j ? 1.0 : 0.0)) < 1e-14);
      }
    // even N: the self-paired survivor sits in the +1 block
    if (n % 2 == 0) {
      REQUIRE(int(b.plus_vectors.size()) == n / 2 + 1);
      REQUIRE(int(b.minus_vectors.size()) == n / 2);
    }
  }
}

TEST_CASE("project_operator reproduces the reduced two-level matrices") {
  const ParityBasis b = x_parity_basis(3);
  const Matrix hzz = hzz_diagonal(3).cast<Complex>().asDiagonal();

  const Matrix h_minus = project_operator(hzz, b.minus_vectors);
  Matrix h_expected(2, 2);
  h_expected << 3, 0, 0, -1;
  REQUIRE(max_abs(h_minus - h_expected) < 1e-12);

  const Matrix x_minus = project_operator(s1_matrix(3, 0.0), b.minus_vectors);
  Matrix x_expected(2, 2);
  x_expected << 0, std::sqrt(3.0), std::sqrt(3.0), -2;
  REQUIRE(max_abs(x_minus - x_expected) < 1e-12);

  REQUIRE(max_abs(project_operator(Matrix::Identity(4, 4), b.plus_vectors) -
                  Matrix::Identity(2, 2)) < 1e-15);

  // H_ZZ and S1(0) have no cross-block terms: re-embedding both block
  // projections reproduces the sector operators
  for (const Matrix& op : {hzz, s1_matrix(3, 0.0)}) {
    Matrix embedded = Matrix::Zero(4, 4);
    for (const auto* block : {&b.plus_vectors, &b.minus_vectors}) {
      Matrix basis(4, block->size());
      for (std::size_t j = 0; j < block->size(); ++j)
        basis.col(j) = (*block)[j].amplitudes;
      embedded += basis * project_operator(op, *block) * basis.adjoint();
    }
    REQUIRE(max_abs(embedded - op) < 1e-12);
  }

  // non-orthonormal block rejected
  std::vector<SymmetricState> bad = b.minus_vectors;
  bad[0].amplitudes *= 2.0;
  REQUIRE_THROWS_AS(project_operator(hzz, bad), std::invalid_argument);
}

TEST_CASE("rotation axis decomposition") {
  Matrix h(2, 2);
  h << 3, 0, 0, -1;
  const AxisDecomposition d1 = rotation_axis_decomposition(h);
  REQUIRE(d1.axis_defined);
  REQUIRE(d1.offset == Approx(1.0));
  REQUIRE(d1.rate == Approx(2.0));
  REQUIRE(d1.axis[0] == Approx(0.0).margin(1e-15));
  REQUIRE(d1.axis[1] == Approx(0.0).margin(1e-15));
  REQUIRE(d1.axis[2] == Approx(1.0));

  Matrix x(2, 2);
  x << 0, std::sqrt(3.0), std::sqrt(3.0), -2;
  const AxisDecomposition d2 = rotation_axis_decomposition(x);
  REQUIRE(d2.offset == Approx(-1.0));
  REQUIRE(d2.rate == Approx(2.0));
  REQUIRE(d2.axis[0] == Approx(std::sqrt(3.0) / 2.0));
  REQUIRE(d2.axis[1] == Approx(0.0).margin(1e-15));
  REQUIRE(d2.axis[2] == Approx(0.5));

  const AxisDecomposition d3 = rotation_axis_decomposition(Matrix::Identity(2, 2));
  REQUIRE_FALSE(d3.axis_defined);
  REQUIRE(d3.rate == 0.0);
  REQUIRE(d3.offset == Approx(1.0));

  // reconstruction property on random Hermitian matrices
  SplitMix64 rng(12);
  for (int k = 0; k < 50; ++k) {
    Matrix m(2, 2);
    const double a = rng.uniform(-2.0, 2.0);
    const double b = rng.uniform(-2.0, 2.0);
    const Complex off(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
    m << a, off, std::conj(off), b;
    const AxisDecomposition d = rotation_axis_decomposition(m);
    Matrix rebuilt(2, 2);
    rebuilt << d.offset + d.rate * d.axis[2],
        d.rate * Complex(d.axis[0], -d.axis[1]),
        d.rate * Complex(d.axis[0], d.axis[1]), d.offset - d.rate * d.axis[2];
    REQUIRE(max_abs(rebuilt - m) < 1e-12);
  }

  REQUIRE_THROWS_AS(rotation_axis_decomposition(Matrix::Identity(3, 3)),
                    std::invalid_argument);
}

TEST_CASE("Bloch trajectory of the optimal N=3 sequence") {
  const PulseSequence seq = testing::known_optimum_n3();
  const auto traj = bloch_trajectory(seq, 100);
  REQUIRE(traj.size() == 301);

  const BlochPoint a = traj.front().point;
  REQUIRE(a.x == Approx(-std::sqrt(3.0) / 2.0).margin(1e-9));
  REQUIRE(a.y == Approx(0.0).margin(1e-9));
  REQUIRE(a.z == Approx(-0.5).margin(1e-9));

  const BlochPoint d = traj.back().point;
  REQUIRE(d.x == Approx(std::sqrt(3.0) / 2.0).margin(1e-6));
  REQUIRE(d.y == Approx(0.0).margin(1e-6));
  REQUIRE(d.z == Approx(0.5).margin(1e-6));

  double t_prev = -1.0;
  for (const BlochSample& s : traj) {
    const double norm = s.point.x * s.point.x + s.point.y * s.point.y +
                        s.point.z * s.point.z;
    REQUIRE(std::fabs(norm - 1.0) < 1e-10);
    REQUIRE(s.t >= t_prev - 1e-15);
    t_prev = s.t;
  }
  REQUIRE(traj.front().t == 0.0);
  REQUIRE(traj.back().t == Approx(total_duration(seq)));

  // the Ising arcs precess about (0,0,1): z stays constant on both
  for (const BlochSample& s : traj) {
    if (s.stage == "A-B") REQUIRE(s.point.z == Approx(a.z).margin(1e-10));
    if (s.stage == "C-D") REQUIRE(s.point.z == Approx(d.z).margin(1e-10));
  }

  // stage boundaries only with samples = 1: exactly A, B, C, D
  const auto ends = bloch_trajectory(seq, 1);
  REQUIRE(ends.size() == 4);
  REQUIRE(ends[0].stage == "A-B");
  REQUIRE(ends[1].stage == "A-B");
  REQUIRE(ends[2].stage == "B-C");
  REQUIRE(ends[3].stage == "C-D");
  REQUIRE(ends[3].point.x == Approx(d.x).margin(1e-12));
}

TEST_CASE("Bloch trajectory rejects sequences that leave the -1 block") {
  // an x-axis first pulse with a generic angle does not map |000> into the
  // -1 block
  PulseSequence seq = testing::known_optimum_n3();
  seq.phi[0] = 0.0;
  REQUIRE_THROWS_AS(bloch_trajectory(seq, 10), LeakageError);
  try {
    bloch_trajectory(seq, 10);
  } catch (const LeakageError& e) {
    REQUIRE(e.stage_name == "A-B");
  }

  // a mid-pulse azimuth off the x axis breaks the confinement mid-sequence
  PulseSequence tilted = testing::known_optimum_n3();
  tilted.phi[1] = 0.4;
  REQUIRE_THROWS_AS(bloch_trajectory(tilted, 10), LeakageError);
  try {
    bloch_trajectory(tilted, 10);
  } catch (const LeakageError& e) {
    REQUIRE(e.stage_name == "B-C");
  }

  REQUIRE_THROWS_AS(bloch_trajectory(testing::known_optimum_n4(), 10),
                    std::invalid_argument);
}
