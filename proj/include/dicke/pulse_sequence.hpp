#pragma once

// Five-stage pulse sequence: three instantaneous global control pulses with
// two finite Ising-interaction pulses in between,
//   U = U_C(alpha3, phi3) U_ZZ(xi2) U_C(alpha2, phi2) U_ZZ(xi1) U_C(alpha1, phi1),
// acting on |D^N_0> = |0...0>. Eight parameters: interaction durations xi1,
// xi2 (units 1/J), rotation half-angles alpha1..3 (the rotation angle is
// 2*alpha), axis azimuths phi1..3.

#include "symsector.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace dicke {

struct PulseSequence {
  int n_qubits = 0;
  int target_excitation = 0;
  std::array<double, 2> xi{};     // >= 0
  std::array<double, 3> alpha{};  // signed half-angles
  std::array<double, 3> phi{};    // azimuths; canonical form keeps them in [0, pi)
};

inline void validate(const PulseSequence& seq) {
  if (seq.n_qubits < 2)
    throw std::invalid_argument("n must be at least 2");
  if (seq.target_excitation < 0 || seq.target_excitation > seq.n_qubits)
    throw std::invalid_argument("target must be between 0 and n");
  for (double x : seq.xi) {
    if (!std::isfinite(x)) throw std::invalid_argument("xi must be finite");
    if (x < 0.0) throw std::invalid_argument("xi must be nonnegative");
  }
  for (double a : seq.alpha)
    if (!std::isfinite(a)) throw std::invalid_argument("alpha must be finite");
  for (double p : seq.phi)
    if (!std::isfinite(p)) throw std::invalid_argument("phi must be finite");
}

inline PulseSequence make_sequence(int n_qubits, int target_excitation,
                                   std::array<double, 2> xi,
                                   std::array<double, 3> alpha,
                                   std::array<double, 3> phi) {
  PulseSequence seq{n_qubits, target_excitation, xi, alpha, phi};
  validate(seq);
  return seq;
}

// Wrap phi into [0, pi) with a compensating sign flip of alpha; uses
// S1(phi + pi) = -S1(phi), so the pulse unitary is unchanged.
inline void wrap_azimuth(double& alpha, double& phi) {
  constexpr double pi = std::numbers::pi;
  double k = std::floor(phi / pi);
  phi -= k * pi;
  if (phi >= pi) {  // rounding at the boundary
    phi -= pi;
    k += 1.0;
  }
  if (phi < 0.0) {
    phi += pi;
    k -= 1.0;
  }
  if (std::fmod(std::fabs(k), 2.0) == 1.0) alpha = -alpha;
}

inline PulseSequence canonicalized(const PulseSequence& seq) {
  PulseSequence out = seq;
  for (int j = 0; j < 3; ++j) wrap_azimuth(out.alpha[j], out.phi[j]);
  return out;
}

// Full sequence unitary on the (N+1)-dimensional sector.
inline Matrix compose(const PulseSequence& seq) {
  validate(seq);
  const int n = seq.n_qubits;
  Matrix u = u_c(n, seq.alpha[0], seq.phi[0]);
  u = u_zz(n, seq.xi[0]) * u;
  u = u_c(n, seq.alpha[1], seq.phi[1]) * u;
  u = u_zz(n, seq.xi[1]) * u;
  u = u_c(n, seq.alpha[2], seq.phi[2]) * u;
  return u;
}

// Final sector state produced from |D^N_0>.
inline Vector final_state(const PulseSequence& seq) {
  validate(seq);
  const int n = seq.n_qubits;
  const RealVector hzz = hzz_diagonal(n);
  Vector psi = Vector::Zero(n + 1);
  psi[0] = 1.0;
  psi = apply_expm_hermitian(s1_matrix(n, seq.phi[0]), seq.alpha[0], psi);
  for (int a = 0; a <= n; ++a) psi[a] *= std::exp(Complex(0.0, -seq.xi[0] * hzz[a]));
  psi = apply_expm_hermitian(s1_matrix(n, seq.phi[1]), seq.alpha[1], psi);
  for (int a = 0; a <= n; ++a) psi[a] *= std::exp(Complex(0.0, -seq.xi[1] * hzz[a]));
  psi = apply_expm_hermitian(s1_matrix(n, seq.phi[2]), seq.alpha[2], psi);
  return psi;
}

// Dicke-state fidelity F = |<D^N_a| U |D^N_0>|.
inline double fidelity(const PulseSequence& seq) {
  return std::abs(final_state(seq)[seq.target_excitation]);
}

// Total preparation time xi1 + xi2 (control pulses are instantaneous).
inline double total_duration(const PulseSequence& seq) {
  validate(seq);
  return seq.xi[0] + seq.xi[1];
}

struct WaveformPulse {
  double time;        // units 1/J
  double azimuth;     // radians
  double half_angle;  // radians; rotation angle is twice this

  double x_weight() const { return half_angle * std::cos(azimuth); }
  double y_weight() const { return half_angle * std::sin(azimuth); }
};

// Delta-pulse schedule of the control fields: h(t) carries weight
// half_angle * (cos azimuth, sin azimuth) at each pulse time.
struct WaveformDescription {
  std::vector<WaveformPulse> pulses;          // at t = 0, xi1, xi1 + xi2
  std::vector<double> interaction_gaps;       // xi1, xi2
};

inline WaveformDescription export_waveform(const PulseSequence& seq) {
  validate(seq);
  WaveformDescription w;
  const double t1 = seq.xi[0];
  const double t2 = seq.xi[0] + seq.xi[1];
  w.pulses = {{0.0, seq.phi[0], seq.alpha[0]},
              {t1, seq.phi[1], seq.alpha[1]},
              {t2, seq.phi[2], seq.alpha[2]}};
  w.interaction_gaps = {seq.xi[0], seq.xi[1]};
  return w;
}

}  // namespace dicke
