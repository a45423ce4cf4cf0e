#pragma once

// Conversion between the dimensionless core (hbar = 1, time in 1/J) and SI
// quantities for van-der-Waals-coupled neutral-atom qubits.

#include "pulse_sequence.hpp"

#include <stdexcept>

namespace dicke {

inline constexpr double kHBar = 1.054571817e-34;  // J s (CODATA 2018)

struct PlatformParams {
  double c6 = 0.0;  // vdW coefficient, J m^6
  double r = 0.0;   // interatomic distance, m
};

// Effective Ising coupling J = C6 / (4 R^6), in joules. Couplings quoted as
// frequencies (e.g. "J/hbar = 1.5 MHz") are treated as angular frequencies,
// i.e. J = hbar * 1.5e6 / s; the source leaves a possible 2*pi open.
inline double vdw_coupling(const PlatformParams& p) {
  if (!(p.c6 > 0.0) || !(p.r > 0.0))
    throw std::invalid_argument("vdw_coupling: need c6 > 0 and r > 0");
  const double r3 = p.r * p.r * p.r;
  return p.c6 / (4.0 * r3 * r3);
}

// Preparation time in seconds: total_duration(seq) * hbar / J.
inline double physical_duration(const PulseSequence& seq, double coupling) {
  if (!(coupling > 0.0))
    throw std::invalid_argument("physical_duration: coupling must be positive");
  return total_duration(seq) * kHBar / coupling;
}

}  // namespace dicke
