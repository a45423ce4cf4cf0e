#pragma once

// Systematic-error model and infidelity sweeps around a (nominally optimal)
// pulse sequence. Duration and angle errors are relative, xi -> xi(1+eps) and
// alpha -> alpha(1+eps); azimuth errors are absolute, phi -> phi + eps.

#include "pulse_sequence.hpp"

#include <Eigen/QR>

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace dicke {

struct ErrorVector {
  std::array<double, 2> eps_xi{};
  std::array<double, 3> eps_alpha{};
  std::array<double, 3> eps_phi{};
};

inline PulseSequence apply_errors(const PulseSequence& base, const ErrorVector& err) {
  validate(base);
  PulseSequence out = base;
  for (int i = 0; i < 2; ++i) {
    if (!std::isfinite(err.eps_xi[i]))
      throw std::invalid_argument("apply_errors: eps_xi must be finite");
    out.xi[i] = base.xi[i] * (1.0 + err.eps_xi[i]);
    if (out.xi[i] < 0.0)
      throw std::invalid_argument("apply_errors: perturbed xi is negative");
  }
  for (int j = 0; j < 3; ++j) {
    if (!std::isfinite(err.eps_alpha[j]) || !std::isfinite(err.eps_phi[j]))
      throw std::invalid_argument("apply_errors: errors must be finite");
    out.alpha[j] = base.alpha[j] * (1.0 + err.eps_alpha[j]);
    out.phi[j] = base.phi[j] + err.eps_phi[j];  // no re-wrapping
  }
  return out;
}

enum class SweepParam { Xi1, Xi2, Alpha1, Alpha2, Alpha3, Phi1, Phi2, Phi3 };

inline constexpr std::array<SweepParam, 8> kAllSweepParams{
    SweepParam::Xi1,    SweepParam::Xi2,    SweepParam::Alpha1, SweepParam::Alpha2,
    SweepParam::Alpha3, SweepParam::Phi1,   SweepParam::Phi2,   SweepParam::Phi3};

inline std::string sweep_param_name(SweepParam p) {
  switch (p) {
    case SweepParam::Xi1: return "xi1";
    case SweepParam::Xi2: return "xi2";
    case SweepParam::Alpha1: return "alpha1";
    case SweepParam::Alpha2: return "alpha2";
    case SweepParam::Alpha3: return "alpha3";
    case SweepParam::Phi1: return "phi1";
    case SweepParam::Phi2: return "phi2";
    case SweepParam::Phi3: return "phi3";
  }
  throw std::invalid_argument("sweep_param_name: bad enum value");
}

inline SweepParam sweep_param_from_name(const std::string& name) {
  for (SweepParam p : kAllSweepParams)
    if (sweep_param_name(p) == name) return p;
  throw std::invalid_argument(
      "unknown parameter name \"" + name +
      "\"; valid names: xi1, xi2, alpha1, alpha2, alpha3, phi1, phi2, phi3");
}

inline void set_error(ErrorVector& err, SweepParam p, double eps) {
  switch (p) {
    case SweepParam::Xi1: err.eps_xi[0] = eps; return;
    case SweepParam::Xi2: err.eps_xi[1] = eps; return;
    case SweepParam::Alpha1: err.eps_alpha[0] = eps; return;
    case SweepParam::Alpha2: err.eps_alpha[1] = eps; return;
    case SweepParam::Alpha3: err.eps_alpha[2] = eps; return;
    case SweepParam::Phi1: err.eps_phi[0] = eps; return;
    case SweepParam::Phi2: err.eps_phi[1] = eps; return;
    case SweepParam::Phi3: err.eps_phi[2] = eps; return;
  }
}

struct AxisSpec {
  SweepParam param = SweepParam::Xi1;
  double min = 0.0;
  double max = 0.0;
  int steps = 0;

  double value(int i) const {
    return steps == 1 ? min : min + (max - min) * i / (steps - 1);
  }
};

// Grid of infidelities 1-F; values are row-major over (y, x) for 2D sweeps,
// a single row for 1D sweeps.
struct SweepGrid {
  std::vector<AxisSpec> axes;
  std::vector<double> values;
};

inline SweepGrid sweep_1d(const PulseSequence& base, SweepParam param, double min,
                          double max, int steps) {
  validate(base);
  if (steps < 3) throw std::invalid_argument("sweep: need at least 3 steps");
  if (!(min < max)) throw std::invalid_argument("sweep: need min < max");
  SweepGrid grid;
  grid.axes = {AxisSpec{param, min, max, steps}};
  grid.values.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    ErrorVector err;
    set_error(err, param, grid.axes[0].value(i));
    grid.values.push_back(1.0 - fidelity(apply_errors(base, err)));
  }
  return grid;
}

inline SweepGrid sweep_2d(const PulseSequence& base, SweepParam param_x, double min_x,
                          double max_x, int steps_x, SweepParam param_y, double min_y,
                          double max_y, int steps_y) {
  validate(base);
  if (param_x == param_y)
    throw std::invalid_argument("sweep: the two parameters must be distinct");
  if (steps_x < 3 || steps_y < 3)
    throw std::invalid_argument("sweep: need at least 3 steps");
  if (!(min_x < max_x) || !(min_y < max_y))
    throw std::invalid_argument("sweep: need min < max");
  SweepGrid grid;
  grid.axes = {AxisSpec{param_x, min_x, max_x, steps_x},
               AxisSpec{param_y, min_y, max_y, steps_y}};
  grid.values.reserve(std::size_t(steps_x) * steps_y);
  for (int iy = 0; iy < steps_y; ++iy) {
    for (int ix = 0; ix < steps_x; ++ix) {
      ErrorVector err;
      set_error(err, param_x, grid.axes[0].value(ix));
      set_error(err, param_y, grid.axes[1].value(iy));
      grid.values.push_back(1.0 - fidelity(apply_errors(base, err)));
    }
  }
  return grid;
}

struct QuadraticFitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Least-squares fit of 1-F ~ a + b*eps + c*eps^2 over 11 points with
// |eps| <= 0.01; returns c. The linear term must be negligible (|b| <= 1e-6),
// otherwise the base sequence is not an optimum and the fit is rejected.
inline double quadratic_coefficient(const PulseSequence& base, SweepParam param) {
  validate(base);
  constexpr int kPoints = 11;
  constexpr double kHalfWidth = 0.01;
  Eigen::MatrixXd vand(kPoints, 3);
  Eigen::VectorXd rhs(kPoints);
  for (int i = 0; i < kPoints; ++i) {
    const double eps = -kHalfWidth + 2.0 * kHalfWidth * i / (kPoints - 1);
    ErrorVector err;
    set_error(err, param, eps);
    vand(i, 0) = 1.0;
    vand(i, 1) = eps;
    vand(i, 2) = eps * eps;
    rhs[i] = 1.0 - fidelity(apply_errors(base, err));
  }
  const Eigen::Vector3d coeffs = vand.colPivHouseholderQr().solve(rhs);
  if (std::fabs(coeffs[1]) > 1e-6)
    throw QuadraticFitError("quadratic_coefficient: linear term " +
                            std::to_string(coeffs[1]) + " dominates for " +
                            sweep_param_name(param) +
                            "; base sequence is not a local optimum");
  return coeffs[2];
}

}  // namespace dicke
