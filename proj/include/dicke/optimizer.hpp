#pragma once

// Gradient-free maximization of the Dicke-state fidelity over the eight
// pulse-sequence parameters: multistart Nelder-Mead on 1 - F with a seeded
// splitmix64 start distribution. Deterministic for a fixed (seed, config).

#include "pulse_sequence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace dicke {

struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double uniform() { return double(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

struct ParamInterval {
  double lo = 0.0;
  double hi = 0.0;
};

struct OptimizerConfig {
  int starts = 64;
  std::uint64_t seed = 0;
  int max_evals_per_start = 20000;
  double convergence_tol = 1e-12;  // simplex function-value spread
  double initial_step = 0.5;       // simplex edge length
  // Start-sampling intervals in parameter order xi1, xi2, alpha1..3, phi1..3.
  std::array<ParamInterval, 8> bounds = default_bounds();

  static std::array<ParamInterval, 8> default_bounds() {
    constexpr double pi = std::numbers::pi;
    return {{{0.0, pi}, {0.0, pi}, {-pi, pi}, {-pi, pi}, {-pi, pi},
             {0.0, pi}, {0.0, pi}, {0.0, pi}}};
  }
};

inline OptimizerConfig default_optimize_config() { return OptimizerConfig{}; }

// Local refinement: one start, a simplex small enough that an exact optimum
// is returned unchanged.
inline OptimizerConfig default_polish_config() {
  OptimizerConfig cfg;
  cfg.starts = 1;
  cfg.initial_step = 2e-7;
  return cfg;
}

struct OptimizationResult {
  PulseSequence best;
  double fidelity = 0.0;
  bool converged = false;
  std::vector<double> infidelity_history;  // per-start best 1-F
  long evaluations_used = 0;
};

namespace detail {

struct SimplexResult {
  Eigen::VectorXd x;
  double f = 0.0;
  bool converged = false;
  long evals = 0;
};

// Standard Nelder-Mead (reflection 1, expansion 2, contraction 1/2, shrink
// 1/2); stops when the function-value spread drops below tol or the
// evaluation budget runs out. Fully deterministic.
inline SimplexResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                                 const Eigen::VectorXd& x0, double step, double tol,
                                 int max_evals) {
  const int n = int(x0.size());
  std::vector<Eigen::VectorXd> pts(n + 1, x0);
  std::vector<double> fv(n + 1);
  long evals = 0;
  auto eval = [&](const Eigen::VectorXd& x) {
    ++evals;
    return f(x);
  };
  fv[0] = eval(pts[0]);
  for (int i = 0; i < n; ++i) {
    pts[i + 1][i] += step;
    fv[i + 1] = eval(pts[i + 1]);
  }

  std::vector<int> order(n + 1);
  bool converged = false;
  while (true) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return fv[a] < fv[b]; });
    const int best = order[0];
    const int second_worst = order[n - 1];
    const int worst = order[n];

    if (fv[worst] - fv[best] < tol) {
      converged = true;
      break;
    }
    if (evals >= max_evals) break;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (int i = 0; i <= n; ++i)
      if (i != worst) centroid += pts[i];
    centroid /= double(n);

    const Eigen::VectorXd reflected = centroid + (centroid - pts[worst]);
    const double fr = eval(reflected);
    if (fr < fv[best]) {
      const Eigen::VectorXd expanded = centroid + 2.0 * (centroid - pts[worst]);
      const double fe = eval(expanded);
      if (fe < fr) {
        pts[worst] = expanded;
        fv[worst] = fe;
      } else {
        pts[worst] = reflected;
        fv[worst] = fr;
      }
      continue;
    }
    if (fr < fv[second_worst]) {
      pts[worst] = reflected;
      fv[worst] = fr;
      continue;
    }
    bool shrink = false;
    if (fr < fv[worst]) {
      const Eigen::VectorXd contracted = centroid + 0.5 * (centroid - pts[worst]);
      const double fc = eval(contracted);
      if (fc <= fr) {
        pts[worst] = contracted;
        fv[worst] = fc;
      } else {
        shrink = true;
      }
    } else {
      const Eigen::VectorXd contracted = centroid - 0.5 * (centroid - pts[worst]);
      const double fc = eval(contracted);
      if (fc < fv[worst]) {
        pts[worst] = contracted;
        fv[worst] = fc;
      } else {
        shrink = true;
      }
    }
    if (shrink) {
      for (int i = 0; i <= n; ++i) {
        if (i == best) continue;
        pts[i] = pts[best] + 0.5 * (pts[i] - pts[best]);
        fv[i] = eval(pts[i]);
      }
    }
  }

  int best = 0;
  for (int i = 1; i <= n; ++i)
    if (fv[i] < fv[best]) best = i;
  return SimplexResult{pts[best], fv[best], converged, evals};
}

inline PulseSequence sequence_from_raw(int n_qubits, int target,
                                       const Eigen::VectorXd& x) {
  // interaction durations are reflected at zero
  return PulseSequence{n_qubits,
                       target,
                       {std::fabs(x[0]), std::fabs(x[1])},
                       {x[2], x[3], x[4]},
                       {x[5], x[6], x[7]}};
}

// Period P of u_zz in xi up to a global phase: the H_ZZ/J eigenvalue gaps are
// multiples of 4 for odd N and of 2 for even N.
inline double uzz_fidelity_period(int n_qubits) {
  constexpr double pi = std::numbers::pi;
  return (n_qubits % 2 == 1) ? pi / 2.0 : pi;
}

}  // namespace detail

// Fidelity-preserving canonical form of an optimization result: xi reduced
// modulo the u_zz period, the sequence or its complex-conjugate image
// (xi -> P - xi, alpha -> -alpha, phi -> -phi) picked by shorter duration,
// azimuths gauge-shifted so phi1 = pi/2 (axial symmetry) and wrapped into
// [0, pi).
inline PulseSequence canonical_optimum(const PulseSequence& seq) {
  validate(seq);
  constexpr double pi = std::numbers::pi;
  const double period = detail::uzz_fidelity_period(seq.n_qubits);
  PulseSequence out = seq;
  for (double& x : out.xi) {
    x = std::fmod(x, period);
    if (x < 0.0) x += period;
  }
  PulseSequence conj = out;
  for (double& x : conj.xi) x = (x == 0.0) ? 0.0 : period - x;
  for (double& a : conj.alpha) a = -a;
  for (double& p : conj.phi) p = -p;
  if (total_duration(conj) < total_duration(out)) out = conj;

  const double shift = pi / 2.0 - out.phi[0];
  PulseSequence shifted = out;
  for (double& p : shifted.phi) p += shift;
  if (std::fabs(fidelity(shifted) - fidelity(out)) <= kAlgebraTol) out = shifted;

  return canonicalized(out);
}

// Multistart maximization of fidelity(n_qubits, target). Deterministic per
// (config.seed, config.starts); the best start wins by fidelity, ties by
// lower start index. Reports non-convergence if no start met convergence_tol.
inline OptimizationResult optimize(int n_qubits, int target_excitation,
                                   const OptimizerConfig& config = {}) {
  if (n_qubits < 2 || n_qubits > 12)
    throw std::invalid_argument("optimize: need 2 <= n_qubits <= 12");
  if (target_excitation < 0 || target_excitation > n_qubits)
    throw std::invalid_argument("optimize: target out of range");
  if (config.starts < 1 || config.convergence_tol <= 0.0)
    throw std::invalid_argument("optimize: invalid config");

  const auto objective = [&](const Eigen::VectorXd& x) {
    return 1.0 - fidelity(detail::sequence_from_raw(n_qubits, target_excitation, x));
  };

  SplitMix64 rng(config.seed);
  OptimizationResult result;
  bool have_best = false;
  for (int start = 0; start < config.starts; ++start) {
    Eigen::VectorXd x0(8);
    for (int i = 0; i < 8; ++i)
      x0[i] = rng.uniform(config.bounds[i].lo, config.bounds[i].hi);
    const detail::SimplexResult sr = detail::nelder_mead(
        objective, x0, config.initial_step, config.convergence_tol,
        config.max_evals_per_start);
    result.evaluations_used += sr.evals;
    result.infidelity_history.push_back(sr.f);
    result.converged = result.converged || sr.converged;

    const PulseSequence cand =
        canonical_optimum(detail::sequence_from_raw(n_qubits, target_excitation, sr.x));
    const double cand_fidelity = fidelity(cand);
    if (!have_best || cand_fidelity > result.fidelity) {
      have_best = true;
      result.best = cand;
      result.fidelity = cand_fidelity;
    }
  }
  return result;
}

// Local refinement from a user-supplied sequence; never returns a fidelity
// below the input's. The result stays in the seed's parameter chart (no
// canonicalization).
inline OptimizationResult polish(const PulseSequence& seed_sequence,
                                 const OptimizerConfig& config = default_polish_config()) {
  validate(seed_sequence);
  if (config.convergence_tol <= 0.0)
    throw std::invalid_argument("polish: invalid config");

  const int n = seed_sequence.n_qubits;
  const int target = seed_sequence.target_excitation;
  const auto objective = [&](const Eigen::VectorXd& x) {
    return 1.0 - fidelity(detail::sequence_from_raw(n, target, x));
  };

  Eigen::VectorXd x(8);
  x << seed_sequence.xi[0], seed_sequence.xi[1], seed_sequence.alpha[0],
      seed_sequence.alpha[1], seed_sequence.alpha[2], seed_sequence.phi[0],
      seed_sequence.phi[1], seed_sequence.phi[2];

  // Repeated simplex restarts at the running best point; a single tiny
  // simplex can collapse anisotropically before reaching the optimum.
  double f_best = objective(x);
  long evals = 1;
  bool converged = false;
  while (evals + 20 < config.max_evals_per_start) {
    const detail::SimplexResult sr = detail::nelder_mead(
        objective, x, config.initial_step, config.convergence_tol,
        int(config.max_evals_per_start - evals));
    evals += sr.evals;
    converged = sr.converged;
    const double improvement = f_best - sr.f;
    if (sr.f < f_best) {
      x = sr.x;
      f_best = sr.f;
    }
    if (improvement <= config.convergence_tol) break;
  }

  OptimizationResult result;
  result.best = detail::sequence_from_raw(n, target, x);
  result.fidelity = fidelity(result.best);
  result.converged = converged;
  result.infidelity_history = {f_best};
  result.evaluations_used = evals;
  return result;
}

}  // namespace dicke
