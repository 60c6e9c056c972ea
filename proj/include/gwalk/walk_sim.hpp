#pragma once

// Double-precision Grover walk on the complete graph with self-loops:
// Psi_{t+1} = U Psi_t, with Psi the n blocks psi(v_1) .. psi(v_n) stacked.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gwalk/errors.hpp"
#include "gwalk/exact_linalg.hpp"

namespace gwalk {

using Complex = std::complex<double>;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kDefaultPeriodTolerance = 1e-9;
inline constexpr unsigned kDefaultPeriodTrials = 8;

struct AmplitudeState {
  unsigned n = 0;
  Eigen::VectorXcd amplitudes;

  double norm() const { return amplitudes.norm(); }

  /// Squared norm of each vertex block.
  std::vector<double> vertex_probabilities() const {
    std::vector<double> p(n);
    for (unsigned v = 0; v < n; ++v) p[v] = amplitudes.segment(static_cast<Eigen::Index>(v) * n, n).squaredNorm();
    return p;
  }
};

struct WalkTrace {
  std::vector<AmplitudeState> states;
  std::vector<std::vector<double>> probabilities;
  std::optional<unsigned long long> seed;
  std::optional<unsigned long long> detected_period;
};

/// Numeric value of sum c_k zeta^k.
inline Complex evaluate(const CycNum& a) {
  const double n = a.modulus();
  Complex z = 0;
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
    const double c = a.coeffs()[k].get_d();
    if (c != 0) z += c * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / n);
  }
  return z;
}

inline Eigen::MatrixXcd evaluate(const CycMatrix& m) {
  const auto d = static_cast<Eigen::Index>(m.dim());
  Eigen::MatrixXcd r(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) r(i, j) = evaluate(m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
  return r;
}

inline Eigen::MatrixXcd build_U_float(unsigned n) {
  detail::require_walk_size(n, "build_U_float");
  const double two_over_n = 2.0 / n;
  const auto dim = static_cast<Eigen::Index>(n) * n;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);
  // Block (r, c) is P_{(c - r) mod n}: only row (c - r) mod n is nonzero.
  for (unsigned br = 0; br < n; ++br)
    for (unsigned bc = 0; bc < n; ++bc) {
      const unsigned j = (bc + n - br) % n;
      for (unsigned k = 0; k < n; ++k)
        u(br * n + j, bc * n + k) = k == j ? two_over_n - 1 : two_over_n;
    }
  return u;
}

inline AmplitudeState normalized(unsigned n, Eigen::VectorXcd v) {
  if (v.size() != static_cast<Eigen::Index>(n) * n) throw DimensionMismatch("state must have n^2 amplitudes");
  const double nrm = v.norm();
  if (nrm == 0) throw PreconditionViolation("cannot normalize the zero vector");
  return {n, v / nrm};
}

inline AmplitudeState uniform_state(unsigned n) {
  detail::require_walk_size(n, "uniform_state");
  return normalized(n, Eigen::VectorXcd::Ones(static_cast<Eigen::Index>(n) * n));
}

/// Equal amplitude on every component of vertex `vertex` (1-based).
inline AmplitudeState vertex_state(unsigned n, unsigned vertex) {
  detail::require_walk_size(n, "vertex_state");
  if (vertex < 1 || vertex > n)
    throw IndexOutOfRange("vertex " + std::to_string(vertex) + " not in 1.." + std::to_string(n));
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n) * n);
  v.segment(static_cast<Eigen::Index>(vertex - 1) * n, n).setOnes();
  return normalized(n, std::move(v));
}

/// Independent standard complex Gaussians, normalized.
template <class Rng>
AmplitudeState random_state(unsigned n, Rng& rng) {
  detail::require_walk_size(n, "random_state");
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd v(static_cast<Eigen::Index>(n) * n);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    v(i) = Complex(re, im);
  }
  return normalized(n, std::move(v));
}

inline WalkTrace simulate(unsigned n, const AmplitudeState& initial, unsigned long long steps) {
  detail::require_walk_size(n, "simulate");
  if (initial.n != n || initial.amplitudes.size() != static_cast<Eigen::Index>(n) * n)
    throw DimensionMismatch("simulate: initial state does not match n = " + std::to_string(n));
  if (std::abs(initial.norm() - 1.0) >= kNormTolerance)
    throw PreconditionViolation("simulate: initial state is not normalized (norm " + std::to_string(initial.norm()) + ")");
  const Eigen::MatrixXcd u = build_U_float(n);
  WalkTrace trace;
  trace.states.reserve(steps + 1);
  trace.states.push_back(initial);
  trace.probabilities.push_back(initial.vertex_probabilities());
  for (unsigned long long t = 0; t < steps; ++t) {
    AmplitudeState next{n, u * trace.states.back().amplitudes};
    trace.probabilities.push_back(next.vertex_probabilities());
    trace.states.push_back(std::move(next));
  }
  return trace;
}

struct PeriodOptions {
  unsigned trials = kDefaultPeriodTrials;
  /// 0 means 4n.
  unsigned long long max_steps = 0;
  double tol = kDefaultPeriodTolerance;
  std::uint64_t seed = 0;
};

/// Smallest t <= max_steps at which every one of `trials` random states has
/// returned to within `tol` of its start. Using several states recovers the
/// least common multiple of the individual periods.
inline std::optional<unsigned long long> detect_period(unsigned n, const PeriodOptions& opt = {}) {
  detail::require_walk_size(n, "detect_period");
  if (opt.trials < 1) throw PreconditionViolation("detect_period: trials must be >= 1");
  if (!(opt.tol > 0)) throw PreconditionViolation("detect_period: tol must be positive");
  const unsigned long long max_steps = opt.max_steps ? opt.max_steps : 4ull * n;
  const Eigen::MatrixXcd u = build_U_float(n);
  std::mt19937_64 rng(opt.seed);
  const auto dim = static_cast<Eigen::Index>(n) * n;
  Eigen::MatrixXcd start(dim, opt.trials);
  for (unsigned k = 0; k < opt.trials; ++k) start.col(k) = random_state(n, rng).amplitudes;
  Eigen::MatrixXcd cur = start;
  for (unsigned long long t = 1; t <= max_steps; ++t) {
    cur = u * cur;
    bool all_back = true;
    for (unsigned k = 0; k < opt.trials && all_back; ++k) all_back = (cur.col(k) - start.col(k)).norm() < opt.tol;
    if (all_back) return t;
  }
  return std::nullopt;
}

}  // namespace gwalk
