#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "fermitrap/errors.hpp"

namespace fermitrap {

namespace detail {

template <typename Scalar>
void check_position(Scalar xi) {
  if (!std::isfinite(xi)) throw DomainError("hermite function: non-finite position");
}

// Normalized three-term recurrence; calls sink(k, phi_k) for k = 0..n_top.
// Both the single-mode and the ladder evaluators go through here so that
// their results agree bitwise.
template <typename Scalar, typename Sink>
void hermite_recurrence(int n_top, Scalar xi, Sink&& sink) {
  using std::exp;
  using std::sqrt;
  // Past this point the Gaussian factor is subnormal or zero.
  static const Scalar underflow = -std::log(std::numeric_limits<Scalar>::min());
  const Scalar half_sq = xi * xi / Scalar(2);
  if (!(half_sq < underflow)) {
    for (int k = 0; k <= n_top; ++k) sink(k, Scalar(0));
    return;
  }
  const Scalar pi_quarter = Scalar(1) / sqrt(sqrt(std::numbers::pi_v<Scalar>));
  Scalar prev = pi_quarter * exp(-half_sq);
  sink(0, prev);
  if (n_top == 0) return;
  Scalar cur = sqrt(Scalar(2)) * xi * prev;
  sink(1, cur);
  for (int k = 1; k < n_top; ++k) {
    const Scalar next = sqrt(Scalar(2) / Scalar(k + 1)) * xi * cur -
                        sqrt(Scalar(k) / Scalar(k + 1)) * prev;
    prev = cur;
    cur = next;
    sink(k + 1, cur);
  }
}

}  // namespace detail

/// Normalized harmonic-oscillator eigenfunction phi_n at the dimensionless
/// position xi = alpha * x.
template <typename Scalar>
Scalar hermite_function(int n, Scalar xi) {
  if (n < 0) throw DomainError("hermite function: negative mode index");
  detail::check_position(xi);
  Scalar out(0);
  detail::hermite_recurrence(n, xi, [&](int k, Scalar v) {
    if (k == n) out = v;
  });
  return out;
}

/// phi_0(xi) ... phi_{n_top}(xi) from a single recurrence pass.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> hermite_ladder(int n_top, Scalar xi) {
  if (n_top < 0) throw DomainError("hermite ladder: negative mode index");
  detail::check_position(xi);
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> out(n_top + 1);
  detail::hermite_recurrence(n_top, xi, [&](int k, Scalar v) { out[k] = v; });
  return out;
}

/// Evaluator for the modes 0..n_max of the 1D harmonic trap, in units where
/// alpha = sqrt(m omega / hbar) = 1. Positions so deep in the tail that the
/// Gaussian factor underflows evaluate to exactly zero.
template <typename Scalar = double>
class OscillatorBasis {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  explicit OscillatorBasis(int n_max) : n_max_(n_max) {
    if (n_max < 0) throw DomainError("OscillatorBasis: n_max must be >= 0");
  }

  int n_max() const { return n_max_; }

  Scalar eval_mode(int n, Scalar xi) const {
    check_index(n);
    return hermite_function(n, xi);
  }

  Vector eval_ladder(int n_top, Scalar xi) const {
    check_index(n_top);
    return hermite_ladder(n_top, xi);
  }

 private:
  void check_index(int n) const {
    if (n < 0 || n > n_max_)
      throw DomainError("OscillatorBasis: mode index " + std::to_string(n) +
                        " outside [0, " + std::to_string(n_max_) + "]");
  }

  int n_max_;
};

}  // namespace fermitrap
