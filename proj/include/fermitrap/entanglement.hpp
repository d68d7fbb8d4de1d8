#pragma once

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "fermitrap/errors.hpp"
#include "fermitrap/pair_correlations.hpp"
#include "fermitrap/spin_density.hpp"

namespace fermitrap {

/// Wootters concurrence, clamped to [0, 1].
template <typename Scalar>
struct Concurrence {
  Scalar value;
};

template <typename Scalar>
struct PptReport {
  Scalar min_pt_eigenvalue;
  bool entangled;
};

namespace detail {
template <typename Scalar>
Concurrence<Scalar> clamp_concurrence(Scalar c) {
  return {std::clamp(c, Scalar(0), Scalar(1))};
}

// Y (x) Y for real states.
template <typename Scalar>
Eigen::Matrix<Scalar, 4, 4> spin_flip() {
  Eigen::Matrix<Scalar, 4, 4> yy = Eigen::Matrix<Scalar, 4, 4>::Zero();
  yy(0, 3) = yy(3, 0) = Scalar(-1);
  yy(1, 2) = yy(2, 1) = Scalar(1);
  return yy;
}
}  // namespace detail

/// Closed-form concurrence of the even-N pair state from its kernels.
template <typename Scalar>
Concurrence<Scalar> concurrence_pair(const PairKernels<Scalar>& k) {
  const Scalar norm = pair_normalizer(k);
  const Scalar excess =
      Scalar(2) * k.overlap * k.overlap - k.density_x * k.density_xp;
  return detail::clamp_concurrence(Scalar(2) / std::abs(norm) * std::max(excess, Scalar(0)));
}

/// Concurrence of the BCS state when every per-level overlap equals y.
/// Requires 0 <= |y|^2 <= 1, 0 < Q <= M and |y|^2 < 2Q/M.
template <typename Scalar>
Concurrence<Scalar> concurrence_bcs_uniform(Scalar y_abs2, Scalar pairs, int levels) {
  if (!(y_abs2 >= Scalar(0) && y_abs2 <= Scalar(1)))
    throw InvalidParameterError("concurrence_bcs_uniform: |y|^2 must lie in [0, 1]");
  if (levels < 1 || !(pairs > Scalar(0) && pairs <= Scalar(levels)))
    throw InvalidParameterError("concurrence_bcs_uniform: need 0 < Q <= M");
  const Scalar ratio = pairs / Scalar(levels);
  const Scalar den = Scalar(2) * ratio - y_abs2;
  if (!(den > Scalar(0)))
    throw InvalidParameterError("concurrence_bcs_uniform: |y|^2 >= 2Q/M is outside the model");
  const Scalar num = std::max(Scalar(2) * y_abs2 - ratio, Scalar(0));
  return detail::clamp_concurrence(num / den);
}

/// General two-qubit concurrence max(0, l1 - l2 - l3 - l4).
///
/// The l_i are the singular values of tau = W^T (Y x Y) W with rho = W W^T,
/// which equal the square roots of the eigenvalues of rho (Y x Y) rho* (Y x Y)
/// without taking square roots of round-off-sized eigenvalues.
template <typename Scalar>
Concurrence<Scalar> wootters_concurrence(const TwoSpinDensityMatrix<Scalar>& rho) {
  using Matrix4 = Eigen::Matrix<Scalar, 4, 4>;
  Eigen::SelfAdjointEigenSolver<Matrix4> eig(rho.matrix());
  const auto weights = eig.eigenvalues().cwiseMax(Scalar(0)).cwiseSqrt();
  const Matrix4 w = eig.eigenvectors() * weights.asDiagonal();
  const Matrix4 tau = w.transpose() * detail::spin_flip<Scalar>() * w;
  // Singular values come back sorted in decreasing order.
  const auto sv = Eigen::JacobiSVD<Matrix4>(tau).singularValues();
  return detail::clamp_concurrence(sv[0] - sv[1] - sv[2] - sv[3]);
}

/// Partial transpose over the second label.
template <typename Scalar>
Eigen::Matrix<Scalar, 4, 4> partial_transpose(const Eigen::Matrix<Scalar, 4, 4>& m) {
  Eigen::Matrix<Scalar, 4, 4> pt;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) pt(2 * a + b, 2 * c + d) = m(2 * a + d, 2 * c + b);
  return pt;
}

/// Peres-Horodecki test: the state is entangled iff its partial transpose
/// has a negative eigenvalue.
template <typename Scalar>
PptReport<Scalar> ppt_min_eigenvalue(const TwoSpinDensityMatrix<Scalar>& rho) {
  using Matrix4 = Eigen::Matrix<Scalar, 4, 4>;
  const Scalar lo =
      Eigen::SelfAdjointEigenSolver<Matrix4>(partial_transpose(rho.matrix()), Eigen::EigenvaluesOnly)
          .eigenvalues()
          .minCoeff();
  return {lo, lo < -Scalar(tolerance::psd)};
}

}  // namespace fermitrap
