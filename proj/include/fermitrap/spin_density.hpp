#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Dense>

#include "fermitrap/errors.hpp"
#include "fermitrap/pair_correlations.hpp"

namespace fermitrap {

namespace tolerance {
inline constexpr double trace = 1e-12;
inline constexpr double hermitian = 1e-12;
inline constexpr double psd = 1e-12;
inline constexpr double degenerate = 1e-14;
}  // namespace tolerance

namespace detail {
// A pair normalizer is degenerate when it is not resolvable against the
// density product, or when that product itself has underflowed.
template <typename Scalar>
bool degenerate_pair(Scalar normalizer, Scalar density_product) {
  return !(density_product >= std::numeric_limits<Scalar>::min()) ||
         !(normalizer > Scalar(tolerance::degenerate) * density_product);
}
}  // namespace detail

/// Reduced state of two spin-1/2 (or +/- time-reversed) labels.
///
/// Basis order is {up-up, up-down, down-up, down-down} for the trap and
/// {++, +-, -+, --} for BCS; the first label belongs to the atom at x.
/// Construction validates Hermiticity, unit trace and positive
/// semidefiniteness, so every instance is a physical state.
template <typename Scalar>
class TwoSpinDensityMatrix {
 public:
  using Matrix4 = Eigen::Matrix<Scalar, 4, 4>;

  explicit TwoSpinDensityMatrix(const Matrix4& m) : m_(m) {
    if (!m.allFinite()) throw InvalidStateError("density matrix has non-finite entries");
    const Scalar asym = (m - m.transpose()).cwiseAbs().maxCoeff();
    if (asym > Scalar(tolerance::hermitian))
      throw InvalidStateError(describe("density matrix is not Hermitian", asym));
    const Scalar tr = m.trace();
    if (std::abs(tr - Scalar(1)) > Scalar(tolerance::trace))
      throw InvalidStateError(describe("density matrix trace differs from 1 by", tr - Scalar(1)));
    min_eigenvalue_ = Eigen::SelfAdjointEigenSolver<Matrix4>(m, Eigen::EigenvaluesOnly)
                          .eigenvalues()
                          .minCoeff();
    if (min_eigenvalue_ < -Scalar(tolerance::psd))
      throw InvalidStateError(describe("density matrix is not PSD; min eigenvalue", min_eigenvalue_));
  }

  const Matrix4& matrix() const { return m_; }
  Scalar operator()(int row, int col) const { return m_(row, col); }
  Scalar min_eigenvalue() const { return min_eigenvalue_; }

  /// Nonzero entries only on the diagonal and the (1,4)/(2,3) anti-diagonal.
  bool is_x_state(Scalar tol = Scalar(0)) const {
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        if (r != c && r + c != 3 && std::abs(m_(r, c)) > tol) return false;
    return true;
  }

  /// X-state whose (1,1)=(4,4), (2,2)=(3,3) and (1,4)=0, as produced for
  /// the even trap and BCS.
  bool is_symmetric_x_state(Scalar tol = Scalar(0)) const {
    return is_x_state(tol) && std::abs(m_(0, 3)) <= tol &&
           std::abs(m_(0, 0) - m_(3, 3)) <= tol && std::abs(m_(1, 1) - m_(2, 2)) <= tol;
  }

 private:
  static std::string describe(const char* what, Scalar value) {
    std::ostringstream os;
    os << what << " " << static_cast<double>(value);
    return os.str();
  }

  Matrix4 m_;
  Scalar min_eigenvalue_;
};

/// Matrix with `corner` on (1,1),(4,4), `middle` on (2,2),(3,3) and
/// `coherence` on (2,3),(3,2).
template <typename Scalar>
Eigen::Matrix<Scalar, 4, 4> x_matrix(Scalar corner, Scalar middle, Scalar coherence) {
  Eigen::Matrix<Scalar, 4, 4> m = Eigen::Matrix<Scalar, 4, 4>::Zero();
  m(0, 0) = m(3, 3) = corner;
  m(1, 1) = m(2, 2) = middle;
  m(1, 2) = m(2, 1) = coherence;
  return m;
}

/// Pair-density numerator N N' delta_ts delta_t's' - delta_ts' delta_t's F^2
/// before normalization.
template <typename Scalar>
Eigen::Matrix<Scalar, 4, 4> pair_numerator(const PairKernels<Scalar>& k) {
  const Scalar nn = k.density_x * k.density_xp;
  const Scalar f2 = k.overlap * k.overlap;
  return x_matrix(nn - f2, nn, -f2);
}

/// Common normalizer 4 N N' - 2 F^2 of the even-N state, checked for degeneracy.
template <typename Scalar>
Scalar pair_normalizer(const PairKernels<Scalar>& k) {
  const Scalar nn = k.density_x * k.density_xp;
  const Scalar norm = Scalar(4) * nn - Scalar(2) * k.overlap * k.overlap;
  if (detail::degenerate_pair(norm, nn))
    throw DegeneratePointError("pair state undefined: both densities vanish (normalizer " +
                               std::to_string(static_cast<double>(norm)) + ")");
  return norm;
}

template <typename Scalar>
TwoSpinDensityMatrix<Scalar> rho_even(const PairKernels<Scalar>& k) {
  const Scalar norm = pair_normalizer(k);
  return TwoSpinDensityMatrix<Scalar>(pair_numerator(k) / norm);
}

/// Odd-N state: even-sea numerator plus the exact extra-atom correction,
/// normalized by its trace.
template <typename Scalar>
TwoSpinDensityMatrix<Scalar> rho_odd(const TrapConfiguration& cfg, Scalar xi, Scalar xip) {
  const auto corr = odd_correction(cfg, xi, xip);
  const Eigen::Matrix<Scalar, 4, 4> raw = pair_numerator(corr.sea) + corr.exact_correction();
  const Scalar tr = raw.trace();
  const Scalar nn = corr.sea.density_x * corr.sea.density_xp;
  if (detail::degenerate_pair(tr, nn))
    throw DegeneratePointError("odd pair state undefined: vanishing trace");
  return TwoSpinDensityMatrix<Scalar>(raw / tr);
}

/// BCS two-point state from the pair number Q = sum v_j^2 and Re(f v^2).
template <typename Scalar>
TwoSpinDensityMatrix<Scalar> rho_bcs(Scalar pairs, Scalar re_fv2) {
  const Scalar q2 = pairs * pairs;
  const Scalar scale = std::max(Scalar(1), q2);
  const Scalar norm = Scalar(4) * q2 - Scalar(2) * re_fv2;
  if (!(norm > Scalar(tolerance::degenerate) * scale))
    throw DegeneratePointError("BCS state undefined: normalizer " +
                               std::to_string(static_cast<double>(norm)));
  if (q2 - re_fv2 < -Scalar(tolerance::psd) * scale)
    throw InvalidKernelError("BCS state: Re(f v^2) exceeds Q^2, state would not be PSD");
  return TwoSpinDensityMatrix<Scalar>(x_matrix(q2 - re_fv2, q2, -re_fv2) / norm);
}

/// SWAP rho SWAP, i.e. the state with the two positions exchanged.
template <typename Scalar>
Eigen::Matrix<Scalar, 4, 4> swap_conjugate(const Eigen::Matrix<Scalar, 4, 4>& m) {
  Eigen::PermutationMatrix<4> swap;
  swap.indices() << 0, 2, 1, 3;
  return swap * m * swap.transpose();
}

}  // namespace fermitrap
