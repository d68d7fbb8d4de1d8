#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "fermitrap/errors.hpp"
#include "fermitrap/oscillator_basis.hpp"

namespace fermitrap {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Equally spaced ladder eps_j = d (j - (M+1)/2), j = 1..M, centred on the
/// Fermi level.
template <typename Scalar>
Vector<Scalar> build_levels(int levels, Scalar spacing) {
  if (levels < 1) throw DomainError("build_levels: need at least one level");
  if (!(spacing > Scalar(0)) || !std::isfinite(spacing))
    throw DomainError("build_levels: spacing must be positive and finite");
  Vector<Scalar> eps(levels);
  const Scalar centre = Scalar(levels + 1) / Scalar(2);
  for (int j = 1; j <= levels; ++j) eps[j - 1] = spacing * (Scalar(j) - centre);
  return eps;
}

/// 1 - lambda d sum_j 1 / (2 sqrt(eps_j^2 + gap^2)); zero at the self-consistent gap.
template <typename Scalar>
Scalar gap_residual(const Vector<Scalar>& levels, Scalar coupling, Scalar spacing, Scalar gap) {
  const Scalar sum = (levels.array().square() + gap * gap).sqrt().inverse().sum() / Scalar(2);
  return Scalar(1) - coupling * spacing * sum;
}

/// Solve the gap equation by bisection. The residual is strictly increasing
/// in the gap, so a bracket [0, hi] grown by doubling always converges. Returns
/// zero when the coupling is too weak for a nontrivial solution.
template <typename Scalar>
Scalar solve_gap(const Vector<Scalar>& levels, Scalar coupling, Scalar spacing,
                 Scalar tol = Scalar(1e-12)) {
  if (!(coupling > Scalar(0))) throw DomainError("solve_gap: coupling must be positive");
  if (!(spacing > Scalar(0))) throw DomainError("solve_gap: spacing must be positive");
  if (!(tol > Scalar(0))) throw DomainError("solve_gap: tolerance must be positive");
  if (levels.size() == 0) throw DomainError("solve_gap: empty ladder");
  if (!(gap_residual(levels, coupling, spacing, Scalar(0)) < Scalar(0))) return Scalar(0);

  Scalar lo(0);
  Scalar hi = spacing;
  while (gap_residual(levels, coupling, spacing, hi) < Scalar(0)) {
    lo = hi;
    hi *= Scalar(2);
    if (!std::isfinite(hi)) throw std::runtime_error("solve_gap: bracket diverged");
  }
  for (;;) {
    const Scalar mid = lo + (hi - lo) / Scalar(2);
    const Scalar r = gap_residual(levels, coupling, spacing, mid);
    if (std::abs(r) < tol || mid <= lo || mid >= hi) return mid;
    (r < Scalar(0) ? lo : hi) = mid;
  }
}

template <typename Scalar>
struct BogoliubovCoefficients {
  Vector<Scalar> u;
  Vector<Scalar> v;
  /// Q = sum_j v_j^2.
  Scalar pairs;
};

template <typename Scalar>
BogoliubovCoefficients<Scalar> bogoliubov(const Vector<Scalar>& levels, Scalar gap) {
  if (!(gap >= Scalar(0))) throw DomainError("bogoliubov: gap must be >= 0");
  const Eigen::Index m = levels.size();
  BogoliubovCoefficients<Scalar> out{Vector<Scalar>(m), Vector<Scalar>(m), Scalar(0)};
  for (Eigen::Index j = 0; j < m; ++j) {
    const Scalar e = std::sqrt(levels[j] * levels[j] + gap * gap);
    if (!(e > Scalar(0)))
      throw DegenerateLevelError("bogoliubov: level " + std::to_string(j + 1) +
                                 " sits at the Fermi energy with zero gap");
    const Scalar r = levels[j] / e;
    const Scalar v2 = (Scalar(1) - r) / Scalar(2);
    out.u[j] = std::sqrt((Scalar(1) + r) / Scalar(2));
    out.v[j] = std::sqrt(v2);
    out.pairs += v2;
  }
  return out;
}

/// Mean-field reduced-BCS ground state on an equally spaced ladder.
/// Immutable once built; build() checks the Bogoliubov identities and the
/// gap equation before returning.
template <typename Scalar = double>
class BcsModel {
 public:
  static BcsModel build(int levels, Scalar spacing, Scalar coupling, Scalar tol = Scalar(1e-12)) {
    BcsModel m;
    m.spacing_ = spacing;
    m.coupling_ = coupling;
    m.energies_ = build_levels(levels, spacing);
    m.gap_ = solve_gap(m.energies_, coupling, spacing, tol);
    auto coeffs = bogoliubov(m.energies_, m.gap_);
    m.u_ = std::move(coeffs.u);
    m.v_ = std::move(coeffs.v);
    m.pairs_ = coeffs.pairs;
    m.check_invariants(tol);
    return m;
  }

  int levels() const { return static_cast<int>(energies_.size()); }
  Scalar spacing() const { return spacing_; }
  Scalar coupling() const { return coupling_; }
  const Vector<Scalar>& energies() const { return energies_; }
  Scalar gap() const { return gap_; }
  const Vector<Scalar>& u() const { return u_; }
  const Vector<Scalar>& v() const { return v_; }
  Vector<Scalar> v_squared() const { return v_.array().square(); }
  Scalar pairs() const { return pairs_; }
  Scalar residual() const { return gap_residual(energies_, coupling_, spacing_, gap_); }

 private:
  BcsModel() = default;

  void check_invariants(Scalar tol) const {
    for (int j = 0; j < levels(); ++j) {
      const Scalar u2 = u_[j] * u_[j];
      const Scalar v2 = v_[j] * v_[j];
      const Scalar e2 = energies_[j] * energies_[j] + gap_ * gap_;
      if (std::abs(u2 + v2 - Scalar(1)) > Scalar(1e-12) ||
          std::abs(Scalar(4) * u2 * v2 - gap_ * gap_ / e2) > Scalar(1e-10))
        throw std::logic_error("BcsModel: Bogoliubov identity violated at level " +
                               std::to_string(j + 1));
    }
    if (gap_ > Scalar(0) && !(std::abs(residual()) < std::max(tol, Scalar(1e-10))))
      throw std::logic_error("BcsModel: gap equation not satisfied");
    if (!(pairs_ > Scalar(0) && pairs_ < Scalar(levels())))
      throw std::logic_error("BcsModel: pair number outside (0, M)");
  }

  Scalar spacing_{};
  Scalar coupling_{};
  Vector<Scalar> energies_;
  Scalar gap_{};
  Vector<Scalar> u_;
  Vector<Scalar> v_;
  Scalar pairs_{};
};

template <typename Scalar>
struct BcsKernels {
  /// sum_j phi_j(x) phi_j(x')
  Scalar f;
  /// sum_j v_j^2 phi_j(x) phi_j(x')
  Scalar v2;
  /// Re(f v^2); the basis is real so this is f * v2.
  Scalar re_fv2;
};

/// Position kernels for explicit occupations v_j^2, level j on oscillator mode j-1.
template <typename Scalar>
BcsKernels<Scalar> bcs_kernels(const Vector<Scalar>& v_squared, Scalar xi, Scalar xip) {
  if (v_squared.size() == 0) throw DomainError("bcs_kernels: no levels");
  const int top = static_cast<int>(v_squared.size()) - 1;
  const auto a = hermite_ladder(top, xi);
  const auto b = hermite_ladder(top, xip);
  Scalar f(0);
  Scalar v2(0);
  for (int j = 0; j <= top; ++j) {
    const Scalar w = a[j] * b[j];
    f += w;
    v2 += v_squared[j] * w;
  }
  return {f, v2, f * v2};
}

template <typename Scalar>
BcsKernels<Scalar> bcs_kernels(const BcsModel<Scalar>& model, Scalar xi, Scalar xip) {
  return bcs_kernels(model.v_squared(), xi, xip);
}

template <typename Scalar>
struct OverlapThreshold {
  /// |y| at which the uniform-overlap concurrence first becomes positive.
  Scalar y_zero;
  /// |y| of maximal entanglement.
  Scalar y_max;
};

template <typename Scalar>
OverlapThreshold<Scalar> uniform_overlap_threshold(Scalar pairs, int levels) {
  if (levels < 1 || !(pairs > Scalar(0) && pairs <= Scalar(levels)))
    throw InvalidParameterError("uniform_overlap_threshold: need 0 < Q <= M");
  const Scalar ratio = pairs / Scalar(levels);
  return {std::sqrt(ratio / Scalar(2)), std::sqrt(ratio)};
}

/// Re(f v^2) when every phi_j(x) phi_j(x') equals y: f = M y, v^2 = Q y.
template <typename Scalar>
Scalar uniform_overlap_re_fv2(Scalar y_abs2, Scalar pairs, int levels) {
  return Scalar(levels) * pairs * y_abs2;
}

}  // namespace fermitrap
