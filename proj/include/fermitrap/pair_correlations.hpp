#pragma once

#include <string>

#include <Eigen/Dense>

#include "fermitrap/errors.hpp"
#include "fermitrap/oscillator_basis.hpp"

namespace fermitrap {

enum class Parity { even, odd };

/// Zero-temperature filling of the 1D trap: modes 0..M-1 doubly occupied,
/// and for odd N one extra spin-up atom in mode M.
class TrapConfiguration {
 public:
  static TrapConfiguration from_particles(int particles) {
    if (particles < 2)
      throw DomainError("TrapConfiguration: need at least 2 particles, got " +
                        std::to_string(particles));
    return TrapConfiguration(particles);
  }

  int particles() const { return particles_; }
  /// Number of doubly occupied levels.
  int levels() const { return particles_ / 2; }
  Parity parity() const { return particles_ % 2 == 0 ? Parity::even : Parity::odd; }
  /// Mode index of the unpaired atom (meaningful for odd parity).
  int extra_mode() const { return levels(); }
  /// Highest oscillator mode that is occupied at all.
  int top_mode() const { return parity() == Parity::odd ? levels() : levels() - 1; }

  friend bool operator==(const TrapConfiguration&, const TrapConfiguration&) = default;

 private:
  explicit TrapConfiguration(int particles) : particles_(particles) {}
  int particles_;
};

/// Overlap F(x, x') and densities N(x), N(x') of the doubly occupied sea.
template <typename Scalar>
struct PairKernels {
  Scalar overlap;
  Scalar density_x;
  Scalar density_xp;
};

/// Ingredients of the odd-N correction. sigma22 and sigma23 carry the
/// closed-form sigma elements; `sea` and the extra-mode amplitudes allow the
/// exact spin-resolved correction to be rebuilt.
template <typename Scalar>
struct OddCorrection {
  using Matrix4 = Eigen::Matrix<Scalar, 4, 4>;

  Scalar sigma22;
  Scalar sigma23;
  Scalar phi_extra_x;
  Scalar phi_extra_xp;
  PairKernels<Scalar> sea;

  Scalar sigma11() const { return sigma22 + sigma23; }
  Scalar sigma33() const { return sigma22; }
  Scalar sigma44() const { return Scalar(0); }

  /// sigma in matrix form: (1,1) = sigma22 + sigma23, (2,2) = (3,3) = sigma22,
  /// (2,3) = (3,2) = sigma23, everything else zero.
  Matrix4 sigma_matrix() const {
    Matrix4 m = Matrix4::Zero();
    m(0, 0) = sigma11();
    m(1, 1) = sigma22;
    m(2, 2) = sigma33();
    m(1, 2) = m(2, 1) = sigma23;
    m(3, 3) = sigma44();
    return m;
  }

  /// Exact change of the unnormalized pair matrix when a spin-up atom is
  /// added in the extra mode. Same zero pattern as sigma_matrix(), but with
  /// the (2,2)/(3,3) weights split per position and a quarter of the
  /// sigma scale. This is what rho_odd adds.
  Matrix4 exact_correction() const {
    const Scalar p = phi_extra_x;
    const Scalar q = phi_extra_xp;
    const Scalar& f = sea.overlap;
    Matrix4 m = Matrix4::Zero();
    m(0, 0) = sea.density_x * q * q + sea.density_xp * p * p - Scalar(2) * f * p * q;
    m(1, 1) = sea.density_xp * p * p;
    m(2, 2) = sea.density_x * q * q;
    m(1, 2) = m(2, 1) = -f * p * q;
    return m;
  }
};

/// F, N(xi) and N(xi') of the M filled levels from one ladder pass per position.
template <typename Scalar>
PairKernels<Scalar> pair_kernels(const TrapConfiguration& cfg, Scalar xi, Scalar xip) {
  const int top = cfg.levels() - 1;
  const auto a = hermite_ladder(top, xi);
  const auto b = hermite_ladder(top, xip);
  return {a.dot(b), a.dot(a), b.dot(b)};
}

template <typename Scalar>
Scalar kernel_F(const TrapConfiguration& cfg, Scalar xi, Scalar xip) {
  const int top = cfg.levels() - 1;
  return hermite_ladder(top, xi).dot(hermite_ladder(top, xip));
}

template <typename Scalar>
Scalar density_N(const TrapConfiguration& cfg, Scalar xi) {
  const auto a = hermite_ladder(cfg.levels() - 1, xi);
  return a.dot(a);
}

template <typename Scalar>
OddCorrection<Scalar> odd_correction(const TrapConfiguration& cfg, Scalar xi, Scalar xip) {
  if (cfg.parity() != Parity::odd)
    throw DomainError("odd_correction: configuration with N=" +
                      std::to_string(cfg.particles()) + " is even");
  const int m = cfg.levels();
  const auto a = hermite_ladder(m, xi);
  const auto b = hermite_ladder(m, xip);
  const auto sa = a.head(m);
  const auto sb = b.head(m);
  const PairKernels<Scalar> sea{sa.dot(sb), sa.dot(sa), sb.dot(sb)};
  const Scalar p = a[m];
  const Scalar q = b[m];
  OddCorrection<Scalar> out;
  out.sigma22 = Scalar(2) * sea.density_x * q * q + Scalar(2) * sea.density_xp * p * p;
  out.sigma23 = Scalar(-4) * sea.overlap * p * q;
  out.phi_extra_x = p;
  out.phi_extra_xp = q;
  out.sea = sea;
  return out;
}

}  // namespace fermitrap
