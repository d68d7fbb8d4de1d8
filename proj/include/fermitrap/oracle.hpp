#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "fermitrap/entanglement.hpp"
#include "fermitrap/pair_correlations.hpp"
#include "fermitrap/spin_density.hpp"

namespace fermitrap::oracle {

enum class Spin : int { up = 0, down = 1 };

/// Single spin-orbital (mode, spin).
struct Orbital {
  int mode;
  Spin spin;
};

/// Occupation-number basis state over a fixed ordered list of spin-orbitals.
/// The ordering fixes the fermionic sign convention: a ladder operator picks
/// up (-1)^(number of occupied orbitals that precede it).
class FockState {
 public:
  /// `ordering[2*mode + spin]` is the position of that orbital in the
  /// canonical product; empty means the identity ordering.
  explicit FockState(int modes, std::span<const int> ordering = {});

  int modes() const { return modes_; }
  bool occupied(Orbital o) const;
  int particle_count() const;

  /// Apply b^dag_o (create) or b_o (annihilate) in place and return the sign,
  /// or nullopt if the result is the zero vector.
  std::optional<int> create(Orbital o);
  std::optional<int> annihilate(Orbital o);

  friend bool operator==(const FockState& a, const FockState& b) { return a.bits_ == b.bits_; }

 private:
  int position(Orbital o) const;
  int sign_before(int pos) const;

  int modes_;
  std::vector<int> ordering_;
  std::uint64_t bits_ = 0;
};

/// Trap ground state b^dag_{M,up} (odd N only) prod_n b^dag_{n,up} b^dag_{n,down} |vac>,
/// together with its overall sign relative to the bare occupation vector.
struct GroundState {
  FockState state;
  int sign;
};

GroundState trap_ground_state(const TrapConfiguration& cfg, int modes,
                              std::span<const int> ordering = {});

struct FockRho {
  /// <psi^dag_t(x) psi^dag_t'(x') psi_s'(x') psi_s(x)>, row (s,s'), column (t,t').
  Eigen::Matrix4d unnormalized;
  TwoSpinDensityMatrix<double> normalized;
};

struct FockOptions {
  /// Modes beyond the highest occupied one kept in the field expansion.
  int extra_modes = 0;
  /// Spin-orbital ordering passed to FockState; empty for the identity.
  std::vector<int> ordering;
  /// Largest M accepted; the cost grows as (modes)^4.
  int level_limit = 4;
};

/// Brute-force pair matrix from the explicit Fock expansion of all four field
/// operators over modes 0..top_mode + extra_modes.
FockRho fock_rho(const TrapConfiguration& cfg, double xi, double xip,
                 const FockOptions& options = {});

/// Concurrence of an X-state from the eigenvalues of rho (Y x Y) rho (Y x Y),
/// obtained from its two 2x2 blocks in closed form.
Concurrence<double> xstate_concurrence_bruteforce(const TwoSpinDensityMatrix<double>& rho);

}  // namespace fermitrap::oracle
