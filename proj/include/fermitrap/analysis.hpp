#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "fermitrap/csv.hpp"
#include "fermitrap/pair_correlations.hpp"

namespace fermitrap {

/// Uniform grid of `points` positions on [min, max], units of 1/alpha.
struct Grid {
  double min = 0.0;
  double max = 0.0;
  int points = 0;

  /// Parses "min:max:points".
  static Grid parse(std::string_view text);
  void validate() const;
  std::vector<double> values() const;
};

enum class SweepMode { pair_surface, line, bcs_y_scan, bcs_gap_scan, distance };

struct BcsParams {
  int levels = 8;
  double spacing = 1.0;
  double coupling = 1.0;
};

struct SweepSpec {
  SweepMode mode = SweepMode::pair_surface;
  int particles = 20;
  std::optional<Grid> grid;
  std::optional<double> fixed_x;
  std::optional<BcsParams> bcs;
  double resolution = 0.01;
  double tol = 1e-10;

  void validate() const;
};

/// Concurrence of the two-point state at (xi, xip): closed form for even N,
/// Wootters on the corrected state for odd N. nullopt at degenerate points.
std::optional<double> trap_concurrence(const TrapConfiguration& cfg, double xi, double xip);

/// Rows (x, xp, concurrence) in row-major order over grid x grid.
Table sweep_pair_surface(const SweepSpec& spec);
/// Rows (xp, concurrence) with the first atom held at spec.fixed_x.
Table sweep_line(const SweepSpec& spec);
/// bcs-y-scan: (y_abs2, concurrence, ppt_entangled, pt_min_eigenvalue, wootters).
/// bcs-gap-scan: (coupling, gap, pairs, residual).
Table bcs_scan(const SweepSpec& spec);

struct DistanceResult {
  double x0;
  /// First separation L > 0 where the concurrence between x0 and x0 + L vanishes.
  double l_star;
  double bracket_lo;
  double bracket_hi;
  int iterations;
  /// First L beyond l_star (on the march grid) where the concurrence is positive again.
  std::optional<double> revival;
};

/// 2F^2 - N(x0) N(x0+L); the even-N concurrence is positive iff this is.
double distance_sign_function(const TrapConfiguration& cfg, double x0, double separation);

/// Outward march at `resolution` up to L = 20, then bisection to `tol`.
/// Throws InfiniteDistanceError for N = 2, RootNotFoundError when the
/// densities underflow before a crossing, DomainError for odd N.
DistanceResult entanglement_distance(double x0, int particles, double resolution = 0.01,
                                     double tol = 1e-10);

inline constexpr double kDistanceCeiling = 20.0;

Table distance_table(const DistanceResult& result);

struct OracleCheck {
  Table table;
  double max_entry_diff = 0.0;
  double max_concurrence_diff = 0.0;
};

/// Compares the Fock-space brute force against the closed-form state at every
/// point of grid x grid.
OracleCheck oracle_check(int particles, const Grid& grid);

}  // namespace fermitrap
