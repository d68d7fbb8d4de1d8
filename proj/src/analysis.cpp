#include "fermitrap/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include "fermitrap/bcs_model.hpp"
#include "fermitrap/entanglement.hpp"
#include "fermitrap/errors.hpp"
#include "fermitrap/oracle.hpp"
#include "fermitrap/spin_density.hpp"

namespace fermitrap {

namespace {

template <typename T>
T parse_number(std::string_view text, const char* what) {
  T v{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument(std::string("grid: bad ") + what + " '" + std::string(text) + "'");
  return v;
}

std::optional<double> opt(double v) { return v; }

}  // namespace

Grid Grid::parse(std::string_view text) {
  const auto a = text.find(':');
  const auto b = a == std::string_view::npos ? a : text.find(':', a + 1);
  if (b == std::string_view::npos)
    throw std::invalid_argument("grid: expected min:max:points, got '" + std::string(text) + "'");
  Grid g{parse_number<double>(text.substr(0, a), "min"),
         parse_number<double>(text.substr(a + 1, b - a - 1), "max"),
         parse_number<int>(text.substr(b + 1), "points")};
  g.validate();
  return g;
}

void Grid::validate() const {
  if (points < 2) throw std::invalid_argument("grid: need at least 2 points");
  if (!(min < max) || !std::isfinite(min) || !std::isfinite(max))
    throw std::invalid_argument("grid: need finite min < max");
}

std::vector<double> Grid::values() const {
  validate();
  std::vector<double> out(points);
  const double step = (max - min) / (points - 1);
  for (int i = 0; i < points; ++i) out[i] = i + 1 == points ? max : min + step * i;
  return out;
}

void SweepSpec::validate() const {
  if (particles < 2) throw std::invalid_argument("sweep: need N >= 2");
  if (grid) grid->validate();
  switch (mode) {
    case SweepMode::pair_surface:
      if (!grid) throw std::invalid_argument("surface sweep: grid required");
      break;
    case SweepMode::line:
      if (!grid) throw std::invalid_argument("line sweep: grid required");
      if (!fixed_x || !std::isfinite(*fixed_x))
        throw std::invalid_argument("line sweep: finite fixed position required");
      break;
    case SweepMode::bcs_y_scan:
    case SweepMode::bcs_gap_scan:
      if (!bcs) throw std::invalid_argument("BCS scan: level parameters required");
      break;
    case SweepMode::distance:
      if (!fixed_x) throw std::invalid_argument("distance: x0 required");
      if (!(resolution > 0.0) || !(tol > 0.0))
        throw std::invalid_argument("distance: resolution and tol must be positive");
      break;
  }
}

std::optional<double> trap_concurrence(const TrapConfiguration& cfg, double xi, double xip) {
  try {
    if (cfg.parity() == Parity::even) return concurrence_pair(pair_kernels(cfg, xi, xip)).value;
    return wootters_concurrence(rho_odd(cfg, xi, xip)).value;
  } catch (const DegeneratePointError&) {
    return std::nullopt;
  }
}

Table sweep_pair_surface(const SweepSpec& spec) {
  spec.validate();
  const auto cfg = TrapConfiguration::from_particles(spec.particles);
  const auto xs = spec.grid->values();
  Table t{{"x", "xp", "concurrence"}, {}};
  t.rows.reserve(xs.size() * xs.size());
  for (double x : xs)
    for (double xp : xs) t.add_row({x, xp, trap_concurrence(cfg, x, xp)});
  return t;
}

Table sweep_line(const SweepSpec& spec) {
  spec.validate();
  const auto cfg = TrapConfiguration::from_particles(spec.particles);
  Table t{{"xp", "concurrence"}, {}};
  for (double xp : spec.grid->values()) t.add_row({xp, trap_concurrence(cfg, *spec.fixed_x, xp)});
  return t;
}

namespace {

Table bcs_y_scan(const SweepSpec& spec) {
  const auto& p = *spec.bcs;
  const auto model = BcsModel<double>::build(p.levels, p.spacing, p.coupling);
  const double q = model.pairs();
  const int m = model.levels();
  Grid g;
  if (spec.grid) {
    g = *spec.grid;
  } else {
    g = {0.0, std::min(1.0, 2.0 * q / m) * (1.0 - 1e-6), 101};
  }
  Table t{{"y_abs2", "concurrence", "ppt_entangled", "pt_min_eigenvalue", "wootters"}, {}};
  for (double y2 : g.values()) {
    const double c = concurrence_bcs_uniform(y2, q, m).value;
    std::optional<double> flag, pt, wc;
    try {
      const auto rho = rho_bcs(q, uniform_overlap_re_fv2(y2, q, m));
      const auto ppt = ppt_min_eigenvalue(rho);
      flag = ppt.entangled ? 1.0 : 0.0;
      pt = ppt.min_pt_eigenvalue;
      wc = wootters_concurrence(rho).value;
    } catch (const InvalidKernelError&) {
      // |y|^2 > Q/M: no physical state, only the closed form is reported.
    }
    t.add_row({y2, c, flag, pt, wc});
  }
  return t;
}

Table bcs_gap_scan(const SweepSpec& spec) {
  const auto& p = *spec.bcs;
  const Grid g = spec.grid.value_or(Grid{0.2, 2.0, 10});
  Table t{{"coupling", "gap", "pairs", "residual"}, {}};
  for (double lambda : g.values()) {
    if (!(lambda > 0.0)) throw std::invalid_argument("gap scan: couplings must be positive");
    const auto model = BcsModel<double>::build(p.levels, p.spacing, lambda);
    t.add_row({lambda, model.gap(), model.pairs(), model.residual()});
  }
  return t;
}

}  // namespace

Table bcs_scan(const SweepSpec& spec) {
  spec.validate();
  if (spec.mode == SweepMode::bcs_y_scan) return bcs_y_scan(spec);
  if (spec.mode == SweepMode::bcs_gap_scan) return bcs_gap_scan(spec);
  throw std::invalid_argument("bcs_scan: mode is not a BCS scan");
}

double distance_sign_function(const TrapConfiguration& cfg, double x0, double separation) {
  const auto k = pair_kernels(cfg, x0, x0 + separation);
  return 2.0 * k.overlap * k.overlap - k.density_x * k.density_xp;
}

DistanceResult entanglement_distance(double x0, int particles, double resolution, double tol) {
  if (!std::isfinite(x0)) throw DomainError("entanglement_distance: non-finite x0");
  if (!(resolution > 0.0) || !(tol > 0.0))
    throw DomainError("entanglement_distance: resolution and tol must be positive");
  const auto cfg = TrapConfiguration::from_particles(particles);
  if (cfg.parity() == Parity::odd)
    throw DomainError("entanglement_distance: defined for even N only");
  if (cfg.levels() == 1)
    throw InfiniteDistanceError("entanglement_distance: N=2 stays maximally entangled at all separations");

  auto densities_vanish = [&](double l) {
    const auto k = pair_kernels(cfg, x0, x0 + l);
    return !(k.density_x * k.density_xp > 0.0);
  };

  double lo = 0.0;
  double hi = -1.0;
  for (int step = 1;; ++step) {
    const double l = step * resolution;
    if (l > kDistanceCeiling) break;
    if (densities_vanish(l)) break;
    if (distance_sign_function(cfg, x0, l) <= 0.0) {
      hi = l;
      break;
    }
    lo = l;
  }
  if (hi < 0.0)
    throw RootNotFoundError("entanglement_distance: no zero crossing within L <= " +
                            std::to_string(kDistanceCeiling));

  DistanceResult r{x0, 0.0, lo, hi, 0, std::nullopt};
  double a = lo;
  double b = hi;
  while (b - a > tol) {
    const double mid = a + (b - a) / 2;
    if (mid <= a || mid >= b) break;
    (distance_sign_function(cfg, x0, mid) > 0.0 ? a : b) = mid;
    ++r.iterations;
  }
  r.l_star = a + (b - a) / 2;

  for (int step = static_cast<int>(std::ceil(hi / resolution)) + 1;; ++step) {
    const double l = step * resolution;
    if (l > kDistanceCeiling || densities_vanish(l)) break;
    if (distance_sign_function(cfg, x0, l) > 0.0) {
      r.revival = l;
      break;
    }
  }
  return r;
}

Table distance_table(const DistanceResult& r) {
  Table t{{"x0", "l_star", "bracket_lo", "bracket_hi", "iterations", "revival"}, {}};
  t.add_row({r.x0, r.l_star, r.bracket_lo, r.bracket_hi, opt(r.iterations), r.revival});
  return t;
}

OracleCheck oracle_check(int particles, const Grid& grid) {
  const auto cfg = TrapConfiguration::from_particles(particles);
  OracleCheck out;
  out.table.columns = {"x", "xp", "max_entry_diff", "concurrence_closed", "concurrence_fock"};
  const auto xs = grid.values();
  for (double x : xs)
    for (double xp : xs) {
      const auto fock = oracle::fock_rho(cfg, x, xp);
      const auto closed = cfg.parity() == Parity::even ? rho_even(pair_kernels(cfg, x, xp))
                                                       : rho_odd(cfg, x, xp);
      const double diff = (fock.normalized.matrix() - closed.matrix()).cwiseAbs().maxCoeff();
      const double c_closed = wootters_concurrence(closed).value;
      const double c_fock = wootters_concurrence(fock.normalized).value;
      out.max_entry_diff = std::max(out.max_entry_diff, diff);
      out.max_concurrence_diff = std::max(out.max_concurrence_diff, std::abs(c_closed - c_fock));
      out.table.add_row({x, xp, diff, c_closed, c_fock});
    }
  return out;
}

}  // namespace fermitrap
