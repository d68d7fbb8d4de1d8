#include "fermitrap/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "fermitrap/oscillator_basis.hpp"

namespace fermitrap::oracle {

namespace {
constexpr int kMaxModes = 32;
}  // namespace

FockState::FockState(int modes, std::span<const int> ordering) : modes_(modes) {
  if (modes < 1 || modes > kMaxModes)
    throw DomainError("FockState: mode count must be in [1, " + std::to_string(kMaxModes) + "]");
  ordering_.resize(2 * modes);
  if (ordering.empty()) {
    std::iota(ordering_.begin(), ordering_.end(), 0);
  } else {
    if (ordering.size() != ordering_.size())
      throw DomainError("FockState: ordering must list every spin-orbital once");
    std::vector<int> check(ordering.begin(), ordering.end());
    std::sort(check.begin(), check.end());
    for (int i = 0; i < static_cast<int>(check.size()); ++i)
      if (check[i] != i) throw DomainError("FockState: ordering is not a permutation");
    std::copy(ordering.begin(), ordering.end(), ordering_.begin());
  }
}

int FockState::position(Orbital o) const {
  if (o.mode < 0 || o.mode >= modes_) throw DomainError("FockState: mode out of range");
  return ordering_[2 * o.mode + static_cast<int>(o.spin)];
}

int FockState::sign_before(int pos) const {
  const std::uint64_t below = bits_ & ((std::uint64_t{1} << pos) - 1);
  return std::popcount(below) % 2 == 0 ? 1 : -1;
}

bool FockState::occupied(Orbital o) const { return (bits_ >> position(o)) & 1U; }

int FockState::particle_count() const { return std::popcount(bits_); }

std::optional<int> FockState::create(Orbital o) {
  const int pos = position(o);
  if ((bits_ >> pos) & 1U) return std::nullopt;
  const int s = sign_before(pos);
  bits_ |= std::uint64_t{1} << pos;
  return s;
}

std::optional<int> FockState::annihilate(Orbital o) {
  const int pos = position(o);
  if (!((bits_ >> pos) & 1U)) return std::nullopt;
  const int s = sign_before(pos);
  bits_ &= ~(std::uint64_t{1} << pos);
  return s;
}

GroundState trap_ground_state(const TrapConfiguration& cfg, int modes,
                              std::span<const int> ordering) {
  if (modes <= cfg.top_mode())
    throw DomainError("trap_ground_state: basis too small for the configuration");
  FockState st(modes, ordering);
  int sign = 1;
  // Operators act right to left: the closed shells first, the extra atom last.
  for (int n = cfg.levels() - 1; n >= 0; --n) {
    sign *= *st.create({n, Spin::down});
    sign *= *st.create({n, Spin::up});
  }
  if (cfg.parity() == Parity::odd) sign *= *st.create({cfg.extra_mode(), Spin::up});
  return {st, sign};
}

FockRho fock_rho(const TrapConfiguration& cfg, double xi, double xip,
                 const FockOptions& options) {
  if (cfg.levels() > options.level_limit)
    throw DomainError("fock_rho: M=" + std::to_string(cfg.levels()) +
                      " exceeds the brute-force limit of " +
                      std::to_string(options.level_limit));
  if (options.extra_modes < 0) throw DomainError("fock_rho: extra_modes must be >= 0");
  const int modes = cfg.top_mode() + 1 + options.extra_modes;
  const auto ground = trap_ground_state(cfg, modes, options.ordering);
  const Eigen::VectorXd phi_x = hermite_ladder(modes - 1, xi);
  const Eigen::VectorXd phi_xp = hermite_ladder(modes - 1, xip);

  // <G| b^dag_a b^dag_b b_c b_d |G>; the ground-state sign enters squared.
  auto quartic = [&](Orbital a, Orbital b, Orbital c, Orbital d) -> int {
    FockState st = ground.state;
    int sign = 1;
    for (auto step : {std::pair{d, false}, std::pair{c, false}, std::pair{b, true},
                      std::pair{a, true}}) {
      const auto s = step.second ? st.create(step.first) : st.annihilate(step.first);
      if (!s) return 0;
      sign *= *s;
    }
    return st == ground.state ? sign : 0;
  };

  Eigen::Matrix4d raw = Eigen::Matrix4d::Zero();
  constexpr std::array spins{Spin::up, Spin::down};
  for (Spin s : spins)
    for (Spin sp : spins)
      for (Spin t : spins)
        for (Spin tp : spins) {
          double acc = 0.0;
          for (int n1 = 0; n1 < modes; ++n1)
            for (int n2 = 0; n2 < modes; ++n2)
              for (int n3 = 0; n3 < modes; ++n3)
                for (int n4 = 0; n4 < modes; ++n4) {
                  // psi^dag_t(x) psi^dag_t'(x') psi_s'(x') psi_s(x)
                  const int e = quartic({n1, t}, {n2, tp}, {n3, sp}, {n4, s});
                  if (e != 0) acc += e * phi_x[n1] * phi_xp[n2] * phi_xp[n3] * phi_x[n4];
                }
          const int row = 2 * static_cast<int>(s) + static_cast<int>(sp);
          const int col = 2 * static_cast<int>(t) + static_cast<int>(tp);
          raw(row, col) = acc;
        }
  const double tr = raw.trace();
  if (!(tr > 0.0)) throw DegeneratePointError("fock_rho: vanishing pair density");
  return {raw, TwoSpinDensityMatrix<double>(raw / tr)};
}

Concurrence<double> xstate_concurrence_bruteforce(const TwoSpinDensityMatrix<double>& rho) {
  if (!rho.is_x_state()) throw InvalidStateError("xstate_concurrence_bruteforce: not an X-state");
  const Eigen::Matrix4d& m = rho.matrix();
  // rho~ = (Y x Y) rho (Y x Y) for a real state, written out entrywise.
  Eigen::Matrix4d tilde;
  const std::array<int, 4> flip{3, 2, 1, 0};
  const std::array<double, 4> phase{-1.0, 1.0, 1.0, -1.0};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) tilde(r, c) = phase[r] * phase[c] * m(flip[r], flip[c]);
  const Eigen::Matrix4d prod = m * tilde;

  std::array<double, 4> roots{};
  int k = 0;
  for (auto [i, j] : {std::pair{0, 3}, std::pair{1, 2}}) {
    const double a = prod(i, i), b = prod(i, j), c = prod(j, i), d = prod(j, j);
    const double half_trace = 0.5 * (a + d);
    const double disc = std::max(half_trace * half_trace - (a * d - b * c), 0.0);
    for (double lam : {half_trace + std::sqrt(disc), half_trace - std::sqrt(disc)})
      roots[k++] = std::sqrt(std::max(lam, 0.0));
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  const double c = roots[0] - roots[1] - roots[2] - roots[3];
  return {std::clamp(c, 0.0, 1.0)};
}

}  // namespace fermitrap::oracle
