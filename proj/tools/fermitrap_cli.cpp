// Command-line front end: concurrence sweeps, entanglement distances and BCS
// scans, written as CSV to stdout or --out.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fermitrap/fermitrap.hpp"

namespace {

struct Options {
  int particles = 20;
  std::optional<double> x0;
  std::optional<std::string> grid;
  int levels = 8;
  double spacing = 1.0;
  double coupling = 1.0;
  std::string out;
  double resolution = 0.01;
  double tol = 1e-10;
};

void write(const fermitrap::Table& t, const std::string& out) {
  if (out.empty() || out == "-")
    fermitrap::emit_csv(t, std::cout);
  else
    fermitrap::emit_csv(t, std::filesystem::path(out));
}

std::optional<fermitrap::Grid> grid_of(const Options& o) {
  if (!o.grid) return std::nullopt;
  return fermitrap::Grid::parse(*o.grid);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace fermitrap;
  CLI::App app{"Two-point spin entanglement in a harmonically trapped Fermi gas"};
  app.require_subcommand(1);
  Options o;

  auto add_out = [&](CLI::App* c) {
    c->add_option("--out", o.out, "Output CSV path (default: stdout)");
  };
  auto add_n = [&](CLI::App* c) {
    c->add_option("--n", o.particles, "Particle number N")->check(CLI::Range(2, 100000));
  };
  auto add_bcs = [&](CLI::App* c) {
    c->add_option("--levels", o.levels, "Number of doubly degenerate levels M")
        ->check(CLI::PositiveNumber);
    c->add_option("--spacing", o.spacing, "Mean level spacing d")->check(CLI::PositiveNumber);
  };

  auto* surface = app.add_subcommand("surface", "Concurrence over an (x, x') grid");
  add_n(surface);
  surface->add_option("--grid", o.grid, "min:max:points in units of 1/alpha");
  add_out(surface);

  auto* line = app.add_subcommand("line", "Concurrence against x' with x held fixed");
  add_n(line);
  line->add_option("--x0", o.x0, "Position of the first atom");
  line->add_option("--grid", o.grid, "min:max:points in units of 1/alpha");
  add_out(line);

  auto* distance = app.add_subcommand("distance", "First separation where entanglement vanishes");
  add_n(distance);
  distance->add_option("--x0", o.x0, "Position of the first atom")->required();
  distance->add_option("--resolution", o.resolution, "Outward march step");
  distance->add_option("--tol", o.tol, "Bisection tolerance");
  add_out(distance);

  auto* bcs_y = app.add_subcommand("bcs-y", "Uniform-overlap BCS concurrence against |y|^2");
  add_bcs(bcs_y);
  bcs_y->add_option("--coupling", o.coupling, "Dimensionless coupling lambda")
      ->check(CLI::PositiveNumber);
  bcs_y->add_option("--grid", o.grid, "|y|^2 range min:max:points");
  add_out(bcs_y);

  auto* bcs_gap = app.add_subcommand("bcs-gap", "Self-consistent gap against coupling");
  add_bcs(bcs_gap);
  bcs_gap->add_option("--grid", o.grid, "Coupling range min:max:points");
  add_out(bcs_gap);

  auto* check = app.add_subcommand("oracle-check", "Fock-space brute force vs closed form");
  add_n(check);
  check->add_option("--grid", o.grid, "min:max:points (default -1.5:1.5:5)");
  add_out(check);

  CLI11_PARSE(app, argc, argv);

  try {
    SweepSpec spec;
    spec.particles = o.particles;
    spec.grid = grid_of(o);
    spec.fixed_x = o.x0;
    spec.bcs = BcsParams{o.levels, o.spacing, o.coupling};
    spec.resolution = o.resolution;
    spec.tol = o.tol;

    if (*surface) {
      spec.mode = SweepMode::pair_surface;
      if (!spec.grid) spec.grid = Grid{-4.0, 4.0, 81};
      write(sweep_pair_surface(spec), o.out);
    } else if (*line) {
      spec.mode = SweepMode::line;
      if (!spec.grid) spec.grid = Grid{-4.0, 4.0, 201};
      if (!spec.fixed_x) spec.fixed_x = 0.5;
      write(sweep_line(spec), o.out);
    } else if (*distance) {
      spec.mode = SweepMode::distance;
      spec.validate();
      write(distance_table(entanglement_distance(*o.x0, o.particles, o.resolution, o.tol)), o.out);
    } else if (*bcs_y) {
      spec.mode = SweepMode::bcs_y_scan;
      write(bcs_scan(spec), o.out);
    } else if (*bcs_gap) {
      spec.mode = SweepMode::bcs_gap_scan;
      write(bcs_scan(spec), o.out);
    } else if (*check) {
      const auto result = oracle_check(o.particles, spec.grid.value_or(Grid{-1.5, 1.5, 5}));
      write(result.table, o.out);
      std::cerr << "max entry difference " << result.max_entry_diff
                << ", max concurrence difference " << result.max_concurrence_diff << '\n';
      if (result.max_entry_diff > 1e-10 || result.max_concurrence_diff > 1e-10) return 2;
    }
  } catch (const InfiniteDistanceError& e) {
    std::cerr << "infinite distance: " << e.what() << '\n';
    return 3;
  } catch (const RootNotFoundError& e) {
    std::cerr << "not found: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
