#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <algorithm>
#include <iostream>
#include <sstream>

#include "fermitrap/analysis.hpp"
#include "fermitrap/entanglement.hpp"
#include "fermitrap/errors.hpp"

using namespace fermitrap;

namespace {
SweepSpec surface_spec(int n, Grid g) {
  SweepSpec s;
  s.mode = SweepMode::pair_surface;
  s.particles = n;
  s.grid = g;
  return s;
}

SweepSpec line_spec(int n, double x0, Grid g) {
  SweepSpec s;
  s.mode = SweepMode::line;
  s.particles = n;
  s.fixed_x = x0;
  s.grid = g;
  return s;
}

std::string to_csv(const Table& t) {
  std::ostringstream os;
  emit_csv(t, os);
  return os.str();
}
}  // namespace

TEST_CASE("grid parsing") {
  const auto g = Grid::parse("-4:4:81");
  CHECK(g.min == -4.0);
  CHECK(g.max == 4.0);
  CHECK(g.points == 81);
  const auto v = g.values();
  CHECK(v.front() == -4.0);
  CHECK(v.back() == 4.0);
  CHECK(v[40] == doctest::Approx(0.0));
  CHECK_THROWS(Grid::parse("1:0:5"));
  CHECK_THROWS(Grid::parse("0:1:1"));
  CHECK_THROWS(Grid::parse("0:1"));
  CHECK_THROWS(Grid::parse("a:1:3"));
}

TEST_CASE("sweep spec validation") {
  SweepSpec s = line_spec(4, 0.5, Grid{-1, 1, 5});
  s.fixed_x.reset();
  CHECK_THROWS(s.validate());
  s = surface_spec(1, Grid{-1, 1, 5});
  CHECK_THROWS(s.validate());
  s = surface_spec(4, Grid{-1, 1, 5});
  s.grid.reset();
  CHECK_THROWS(s.validate());
}

TEST_CASE("surface for N=20 has a unit ridge on the diagonal") {
  const auto t = sweep_pair_surface(surface_spec(20, Grid{-4, 4, 81}));
  REQUIRE(t.rows.size() == 81u * 81u);
  double worst = 0.0;
  double off_min = 1.0;
  for (const auto& row : t.rows) {
    REQUIRE(row[2].has_value());
    if (*row[0] == *row[1]) worst = std::max(worst, std::abs(*row[2] - 1.0));
    else off_min = std::min(off_min, *row[2]);
  }
  CHECK(worst < 1e-12);
  CHECK(off_min == 0.0);
}

TEST_CASE("surface for N=2 is flat") {
  const auto t = sweep_pair_surface(surface_spec(2, Grid{-3, 3, 13}));
  for (const auto& row : t.rows) CHECK(*row[2] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("surface marks degenerate points with empty cells") {
  const auto t = sweep_pair_surface(surface_spec(4, Grid{39, 41, 3}));
  for (const auto& row : t.rows) CHECK_FALSE(row[2].has_value());
  const auto csv = to_csv(t);
  CHECK(csv.find("39,39,\n") != std::string::npos);
}

TEST_CASE("line sweeps") {
  const auto t4 = sweep_line(line_spec(4, 0.5, Grid{-4, 4, 161}));
  for (const auto& row : t4.rows)
    if (std::abs(*row[0] - 0.5) < 1e-12) CHECK(*row[1] == doctest::Approx(1.0).epsilon(1e-12));
  const auto t2 = sweep_line(line_spec(2, 0.5, Grid{-4, 4, 201}));
  for (const auto& row : t2.rows) CHECK(*row[1] == doctest::Approx(1.0).epsilon(1e-12));
  // Odd N routes through the corrected state.
  const auto t3 = sweep_line(line_spec(3, 0.5, Grid{-2, 2, 9}));
  CHECK(t3.rows.size() == 9u);
}

TEST_CASE("entanglement distance contract") {
  const auto cfg = TrapConfiguration::from_particles(20);
  const auto r = entanglement_distance(0.0, 20);
  CHECK(r.l_star > 0.0);
  CHECK(r.bracket_lo < r.l_star);
  CHECK(r.l_star < r.bracket_hi);
  CHECK(r.bracket_hi - r.bracket_lo == doctest::Approx(0.01));
  CHECK(std::abs(distance_sign_function(cfg, 0.0, r.l_star)) < 1e-9);
  CHECK(distance_sign_function(cfg, 0.0, r.l_star - 1e-8) > 0.0);
  CHECK(distance_sign_function(cfg, 0.0, r.l_star + 1e-8) <= 0.0);
  CHECK(trap_concurrence(cfg, 0.0, r.l_star - 0.01).value() > 0.0);
  CHECK(trap_concurrence(cfg, 0.0, r.l_star + 0.01).value() == 0.0);
  CHECK(r.iterations > 0);
}

TEST_CASE("entanglement distance is longer at the verge") {
  CHECK(entanglement_distance(3.0, 20).l_star > entanglement_distance(0.0, 20).l_star + 0.01);
}

TEST_CASE("entanglement distance shrinks with N") {
  double prev = 1e9;
  for (int n : {4, 10, 14, 18}) {
    const double l = entanglement_distance(0.5, n).l_star;
    CHECK(l < prev);
    prev = l;
  }
}

TEST_CASE("entanglement distance signals") {
  CHECK_THROWS_AS(entanglement_distance(0.5, 2), InfiniteDistanceError);
  CHECK_THROWS_AS(entanglement_distance(0.5, 5), DomainError);
  CHECK_THROWS_AS(entanglement_distance(36.0, 4), RootNotFoundError);
}

TEST_CASE("BCS y scan") {
  SweepSpec s;
  s.mode = SweepMode::bcs_y_scan;
  s.bcs = BcsParams{8, 1.0, 1.0};
  s.grid = Grid{0.0, 0.5, 51};
  const auto t = bcs_scan(s);
  REQUIRE(t.rows.size() == 51u);
  for (const auto& row : t.rows) {
    const double y2 = *row[0];
    if (y2 <= 0.25 + 1e-12) CHECK(*row[1] == doctest::Approx(0.0).epsilon(1e-12));
    else CHECK(*row[1] > 0.0);
    REQUIRE(row[2].has_value());
    CHECK((*row[2] == 1.0) == (*row[1] > 0.0));
    CHECK(std::abs(*row[4] - *row[1]) < 1e-10);
  }
  CHECK(*t.rows.back()[1] == doctest::Approx(1.0).epsilon(1e-12));

  s.grid.reset();
  const auto def = bcs_scan(s);
  CHECK(*def.rows.back()[0] < 1.0);
  bool blank_seen = false;
  for (const auto& row : def.rows)
    if (*row[0] > 0.5 + 1e-9) {
      CHECK_FALSE(row[2].has_value());
      blank_seen = true;
    }
  CHECK(blank_seen);
}

TEST_CASE("BCS gap scan") {
  SweepSpec s;
  s.mode = SweepMode::bcs_gap_scan;
  s.bcs = BcsParams{2, 1.0, 1.0};
  s.grid = Grid{1.0, 2.0, 5};
  const auto t = bcs_scan(s);
  CHECK(*t.rows.front()[1] == doctest::Approx(0.8660254037844386).epsilon(1e-10));
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    CHECK(*t.rows[i][0] > *t.rows[i - 1][0]);
    CHECK(*t.rows[i][1] >= *t.rows[i - 1][1]);
  }
  s.bcs = BcsParams{8, 1.0, 1.0};
  s.grid.reset();
  const auto def = bcs_scan(s);
  CHECK(def.rows.size() == 10u);
  for (const auto& row : def.rows) CHECK(*row[2] == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("CSV emission") {
  Table t{{"a", "b"}, {}};
  t.add_row({1.0, 0.1});
  t.add_row({-2.5e-300, std::nullopt});
  const auto csv = to_csv(t);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  CHECK(csv.rfind("a,b\n", 0) == 0);
  CHECK(csv.back() == '\n');

  std::istringstream in(csv);
  const auto back = parse_csv(in);
  CHECK(back.columns == t.columns);
  REQUIRE(back.rows.size() == 2u);
  CHECK(*back.rows[0][1] == 0.1);
  CHECK(*back.rows[1][0] == -2.5e-300);
  CHECK_FALSE(back.rows[1][1].has_value());

  CHECK_THROWS_AS(emit_csv(Table{{"a"}, {}}, std::cout), std::invalid_argument);
  CHECK_THROWS_AS(t.add_row({1.0}), std::invalid_argument);
}

TEST_CASE("CSV round trip of a sweep and determinism") {
  const auto spec = line_spec(10, 0.5, Grid{-3, 3, 61});
  const auto a = to_csv(sweep_line(spec));
  CHECK(a == to_csv(sweep_line(spec)));
  std::istringstream in(a);
  const auto back = parse_csv(in);
  const auto orig = sweep_line(spec);
  for (std::size_t i = 0; i < orig.rows.size(); ++i)
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(std::abs(*back.rows[i][j] - *orig.rows[i][j]) <= 1e-12 * std::max(1.0, std::abs(*orig.rows[i][j])));
}

TEST_CASE("CSV file output") {
  Table t{{"x"}, {}};
  t.add_row({3.0});
  const auto path = std::filesystem::temp_directory_path() / "fermitrap_csv_test.csv";
  emit_csv(t, path);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "x\n3\n");
  std::filesystem::remove(path);

  try {
    emit_csv(t, std::filesystem::path("/nonexistent-dir/out.csv"));
    FAIL("expected IoError");
  } catch (const IoError& e) {
    CHECK(std::string(e.what()).find("/nonexistent-dir/out.csv") != std::string::npos);
  }
}

TEST_CASE("oracle check summary") {
  const auto r = oracle_check(5, Grid{-1.0, 1.0, 3});
  CHECK(r.table.rows.size() == 9u);
  CHECK(r.max_entry_diff < 1e-10);
  CHECK(r.max_concurrence_diff < 1e-10);
}
