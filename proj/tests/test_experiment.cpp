#include "checks.hpp"
#include "doctest.h"
#include "json.hpp"
#include "polar/errors.hpp"
#include "polar/experiment.hpp"
#include "polar/parse.hpp"

using namespace polar;

TEST_CASE("expected singular dimensions") {
  CHECK(expected_singular_dim(5, 2, 1, Flavor::classic) == -1);
  CHECK(expected_singular_dim(6, 2, 1, Flavor::classic) == 0);
  CHECK(expected_singular_dim(4, 1, 1, Flavor::classic) == -1);
  CHECK(expected_singular_dim(7, 1, 1, Flavor::classic) == -1);
  CHECK(expected_singular_dim(7, 1, 1, Flavor::dual) == 2);
  CHECK(expected_singular_dim(9, 2, 2, Flavor::classic) == 1);
}

TEST_CASE("cell validation") {
  CellSpec spec;
  spec.n = 3;
  spec.p = 3;
  CHECK_THROWS_AS(validate(spec), PreconditionError);
  spec.p = 1;
  spec.i = 3;
  CHECK_THROWS_AS(validate(spec), PreconditionError);
  spec.i = 2;
  CHECK_NOTHROW(validate(spec));
  CHECK(mode_from_string("delta") == Mode::delta);
  CHECK_THROWS(mode_from_string("fast"));
}

TEST_CASE("small grid matches and is deterministic") {
  GridOptions options;
  options.nmax = 4;
  options.seeds = 1;
  options.master_seed = 17;
  std::vector<CellResult> first = run_grid(options);
  CHECK(first.size() == 10);
  std::string a, b;
  for (const CellResult& r : first) {
    CHECK(r.status == "ok");
    CHECK(r.match);
    CHECK(r.smooth_ok);
    if (r.dim_W >= 0) CHECK(r.dim_W == r.spec.n - r.spec.p - r.spec.i);
    a += to_json_line(r) + "\n";
  }
  for (const CellResult& r : run_grid(options)) b += to_json_line(r) + "\n";
  CHECK(a == b);
  CHECK(cell_seed(17, 3, 1, 0) != cell_seed(17, 3, 1, 1));
  CHECK(cell_seed(17, 3, 1, 0) != cell_seed(18, 3, 1, 0));
}

TEST_CASE("JSON lines follow the key order") {
  CellResult r = run_cell(CellSpec{3, 1, 1, Flavor::classic, 10000000019ULL, 5, Mode::full, 5, {}, 60000});
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(to_json_line(r));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"n", "p", "i", "flavor", "prime", "seed", "regular_sequence_ok", "smooth_ok",
                                         "dim_W", "deg_W", "dim_sing", "expected_dim_sing", "match", "mode",
                                         "status", "redraws_used", "elapsed_ms"});
  CHECK(j["elapsed_ms"] == 0);
  CHECK(grid_summary({r}).find("cells 1, completed 1, matched 1") != std::string::npos);
}

TEST_CASE("delta mode") {
  CellResult r = run_cell(CellSpec{5, 1, 1, Flavor::classic, 10000000019ULL, 9, Mode::delta, 5, {}, 60000});
  CHECK(r.mode_used == Mode::delta);
  CHECK(r.match);
}

TEST_CASE("small field sampling") {
  const PrimeField k;
  std::vector<Polynomial> circle{parse_polynomial("x1^2+x2^2-1", 2, k)};
  SampleResult s = sample_points_small_field(circle, 7, 1000);
  CHECK(s.complete);
  CHECK(s.points.size() == 8);
  const PrimeField f7(7);
  Polynomial c7 = change_field(circle[0], f7);
  for (const SamplePoint& x : s.points) {
    CHECK(evaluate(c7, x.x) == f7.zero());
    CHECK(x.regular);
  }
  std::size_t oracle_count = 0;
  for (const Point& x : oracle::all_points(f7, 2)) oracle_count += oracle::naive_evaluate(c7, x) == 0;
  CHECK(oracle_count == 8);

  std::vector<Polynomial> empty{parse_polynomial("x1", 2, k), parse_polynomial("x1+1", 2, k)};
  CHECK(sample_points_small_field(empty, 7, 1000).points.empty());
}
