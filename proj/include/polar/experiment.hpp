#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polar/varieties.hpp"

namespace polar {

enum class Mode { full, delta };

std::string to_string(Mode m);
Mode mode_from_string(const std::string& s);

struct CellSpec {
  int n = 2, p = 1, i = 1;
  Flavor flavor = Flavor::classic;
  std::uint64_t prime = 10000000019ULL;
  std::uint64_t seed = 0;
  Mode mode = Mode::full;
  int redraw_budget = 5;
  GroebnerBudget budget{};
  std::size_t max_minors = 60'000;
};

// Throws PreconditionError unless 2 <= n, 1 <= p <= n-1, 1 <= i <= n-p.
void validate(const CellSpec& spec);

// max{-1, n-p-(2i+2)}, except -1 for classic hypersurfaces (p = 1), which are
// smooth whenever the linear rows have full rank.
int expected_singular_dim(int n, int p, int i, Flavor flavor);

struct CellResult {
  CellSpec spec;
  bool regular_sequence_ok = false;
  bool smooth_ok = false;
  int dim_W = -1;
  std::uint64_t deg_W = 0;
  int dim_sing = -1;
  int expected_dim_sing = -1;
  bool match = false;
  Mode mode_used = Mode::full;  // delta when the full mode fell back
  // "ok", "fallback" (full mode hit the minor cap and reported dim Delta_i),
  // "skipped" (Groebner budget exceeded) or "redraws-exhausted".
  std::string status = "ok";
  int redraws_used = 0;
  std::int64_t elapsed_ms = 0;
};

// The system and matrix shared by every i of one (n, p, seed) draw.
struct CellDraw {
  std::vector<Polynomial> system;
  ConstMatrix a;  // (n-p) x n, full rank
  SmoothnessReport smoothness;
  int redraws_used = 0;
  bool ok = false;
};

// Dense random quadrics re-drawn until they form a smooth complete
// intersection (at most redraw_budget re-draws), then a random full-rank
// (n-p) x n matrix.
CellDraw draw_cell(int n, int p, const PrimeField& field, std::uint64_t seed, int redraw_budget,
                   const GroebnerBudget& budget = {});

// Evaluates one (n, p, i) cell on an existing draw.
CellResult run_cell_on(const CellSpec& spec, const CellDraw& draw);
CellResult run_cell(const CellSpec& spec);

struct GridOptions {
  int nmin = 2;
  int nmax = 4;
  int pmax = 0;  // 0: no limit beyond n-1
  int seeds = 3;
  Mode mode = Mode::full;
  Flavor flavor = Flavor::classic;
  std::uint64_t prime = 10000000019ULL;
  std::uint64_t master_seed = 0;
  int redraw_budget = 5;
  GroebnerBudget budget{};
  std::size_t max_minors = 60'000;
  bool timing = false;  // record wall-clock elapsed_ms; 0 otherwise
};

// Seed of trial t for (n, p), derived from the master seed.
std::uint64_t cell_seed(std::uint64_t master_seed, int n, int p, int trial);

// Every (n, p, i) with nmin <= n <= nmax, sorted by (n, p, i, seed).
std::vector<CellResult> run_grid(const GridOptions& options);

// One JSON object per line, keys in schema order.
std::string to_json_line(const CellResult& r);
std::string grid_summary(const std::vector<CellResult>& results);

struct SamplePoint {
  Point x;
  bool regular = false;  // rank J(F)(x) = p
};

struct SampleResult {
  std::vector<SamplePoint> points;
  bool complete = false;  // exhaustive enumeration finished
};

// F re-read over F_{q_small} through symmetric coefficient representatives.
// Exhaustive when q_small^n <= 10^7, otherwise `cap` random probes.
SampleResult sample_points_small_field(std::span<const Polynomial> system, std::uint64_t q_small,
                                       std::uint64_t cap, std::uint64_t seed = 0);

Polynomial change_field(const Polynomial& f, const PrimeField& target);

}  // namespace polar
