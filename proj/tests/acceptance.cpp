#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "checks.hpp"
#include "polar/cli.hpp"
#include "polar/errors.hpp"
#include "polar/experiment.hpp"
#include "polar/families.hpp"

using namespace polar;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Grids {
  std::vector<CellResult> classic_full;   // n <= 5
  std::vector<CellResult> dual_full;      // n <= 5
  std::vector<CellResult> delta_n6;       // n = 6, p <= 3, classic
  std::vector<CellResult> classic_delta;  // n <= 5, dim Delta_i
  std::vector<CellResult> dual_delta;     // n <= 5, dim Delta_i
};

bool completed(const CellResult& r) { return r.status == "ok" || r.status == "fallback"; }

std::string ratio(std::size_t good, std::size_t total) {
  return std::to_string(good) + "/" + std::to_string(total);
}

GridOptions grid(int nmin, int nmax, int pmax, Mode mode, Flavor flavor) {
  GridOptions o;
  o.nmin = nmin;
  o.nmax = nmax;
  o.pmax = pmax;
  o.seeds = 3;
  o.mode = mode;
  o.flavor = flavor;
  o.master_seed = 2024;
  return o;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

// 1
Outcome full_grid(const Grids& g, double secs) {
  std::size_t matched = 0, clean = 0;
  for (const CellResult& r : g.classic_full) {
    matched += r.match;
    clean += r.status == "ok" && r.mode_used == Mode::full && r.redraws_used <= 5;
  }
  const std::size_t total = g.classic_full.size();
  return {total == 60 && matched == total && clean == total,
          ratio(matched, total) + " cells match max{-1, n-p-2i-2} in full mode, n <= 5, 3 seeds, " + fixed(secs) + " s"};
}

// 2
Outcome delta_grid(const Grids& g) {
  std::size_t matched = 0;
  for (const CellResult& r : g.delta_n6) matched += r.match && r.mode_used == Mode::delta;
  const std::size_t total = g.delta_n6.size();
  return {total == 36 && matched == total,
          ratio(matched, total) + " delta-mode cells match at n = 6, p <= 3 (n up to 11 is not reproduced)"};
}

// 3
Outcome hypersurfaces(const Grids& g) {
  std::size_t good = 0, total = 0;
  for (const auto* set : {&g.classic_full, &g.delta_n6, &g.classic_delta})
    for (const CellResult& r : *set)
      if (r.spec.p == 1 && completed(r)) {
        ++total;
        good += r.dim_sing == -1;
      }
  return {total > 0 && good == total, ratio(good, total) + " completed classic p = 1 cells have dim_sing = -1"};
}

// 4
Outcome smooth_zone(const Grids& g) {
  std::size_t good = 0, total = 0;
  for (const auto* set : {&g.classic_full, &g.dual_full, &g.delta_n6})
    for (const CellResult& r : *set)
      if (2 * r.spec.i + 2 > r.spec.n - r.spec.p && completed(r)) {
        ++total;
        good += r.dim_sing == -1;
      }
  return {total > 0 && good == total, ratio(good, total) + " completed cells with 2i+2 > n-p have dim_sing = -1"};
}

// 5
Outcome pure_codimension(const Grids& g) {
  std::size_t good = 0, nonempty = 0, classic = 0, dual = 0;
  for (const auto* set : {&g.classic_full, &g.dual_full, &g.delta_n6})
    for (const CellResult& r : *set) {
      if (!completed(r) || r.dim_W < 0) continue;
      ++nonempty;
      (r.spec.flavor == Flavor::classic ? classic : dual) += 1;
      good += r.dim_W == r.spec.n - r.spec.p - r.spec.i;
    }
  return {nonempty >= 50 && classic > 0 && dual > 0 && good == nonempty,
          ratio(good, nonempty) + " nonempty polar ideals have dim_W = n-p-i (" + std::to_string(classic) +
              " classic, " + std::to_string(dual) + " dual)"};
}

// 6
Outcome delta_codimension(const Grids& g) {
  std::size_t good = 0, total = 0, nonempty = 0;
  for (const auto* set : {&g.classic_delta, &g.dual_delta, &g.delta_n6})
    for (const CellResult& r : *set) {
      if (!completed(r) || r.dim_W < 0) continue;
      ++total;
      nonempty += r.dim_sing >= 0;
      good += r.dim_sing == -1 || r.dim_sing <= r.spec.n - r.spec.p - 2 * r.spec.i - 2;
    }
  return {total > 0 && good == total, ratio(good, total) + " instances have dim Delta_i <= n-p-2i-2 (" +
                                          std::to_string(nonempty) + " with Delta_i nonempty)"};
}

// 7
Outcome singular_family(std::string& note) {
  std::size_t good = 0, total = 0, swapped_symbolic = 0, swapped_at_xi = 0;
  std::string failures;
  for (int n : {6, 7})
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      ++total;
      WitnessReport r = verify_singular_witness(build_family_31(n, seed));
      const bool ok = r.passed() && r.det_vanishes && r.gradient_vanishes && r.identity_holds &&
                      r.rank_with_det == 2 && r.singular_generators_vanish;
      good += ok;
      swapped_symbolic += r.swapped_identity_holds;
      swapped_at_xi += r.swapped_identity_at_xi;
      if (!ok) failures += " n=" + std::to_string(n) + "/seed=" + std::to_string(seed);
    }
  note = "the pairing 2(c_{2,j}m_{1,j}+c_{1,j}m_{2,j}) as printed is a polynomial identity in " +
         ratio(swapped_symbolic, total) + " instances and vanishes at xi in " + ratio(swapped_at_xi, total) +
         "; checks use 2(c_{1,j}m_{1,j}+c_{2,j}m_{2,j})";
  return {good == total, ratio(good, total) + " instances (n = 6, 7) pass det, gradient, derivative identity, rank 2 "
                                              "and singular-generator checks" + failures};
}

// 8
Outcome degree_domination() {
  const PrimeField k;
  const std::vector<std::pair<int, int>> shapes{{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 2}, {4, 3},
                                                {5, 2}, {5, 3}, {5, 4}, {3, 1}, {4, 2}, {5, 1}};
  std::size_t systems = 0, comparisons = 0, good = 0;
  for (std::size_t s = 0; s < shapes.size(); ++s) {
    const auto [n, p] = shapes[s];
    CellDraw draw = draw_cell(n, p, k, 800 + s, 5);
    if (!draw.ok) continue;
    ++systems;
    for (int i = 1; i <= n - p; ++i) {
      ++comparisons;
      good += degree_domination_check(draw.system, i, 2, 900 + 10 * s + i).passed();
    }
  }
  return {systems >= 10 && good == comparisons,
          ratio(good, comparisons) + " (F, i) comparisons on " + std::to_string(systems) +
              " smooth quadric systems: meager <= random, random draws agree, degree <= 2^n p^(n-p)"};
}

// 9
Outcome chain() {
  const PrimeField k;
  std::size_t good = 0, total = 0;
  std::string dims;
  for (const auto& [n, p] : std::vector<std::pair<int, int>>{{5, 2}, {6, 2}}) {
    ++total;
    CellDraw draw = draw_cell(n, p, k, 70 + n, 5);
    if (!draw.ok) continue;
    SplitMix64 rng(71 + n);
    Point gamma = random_point(rng, k, n);
    for (Fq& g : gamma)
      if (g.v == 0) g = k.one();
    ChainReport r = example2_chain(draw.system, gamma, 72 + n);
    const bool bottom = !r.levels.empty() && r.levels.back().dim == 0;
    good += r.passed() && bottom;
    dims += " n=" + std::to_string(n) + ":";
    for (const ChainLevel& level : r.levels) dims += " " + std::to_string(level.dim);
    dims += " (deg " + std::to_string(r.levels.empty() ? 0 : r.levels.back().degree) + ")";
  }
  return {good == total, ratio(good, total) + " chains descend with smooth levels and a nonempty bottom;" + dims};
}

// 10
Outcome pointwise_f7() {
  const PrimeField f7(7);
  std::size_t instances = 0, checked = 0, counterexamples = 0, on_w = 0;
  for (int n = 2; n <= 4; ++n)
    for (int p = 1; p <= std::min(2, n - 1); ++p)
      for (Flavor flavor : {Flavor::classic, Flavor::dual})
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
          SplitMix64 rng(1000 * n + 100 * p + 10 * static_cast<int>(flavor) + seed);
          std::vector<Polynomial> system;
          for (int t = 0; t < p; ++t) system.push_back(random_dense_polynomial(rng, f7, n, 2));
          const int augmented_cols = n + 1;
          ConstMatrix a = random_matrix(rng, f7, n - p, augmented_cols);
          if (flavor == Flavor::classic)
            for (int r = 0; r < n - p; ++r) a.at(r, 0) = f7.zero();
          const PolyMatrix j = jacobian(system);
          for (int i = 1; i <= n - p; ++i) {
            std::optional<PolarSpec> spec;
            try {
              spec.emplace(flavor, i, system, a);
            } catch (const PreconditionError&) {
              continue;
            }
            ++instances;
            const ConstMatrix rows = spec->augmented();
            const PolyMatrix stacked = spec->stacked_matrix();
            const std::vector<Polynomial> big = enumerate_minors(stacked, n - i + 1);
            const std::vector<Polynomial> small = enumerate_minors(stacked, n - i);
            for (const Point& x : oracle::all_points(f7, n)) {
              bool on_s = true;
              for (const Polynomial& f : system) on_s = on_s && evaluate(f, x) == f7.zero();
              if (!on_s || rank_at_point(j, x) != p) continue;
              ++checked;
              const int cls = thom_boardman_class(system, rows, x, flavor);
              auto all_vanish = [&](const std::vector<Polynomial>& minors) {
                return std::all_of(minors.begin(), minors.end(),
                                   [&](const Polynomial& m) { return evaluate(m, x) == f7.zero(); });
              };
              const bool in_w = all_vanish(big);
              on_w += in_w;
              const bool ok = in_w == (cls >= i) && all_vanish(small) == (cls >= i + 1) &&
                              incidence_fiber_dim(system, rows, x, i, flavor) == cls - i;
              counterexamples += !ok;
            }
          }
        }
  return {checked > 0 && on_w > 0 && counterexamples == 0,
          std::to_string(counterexamples) + " counterexamples over " + std::to_string(checked) +
              " regular points of " + std::to_string(instances) + " instances over F_7 (" + std::to_string(on_w) +
              " on the polar variety)"};
}

// 11
Outcome engine_oracles() {
  const PrimeField k;
  SplitMix64 rng(4242);
  std::size_t gb_good = 0, dim_good = 0, deg_good = 0, det_good = 0, zero_dim = 0;
  for (int t = 0; t < 100; ++t) {
    int n = 0;
    std::vector<Polynomial> gens = checks::random_small_ideal(rng, k, n);
    GroebnerBasis g = reduced_groebner_basis(IdealPresentation(k, n, gens));
    std::vector<Polynomial> permuted = gens;
    std::rotate(permuted.begin(), permuted.begin() + 1, permuted.end());
    permuted.push_back(gens.front() * gens.back() - gens.back());
    GroebnerBasis h = reduced_groebner_basis(IdealPresentation(k, n, permuted));
    gb_good += checks::reduced_gb_violation(g).empty() && g == h;
  }
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + static_cast<int>(rng.below(8));
    std::vector<Monomial> gens = checks::random_monomial_ideal(rng, n);
    dim_good += dimension_of_monomial_ideal(gens, n) ==
                oracle::independent_set_dimension(checks::exponents_of(gens, n), n);
  }
  while (zero_dim < 30) {
    const int n = 2 + static_cast<int>(rng.below(2));
    GroebnerBasis g = reduced_groebner_basis(IdealPresentation(k, n, checks::random_zero_dimensional(rng, k, n)));
    if (g.is_unit()) continue;
    ++zero_dim;
    deg_good += dimension(g) == 0 && degree(g) == checks::oracle_standard_count(g);
  }
  for (int t = 0; t < 50; ++t) {
    PolyMatrix m = checks::random_poly_matrix(rng, k, 2 + t % 4, 3);
    det_good += determinant(m) == oracle::cofactor_determinant(m);
  }
  return {gb_good == 100 && dim_good == 100 && deg_good == 30 && det_good == 50,
          "reduced GB " + ratio(gb_good, 100) + ", dimension " + ratio(dim_good, 100) + ", degree " +
              ratio(deg_good, 30) + ", Berkowitz " + ratio(det_good, 50)};
}

// 12
Outcome determinism() {
  const std::vector<const char*> argv{"polar", "experiment", "--nmax", "4",     "--seeds",
                                      "2",     "--master-seed", "31337", "--quiet"};
  std::ostringstream out1, err1, out2, err2;
  const int c1 = run_cli(static_cast<int>(argv.size()), argv.data(), out1, err1);
  const int c2 = run_cli(static_cast<int>(argv.size()), argv.data(), out2, err2);
  const std::string a = out1.str();
  const auto lines = std::count(a.begin(), a.end(), '\n');
  return {c1 == 0 && c2 == 0 && !a.empty() && a == out2.str(),
          "two runs of `polar experiment --nmax 4 --seeds 2 --master-seed 31337` gave " +
              std::string(a == out2.str() ? "identical" : "different") + " output (" + std::to_string(lines) +
              " lines)"};
}

}  // namespace

int main() {
  Grids g;
  const auto start = std::chrono::steady_clock::now();
  g.classic_full = run_grid(grid(2, 5, 0, Mode::full, Flavor::classic));
  const double full_secs = seconds_since(start);
  g.dual_full = run_grid(grid(2, 5, 0, Mode::full, Flavor::dual));
  g.delta_n6 = run_grid(grid(6, 6, 3, Mode::delta, Flavor::classic));
  g.classic_delta = run_grid(grid(2, 5, 0, Mode::delta, Flavor::classic));
  g.dual_delta = run_grid(grid(2, 5, 0, Mode::delta, Flavor::dual));

  std::string note;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"full-mode singular locus grid", [&] { return full_grid(g, full_secs); }},
      {"delta-mode grid at n = 6", [&] { return delta_grid(g); }},
      {"hypersurface smoothness", [&] { return hypersurfaces(g); }},
      {"smooth zone 2i+2 > n-p", [&] { return smooth_zone(g); }},
      {"pure codimension of polar varieties", [&] { return pure_codimension(g); }},
      {"codimension of Delta_i", [&] { return delta_codimension(g); }},
      {"singular witness family", [&] { return singular_family(note); }},
      {"degree domination", degree_domination},
      {"Example 2 chain", chain},
      {"pointwise Thom-Boardman suite over F_7", pointwise_f7},
      {"engine oracles", engine_oracles},
      {"experiment determinism", determinism},
  };

  int failed = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    Outcome o;
    try {
      o = criteria[c].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c + 1 << ": " << criteria[c].first << ": "
              << o.detail << std::endl;
    if (c == 6 && !note.empty()) std::cout << "      note: " << note << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << " in "
            << fixed(seconds_since(start)) << " s" << std::endl;
  return failed == 0 ? 0 : 1;
}
