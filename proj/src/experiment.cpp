#include "polar/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "polar/errors.hpp"

namespace polar {

std::string to_string(Mode m) { return m == Mode::full ? "full" : "delta"; }

Mode mode_from_string(const std::string& s) {
  if (s == "full") return Mode::full;
  if (s == "delta") return Mode::delta;
  throw PreconditionError("unknown mode '" + s + "' (expected full or delta)");
}

void validate(const CellSpec& spec) {
  if (spec.n < 2) throw PreconditionError("need n >= 2");
  if (spec.n > kMaxVars - 1) throw PreconditionError("n is limited to " + std::to_string(kMaxVars - 1));
  if (spec.p < 1 || spec.p > spec.n - 1) throw PreconditionError("need 1 <= p <= n-1");
  if (spec.i < 1 || spec.i > spec.n - spec.p) throw PreconditionError("need 1 <= i <= n-p");
  if (spec.redraw_budget < 0) throw PreconditionError("redraw budget must be non-negative");
}

int expected_singular_dim(int n, int p, int i, Flavor flavor) {
  if (flavor == Flavor::classic && p == 1) return -1;
  return std::max(-1, n - p - (2 * i + 2));
}

CellDraw draw_cell(int n, int p, const PrimeField& k, std::uint64_t seed, int redraw_budget,
                   const GroebnerBudget& budget) {
  SplitMix64 rng(seed);
  CellDraw draw{{}, ConstMatrix(k, n - p, n), {}, 0, false};
  for (int attempt = 0; attempt <= redraw_budget; ++attempt) {
    draw.system.clear();
    for (int t = 0; t < p; ++t) draw.system.push_back(random_dense_polynomial(rng, k, n, 2));
    draw.smoothness = verify_smooth_complete_intersection(draw.system, budget);
    draw.redraws_used = attempt;
    if (draw.smoothness.passed()) {
      draw.ok = true;
      break;
    }
  }
  do {
    draw.a = random_matrix(rng, k, n - p, n);
  } while (rank(draw.a) != n - p);
  return draw;
}

namespace {

ConstMatrix matrix_for(const CellDraw& draw, Flavor flavor) {
  if (flavor == Flavor::classic) return draw.a;
  const PrimeField& k = draw.a.field();
  ConstMatrix out(k, draw.a.rows(), draw.a.cols() + 1);
  for (int r = 0; r < draw.a.rows(); ++r) {
    out.at(r, 0) = k.one();
    for (int c = 0; c < draw.a.cols(); ++c) out.at(r, c + 1) = draw.a.at(r, c);
  }
  return out;
}

}  // namespace

CellResult run_cell_on(const CellSpec& spec, const CellDraw& draw) {
  validate(spec);
  const auto start = std::chrono::steady_clock::now();
  CellResult r;
  r.spec = spec;
  r.mode_used = spec.mode;
  r.regular_sequence_ok = draw.smoothness.regular_sequence_ok;
  r.smooth_ok = draw.smoothness.smooth_ok;
  r.redraws_used = draw.redraws_used;
  r.expected_dim_sing = expected_singular_dim(spec.n, spec.p, spec.i, spec.flavor);
  if (!draw.ok) {
    r.status = "redraws-exhausted";
  } else {
    try {
      PolarSpec ps(spec.flavor, spec.i, draw.system, matrix_for(draw, spec.flavor));
      PolarIdealResult w = polar_ideal(ps, spec.budget);
      r.dim_W = w.dim;
      r.deg_W = w.degree;
      if (w.dim < 0) {
        r.dim_sing = -1;
      } else if (spec.mode == Mode::full) {
        try {
          r.dim_sing = singular_locus_ideal(w, spec.n - w.dim, {spec.max_minors, spec.budget}).dim;
        } catch (const BudgetExceeded&) {
          r.mode_used = Mode::delta;
          r.status = "fallback";
          r.dim_sing = delta_ideal(ps, spec.budget).dim;
        }
      } else {
        r.dim_sing = delta_ideal(ps, spec.budget).dim;
      }
    } catch (const BudgetExceeded&) {
      r.status = "skipped";
    }
  }
  r.match = (r.status == "ok" || r.status == "fallback") && r.dim_sing == r.expected_dim_sing;
  r.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

CellResult run_cell(const CellSpec& spec) {
  validate(spec);
  PrimeField k(spec.prime);
  return run_cell_on(spec, draw_cell(spec.n, spec.p, k, spec.seed, spec.redraw_budget, spec.budget));
}

std::uint64_t cell_seed(std::uint64_t master_seed, int n, int p, int trial) {
  const std::uint64_t key = (static_cast<std::uint64_t>(n) << 40) | (static_cast<std::uint64_t>(p) << 20) |
                            static_cast<std::uint64_t>(trial);
  return SplitMix64(master_seed).split(key).next();
}

std::vector<CellResult> run_grid(const GridOptions& o) {
  if (o.nmax < 2 || o.nmin > o.nmax) throw PreconditionError("need 2 <= nmax and nmin <= nmax");
  if (o.seeds < 1) throw PreconditionError("need at least one seed per cell");
  PrimeField k(o.prime);
  std::vector<CellResult> out;
  for (int n = std::max(2, o.nmin); n <= o.nmax; ++n) {
    const int pmax = o.pmax > 0 ? std::min(o.pmax, n - 1) : n - 1;
    for (int p = 1; p <= pmax; ++p) {
      for (int trial = 0; trial < o.seeds; ++trial) {
        CellSpec spec;
        spec.n = n;
        spec.p = p;
        spec.flavor = o.flavor;
        spec.prime = o.prime;
        spec.seed = cell_seed(o.master_seed, n, p, trial);
        spec.mode = o.mode;
        spec.redraw_budget = o.redraw_budget;
        spec.budget = o.budget;
        spec.max_minors = o.max_minors;
        std::optional<CellDraw> draw;
        try {
          draw = draw_cell(n, p, k, spec.seed, o.redraw_budget, o.budget);
        } catch (const BudgetExceeded&) {
        }
        for (int i = 1; i <= n - p; ++i) {
          spec.i = i;
          CellResult r;
          if (draw) {
            r = run_cell_on(spec, *draw);
          } else {
            r.spec = spec;
            r.mode_used = spec.mode;
            r.status = "skipped";
            r.expected_dim_sing = expected_singular_dim(n, p, i, o.flavor);
          }
          if (!o.timing) r.elapsed_ms = 0;
          out.push_back(std::move(r));
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const CellResult& a, const CellResult& b) {
    return std::tie(a.spec.n, a.spec.p, a.spec.i, a.spec.seed) < std::tie(b.spec.n, b.spec.p, b.spec.i, b.spec.seed);
  });
  return out;
}

std::string to_json_line(const CellResult& r) {
  nlohmann::ordered_json j;
  j["n"] = r.spec.n;
  j["p"] = r.spec.p;
  j["i"] = r.spec.i;
  j["flavor"] = to_string(r.spec.flavor);
  j["prime"] = r.spec.prime;
  j["seed"] = r.spec.seed;
  j["regular_sequence_ok"] = r.regular_sequence_ok;
  j["smooth_ok"] = r.smooth_ok;
  j["dim_W"] = r.dim_W;
  j["deg_W"] = r.deg_W;
  j["dim_sing"] = r.dim_sing;
  j["expected_dim_sing"] = r.expected_dim_sing;
  j["match"] = r.match;
  j["mode"] = to_string(r.mode_used);
  j["status"] = r.status;
  j["redraws_used"] = r.redraws_used;
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump();
}

std::string grid_summary(const std::vector<CellResult>& results) {
  struct Row {
    int cells = 0, completed = 0, matched = 0;
    std::set<int> dims;
    int expected = 0;
  };
  std::map<std::tuple<int, int, int>, Row> rows;
  for (const CellResult& r : results) {
    Row& row = rows[{r.spec.n, r.spec.p, r.spec.i}];
    ++row.cells;
    row.expected = r.expected_dim_sing;
    if (r.status == "ok" || r.status == "fallback") {
      ++row.completed;
      row.dims.insert(r.dim_sing);
    }
    if (r.match) ++row.matched;
  }
  std::ostringstream os;
  os << " n  p  i  cells  done  match  expected  dim_sing\n";
  int cells = 0, done = 0, matched = 0;
  for (const auto& [key, row] : rows) {
    os << std::setw(2) << std::get<0>(key) << ' ' << std::setw(2) << std::get<1>(key) << ' ' << std::setw(2)
       << std::get<2>(key) << ' ' << std::setw(6) << row.cells << ' ' << std::setw(5) << row.completed << ' '
       << std::setw(6) << row.matched << ' ' << std::setw(9) << row.expected << "  ";
    bool first = true;
    for (int d : row.dims) {
      os << (first ? "" : ",") << d;
      first = false;
    }
    if (row.dims.empty()) os << '-';
    os << '\n';
    cells += row.cells;
    done += row.completed;
    matched += row.matched;
  }
  os << "cells " << cells << ", completed " << done << ", matched " << matched << '\n';
  return os.str();
}

Polynomial change_field(const Polynomial& f, const PrimeField& target) {
  std::vector<Term> terms;
  for (const Term& t : f.terms()) terms.push_back({t.mono, target.from_int(f.field().to_signed(t.coeff))});
  return Polynomial::from_terms(target, f.nvars(), std::move(terms));
}

SampleResult sample_points_small_field(std::span<const Polynomial> system, std::uint64_t q_small,
                                       std::uint64_t cap, std::uint64_t seed) {
  if (system.empty()) throw PreconditionError("empty system");
  PrimeField k(q_small);
  const int n = system.front().nvars();
  std::vector<Polynomial> polys;
  for (const Polynomial& f : system) polys.push_back(change_field(f, k));
  PolyMatrix jac = jacobian(polys);
  const int p = static_cast<int>(polys.size());

  SampleResult out;
  auto consider = [&](const Point& x) {
    for (const Polynomial& f : polys)
      if (evaluate(f, x).v != 0) return;
    out.points.push_back({x, rank(jac.evaluated(x)) == p});
  };

  double total = 1;
  for (int t = 0; t < n; ++t) total *= static_cast<double>(q_small);
  if (total <= 1e7) {
    Point x(n, k.zero());
    for (;;) {
      consider(x);
      int t = n - 1;
      while (t >= 0 && x[t].v + 1 == q_small) x[t--] = k.zero();
      if (t < 0) break;
      x[t].v += 1;
    }
    out.complete = true;
    return out;
  }
  SplitMix64 rng(seed);
  std::set<std::vector<std::uint64_t>> seen;
  for (std::uint64_t probe = 0; probe < cap; ++probe) {
    Point x = random_point(rng, k, n);
    std::vector<std::uint64_t> key;
    for (Fq v : x) key.push_back(v.v);
    if (seen.insert(key).second) consider(x);
  }
  return out;
}

}  // namespace polar
