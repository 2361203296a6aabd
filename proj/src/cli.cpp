#include "polar/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "polar/errors.hpp"
#include "polar/experiment.hpp"
#include "polar/families.hpp"
#include "polar/io.hpp"
#include "polar/parse.hpp"

namespace polar {

namespace {

using json = nlohmann::ordered_json;

struct Common {
  bool json = false;
  std::optional<std::uint64_t> prime;
  std::uint64_t master_seed = 0;
  GroebnerBudget budget{};
};

struct Inputs {
  std::string system_path;
  std::string matrix_path;
  std::string flavor = "classic";
  int i = 1;
  std::string point;
};

void add_common(CLI::App* app, Common& c) {
  app->add_flag("--json", c.json, "Print JSON instead of text");
  app->add_option("--prime", c.prime, "Prime modulus (default: $POLAR_PRIME or 10000000019)");
  app->add_option("--master-seed", c.master_seed, "Seed for all randomness")->capture_default_str();
  app->add_option("--max-pairs", c.budget.max_pairs, "Groebner budget: S-pairs reduced")->capture_default_str();
  app->add_option("--max-degree", c.budget.max_degree, "Groebner budget: largest S-pair degree")
      ->capture_default_str();
  app->add_option("--max-basis", c.budget.max_basis, "Groebner budget: basis size")->capture_default_str();
}

void add_system(CLI::App* app, Inputs& in) {
  app->add_option("--system", in.system_path, "System file: one polynomial per line")->required();
}

void add_polar_inputs(CLI::App* app, Inputs& in, bool with_i) {
  add_system(app, in);
  app->add_option("--matrix", in.matrix_path, "Matrix JSON: array of integer rows")->required();
  app->add_option("--flavor", in.flavor, "classic or dual")
      ->check(CLI::IsMember({"classic", "dual"}))
      ->capture_default_str();
  if (with_i) app->add_option("--i", in.i, "Polar index i")->capture_default_str();
}

PrimeField field_for(const Common& c) {
  if (c.prime) return PrimeField(*c.prime);
  if (const char* env = std::getenv("POLAR_PRIME"); env && *env) {
    char* end = nullptr;
    unsigned long long q = std::strtoull(env, &end, 10);
    if (*end != '\0') throw PreconditionError(std::string("POLAR_PRIME is not an integer: ") + env);
    return PrimeField(q);
  }
  return PrimeField();
}

PolynomialSystem load_system(const std::string& path, const PrimeField& k) {
  std::string text = read_text_file(path);
  try {
    return parse_system(text, k);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.message(), e.line(), e.column());
  }
}

ConstMatrix load_matrix(const std::string& path, const PrimeField& k) {
  try {
    return parse_matrix_json(read_text_file(path), k);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.message(), e.line(), e.column());
  }
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

const char* verdict(bool ok) { return ok ? "pass" : "FAIL"; }

struct Cli {
  Cli(std::ostream& o, std::ostream& e) : out(o), err(e) {}

  std::ostream& out;
  std::ostream& err;
  Common common;
  Inputs in;
  std::string report_path;
  std::string gamma_path;
  std::string mode = "full";
  std::size_t max_minors = 60'000;
  bool deleted_rows = false;
  int n = 6;
  std::optional<std::uint64_t> seed;
  int trials = 3;
  GridOptions grid;
  std::string grid_mode = "full";
  std::string grid_flavor = "classic";
  std::string out_path;
  bool quiet = false;

  std::uint64_t effective_seed() const { return seed ? *seed : common.master_seed; }

  PolarSpec polar_spec(const PrimeField& k) {
    PolynomialSystem sys = load_system(in.system_path, k);
    ConstMatrix a = load_matrix(in.matrix_path, k);
    return PolarSpec(flavor_from_string(in.flavor), in.i, std::move(sys.polys), a);
  }

  int cmd_parse() {
    PrimeField k = field_for(common);
    PolynomialSystem sys = load_system(in.system_path, k);
    if (common.json) {
      json j;
      j["nvars"] = sys.nvars;
      j["polynomials"] = polynomials_to_json(sys.polys);
      emit(out, j);
    } else {
      out << "vars: " << sys.nvars << '\n';
      for (const Polynomial& f : sys.polys) out << f.to_string() << '\n';
    }
    return kExitOk;
  }

  GroebnerBasis system_basis(const PrimeField& k, int* nvars = nullptr) {
    PolynomialSystem sys = load_system(in.system_path, k);
    if (nvars) *nvars = sys.nvars;
    return reduced_groebner_basis(IdealPresentation(k, sys.nvars, sys.polys), common.budget);
  }

  int cmd_gb() {
    PrimeField k = field_for(common);
    int nvars = 0;
    GroebnerBasis g = system_basis(k, &nvars);
    if (common.json) {
      json j;
      j["nvars"] = nvars;
      j["basis"] = polynomials_to_json(g.basis());
      emit(out, j);
    } else {
      for (const Polynomial& f : g.basis()) out << f.to_string() << '\n';
    }
    return kExitOk;
  }

  int cmd_dim() {
    PrimeField k = field_for(common);
    int d = dimension(system_basis(k));
    if (common.json) emit(out, json{{"dim", d}});
    else out << d << '\n';
    return kExitOk;
  }

  int cmd_deg() {
    PrimeField k = field_for(common);
    StaircaseSummary s = summarize(system_basis(k));
    if (common.json) {
      emit(out, json{{"dim", s.dimension}, {"degree", s.degree}});
    } else {
      out << s.degree << '\n';
    }
    return kExitOk;
  }

  void print_polar(const PolarSpec& spec, const PolarIdealResult& r, const std::string& label) {
    json j = polar_result_to_json(spec, r);
    if (!report_path.empty()) {
      std::ofstream f(report_path);
      if (!f) throw PreconditionError("cannot write report '" + report_path + "'");
      f << j.dump(2) << '\n';
    }
    if (common.json) {
      emit(out, j);
      return;
    }
    out << label << " (" << to_string(spec.flavor()) << ", n=" << spec.n() << ", p=" << spec.p()
        << ", i=" << spec.i() << ")\n";
    out << "generators " << r.ideal.generators().size() << '\n';
    out << "dim " << r.dim << '\n';
    if (r.dim >= 0) out << "codim_in_S " << r.codim_in_S << '\n';
    out << "degree " << r.degree << '\n';
  }

  int cmd_construct() {
    PrimeField k = field_for(common);
    PolarSpec spec = polar_spec(k);
    print_polar(spec, polar_ideal(spec, common.budget), "polar variety");
    return kExitOk;
  }

  int cmd_delta() {
    PrimeField k = field_for(common);
    PolarSpec spec = polar_spec(k);
    PolarIdealResult r = deleted_rows ? analyze_ideal(delta_ideal_deleted_rows(spec), spec.n() - spec.p(), common.budget)
                                      : delta_ideal(spec, common.budget);
    print_polar(spec, r, "Delta locus");
    return kExitOk;
  }

  int cmd_singular() {
    PrimeField k = field_for(common);
    PolarSpec spec = polar_spec(k);
    PolarIdealResult w = polar_ideal(spec, common.budget);
    int dim_sing = -1;
    std::string used = mode;
    bool fallback = false;
    if (w.dim >= 0) {
      if (mode == "full") {
        try {
          dim_sing = singular_locus_ideal(w, spec.n() - w.dim, {max_minors, common.budget}).dim;
        } catch (const BudgetExceeded&) {
          fallback = true;
          used = "delta";
        }
      }
      if (used == "delta") dim_sing = delta_ideal(spec, common.budget).dim;
    }
    if (common.json) {
      json j;
      j["flavor"] = to_string(spec.flavor());
      j["n"] = spec.n();
      j["p"] = spec.p();
      j["i"] = spec.i();
      j["dim_W"] = w.dim;
      j["deg_W"] = w.degree;
      j["dim_sing"] = dim_sing;
      j["mode"] = used;
      j["fallback"] = fallback;
      emit(out, j);
    } else {
      out << "dim_W " << w.dim << '\n' << "deg_W " << w.degree << '\n' << "dim_sing " << dim_sing << '\n';
      out << "mode " << used << (fallback ? " (fallback: minor cap exceeded)" : "") << '\n';
    }
    return kExitOk;
  }

  int cmd_tb() {
    PrimeField k = field_for(common);
    PolynomialSystem sys = load_system(in.system_path, k);
    ConstMatrix a = load_matrix(in.matrix_path, k);
    Point x = parse_point(in.point, k);
    int j = thom_boardman_class(sys.polys, a, x, flavor_from_string(in.flavor));
    if (common.json) emit(out, json{{"class", j}});
    else out << j << '\n';
    return kExitOk;
  }

  int cmd_fiber() {
    PrimeField k = field_for(common);
    PolynomialSystem sys = load_system(in.system_path, k);
    ConstMatrix a = load_matrix(in.matrix_path, k);
    Point x = parse_point(in.point, k);
    Flavor f = flavor_from_string(in.flavor);
    int d = incidence_fiber_dim(sys.polys, a, x, in.i, f);
    if (common.json) emit(out, json{{"fiber_dim", d}, {"class", thom_boardman_class(sys.polys, a, x, f)}});
    else out << d << '\n';
    return kExitOk;
  }

  int cmd_family31() {
    PrimeField k = field_for(common);
    Family31Instance inst = build_family_31(n, effective_seed(), k);
    WitnessReport rep = verify_singular_witness(inst, common.budget);
    if (common.json) {
      json j;
      j["n"] = n;
      j["seed"] = effective_seed();
      j["redraws"] = inst.redraws;
      j["F1"] = inst.F1.to_string();
      j["F2"] = inst.F2.to_string();
      json xi = json::array();
      for (Fq v : inst.xi) xi.push_back(k.to_signed(v));
      j["xi"] = xi;
      j["det_vanishes"] = rep.det_vanishes;
      j["gradient_vanishes"] = rep.gradient_vanishes;
      j["identity_holds"] = rep.identity_holds;
      j["swapped_identity_holds"] = rep.swapped_identity_holds;
      j["swapped_identity_at_xi"] = rep.swapped_identity_at_xi;
      j["rank_with_det"] = rep.rank_with_det;
      j["rank_without_det"] = rep.rank_without_det;
      j["singular_generators"] = rep.singular_generators;
      j["singular_generators_vanish"] = rep.singular_generators_vanish;
      j["polar_dim"] = rep.polar_dim;
      j["failures"] = rep.failures;
      j["passed"] = rep.passed();
      emit(out, j);
    } else {
      out << "family n=" << n << " seed=" << effective_seed() << " redraws=" << inst.redraws << '\n';
      out << "(a) det N*(xi) = 0: " << verdict(rep.det_vanishes) << '\n';
      out << "(b) gradient of det N* vanishes at xi: " << verdict(rep.gradient_vanishes) << '\n';
      out << "(c) d/dX_j det N* = 2(c_1j m_1j + c_2j m_2j): " << verdict(rep.identity_holds) << '\n';
      out << "    pairing 2(c_2j m_1j + c_1j m_2j): symbolic " << (rep.swapped_identity_holds ? "holds" : "fails")
          << ", at xi " << (rep.swapped_identity_at_xi ? "vanishes" : "nonzero") << '\n';
      out << "(d) rank J(F1,F2,det N*)(xi) = " << rep.rank_with_det << ", rank J(F1,F2)(xi) = "
          << rep.rank_without_det << ": " << verdict(rep.rank_ok) << '\n';
      out << "(e) " << rep.singular_generators << " singular-locus generators vanish at xi: "
          << verdict(rep.singular_generators_vanish) << '\n';
      out << "polar variety dim " << rep.polar_dim << " (expected " << n - 3 << ")\n";
    }
    return rep.passed() ? kExitOk : kExitMismatch;
  }

  int cmd_chain2() {
    PrimeField k = field_for(common);
    PolynomialSystem sys = load_system(in.system_path, k);
    Point gamma = parse_point_json(read_text_file(gamma_path), k);
    SingularLocusOptions opts{max_minors, common.budget};
    ChainReport rep = example2_chain(sys.polys, gamma, effective_seed(), opts);
    if (common.json) {
      json j;
      j["n"] = rep.n;
      j["p"] = rep.p;
      json levels = json::array();
      for (const ChainLevel& l : rep.levels) {
        levels.push_back(json{{"i", l.i},
                              {"dim", l.dim},
                              {"degree", l.degree},
                              {"singular_dim", l.singular_dim},
                              {"contains_next", l.contains_next},
                              {"transversal", l.transversal}});
      }
      j["levels"] = levels;
      j["dims_descend"] = rep.dims_descend;
      j["all_smooth"] = rep.all_smooth;
      j["degree_bound_ok"] = rep.degree_bound_ok;
      j["inclusions_ok"] = rep.inclusions_ok;
      j["passed"] = rep.passed();
      emit(out, j);
    } else {
      out << " i  dim  degree  dim_sing\n";
      for (const ChainLevel& l : rep.levels)
        out << ' ' << l.i << "  " << l.dim << "  " << l.degree << "  " << l.singular_dim << '\n';
      out << "dimensions descend: " << verdict(rep.dims_descend) << '\n';
      out << "every level smooth: " << verdict(rep.all_smooth) << '\n';
      out << "degrees within d^n p^(n-p): " << verdict(rep.degree_bound_ok) << '\n';
      out << "chain inclusions: " << verdict(rep.inclusions_ok) << '\n';
    }
    return rep.passed() ? kExitOk : kExitMismatch;
  }

  int cmd_degcmp() {
    PrimeField k = field_for(common);
    PolynomialSystem sys = load_system(in.system_path, k);
    DegreeComparison rep = degree_domination_check(sys.polys, in.i, trials, effective_seed(), common.budget);
    if (common.json) {
      json j;
      j["i"] = rep.i;
      j["random_classic"] = rep.random_classic;
      j["random_dual"] = rep.random_dual;
      j["meager_classic"] = rep.meager_classic;
      j["meager_dual"] = rep.meager_dual;
      j["unlocalized_random_classic"] = rep.unlocalized_random_classic;
      j["unlocalized_meager_classic"] = rep.unlocalized_meager_classic;
      j["bound"] = bezout_polar_bound(sys.polys);
      j["random_agree"] = rep.random_agree;
      j["dominated"] = rep.dominated;
      j["bound_ok"] = rep.bound_ok;
      j["passed"] = rep.passed();
      emit(out, j);
    } else {
      auto list = [&](const char* name, const std::vector<std::uint64_t>& v) {
        out << name;
        for (std::uint64_t d : v) out << ' ' << d;
        out << '\n';
      };
      list("random classic:", rep.random_classic);
      list("meager classic (Example 1):", rep.meager_classic);
      list("random dual:", rep.random_dual);
      list("meager dual (Example 2):", rep.meager_dual);
      out << "random draws agree: " << verdict(rep.random_agree) << '\n';
      out << "meager <= random: " << verdict(rep.dominated) << '\n';
      out << "degrees <= " << bezout_polar_bound(sys.polys) << ": " << verdict(rep.bound_ok) << '\n';
    }
    return rep.passed() ? kExitOk : kExitMismatch;
  }

  int cmd_experiment() {
    grid.mode = mode_from_string(grid_mode);
    grid.flavor = flavor_from_string(grid_flavor);
    grid.master_seed = common.master_seed;
    grid.budget = common.budget;
    grid.max_minors = max_minors;
    grid.prime = field_for(common).modulus();
    std::ofstream file;
    if (!out_path.empty()) {
      file.open(out_path, std::ios::binary);
      if (!file) throw PreconditionError("cannot write '" + out_path + "'");
    }
    std::ostream& sink = out_path.empty() ? out : file;
    std::vector<CellResult> results = run_grid(grid);
    for (const CellResult& r : results) sink << to_json_line(r) << '\n';
    if (!quiet) err << grid_summary(results);
    bool mismatch = false;
    for (const CellResult& r : results)
      if ((r.status == "ok" || r.status == "fallback") && !r.match) mismatch = true;
    return mismatch ? kExitMismatch : kExitOk;
  }
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Cli cli(out, err);
  CLI::App app{"Polar varieties of complete intersections over a prime field"};
  app.name("polar");
  app.require_subcommand(1, 1);

  auto* parse = app.add_subcommand("parse", "Parse a system file and print it in canonical form");
  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis (degrevlex)");
  auto* dim = app.add_subcommand("dim", "Dimension of the variety of a system");
  auto* deg = app.add_subcommand("deg", "Degree of the variety of a system");
  for (auto* sub : {parse, gb, dim, deg}) {
    add_common(sub, cli.common);
    add_system(sub, cli.in);
  }

  auto* construct = app.add_subcommand("construct", "Classic or dual polar variety");
  auto* delta = app.add_subcommand("delta", "Delta_i locus: rank of [J; a] at most n-i-1");
  auto* singular = app.add_subcommand("singular", "Singular locus of the polar variety");
  for (auto* sub : {construct, delta, singular}) {
    add_common(sub, cli.common);
    add_polar_inputs(sub, cli.in, true);
  }
  construct->add_option("--report", cli.report_path, "Also write the JSON result to this file");
  delta->add_option("--report", cli.report_path, "Also write the JSON result to this file");
  delta->add_flag("--deleted-rows", cli.deleted_rows, "Sum of the polar ideals with one row of a removed");
  singular->add_option("--mode", cli.mode, "full (Jacobian criterion) or delta (Delta_i proxy)")
      ->check(CLI::IsMember({"full", "delta"}))
      ->capture_default_str();
  singular->add_option("--max-minors", cli.max_minors, "Jacobian-criterion minor cap")->capture_default_str();

  auto* tb = app.add_subcommand("tb", "Thom-Boardman class n - rank [J(x); a(x)] at a point");
  auto* fiber = app.add_subcommand("fiber", "Dimension of the incidence-variety fiber over a point");
  for (auto* sub : {tb, fiber}) {
    add_common(sub, cli.common);
    add_polar_inputs(sub, cli.in, sub == fiber);
    sub->add_option("--point", cli.in.point, "Comma separated coordinates, e.g. 1,0,0")->required();
  }

  auto* family31 = app.add_subcommand("family31", "Build and verify a singular generic polar variety");
  add_common(family31, cli.common);
  family31->add_option("--n", cli.n, "Number of variables (>= 6)")->capture_default_str();
  family31->add_option("--seed", cli.seed, "Instance seed (default: --master-seed)");

  auto* chain2 = app.add_subcommand("chain2", "Localized descending chain of dual polar varieties");
  add_common(chain2, cli.common);
  add_system(chain2, cli.in);
  chain2->add_option("--gamma", cli.gamma_path, "JSON array of n integers")->required();
  chain2->add_option("--seed", cli.seed, "Seed for the degree slices (default: --master-seed)");
  chain2->add_option("--max-minors", cli.max_minors, "Jacobian-criterion minor cap")->capture_default_str();

  auto* degcmp = app.add_subcommand("degcmp", "Degrees of meagerly generic versus random polar varieties");
  add_common(degcmp, cli.common);
  add_system(degcmp, cli.in);
  degcmp->add_option("--i", cli.in.i, "Polar index i")->capture_default_str();
  degcmp->add_option("--trials", cli.trials, "Draws per family")->capture_default_str();
  degcmp->add_option("--seed", cli.seed, "Seed (default: --master-seed)");

  auto* experiment = app.add_subcommand("experiment", "Singular-locus dimensions over a grid of (n, p, i)");
  add_common(experiment, cli.common);
  experiment->add_option("--nmin", cli.grid.nmin, "Smallest n")->capture_default_str();
  experiment->add_option("--nmax", cli.grid.nmax, "Largest n")->capture_default_str();
  experiment->add_option("--pmax", cli.grid.pmax, "Largest p (0: n-1)")->capture_default_str();
  experiment->add_option("--seeds", cli.grid.seeds, "Random draws per (n, p)")->capture_default_str();
  experiment->add_option("--mode", cli.grid_mode, "full or delta")
      ->check(CLI::IsMember({"full", "delta"}))
      ->capture_default_str();
  experiment->add_option("--flavor", cli.grid_flavor, "classic or dual")
      ->check(CLI::IsMember({"classic", "dual"}))
      ->capture_default_str();
  experiment->add_option("--redraws", cli.grid.redraw_budget, "Re-draw budget per cell")->capture_default_str();
  experiment->add_option("--max-minors", cli.max_minors, "Jacobian-criterion minor cap")->capture_default_str();
  experiment->add_option("--out", cli.out_path, "JSON-lines output file (default: stdout)");
  experiment->add_flag("--timing", cli.grid.timing, "Record wall-clock elapsed_ms (otherwise 0)");
  experiment->add_flag("--quiet", cli.quiet, "No summary table on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*parse) return cli.cmd_parse();
    if (*gb) return cli.cmd_gb();
    if (*dim) return cli.cmd_dim();
    if (*deg) return cli.cmd_deg();
    if (*construct) return cli.cmd_construct();
    if (*delta) return cli.cmd_delta();
    if (*singular) return cli.cmd_singular();
    if (*tb) return cli.cmd_tb();
    if (*fiber) return cli.cmd_fiber();
    if (*family31) return cli.cmd_family31();
    if (*chain2) return cli.cmd_chain2();
    if (*degcmp) return cli.cmd_degcmp();
    if (*experiment) return cli.cmd_experiment();
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace polar
