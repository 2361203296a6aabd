#include "polar/families.hpp"

#include <algorithm>
#include <limits>

#include "polar/errors.hpp"

namespace polar {

namespace {

bool all_vanish(std::span<const Polynomial> polys, const Point& x) {
  return std::all_of(polys.begin(), polys.end(), [&](const Polynomial& f) { return evaluate(f, x).v == 0; });
}

Polynomial diagonal_quadric(const PrimeField& k, int n, const ConstMatrix& c, int u, Fq constant) {
  std::vector<Term> terms;
  for (int j = 0; j < n; ++j) {
    std::vector<unsigned> e(n, 0);
    e[j] = 2;
    terms.push_back({Monomial(e), c.at(u, j)});
  }
  terms.push_back({Monomial(std::vector<unsigned>(n, 0)), k.neg(constant)});
  return Polynomial::from_terms(k, n, std::move(terms));
}

// Genericity conditions on c and a that do not depend on xi.
bool generic_pair(const ConstMatrix& c, const ConstMatrix& a) {
  const PrimeField& k = c.field();
  const int n = c.cols();
  for (int j = 0; j < n; ++j)
    if (c.at(0, j).v == 0 || c.at(1, j).v == 0) return false;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (k.sub(k.mul(c.at(0, u), c.at(1, v)), k.mul(c.at(0, v), c.at(1, u))).v == 0) return false;
  ConstMatrix full(k, n, n);
  for (int j = 0; j < n; ++j) {
    full.at(0, j) = c.at(0, j);
    full.at(1, j) = c.at(1, j);
    for (int r = 0; r < n - 2; ++r) full.at(r + 2, j) = a.at(r, j);
  }
  return determinant(full).v != 0;
}

}  // namespace

Family31Instance build_family_31(int n, std::uint64_t seed, const PrimeField& k, int max_redraws) {
  if (n < 6) throw PreconditionError("the singular family needs n >= 6");
  if (n > kMaxVars) throw PreconditionError("n exceeds the supported variable count");
  if (k.characteristic_two()) throw PreconditionError("characteristic 2 is not supported");
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < max_redraws; ++attempt) {
    ConstMatrix c = random_matrix(rng, k, 2, n);
    ConstMatrix a = random_matrix(rng, k, n - 2, n);
    if (!generic_pair(c, a)) continue;
    // (c_{u,j} x_j)_j lies in the row span of a iff it is orthogonal to ker a.
    std::vector<Point> w = kernel_basis(a);
    if (w.size() != 2) continue;
    ConstMatrix conditions(k, 4, n);
    for (int t = 0; t < 2; ++t)
      for (int u = 0; u < 2; ++u)
        for (int j = 0; j < n; ++j) conditions.at(2 * t + u, j) = k.mul(w[t][j], c.at(u, j));
    std::vector<Point> e = kernel_basis(conditions);
    if (static_cast<int>(e.size()) < n - 4) continue;
    Point xi(n, k.zero());
    for (const Point& v : e) {
      Fq s = random_element(rng, k);
      for (int j = 0; j < n; ++j) xi[j] = k.mul_add(s, v[j], xi[j]);
    }
    if (xi[0].v == 0 || xi[1].v == 0) continue;
    Fq c1 = k.zero(), c2 = k.zero();
    for (int j = 0; j < n; ++j) {
      Fq sq = k.mul(xi[j], xi[j]);
      c1 = k.mul_add(c.at(0, j), sq, c1);
      c2 = k.mul_add(c.at(1, j), sq, c2);
    }
    bool ratios_ok = true;
    for (int j = 0; j < n && ratios_ok; ++j)
      ratios_ok = k.mul(c1, c.at(1, j)) != k.mul(c2, c.at(0, j));
    if (!ratios_ok) continue;
    Polynomial F1 = diagonal_quadric(k, n, c, 0, c1);
    Polynomial F2 = diagonal_quadric(k, n, c, 1, c2);
    std::vector<Polynomial> system{F1, F2};
    if (!verify_smooth_complete_intersection(system).passed()) continue;
    return Family31Instance{n, c, a, c1, c2, F1, F2, xi, attempt};
  }
  throw BudgetExceeded("no generic draw for the singular family within " + std::to_string(max_redraws) +
                       " attempts");
}

PolyMatrix family31_matrix(const Family31Instance& inst) {
  std::vector<Polynomial> system{inst.F1, inst.F2};
  return stack(jacobian(system), PolyMatrix::from_constants(inst.a, inst.n));
}

WitnessReport verify_singular_witness(const Family31Instance& inst, const GroebnerBudget& budget) {
  const PrimeField& k = inst.F1.field();
  const int n = inst.n;
  WitnessReport rep;
  PolyMatrix N = family31_matrix(inst);
  Polynomial det = determinant(N);

  rep.det_vanishes = evaluate(det, inst.xi).v == 0;
  if (!rep.det_vanishes) rep.failures.push_back("(a) det N*(xi) != 0");

  rep.gradient_vanishes = true;
  for (int j = 1; j <= n; ++j)
    if (evaluate(differentiate(det, j), inst.xi).v != 0) rep.gradient_vanishes = false;
  if (!rep.gradient_vanishes) rep.failures.push_back("(b) gradient of det N* does not vanish at xi");

  // m[u][l]: (-1)^{u+l} times the minor deleting row u and column l.
  std::vector<std::vector<Polynomial>> m(2);
  std::vector<int> all_cols(n);
  for (int l = 0; l < n; ++l) all_cols[l] = l;
  for (int u = 0; u < 2; ++u) {
    std::vector<int> rows;
    for (int r = 0; r < n; ++r)
      if (r != u) rows.push_back(r);
    for (int l = 0; l < n; ++l) {
      std::vector<int> cols;
      for (int t = 0; t < n; ++t)
        if (t != l) cols.push_back(t);
      Polynomial minor = determinant(N.submatrix(rows, cols));
      m[u].push_back((u + l) % 2 == 0 ? minor : -minor);
    }
  }
  const Fq two = k.from_uint(2);
  rep.identity_holds = true;
  rep.swapped_identity_holds = true;
  rep.swapped_identity_at_xi = true;
  for (int j = 0; j < n; ++j) {
    Polynomial d = differentiate(det, j + 1);
    Polynomial paired = (m[0][j].scaled(inst.c.at(0, j)) + m[1][j].scaled(inst.c.at(1, j))).scaled(two);
    Polynomial swapped = (m[0][j].scaled(inst.c.at(1, j)) + m[1][j].scaled(inst.c.at(0, j))).scaled(two);
    if (!(d == paired)) rep.identity_holds = false;
    if (!(d == swapped)) rep.swapped_identity_holds = false;
    if (evaluate(swapped, inst.xi).v != 0) rep.swapped_identity_at_xi = false;
  }
  if (!rep.identity_holds) rep.failures.push_back("(c) derivative identity fails");

  std::vector<Polynomial> with_det{inst.F1, inst.F2, det};
  std::vector<Polynomial> without{inst.F1, inst.F2};
  rep.rank_with_det = rank(jacobian(with_det).evaluated(inst.xi));
  rep.rank_without_det = rank(jacobian(without).evaluated(inst.xi));
  rep.rank_ok = rep.rank_with_det == 2 && rep.rank_without_det == 2;
  if (!rep.rank_ok) rep.failures.push_back("(d) Jacobian ranks at xi are not both 2");

  PolarSpec spec(Flavor::classic, 1, without, inst.a);
  IdealPresentation polar = polar_ideal_generators(spec);
  IdealPresentation sing = singular_locus_generators(polar, 3);
  rep.singular_generators = sing.generators().size();
  rep.singular_generators_vanish = all_vanish(sing.generators(), inst.xi);
  if (!rep.singular_generators_vanish) rep.failures.push_back("(e) a singular-locus generator is nonzero at xi");

  rep.polar_dim = dimension(reduced_groebner_basis(polar, budget));
  if (rep.polar_dim != n - 3) rep.failures.push_back("polar variety does not have codimension 3");
  return rep;
}

int example1_parameter_count(int n, int p) { return (n - p) * (n - p + 1) / 2; }

namespace {

void check_example_indices(int n, int p, int i) {
  if (p < 1 || p > n - 1) throw PreconditionError("need 1 <= p <= n-1");
  if (i < 1 || i > n - p) throw PreconditionError("need 1 <= i <= n-p");
}

// Inverse of a lower unitriangular matrix by forward substitution; works for
// any entry type with +, -, * and a unit.
template <class T, class Get, class Unit, class Zero>
std::vector<std::vector<T>> unitriangular_inverse(int n, Get get, Unit unit, Zero zero) {
  std::vector<std::vector<T>> x(n, std::vector<T>(n, zero()));
  for (int c = 0; c < n; ++c) {
    x[c][c] = unit();
    for (int r = c + 1; r < n; ++r) {
      T acc = zero();
      for (int t = c; t < r; ++t) acc = acc + get(r, t) * x[t][c];
      x[r][c] = zero() - acc;
    }
  }
  return x;
}

}  // namespace

MeagerMatrixZ example1_transform(int n, int p, int i, const Point& z, const PrimeField& k) {
  check_example_indices(n, p, i);
  const int s = example1_parameter_count(n, p);
  if (static_cast<int>(z.size()) != s) {
    throw PreconditionError("Example 1 needs " + std::to_string(s) + " parameters, got " + std::to_string(z.size()));
  }
  ConstMatrix A = ConstMatrix::identity(k, n);
  int next = 0;
  for (int r = p + 1; r <= n; ++r)
    for (int t = p; t < r; ++t) A.at(r - 1, t - 1) = z[next++];

  struct El {
    const PrimeField* k;
    Fq v;
    El operator+(const El& o) const { return {k, k->add(v, o.v)}; }
    El operator-(const El& o) const { return {k, k->sub(v, o.v)}; }
    El operator*(const El& o) const { return {k, k->mul(v, o.v)}; }
  };
  auto inv = unitriangular_inverse<El>(
      n, [&](int r, int c) { return El{&k, A.at(r, c)}; }, [&] { return El{&k, k.one()}; },
      [&] { return El{&k, k.zero()}; });
  const int rows = n - p - i + 1;
  ConstMatrix B(k, rows, n);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < n; ++c) B.at(r, c) = inv[p + i - 1 + r][c].v;

  ConstMatrix product = B * A;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < n; ++c) {
      Fq want = c == p + i - 1 + r ? k.one() : k.zero();
      if (product.at(r, c) != want) throw StructuralError("B_i(z) A(z) is not [O | I]");
    }
  return MeagerMatrixZ{n, p, i, z, A, B};
}

SymbolicExample1 example1_symbolic(int n, int p, int i, const PrimeField& k) {
  check_example_indices(n, p, i);
  const int s = example1_parameter_count(n, p);
  if (s > kMaxVars) throw PreconditionError("too many parameters for a symbolic Example 1");
  PolyMatrix A = PolyMatrix::from_constants(ConstMatrix::identity(k, n), s);
  int next = 0;
  for (int r = p + 1; r <= n; ++r)
    for (int t = p; t < r; ++t) A.set(r - 1, t - 1, Polynomial::variable(k, s, ++next));
  auto inv = unitriangular_inverse<Polynomial>(
      n, [&](int r, int c) { return A.at(r, c); }, [&] { return Polynomial::constant(k, s, k.one()); },
      [&] { return Polynomial(k, s); });
  const int rows = n - p - i + 1;
  PolyMatrix B(k, s, rows, n);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < n; ++c) B.set(r, c, inv[p + i - 1 + r][c]);
  return SymbolicExample1{A, B};
}

ConstMatrix example2_matrix(int n, int p, int i, const Point& gamma, const Point& z, const PrimeField& k) {
  check_example_indices(n, p, i);
  if (static_cast<int>(gamma.size()) < n - i) throw PreconditionError("gamma needs at least n-i entries");
  if (static_cast<int>(z.size()) != i) throw PreconditionError("z needs exactly i entries");
  if (gamma[n - i - 1].v == 0) throw PreconditionError("gamma_{n-i} must be nonzero");
  const int rows = n - p - i + 1;
  ConstMatrix out(k, rows, n + 1);
  for (int r = 0; r + 1 < rows; ++r) out.at(r, p + r) = k.one();
  out.at(rows - 1, 0) = k.one();
  for (int l = 0; l < n - i; ++l) out.at(rows - 1, l + 1) = gamma[l];
  for (int l = 0; l < i; ++l) out.at(rows - 1, n - i + l + 1) = z[l];
  return out;
}

Polynomial leading_jacobian_minor(std::span<const Polynomial> system) {
  if (system.empty()) throw PreconditionError("empty system");
  const Polynomial& f = system.front();
  const int p = static_cast<int>(system.size());
  if (p == 1) return Polynomial::constant(f.field(), f.nvars(), f.field().one());
  std::vector<int> idx(p - 1);
  for (int t = 0; t < p - 1; ++t) idx[t] = t;
  return determinant(jacobian(system).submatrix(idx, idx));
}

Polynomial chain_cofactor_minor(std::span<const Polynomial> system, int i) {
  if (system.empty()) throw PreconditionError("empty system");
  const int n = system.front().nvars();
  const int p = static_cast<int>(system.size());
  check_example_indices(n, p, i);
  std::vector<int> rows(p), cols;
  for (int t = 0; t < p; ++t) rows[t] = t;
  for (int t = 0; t < p - 1; ++t) cols.push_back(t);
  cols.push_back(n - i - 1);
  return determinant(jacobian(system).submatrix(rows, cols));
}

std::uint64_t bezout_polar_bound(std::span<const Polynomial> system) {
  if (system.empty()) throw PreconditionError("empty system");
  const int n = system.front().nvars();
  const int p = static_cast<int>(system.size());
  int d = 0;
  for (const Polynomial& f : system) d = std::max(d, f.degree());
  const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t out = 1;
  auto times = [&](std::uint64_t f) {
    if (f != 0 && out > cap / f) out = cap;
    else out *= f;
  };
  for (int t = 0; t < n; ++t) times(static_cast<std::uint64_t>(d));
  for (int t = 0; t < n - p; ++t) times(static_cast<std::uint64_t>(p));
  return out;
}

ChainReport example2_chain(std::span<const Polynomial> system, const Point& gamma, std::uint64_t seed,
                           const SingularLocusOptions& options) {
  if (system.empty()) throw PreconditionError("empty system");
  const int n = system.front().nvars();
  const int p = static_cast<int>(system.size());
  const PrimeField& k = system.front().field();
  if (static_cast<int>(gamma.size()) != n) throw PreconditionError("gamma needs n entries");
  for (int i = 1; i <= n - p; ++i)
    if (gamma[n - i - 1].v == 0) throw PreconditionError("gamma_{n-i} must be nonzero for every level");
  const Polynomial m = leading_jacobian_minor(system);
  const std::uint64_t bound = bezout_polar_bound(system);
  std::vector<Polynomial> polys(system.begin(), system.end());
  SplitMix64 rng(seed);

  ChainReport rep;
  rep.n = n;
  rep.p = p;
  std::vector<IdealPresentation> ideals;
  std::vector<GroebnerBasis> localized;
  for (int i = 1; i <= n - p; ++i) {
    Point z(gamma.begin() + (n - i), gamma.end());
    PolarSpec spec(Flavor::dual, i, polys, example2_matrix(n, p, i, gamma, z, k));
    IdealPresentation ideal = polar_ideal_generators(spec);
    const Polynomial mi = m * chain_cofactor_minor(system, i);
    LocalizedAnalysis la = analyze_localized(ideal, mi, rng, options.budget);
    ChainLevel level;
    level.i = i;
    level.dim = la.dim;
    level.degree = la.degree;
    // F together with the minors on columns 1..n-i and j cuts out the level
    // inside {mi != 0}; when that is confirmed its small Jacobian suffices.
    IdealPresentation transversal(k, n, polys);
    PolyMatrix stacked = spec.stacked_matrix();
    std::vector<int> all_rows(stacked.rows());
    for (int r = 0; r < stacked.rows(); ++r) all_rows[r] = r;
    for (int j = n - i; j < n; ++j) {
      std::vector<int> cols;
      for (int t = 0; t < n - i; ++t) cols.push_back(t);
      cols.push_back(j);
      transversal.add(determinant(stacked.submatrix(all_rows, cols)));
    }
    level.transversal =
        reduced_groebner_basis(localize_rabinowitsch(transversal, mi), options.budget) == la.gb;
    level.singular_dim = localized_singular_dim(level.transversal ? transversal : ideal, mi, la.dim, options);
    rep.levels.push_back(level);
    ideals.push_back(std::move(ideal));
    localized.push_back(std::move(la.gb));
  }
  rep.dims_descend = rep.all_smooth = rep.degree_bound_ok = rep.inclusions_ok = true;
  for (std::size_t t = 0; t < rep.levels.size(); ++t) {
    ChainLevel& level = rep.levels[t];
    if (level.dim >= 0 && level.dim != n - p - level.i) rep.dims_descend = false;
    if (t > 0 && rep.levels[t - 1].dim < 0 && level.dim >= 0) rep.dims_descend = false;
    if (level.singular_dim >= 0) rep.all_smooth = false;
    if (level.degree > bound) rep.degree_bound_ok = false;
    if (t + 1 < rep.levels.size()) {
      for (const Polynomial& g : ideals[t].generators())
        if (!normal_form(g.embedded(n + 1), localized[t + 1]).is_zero()) level.contains_next = false;
      if (!level.contains_next) rep.inclusions_ok = false;
    }
  }
  return rep;
}

namespace {

ConstMatrix random_full_rank(SplitMix64& rng, const PrimeField& k, int rows, int cols) {
  for (;;) {
    ConstMatrix a = random_matrix(rng, k, rows, cols);
    if (rank(a) == rows) return a;
  }
}

}  // namespace

DegreeComparison degree_domination_check(std::span<const Polynomial> system, int i, int trials,
                                         std::uint64_t seed, const GroebnerBudget& budget) {
  if (system.empty()) throw PreconditionError("empty system");
  if (trials < 1) throw PreconditionError("need at least one trial");
  const int n = system.front().nvars();
  const int p = static_cast<int>(system.size());
  const PrimeField& k = system.front().field();
  check_example_indices(n, p, i);
  const Polynomial m = leading_jacobian_minor(system);
  const std::vector<Polynomial> polys(system.begin(), system.end());
  const int rows = n - p - i + 1;
  SplitMix64 rng(seed);

  auto localized_degree = [&](const PolarSpec& spec) {
    return analyze_localized(polar_ideal_generators(spec), m, rng, budget).degree;
  };

  DegreeComparison out;
  out.i = i;
  for (int t = 0; t < trials; ++t) {
    PolarSpec rc(Flavor::classic, i, polys, random_full_rank(rng, k, rows, n));
    out.random_classic.push_back(localized_degree(rc));
    out.unlocalized_random_classic.push_back(polar_ideal(rc, budget).degree);

    ConstMatrix dual(k, rows, n + 1);
    ConstMatrix lin = random_full_rank(rng, k, rows, n);
    for (int r = 0; r < rows; ++r) {
      dual.at(r, 0) = k.one();
      for (int l = 0; l < n; ++l) dual.at(r, l + 1) = lin.at(r, l);
    }
    out.random_dual.push_back(localized_degree(PolarSpec(Flavor::dual, i, polys, dual)));

    Point z = random_point(rng, k, example1_parameter_count(n, p));
    PolarSpec mc(Flavor::classic, i, polys, example1_transform(n, p, i, z, k).B);
    out.meager_classic.push_back(localized_degree(mc));
    out.unlocalized_meager_classic.push_back(polar_ideal(mc, budget).degree);

    Point gamma = random_point(rng, k, n);
    if (gamma[n - i - 1].v == 0) gamma[n - i - 1] = k.one();
    Point tail = random_point(rng, k, i);
    out.meager_dual.push_back(localized_degree(PolarSpec(Flavor::dual, i, polys, example2_matrix(n, p, i, gamma, tail, k))));
  }
  auto constant = [](const std::vector<std::uint64_t>& v) {
    return std::all_of(v.begin(), v.end(), [&](std::uint64_t d) { return d == v.front(); });
  };
  out.random_agree = constant(out.random_classic) && constant(out.random_dual);
  const std::uint64_t classic_ref = *std::min_element(out.random_classic.begin(), out.random_classic.end());
  const std::uint64_t dual_ref = *std::min_element(out.random_dual.begin(), out.random_dual.end());
  out.dominated =
      std::all_of(out.meager_classic.begin(), out.meager_classic.end(), [&](std::uint64_t d) { return d <= classic_ref; }) &&
      std::all_of(out.meager_dual.begin(), out.meager_dual.end(), [&](std::uint64_t d) { return d <= dual_ref; });
  const std::uint64_t bound = bezout_polar_bound(system);
  out.bound_ok = true;
  for (const auto* v : {&out.random_classic, &out.random_dual, &out.meager_classic, &out.meager_dual,
                        &out.unlocalized_random_classic, &out.unlocalized_meager_classic})
    for (std::uint64_t d : *v)
      if (d > bound) out.bound_ok = false;
  return out;
}

}  // namespace polar
