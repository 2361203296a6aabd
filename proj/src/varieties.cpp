#include "polar/varieties.hpp"

#include <algorithm>
#include <limits>

#include "polar/errors.hpp"

namespace polar {

std::string to_string(Flavor f) { return f == Flavor::classic ? "classic" : "dual"; }

Flavor flavor_from_string(const std::string& s) {
  if (s == "classic") return Flavor::classic;
  if (s == "dual") return Flavor::dual;
  throw PreconditionError("unknown flavor '" + s + "' (expected classic or dual)");
}

PolarSpec::PolarSpec(Flavor flavor, int i, std::vector<Polynomial> system, const ConstMatrix& a)
    : flavor_(flavor), i_(i), n_(0), system_(std::move(system)), rows_(a.field(), 0, 0) {
  if (system_.empty()) throw PreconditionError("polar construction needs a nonempty system");
  n_ = system_.front().nvars();
  for (const Polynomial& f : system_) {
    if (f.nvars() != n_ || !(f.field() == system_.front().field())) {
      throw StructuralError("system polynomials live in different rings");
    }
  }
  if (!(a.field() == system_.front().field())) throw StructuralError("matrix and system use different moduli");
  const int p = static_cast<int>(system_.size());
  if (p < 1 || p > n_ - 1) {
    throw PreconditionError("need 1 <= p <= n-1, got p=" + std::to_string(p) + ", n=" + std::to_string(n_));
  }
  if (i < 1 || i > n_ - p) {
    throw PreconditionError("need 1 <= i <= n-p, got i=" + std::to_string(i));
  }
  const int want = n_ - p - i + 1;
  ConstMatrix m = a;
  if (m.rows() == n_ - p && want != n_ - p) m = m.top_rows(want);
  if (m.rows() != want) {
    throw PreconditionError("matrix must have n-p-i+1 = " + std::to_string(want) + " rows (or n-p to slice), got " +
                            std::to_string(a.rows()));
  }
  const PrimeField& k = m.field();
  rows_ = ConstMatrix(k, want, n_ + 1);
  if (m.cols() == n_) {
    for (int r = 0; r < want; ++r) {
      rows_.at(r, 0) = flavor == Flavor::dual ? k.one() : k.zero();
      for (int c = 0; c < n_; ++c) rows_.at(r, c + 1) = m.at(r, c);
    }
  } else if (m.cols() == n_ + 1) {
    for (int r = 0; r < want; ++r) {
      if (flavor == Flavor::classic && m.at(r, 0).v != 0) {
        throw PreconditionError("classic flavor requires column 0 of the matrix to be zero");
      }
      for (int c = 0; c <= n_; ++c) rows_.at(r, c) = m.at(r, c);
    }
  } else {
    throw PreconditionError("matrix must have n or n+1 columns, got " + std::to_string(m.cols()));
  }
  // Dual rows a_{k,0} X - a_k stay independent as long as the augmented matrix does.
  const ConstMatrix& checked = flavor == Flavor::classic ? linear_part() : rows_;
  if (rank(checked) != want) {
    throw PreconditionError(flavor == Flavor::classic ? "linear part of the matrix is rank deficient"
                                                      : "augmented matrix is rank deficient");
  }
}

namespace {

Polynomial linear_entry(const ConstMatrix& rows, int r, int l, int n) {
  const PrimeField& k = rows.field();
  Polynomial e = Polynomial::constant(k, n, rows.at(r, l + 1));
  if (rows.at(r, 0).v != 0) e = e - Polynomial::variable(k, n, l + 1).scaled(rows.at(r, 0));
  return e;
}

}  // namespace

PolyMatrix PolarSpec::stacked_matrix() const {
  PolyMatrix j = jacobian(system_);
  PolyMatrix lower(field(), n_, rows_.rows(), n_);
  for (int r = 0; r < rows_.rows(); ++r)
    for (int l = 0; l < n_; ++l) lower.set(r, l, linear_entry(rows_, r, l, n_));
  return stack(j, lower);
}

PolyMatrix PolarSpec::stacked_matrix_without_row(int h) const {
  if (h < 0 || h >= rows_.rows()) throw StructuralError("row index out of range");
  PolyMatrix full = stacked_matrix();
  std::vector<int> keep, cols;
  for (int r = 0; r < full.rows(); ++r)
    if (r != p() + h) keep.push_back(r);
  for (int c = 0; c < n_; ++c) cols.push_back(c);
  return full.submatrix(keep, cols);
}

PolarIdealResult analyze_ideal(IdealPresentation ideal, int ambient_dim_S, const GroebnerBudget& budget) {
  GroebnerBasis gb = reduced_groebner_basis(ideal, budget);
  StaircaseSummary s = summarize(gb);
  int codim = s.dimension >= 0 ? ambient_dim_S - s.dimension : 0;
  return PolarIdealResult{std::move(ideal), std::move(gb), s.dimension, codim, s.degree};
}

namespace {

IdealPresentation system_ideal(const PolarSpec& spec) {
  return IdealPresentation(spec.field(), spec.n(),
                           std::vector<Polynomial>(spec.system().begin(), spec.system().end()));
}

void add_minors(IdealPresentation& ideal, const PolyMatrix& m, int r) {
  for_each_minor(m, r, [&](const MinorIndex&, const Polynomial& minor) {
    ideal.add(minor);
    return true;
  });
}

}  // namespace

IdealPresentation polar_ideal_generators(const PolarSpec& spec) {
  IdealPresentation ideal = system_ideal(spec);
  add_minors(ideal, spec.stacked_matrix(), spec.n() - spec.i() + 1);
  return ideal;
}

PolarIdealResult classic_polar_ideal(const PolarSpec& spec, const GroebnerBudget& budget) {
  if (spec.flavor() != Flavor::classic) throw PreconditionError("classic_polar_ideal needs a classic spec");
  return analyze_ideal(polar_ideal_generators(spec), spec.n() - spec.p(), budget);
}

PolarIdealResult dual_polar_ideal(const PolarSpec& spec, const GroebnerBudget& budget) {
  if (spec.flavor() != Flavor::dual) throw PreconditionError("dual_polar_ideal needs a dual spec");
  return analyze_ideal(polar_ideal_generators(spec), spec.n() - spec.p(), budget);
}

PolarIdealResult polar_ideal(const PolarSpec& spec, const GroebnerBudget& budget) {
  return spec.flavor() == Flavor::classic ? classic_polar_ideal(spec, budget) : dual_polar_ideal(spec, budget);
}

IdealPresentation delta_ideal_generators(const PolarSpec& spec) {
  IdealPresentation ideal = system_ideal(spec);
  add_minors(ideal, spec.stacked_matrix(), spec.n() - spec.i());
  return ideal;
}

PolarIdealResult delta_ideal(const PolarSpec& spec, const GroebnerBudget& budget) {
  return analyze_ideal(delta_ideal_generators(spec), spec.n() - spec.p(), budget);
}

IdealPresentation delta_ideal_deleted_rows(const PolarSpec& spec) {
  IdealPresentation ideal = system_ideal(spec);
  for (int h = 0; h < spec.augmented().rows(); ++h) {
    add_minors(ideal, spec.stacked_matrix_without_row(h), spec.n() - spec.i());
  }
  return ideal;
}

IdealPresentation singular_locus_generators(const IdealPresentation& ideal, int c, std::size_t max_minors) {
  IdealPresentation out = ideal;
  if (c < 1 || ideal.generators().empty()) return out;
  PolyMatrix j = jacobian(ideal.generators());
  if (c > std::min(j.rows(), j.cols())) return out;
  std::size_t count = minor_count(j.rows(), j.cols(), c);
  if (count > max_minors) {
    throw BudgetExceeded("Jacobian criterion needs " + std::to_string(count) + " minors (cap " +
                         std::to_string(max_minors) + "); use the delta-proxy mode");
  }
  add_minors(out, j, c);
  return out;
}

namespace {

// Reduced basis of ideal(base) + all c-minors of j. Partial expansions are
// reduced modulo the basis accumulated so far, and the walk stops as soon as
// the unit ideal is reached.
GroebnerBasis add_minors_incrementally(GroebnerBasis base, const PolyMatrix& j, int c, std::size_t cap,
                                       const GroebnerBudget& budget) {
  constexpr std::size_t kBatch = 24;
  if (base.is_unit() || c < 1 || c > std::min(j.rows(), j.cols())) return base;
  const PrimeField& k = base.field();
  const int n = base.nvars();
  std::vector<Polynomial> pending;
  std::size_t visited = 0;
  auto flush = [&] {
    if (pending.empty()) return;
    std::vector<Polynomial> gens(base.basis().begin(), base.basis().end());
    gens.insert(gens.end(), pending.begin(), pending.end());
    pending.clear();
    base = reduced_groebner_basis(IdealPresentation(k, n, std::move(gens)), budget);
  };
  for_each_minor(
      j, c,
      [&](const MinorIndex&, const Polynomial& minor) {
        if (++visited > cap) {
          throw BudgetExceeded("Jacobian criterion did not settle within " + std::to_string(cap) +
                               " minors; use the delta-proxy mode");
        }
        Polynomial r = normal_form(minor, base);
        if (!r.is_zero()) pending.push_back(std::move(r));
        if (pending.size() >= kBatch) flush();
        return !base.is_unit();
      },
      [&](const Polynomial& f) { return normal_form(f, base); });
  flush();
  return base;
}

}  // namespace

PolarIdealResult singular_locus_ideal(const PolarIdealResult& R, int c, const SingularLocusOptions& options) {
  if (R.dim < 0) throw PreconditionError("singular locus of an empty variety");
  const int n = R.ideal.nvars();
  if (c != n - R.dim) throw PreconditionError("expected codimension must equal nvars - dim");
  const int dim_S = R.dim + R.codim_in_S;
  const PrimeField& k = R.ideal.field();
  GroebnerBasis gb = R.gb;
  if (c < 1) {
    // The whole ambient space is smooth.
    gb = GroebnerBasis(k, n, {Polynomial::constant(k, n, k.one())});
  } else {
    PolyMatrix j = jacobian(R.ideal.generators());
    if (c <= std::min(j.rows(), j.cols())) {
      gb = add_minors_incrementally(std::move(gb), j, c, options.max_minors, options.budget);
    }
  }
  IdealPresentation presentation(k, n, std::vector<Polynomial>(gb.basis().begin(), gb.basis().end()));
  StaircaseSummary s = summarize(gb);
  int codim = s.dimension >= 0 ? dim_S - s.dimension : 0;
  return PolarIdealResult{std::move(presentation), std::move(gb), s.dimension, codim, s.degree};
}

int localized_singular_dim(const IdealPresentation& ideal, const Polynomial& m, int localized_dim,
                           const SingularLocusOptions& options) {
  if (localized_dim < 0) return -1;
  const int n = ideal.nvars();
  const int c = n - localized_dim;
  if (c < 1) return -1;
  GroebnerBasis loc = reduced_groebner_basis(localize_rabinowitsch(ideal, m), options.budget);
  PolyMatrix j = jacobian(ideal.generators());
  if (c <= std::min(j.rows(), j.cols())) {
    loc = add_minors_incrementally(std::move(loc), j.embedded(n + 1), c, options.max_minors, options.budget);
  }
  return dimension(loc);
}

SmoothnessReport verify_smooth_complete_intersection(std::span<const Polynomial> system,
                                                     const GroebnerBudget& budget) {
  SmoothnessReport report;
  if (system.empty()) return report;
  const int n = system.front().nvars();
  const PrimeField& k = system.front().field();
  report.regular_sequence_ok = true;
  GroebnerBasis full(k, n, {});
  for (std::size_t len = 1; len <= system.size(); ++len) {
    IdealPresentation prefix(k, n, std::vector<Polynomial>(system.begin(), system.begin() + static_cast<std::ptrdiff_t>(len)));
    full = reduced_groebner_basis(prefix, budget);
    int d = dimension(full);
    report.prefix_dims.push_back(d);
    if (d != n - static_cast<int>(len)) report.regular_sequence_ok = false;
  }
  const int p = static_cast<int>(system.size());
  if (p <= n) full = add_minors_incrementally(std::move(full), jacobian(system), p,
                                                  std::numeric_limits<std::size_t>::max(), budget);
  report.singular_dim = dimension(full);
  report.smooth_ok = report.singular_dim == -1;
  return report;
}

ConstMatrix linear_rows_at(const ConstMatrix& augmented, const Point& x) {
  const int n = augmented.cols() - 1;
  if (static_cast<int>(x.size()) != n) throw StructuralError("point length does not match ambient variable count");
  const PrimeField& k = augmented.field();
  ConstMatrix out(k, augmented.rows(), n);
  for (int r = 0; r < augmented.rows(); ++r)
    for (int l = 0; l < n; ++l)
      out.at(r, l) = k.sub(augmented.at(r, l + 1), k.mul(augmented.at(r, 0), x[l]));
  return out;
}

namespace {

ConstMatrix augmented_for(const ConstMatrix& a, int n, Flavor flavor) {
  const PrimeField& k = a.field();
  if (a.cols() == n + 1) {
    if (flavor == Flavor::classic) {
      for (int r = 0; r < a.rows(); ++r)
        if (a.at(r, 0).v != 0) throw PreconditionError("classic flavor requires column 0 of the matrix to be zero");
    }
    return a;
  }
  if (a.cols() != n) throw PreconditionError("matrix must have n or n+1 columns");
  ConstMatrix out(k, a.rows(), n + 1);
  for (int r = 0; r < a.rows(); ++r) {
    out.at(r, 0) = flavor == Flavor::dual ? k.one() : k.zero();
    for (int c = 0; c < n; ++c) out.at(r, c + 1) = a.at(r, c);
  }
  return out;
}

// Checks x in S and rank J(x) = p; returns J(x).
ConstMatrix regular_jacobian_at(std::span<const Polynomial> system, const Point& x) {
  if (system.empty()) throw PreconditionError("empty system");
  const int n = system.front().nvars();
  if (static_cast<int>(x.size()) != n) throw StructuralError("point length does not match ambient variable count");
  for (const Polynomial& f : system) {
    if (evaluate(f, x).v != 0) throw PreconditionError("point is not on S: some F_k does not vanish");
  }
  ConstMatrix jx = jacobian(system).evaluated(x);
  if (rank(jx) != static_cast<int>(system.size())) {
    throw PreconditionError("point is a singular point of S: rank J(x) < p");
  }
  return jx;
}

}  // namespace

int thom_boardman_class(std::span<const Polynomial> system, const ConstMatrix& a, const Point& x, Flavor flavor) {
  ConstMatrix jx = regular_jacobian_at(system, x);
  const int n = jx.cols();
  ConstMatrix rows = linear_rows_at(augmented_for(a, n, flavor), x);
  ConstMatrix st(jx.field(), jx.rows() + rows.rows(), n);
  for (int r = 0; r < jx.rows(); ++r)
    for (int c = 0; c < n; ++c) st.at(r, c) = jx.at(r, c);
  for (int r = 0; r < rows.rows(); ++r)
    for (int c = 0; c < n; ++c) st.at(jx.rows() + r, c) = rows.at(r, c);
  return n - rank(st);
}

int incidence_fiber_dim(std::span<const Polynomial> system, const ConstMatrix& a, const Point& x, int i,
                        Flavor flavor) {
  ConstMatrix jx = regular_jacobian_at(system, x);
  const int n = jx.cols();
  const int p = jx.rows();
  if (a.rows() != n - p - i + 1) {
    throw PreconditionError("matrix must have n-p-i+1 rows for the incidence fiber");
  }
  ConstMatrix rows = linear_rows_at(augmented_for(a, n, flavor), x);
  // Columns of the linear system: J(x)^T then rows(x)^T; unknowns (lambda, theta).
  const int unknowns = p + rows.rows();
  ConstMatrix system_matrix(jx.field(), n, unknowns);
  for (int l = 0; l < n; ++l) {
    for (int k = 0; k < p; ++k) system_matrix.at(l, k) = jx.at(k, l);
    for (int k = 0; k < rows.rows(); ++k) system_matrix.at(l, p + k) = rows.at(k, l);
  }
  return unknowns - rank(system_matrix) - 1;
}

LocalizedAnalysis analyze_localized(const IdealPresentation& ideal, const Polynomial& m, SplitMix64& rng,
                                    const GroebnerBudget& budget) {
  IdealPresentation loc = localize_rabinowitsch(ideal, m);
  GroebnerBasis gb = reduced_groebner_basis(loc, budget);
  const int d = dimension(gb);
  LocalizedAnalysis out{d, 0, gb};
  if (d < 0) return out;
  const int n = ideal.nvars();
  const PrimeField& k = ideal.field();
  IdealPresentation cut(k, n + 1, std::vector<Polynomial>(gb.basis().begin(), gb.basis().end()));
  for (int h = 0; h < d; ++h) {
    Polynomial hyper = Polynomial::constant(k, n + 1, random_element(rng, k));
    for (int l = 1; l <= n; ++l) hyper = hyper + Polynomial::variable(k, n + 1, l).scaled(random_element(rng, k));
    cut.add(hyper);
  }
  GroebnerBasis sliced = reduced_groebner_basis(cut, budget);
  std::optional<std::uint64_t> count = standard_monomial_count(sliced);
  out.degree = count ? *count : degree(sliced);
  return out;
}

}  // namespace polar
