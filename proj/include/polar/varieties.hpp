#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polar/groebner.hpp"
#include "polar/polymat.hpp"
#include "polar/random.hpp"

namespace polar {

enum class Flavor { classic, dual };

std::string to_string(Flavor f);
Flavor flavor_from_string(const std::string& s);

// One polar-variety construction: the system F (p polynomials in n variables),
// the index i and the matrix of linear rows.
//
// `rows` always carries a column 0 (so it is (n-p-i+1) x (n+1)). Classic specs
// have column 0 zero; dual specs use it as the a_{k,0} coefficients of the rows
// a_{k,l} - a_{k,0} X_l.
class PolarSpec {
public:
  // `a` may be (n-p-i+1) x n, in which case column 0 is filled with zeros
  // (classic) or ones (dual), or (n-p-i+1) x (n+1) with column 0 supplied.
  // A matrix with n-p rows is sliced to its top n-p-i+1 rows.
  // Throws PreconditionError when the parameters are out of range or the
  // columns 1..n (classic) or the whole augmented matrix (dual) are rank
  // deficient.
  PolarSpec(Flavor flavor, int i, std::vector<Polynomial> system, const ConstMatrix& a);

  Flavor flavor() const noexcept { return flavor_; }
  int n() const noexcept { return n_; }
  int p() const noexcept { return static_cast<int>(system_.size()); }
  int i() const noexcept { return i_; }
  std::span<const Polynomial> system() const noexcept { return system_; }
  const PrimeField& field() const noexcept { return system_.front().field(); }

  // (n-p-i+1) x (n+1), column 0 first.
  const ConstMatrix& augmented() const noexcept { return rows_; }
  // Columns 1..n.
  ConstMatrix linear_part() const { return rows_.column_block(1, n_); }

  // [J(F); rows], an (n-i+1) x n polynomial matrix.
  PolyMatrix stacked_matrix() const;
  // The same with row `h` (0-based) of the linear rows removed.
  PolyMatrix stacked_matrix_without_row(int h) const;

private:
  Flavor flavor_;
  int i_;
  int n_;
  std::vector<Polynomial> system_;
  ConstMatrix rows_;
};

struct PolarIdealResult {
  IdealPresentation ideal;
  GroebnerBasis gb;
  int dim = -1;
  int codim_in_S = 0;  // (n - p) - dim for nonempty results
  std::uint64_t degree = 0;
};

// Groebner basis plus staircase analytics of an arbitrary ideal. `ambient_dim_S`
// is n - p, used only for codim_in_S.
PolarIdealResult analyze_ideal(IdealPresentation ideal, int ambient_dim_S,
                               const GroebnerBudget& budget = {});

// F plus all (n-i+1)-minors of the stacked matrix.
IdealPresentation polar_ideal_generators(const PolarSpec& spec);

PolarIdealResult classic_polar_ideal(const PolarSpec& spec, const GroebnerBudget& budget = {});
PolarIdealResult dual_polar_ideal(const PolarSpec& spec, const GroebnerBudget& budget = {});
// Dispatches on the spec's flavor.
PolarIdealResult polar_ideal(const PolarSpec& spec, const GroebnerBudget& budget = {});

// Rank form of Delta_i: F plus all (n-i)-minors of the stacked matrix.
IdealPresentation delta_ideal_generators(const PolarSpec& spec);
PolarIdealResult delta_ideal(const PolarSpec& spec, const GroebnerBudget& budget = {});

// Deleted-row form: F plus, for every linear row h, the maximal minors of the
// stack with row h removed. Agrees with the rank form on regular points of S.
IdealPresentation delta_ideal_deleted_rows(const PolarSpec& spec);

struct SingularLocusOptions {
  // Jacobian-criterion minors processed before giving up with BudgetExceeded.
  std::size_t max_minors = 60'000;
  GroebnerBudget budget{};
};

// Generators of the Jacobian-criterion ideal: the generators of `ideal` plus
// all c-minors of their Jacobian. Throws BudgetExceeded past max_minors.
IdealPresentation singular_locus_generators(const IdealPresentation& ideal, int c,
                                            std::size_t max_minors = 60'000);

// Jacobian criterion on R with expected codimension c = nvars - R.dim: the
// ideal of R plus all c-minors of the Jacobian of R's generators. The returned
// presentation is the reduced basis of that ideal (minors are reduced modulo the
// basis while they are expanded).
PolarIdealResult singular_locus_ideal(const PolarIdealResult& R, int c,
                                      const SingularLocusOptions& options = {});

// Singular-locus dimension of V(ideal) intersected with {m != 0}: Jacobian
// criterion with c = nvars - localized_dim, computed on the Rabinowitsch
// localization. Returns -1 when the localized singular locus is empty.
int localized_singular_dim(const IdealPresentation& ideal, const Polynomial& m, int localized_dim,
                           const SingularLocusOptions& options = {});

struct SmoothnessReport {
  bool regular_sequence_ok = false;
  bool smooth_ok = false;
  std::vector<int> prefix_dims;  // dim V(F_1..F_k), k = 1..p
  int singular_dim = -1;         // dim V(F, p-minors of J(F))
  bool passed() const { return regular_sequence_ok && smooth_ok; }
};

SmoothnessReport verify_smooth_complete_intersection(std::span<const Polynomial> system,
                                                     const GroebnerBudget& budget = {});

// n - rank [J(F)(x); rows(x)] for a regular point x of S.
// Throws PreconditionError when x is not on S or is a singular point of S.
int thom_boardman_class(std::span<const Polynomial> system, const ConstMatrix& a, const Point& x,
                        Flavor flavor = Flavor::classic);

// Projective dimension of {(lambda : theta) : J(x)^T lambda^T + a^T theta^T = 0},
// -1 when only the trivial solution exists. `a` must have n-p-i+1 rows.
int incidence_fiber_dim(std::span<const Polynomial> system, const ConstMatrix& a, const Point& x,
                        int i, Flavor flavor = Flavor::classic);

// Evaluated linear rows at x: a_{k,l} - a_{k,0} x_l (column 0 of `augmented` first).
ConstMatrix linear_rows_at(const ConstMatrix& augmented, const Point& x);

struct LocalizedAnalysis {
  int dim = -1;
  std::uint64_t degree = 0;  // degree of the Zariski closure of V(I) \ {m = 0}
  GroebnerBasis gb;          // of the Rabinowitsch ideal in n+1 variables
};

// Dimension of V(I) \ {m = 0} and the degree of its closure, computed by
// cutting with dim random affine hyperplanes in the original variables and
// counting the standard monomials of the resulting zero-dimensional ideal.
LocalizedAnalysis analyze_localized(const IdealPresentation& ideal, const Polynomial& m,
                                    SplitMix64& rng, const GroebnerBudget& budget = {});

}  // namespace polar
