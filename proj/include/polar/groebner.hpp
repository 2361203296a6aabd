#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "polar/polynomial.hpp"

namespace polar {

// Generator list of an ideal: nonzero, monic, deduplicated.
class IdealPresentation {
public:
  IdealPresentation(PrimeField field, int nvars, std::vector<Polynomial> generators = {});

  const PrimeField& field() const noexcept { return field_; }
  int nvars() const noexcept { return nvars_; }
  std::span<const Polynomial> generators() const noexcept { return gens_; }

  // Appends after normalizing; zero and duplicate generators are dropped.
  void add(const Polynomial& f);

private:
  PrimeField field_;
  int nvars_;
  std::vector<Polynomial> gens_;
};

// Limits on a single Buchberger run. Exceeding any of them throws
// BudgetExceeded; a partial basis is never returned.
struct GroebnerBudget {
  std::size_t max_pairs = 1'000'000;       // S-pairs actually reduced
  std::uint32_t max_degree = 60;           // degree of any pair lcm or basis element
  std::size_t max_basis = 20'000;          // live basis elements
};

// Reduced Groebner basis in degrevlex, x1 > ... > xn. Elements are monic and
// sorted by increasing leading monomial. The empty basis is the zero ideal.
class GroebnerBasis {
public:
  GroebnerBasis(PrimeField field, int nvars, std::vector<Polynomial> basis);

  const PrimeField& field() const noexcept { return field_; }
  int nvars() const noexcept { return nvars_; }
  std::span<const Polynomial> basis() const noexcept { return basis_; }
  std::span<const Monomial> leading_monomials() const noexcept { return leading_; }
  std::size_t size() const noexcept { return basis_.size(); }

  // The basis is {1}: the variety is empty.
  bool is_unit() const noexcept { return basis_.size() == 1 && basis_.front().is_constant(); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) noexcept {
    return a.nvars_ == b.nvars_ && a.basis_ == b.basis_;
  }

private:
  PrimeField field_;
  int nvars_;
  std::vector<Polynomial> basis_;
  std::vector<Monomial> leading_;
};

struct GroebnerStats {
  std::size_t pairs_reduced = 0;
  std::size_t pairs_discarded = 0;
  std::size_t zero_reductions = 0;
};

// Buchberger with Gebauer-Moeller pair elimination and sugar selection.
GroebnerBasis reduced_groebner_basis(const IdealPresentation& ideal,
                                     const GroebnerBudget& budget = {},
                                     GroebnerStats* stats = nullptr);

// Full remainder of f modulo the basis; zero iff f is in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g);

// lcm/lt(f) * f - lcm/lt(g) * g with monic leading coefficients.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// Dimension/degree analytics of the staircase of a Groebner basis.
struct StaircaseSummary {
  int dimension = -1;
  std::uint64_t degree = 0;
  bool is_zero_dimensional = false;
};

// Largest |U| such that no leading monomial is supported inside U; -1 for {1}.
int dimension(const GroebnerBasis& g);
int dimension_of_monomial_ideal(std::span<const Monomial> generators, int nvars);

// Numerator N(t) of the Hilbert series N(t)/(1-t)^n of k[x]/(generators);
// coefficient k is the coefficient of t^k.
std::vector<std::int64_t> hilbert_numerator(std::span<const Monomial> generators, int nvars);

// Degree of the top-dimensional part: N(t) = Q(t)(1-t)^(n-d), degree = Q(1).
// Zero for the empty variety.
std::uint64_t degree(const GroebnerBasis& g);

// Number of standard monomials, or nullopt when the ideal is not zero-dimensional.
std::optional<std::uint64_t> standard_monomial_count(const GroebnerBasis& g);

StaircaseSummary summarize(const GroebnerBasis& g);

// Adds T*m - 1 with T a fresh last variable; the result lives in n+1 variables.
IdealPresentation localize_rabinowitsch(const IdealPresentation& ideal, const Polynomial& m);

}  // namespace polar
