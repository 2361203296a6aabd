#pragma once

#include <span>
#include <string>
#include <vector>

#include "polar/field.hpp"
#include "polar/monomial.hpp"

namespace polar {

struct Term {
  Monomial mono;
  Fq coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

// Coordinates of a point of affine n-space over the prime field.
using Point = std::vector<Fq>;

// Sparse polynomial in n variables over a prime field. Terms are kept strictly
// decreasing in degrevlex with no zero coefficients, so equal polynomials have
// identical term sequences. Values are immutable once built.
//
// Variable indices in the public interface are 1-based (x1 .. xn).
class Polynomial {
public:
  Polynomial(PrimeField field, int nvars);

  static Polynomial constant(PrimeField field, int nvars, Fq c);
  static Polynomial constant(PrimeField field, int nvars, std::int64_t c) {
    return constant(field, nvars, field.from_int(c));
  }
  static Polynomial variable(PrimeField field, int nvars, int index);
  static Polynomial monomial(PrimeField field, int nvars, const Monomial& m, Fq c);
  // Sorts, merges duplicates and drops zeros.
  static Polynomial from_terms(PrimeField field, int nvars, std::vector<Term> terms);
  // Takes terms that are already strictly decreasing with nonzero coefficients.
  // Checked only in debug builds.
  static Polynomial adopt_canonical(PrimeField field, int nvars, std::vector<Term> terms);

  const PrimeField& field() const noexcept { return field_; }
  int nvars() const noexcept { return nvars_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || terms_.front().mono.is_one(); }
  // -1 for the zero polynomial.
  int degree() const noexcept {
    return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree());
  }

  // Precondition: nonzero.
  const Term& leading_term() const noexcept { return terms_.front(); }
  const Monomial& leading_monomial() const noexcept { return terms_.front().mono; }
  Fq leading_coeff() const noexcept { return terms_.front().coeff; }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);

  Polynomial scaled(Fq c) const;
  Polynomial times_term(const Monomial& m, Fq c) const;
  // Divide by the leading coefficient. Zero stays zero.
  Polynomial monic() const;
  // Same polynomial viewed in a larger ambient space (new variables appended).
  Polynomial embedded(int nvars) const;

  friend bool operator==(const Polynomial& f, const Polynomial& g) noexcept {
    return f.field_ == g.field_ && f.nvars_ == g.nvars_ && f.terms_ == g.terms_;
  }

  // Printed in the input grammar, terms in decreasing degrevlex.
  std::string to_string() const;

private:
  struct Canonical {};
  Polynomial(PrimeField field, int nvars, std::vector<Term> terms, Canonical)
      : field_(field), nvars_(nvars), terms_(std::move(terms)) {}

  void require_compatible(const Polynomial& other) const;

  PrimeField field_;
  int nvars_;
  std::vector<Term> terms_;
};

// Formal partial derivative with respect to x_index (1-based).
Polynomial differentiate(const Polynomial& f, int index);

// Value of f at x; x.size() must equal f.nvars().
Fq evaluate(const Polynomial& f, std::span<const Fq> x);

}  // namespace polar
