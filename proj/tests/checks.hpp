#pragma once

// Property checks and random instance generators shared by the unit tests and
// the acceptance binary.

#include <algorithm>
#include <string>

#include "oracles.hpp"
#include "polar/random.hpp"

namespace checks {

using namespace polar;

// Empty string when g is a reduced Groebner basis: monic elements, no term of
// one element divisible by another's leading monomial, every S-polynomial
// reducing to zero under naive division.
inline std::string reduced_gb_violation(const GroebnerBasis& g) {
  std::vector<Polynomial> basis(g.basis().begin(), g.basis().end());
  for (std::size_t a = 0; a < basis.size(); ++a) {
    if (basis[a].leading_coeff() != g.field().one()) return "element not monic";
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (a == b) continue;
      for (const Term& t : basis[a].terms())
        if (basis[b].leading_monomial().divides(t.mono)) return "element not fully reduced";
    }
  }
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b)
      if (!oracle::naive_remainder(s_polynomial(basis[a], basis[b]), basis).is_zero())
        return "S-polynomial does not reduce to zero";
  return {};
}

inline std::vector<Polynomial> random_small_ideal(SplitMix64& rng, const PrimeField& k, int& nvars) {
  nvars = 2 + static_cast<int>(rng.below(3));
  const int count = 2 + static_cast<int>(rng.below(2));
  std::vector<Polynomial> gens;
  for (int t = 0; t < count; ++t)
    gens.push_back(random_sparse_polynomial(rng, k, nvars, 2 + static_cast<unsigned>(rng.below(2)),
                                            2 + static_cast<int>(rng.below(3))));
  return gens;
}

inline std::vector<Monomial> random_monomial_ideal(SplitMix64& rng, int nvars) {
  std::vector<Monomial> gens;
  const int count = 1 + static_cast<int>(rng.below(6));
  for (int t = 0; t < count; ++t) {
    std::vector<unsigned> e(nvars, 0);
    const int support = 1 + static_cast<int>(rng.below(3));
    for (int s = 0; s < support; ++s) e[rng.below(nvars)] = 1 + static_cast<unsigned>(rng.below(3));
    gens.emplace_back(e);
  }
  return gens;
}

inline std::vector<oracle::Exponents> exponents_of(std::span<const Monomial> gens, int nvars) {
  std::vector<oracle::Exponents> out;
  for (const Monomial& m : gens) {
    oracle::Exponents e(nvars);
    for (int j = 0; j < nvars; ++j) e[j] = m[j];
    out.push_back(e);
  }
  return out;
}

// x_j^{d_j} plus lower-degree noise for every j, and one extra random
// polynomial: always zero-dimensional.
inline std::vector<Polynomial> random_zero_dimensional(SplitMix64& rng, const PrimeField& k, int nvars) {
  std::vector<Polynomial> gens;
  for (int j = 1; j <= nvars; ++j) {
    const unsigned d = 2 + static_cast<unsigned>(rng.below(2));
    Polynomial lead = Polynomial::monomial(k, nvars, Monomial::power_of(j - 1, d), k.one());
    gens.push_back(lead + random_sparse_polynomial(rng, k, nvars, d - 1, 3));
  }
  gens.push_back(random_sparse_polynomial(rng, k, nvars, 2, 3));
  return gens;
}

// Largest pure-power exponent among the leading monomials; every standard
// monomial of a zero-dimensional ideal lies in [0, bound)^n.
inline unsigned staircase_box(const GroebnerBasis& g) {
  unsigned bound = 1;
  for (const Monomial& m : g.leading_monomials()) bound = std::max<unsigned>(bound, m.degree());
  return bound;
}

inline std::uint64_t oracle_standard_count(const GroebnerBasis& g) {
  return oracle::standard_monomials_in_box(exponents_of(g.leading_monomials(), g.nvars()), g.nvars(),
                                           staircase_box(g));
}

inline PolyMatrix random_poly_matrix(SplitMix64& rng, const PrimeField& k, int size, int nvars) {
  PolyMatrix m(k, nvars, size, size);
  for (int r = 0; r < size; ++r)
    for (int c = 0; c < size; ++c) m.set(r, c, random_sparse_polynomial(rng, k, nvars, 2, 3));
  return m;
}

}  // namespace checks
