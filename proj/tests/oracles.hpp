#pragma once

// Independent reference implementations used as test oracles. They share no
// code paths with the library beyond the basic Polynomial container.

#include <cstdint>
#include <map>
#include <vector>

#include "polar/groebner.hpp"
#include "polar/polymat.hpp"

namespace oracle {

using polar::Fq;
using polar::Polynomial;
using polar::PrimeField;

// Inverse by the extended Euclidean algorithm over signed 128-bit integers.
inline std::uint64_t ext_euclid_inverse(std::uint64_t a, std::uint64_t q) {
  __int128 r0 = q, r1 = a % q, s0 = 0, s1 = 1;
  while (r1 != 0) {
    __int128 t = r0 / r1;
    __int128 r2 = r0 - t * r1;
    r0 = r1;
    r1 = r2;
    __int128 s2 = s0 - t * s1;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) return 0;
  __int128 v = s0 % static_cast<__int128>(q);
  if (v < 0) v += q;
  return static_cast<std::uint64_t>(v);
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % q);
}

using Exponents = std::vector<unsigned>;
using TermMap = std::map<Exponents, std::uint64_t>;

inline TermMap to_map(const Polynomial& f) {
  TermMap m;
  for (const polar::Term& t : f.terms()) {
    Exponents e(f.nvars());
    for (int j = 0; j < f.nvars(); ++j) e[j] = t.mono[j];
    m[e] = t.coeff.v;
  }
  return m;
}

// Schoolbook expansion over exponent maps.
inline TermMap expand_product(const Polynomial& f, const Polynomial& g) {
  const std::uint64_t q = f.field().modulus();
  TermMap out;
  for (const auto& [ea, ca] : to_map(f)) {
    for (const auto& [eb, cb] : to_map(g)) {
      Exponents e(ea.size());
      for (std::size_t j = 0; j < e.size(); ++j) e[j] = ea[j] + eb[j];
      out[e] = (out[e] + mulmod(ca, cb, q)) % q;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// Sum over terms of coefficient times repeated multiplication of coordinates.
inline std::uint64_t naive_evaluate(const Polynomial& f, const std::vector<Fq>& x) {
  const std::uint64_t q = f.field().modulus();
  std::uint64_t acc = 0;
  for (const polar::Term& t : f.terms()) {
    std::uint64_t v = t.coeff.v;
    for (int j = 0; j < f.nvars(); ++j)
      for (unsigned e = 0; e < t.mono[j]; ++e) v = mulmod(v, x[j].v, q);
    acc = (acc + v) % q;
  }
  return acc;
}

// Cofactor expansion along the first row.
inline Polynomial cofactor_determinant(const polar::PolyMatrix& m) {
  const int n = m.rows();
  if (n == 1) return m.at(0, 0);
  Polynomial acc(m.field(), m.nvars());
  for (int c = 0; c < n; ++c) {
    std::vector<int> rows, cols;
    for (int r = 1; r < n; ++r) rows.push_back(r);
    for (int t = 0; t < n; ++t)
      if (t != c) cols.push_back(t);
    Polynomial term = m.at(0, c) * cofactor_determinant(m.submatrix(rows, cols));
    acc = c % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

inline bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] > b[j]) return false;
  return true;
}

// Largest |U| such that no generator is supported inside U, over all 2^n subsets.
inline int independent_set_dimension(const std::vector<Exponents>& gens, int n) {
  for (const Exponents& g : gens) {
    bool constant = true;
    for (unsigned e : g) constant = constant && e == 0;
    if (constant) return -1;
  }
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool independent = true;
    for (const Exponents& g : gens) {
      bool inside = true;
      for (int j = 0; j < n; ++j)
        if (g[j] > 0 && !(mask >> j & 1)) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

// Monomials outside the monomial ideal, counted inside the box [0, bound)^n.
inline std::uint64_t standard_monomials_in_box(const std::vector<Exponents>& gens, int n, unsigned bound) {
  std::uint64_t count = 0;
  Exponents e(n, 0);
  for (;;) {
    bool standard = true;
    for (const Exponents& g : gens)
      if (divides(g, e)) {
        standard = false;
        break;
      }
    if (standard) ++count;
    int j = n - 1;
    while (j >= 0 && e[j] + 1 == bound) e[j--] = 0;
    if (j < 0) break;
    ++e[j];
  }
  return count;
}

// Multivariate division by repeatedly cancelling the largest reducible term.
inline Polynomial naive_remainder(Polynomial f, const std::vector<Polynomial>& divisors) {
  const PrimeField& k = f.field();
  Polynomial rem(k, f.nvars());
  while (!f.is_zero()) {
    const polar::Term lead = f.leading_term();
    bool reduced = false;
    for (const Polynomial& g : divisors) {
      if (g.leading_monomial().divides(lead.mono)) {
        polar::Monomial shift = lead.mono.divided_by(g.leading_monomial());
        Fq c = k.div(lead.coeff, g.leading_coeff());
        f = f - g.times_term(shift, c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem = rem + Polynomial::monomial(k, f.nvars(), lead.mono, lead.coeff);
      f = f - Polynomial::monomial(k, f.nvars(), lead.mono, lead.coeff);
    }
  }
  return rem;
}

// All points of F_q^n, in odometer order.
inline std::vector<std::vector<Fq>> all_points(const PrimeField& k, int n) {
  std::vector<std::vector<Fq>> out;
  std::vector<Fq> x(n, k.zero());
  for (;;) {
    out.push_back(x);
    int j = n - 1;
    while (j >= 0 && x[j].v + 1 == k.modulus()) x[j--] = k.zero();
    if (j < 0) break;
    x[j].v += 1;
  }
  return out;
}

// Largest r such that some r x r minor of the constant matrix is nonzero.
inline int rank_by_minors(const polar::ConstMatrix& m) {
  const int top = std::min(m.rows(), m.cols());
  for (int r = top; r >= 1; --r) {
    std::vector<int> rows(r), cols(r);
    std::vector<std::vector<int>> row_sets, col_sets;
    auto subsets = [](int n, int k) {
      std::vector<std::vector<int>> out;
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        std::vector<int> s;
        for (int j = 0; j < n; ++j)
          if (mask >> j & 1) s.push_back(j);
        out.push_back(s);
      }
      return out;
    };
    for (const auto& rs : subsets(m.rows(), r))
      for (const auto& cs : subsets(m.cols(), r))
        if (polar::determinant(m.submatrix(rs, cs)).v != 0) return r;
  }
  return 0;
}

}  // namespace oracle
