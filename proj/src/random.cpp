#include "polar/random.hpp"

#include <functional>

namespace polar {

Fq random_element(SplitMix64& rng, const PrimeField& k) { return Fq{rng.below(k.modulus())}; }

Fq random_nonzero(SplitMix64& rng, const PrimeField& k) {
  return Fq{1 + rng.below(k.modulus() - 1)};
}

Point random_point(SplitMix64& rng, const PrimeField& k, int n) {
  Point x(static_cast<std::size_t>(n));
  for (Fq& c : x) c = random_element(rng, k);
  return x;
}

ConstMatrix random_matrix(SplitMix64& rng, const PrimeField& k, int rows, int cols) {
  ConstMatrix m(k, rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = random_element(rng, k);
  return m;
}

Polynomial random_dense_polynomial(SplitMix64& rng, const PrimeField& k, int nvars, unsigned d) {
  std::vector<Term> terms;
  std::array<unsigned, kMaxVars> exps{};
  // Monomials in a fixed enumeration order so draws are reproducible.
  std::function<void(int, unsigned)> walk = [&](int j, unsigned left) {
    if (j == nvars) {
      terms.push_back({Monomial(std::span<const unsigned>(exps.data(), static_cast<std::size_t>(nvars))),
                       random_element(rng, k)});
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      exps[j] = e;
      walk(j + 1, left - e);
    }
    exps[j] = 0;
  };
  walk(0, d);
  return Polynomial::from_terms(k, nvars, std::move(terms));
}

Polynomial random_sparse_polynomial(SplitMix64& rng, const PrimeField& k, int nvars, unsigned d,
                                    int terms) {
  std::vector<Term> out;
  for (int t = 0; t < terms; ++t) {
    std::array<unsigned, kMaxVars> exps{};
    unsigned deg = static_cast<unsigned>(rng.below(d + 1));
    for (unsigned u = 0; u < deg && nvars > 0; ++u) ++exps[rng.below(static_cast<std::uint64_t>(nvars))];
    out.push_back({Monomial(std::span<const unsigned>(exps.data(), static_cast<std::size_t>(nvars))),
                   random_nonzero(rng, k)});
  }
  return Polynomial::from_terms(k, nvars, std::move(out));
}

}  // namespace polar
