#pragma once

#include <cstdint>
#include <vector>

#include "polar/polymat.hpp"
#include "polar/polynomial.hpp"

namespace polar {

// SplitMix64 (Steele, Lea, Flood). Streams are derived with `split`, so every
// experiment cell owns a generator that depends only on the master seed and
// the cell key.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

  // Child generator keyed by `key`; does not advance this one.
  SplitMix64 split(std::uint64_t key) const noexcept {
    SplitMix64 child(state_ ^ (key * 0xD1B54A32D192ED03ULL + 0x632BE59BD9B4E019ULL));
    child.next();
    return SplitMix64(child.next());
  }

private:
  std::uint64_t state_;
};

Fq random_element(SplitMix64& rng, const PrimeField& k);
Fq random_nonzero(SplitMix64& rng, const PrimeField& k);
Point random_point(SplitMix64& rng, const PrimeField& k, int n);
ConstMatrix random_matrix(SplitMix64& rng, const PrimeField& k, int rows, int cols);

// Dense polynomial of total degree <= d with every coefficient uniform in F_q.
Polynomial random_dense_polynomial(SplitMix64& rng, const PrimeField& k, int nvars, unsigned d);

// Random polynomial with about `terms` terms of degree <= d (tests and fuzzing).
Polynomial random_sparse_polynomial(SplitMix64& rng, const PrimeField& k, int nvars, unsigned d,
                                    int terms);

}  // namespace polar
