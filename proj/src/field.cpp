#include "polar/field.hpp"

#include "polar/errors.hpp"

namespace polar {
namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

// Miller-Rabin with the first twelve prime bases, deterministic below 2^64.
bool is_prime_u64(std::uint64_t n) noexcept {
  if (n < 2) return false;
  static constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t q) : q_(q) {
  if (q <= 2 || q >= kModulusBound || !is_prime_u64(q)) {
    throw PreconditionError("modulus " + std::to_string(q) +
                            " is not an odd prime below 2^62");
  }
}

Fq PrimeField::pow(Fq a, std::uint64_t e) const noexcept {
  return Fq{powmod(a.v, e, q_)};
}

Fq PrimeField::inv(Fq a) const {
  if (a.v == 0) throw DivisionByZero();
  return pow(a, q_ - 2);
}

}  // namespace polar
