#pragma once

#include <cstdint>
#include <string>

namespace polar {

// Residue modulo the modulus of the owning PrimeField, always in [0, q).
struct Fq {
  std::uint64_t v = 0;

  friend bool operator==(Fq, Fq) = default;
};

bool is_prime_u64(std::uint64_t n) noexcept;

// Arithmetic in Z/qZ for an odd prime 2 < q < 2^62. Products go through
// 128-bit intermediates. The object is a plain value: copying it is free and
// two fields compare equal iff their moduli agree.
class PrimeField {
public:
  static constexpr std::uint64_t kDefaultModulus = 10000000019ULL;
  static constexpr std::uint64_t kModulusBound = std::uint64_t{1} << 62;

  // Throws PreconditionError unless q is an odd prime below 2^62.
  explicit PrimeField(std::uint64_t q = kDefaultModulus);

  std::uint64_t modulus() const noexcept { return q_; }

  Fq zero() const noexcept { return Fq{0}; }
  Fq one() const noexcept { return Fq{1}; }

  Fq from_uint(std::uint64_t x) const noexcept { return Fq{x % q_}; }
  Fq from_int(std::int64_t x) const noexcept {
    if (x >= 0) return from_uint(static_cast<std::uint64_t>(x));
    // avoid overflow on INT64_MIN
    std::uint64_t m = static_cast<std::uint64_t>(-(x + 1)) + 1;
    return neg(from_uint(m));
  }

  Fq add(Fq a, Fq b) const noexcept {
    std::uint64_t s = a.v + b.v;
    return Fq{s >= q_ ? s - q_ : s};
  }
  Fq sub(Fq a, Fq b) const noexcept {
    return Fq{a.v >= b.v ? a.v - b.v : a.v + q_ - b.v};
  }
  Fq neg(Fq a) const noexcept { return Fq{a.v == 0 ? 0 : q_ - a.v}; }
  Fq mul(Fq a, Fq b) const noexcept {
    return Fq{static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a.v) * b.v) % q_)};
  }
  // a*b + c
  Fq mul_add(Fq a, Fq b, Fq c) const noexcept {
    return Fq{static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a.v) * b.v + c.v) % q_)};
  }

  Fq pow(Fq a, std::uint64_t e) const noexcept;

  // Throws DivisionByZero for a = 0.
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }

  // Symmetric representative in (-q/2, q/2], used for printing.
  std::int64_t to_signed(Fq a) const noexcept {
    return a.v > q_ / 2 ? -static_cast<std::int64_t>(q_ - a.v)
                        : static_cast<std::int64_t>(a.v);
  }

  bool characteristic_two() const noexcept { return q_ == 2; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
  std::uint64_t q_;
};

}  // namespace polar
