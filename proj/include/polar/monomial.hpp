#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>

#include "polar/errors.hpp"

namespace polar {

// Upper bound on the ambient variable count, including the extra variable
// introduced by Rabinowitsch localization.
inline constexpr int kMaxVars = 16;

// Power product x1^e1 * ... * xn^en. Slots past the ambient count stay zero,
// so the degrevlex comparison below does not need to know n.
class Monomial {
public:
  static constexpr std::uint32_t kMaxExponent = 0xFFFF;

  Monomial() = default;

  explicit Monomial(std::span<const unsigned> exponents) {
    if (exponents.size() > static_cast<std::size_t>(kMaxVars)) {
      throw StructuralError("monomial has more than 16 variables");
    }
    for (std::size_t j = 0; j < exponents.size(); ++j) {
      if (exponents[j] > kMaxExponent) throw StructuralError("exponent overflow");
      exps_[j] = static_cast<std::uint16_t>(exponents[j]);
      degree_ += exponents[j];
    }
  }

  // x_{slot+1}^power; `slot` is 0-based.
  static Monomial power_of(int slot, unsigned power = 1) {
    if (slot < 0 || slot >= kMaxVars) throw StructuralError("variable slot out of range");
    if (power > kMaxExponent) throw StructuralError("exponent overflow");
    Monomial m;
    m.exps_[slot] = static_cast<std::uint16_t>(power);
    m.degree_ = power;
    return m;
  }

  unsigned operator[](int slot) const noexcept { return exps_[slot]; }
  std::uint32_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  // Index one past the last slot with a nonzero exponent.
  int used_slots() const noexcept {
    for (int j = kMaxVars; j > 0; --j)
      if (exps_[j - 1]) return j;
    return 0;
  }

  std::uint32_t support_mask() const noexcept {
    std::uint32_t mask = 0;
    for (int j = 0; j < kMaxVars; ++j)
      if (exps_[j]) mask |= std::uint32_t{1} << j;
    return mask;
  }

  bool divides(const Monomial& other) const noexcept {
    if (degree_ > other.degree_) return false;
    bool ok = true;
    for (int j = 0; j < kMaxVars; ++j) ok &= exps_[j] <= other.exps_[j];
    return ok;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.degree_ + b.degree_ > kMaxExponent) throw StructuralError("exponent overflow");
    Monomial r;
    for (int j = 0; j < kMaxVars; ++j)
      r.exps_[j] = static_cast<std::uint16_t>(a.exps_[j] + b.exps_[j]);
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }

  // this / divisor; requires divisor.divides(*this).
  Monomial divided_by(const Monomial& divisor) const noexcept {
    Monomial r;
    for (int j = 0; j < kMaxVars; ++j)
      r.exps_[j] = static_cast<std::uint16_t>(exps_[j] - divisor.exps_[j]);
    r.degree_ = degree_ - divisor.degree_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
    Monomial r;
    for (int j = 0; j < kMaxVars; ++j) {
      r.exps_[j] = a.exps_[j] > b.exps_[j] ? a.exps_[j] : b.exps_[j];
      r.degree_ += r.exps_[j];
    }
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) noexcept {
    return (a.support_mask() & b.support_mask()) == 0;
  }

  // Reduce the exponent of `slot` by one; requires it to be positive.
  Monomial lowered(int slot) const noexcept {
    Monomial r = *this;
    --r.exps_[slot];
    --r.degree_;
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

  // Degree reverse lexicographic order with x1 > x2 > ... > xn.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
    if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
    for (int j = kMaxVars - 1; j >= 0; --j) {
      if (a.exps_[j] != b.exps_[j]) return b.exps_[j] <=> a.exps_[j];
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const noexcept {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL;
    for (int j = 0; j < kMaxVars; ++j) h = (h ^ exps_[j]) * 0x100000001B3ULL;
    return static_cast<std::size_t>(h);
  }

private:
  std::array<std::uint16_t, kMaxVars> exps_{};
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace polar
