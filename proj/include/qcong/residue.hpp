#pragma once

#include <cstdint>
#include <ostream>

#include "qcong/bigint.hpp"

namespace qcong {

/// Integer reduced modulo 3^39.
///
/// Divisibility by 3^e is preserved exactly for every e <= 39, which is all
/// the congruence checks need; the reduced path exists so that expansions to
/// millions of terms fit in memory. It is always differentially tested against
/// the exact BigInt path.
class Residue3 {
 public:
  static constexpr int kExponent = 39;
  static constexpr std::uint64_t kModulus = 4052555153018976267ULL;  // 3^39

  constexpr Residue3() = default;
  constexpr Residue3(std::int64_t v)  // NOLINT(google-explicit-constructor)
      : value_(reduce_signed(v)) {}

  static Residue3 from_big(const BigInt& x);
  static constexpr Residue3 from_raw(std::uint64_t reduced) {
    Residue3 r;
    r.value_ = reduced;
    return r;
  }

  constexpr std::uint64_t value() const noexcept { return value_; }

  /// Representative in (-M/2, M/2].
  constexpr std::int64_t centered() const noexcept {
    return value_ > kModulus / 2 ? static_cast<std::int64_t>(value_) - static_cast<std::int64_t>(kModulus)
                                 : static_cast<std::int64_t>(value_);
  }

  constexpr bool is_zero() const noexcept { return value_ == 0; }

  friend constexpr Residue3 operator+(Residue3 a, Residue3 b) {
    std::uint64_t s = a.value_ + b.value_;
    if (s >= kModulus) s -= kModulus;
    return from_raw(s);
  }
  friend constexpr Residue3 operator-(Residue3 a, Residue3 b) {
    return from_raw(a.value_ >= b.value_ ? a.value_ - b.value_ : a.value_ + kModulus - b.value_);
  }
  friend constexpr Residue3 operator-(Residue3 a) { return from_raw(a.value_ == 0 ? 0 : kModulus - a.value_); }
  friend constexpr Residue3 operator*(Residue3 a, Residue3 b) {
    return from_raw(static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a.value_) * b.value_ % kModulus));
  }
  Residue3& operator+=(Residue3 b) { return *this = *this + b; }
  Residue3& operator-=(Residue3 b) { return *this = *this - b; }
  Residue3& operator*=(Residue3 b) { return *this = *this * b; }

  friend constexpr bool operator==(Residue3 a, Residue3 b) = default;

  friend std::ostream& operator<<(std::ostream& os, Residue3 r) { return os << r.value_; }

  /// Reduce a signed 128-bit accumulator.
  static constexpr Residue3 reduce(__int128 v) {
    __int128 m = static_cast<__int128>(kModulus);
    __int128 r = v % m;
    if (r < 0) r += m;
    return from_raw(static_cast<std::uint64_t>(r));
  }

 private:
  static constexpr std::uint64_t reduce_signed(std::int64_t v) {
    std::int64_t m = static_cast<std::int64_t>(kModulus);
    std::int64_t r = v % m;
    return static_cast<std::uint64_t>(r < 0 ? r + m : r);
  }

  std::uint64_t value_ = 0;
};

}  // namespace qcong
