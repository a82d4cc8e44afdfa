#pragma once

// 3-adic valuations and the elementary predicates used by the congruence proofs.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "qcong/bigint.hpp"
#include "qcong/residue.hpp"
#include "qcong/series.hpp"

namespace qcong {

/// Exponent of the largest power of 3 dividing an integer; infinite for 0.
class Valuation3 {
 public:
  static constexpr Valuation3 infinity() { return Valuation3(); }
  static constexpr Valuation3 finite(int v) { return Valuation3(v); }

  constexpr bool is_infinite() const noexcept { return !value_.has_value(); }
  /// Precondition: finite.
  constexpr int value() const { return value_.value(); }

  /// True when 3^e divides the integer.
  constexpr bool at_least(int e) const noexcept { return is_infinite() || *value_ >= e; }

  friend constexpr bool operator==(const Valuation3&, const Valuation3&) = default;
  friend constexpr std::strong_ordering operator<=>(const Valuation3& a, const Valuation3& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    }
    return *a.value_ <=> *b.value_;
  }
  friend constexpr Valuation3 operator+(const Valuation3& a, const Valuation3& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return finite(*a.value_ + *b.value_);
  }

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(*value_); }

 private:
  constexpr Valuation3() = default;
  constexpr explicit Valuation3(int v) : value_(v) {}
  std::optional<int> value_;
};

Valuation3 pi3(const BigInt& n);
Valuation3 pi3(std::int64_t n);

/// Valuation of a residue mod 3^39, capped: a zero residue yields 39, which
/// reads as "at least 39".
int pi3_capped(Residue3 r);

/// Minimum valuation over the coefficients of exponents below `upto`.
Valuation3 series_min_valuation3(const Series& a, std::int64_t upto);

/// Legendre symbol (a/p) by Euler's criterion; p must be an odd prime.
int legendre(std::int64_t a, std::int64_t p);

bool is_prime(std::int64_t n);

/// N = x^2 + y^2 solvable, via the prime-factor criterion.
bool is_sum_of_two_squares(std::int64_t n);
/// Same predicate by exhaustive search; the independent cross-check.
bool is_sum_of_two_squares_brute(std::int64_t n);

/// N = x^2 + 3y^2 solvable, by exhaustive search over y.
bool is_x2_plus_3y2(std::int64_t n);

}  // namespace qcong
