#pragma once

// Truncated Laurent series with exact coefficients.
//
// A TruncatedSeries<S> stores a dense window of coefficients [offset, order):
// coeffs[i] is the coefficient of q^(offset+i), and every coefficient of an
// exponent below `order` is known exactly. Exponents at or above `order` are
// unknown. The canonical zero series has an empty window (offset == order).
//
// Results of arithmetic carry the tightest order derivable from the operands,
// so an answer never silently depends on coefficients that were not computed.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qcong/bigint.hpp"
#include "qcong/residue.hpp"

namespace qcong {

template <class Scalar>
struct ScalarOps;

template <>
struct ScalarOps<BigInt> {
  static BigInt zero() { return BigInt(0); }
  static BigInt from_int(std::int64_t v) { return BigInt(static_cast<long>(v)); }
  static bool is_zero(const BigInt& x) { return sgn(x) == 0; }
  /// +1 or -1 when x is a unit of Z, otherwise 0.
  static int unit_sign(const BigInt& x) {
    if (x == 1) return 1;
    if (x == -1) return -1;
    return 0;
  }

  /// Running sum of products; reused across outputs to avoid reallocations.
  class Accumulator {
   public:
    void reset() { mpz_set_ui(sum_.get_mpz_t(), 0); }
    void add(const BigInt& a, const BigInt& b) { mpz_addmul(sum_.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t()); }
    const BigInt& value() const { return sum_; }

   private:
    BigInt sum_;
  };
};

template <>
struct ScalarOps<Residue3> {
  static Residue3 zero() { return Residue3(); }
  static Residue3 from_int(std::int64_t v) { return Residue3(v); }
  static bool is_zero(Residue3 x) { return x.is_zero(); }
  static int unit_sign(Residue3 x) {
    if (x.value() == 1) return 1;
    if (x.value() == Residue3::kModulus - 1) return -1;
    return 0;
  }

  // Products with a small centered factor are summed unreduced in 128 bits;
  // anything else is reduced first. Either way each term is < 2^94, so the
  // sum cannot overflow for fewer than 2^32 terms.
  class Accumulator {
   public:
    void reset() { sum_ = 0; }
    void add(Residue3 a, Residue3 b) {
      constexpr std::int64_t kSmall = std::int64_t{1} << 31;
      const std::int64_t ca = a.centered();
      if (ca > -kSmall && ca < kSmall) {
        sum_ += static_cast<__int128>(ca) * static_cast<__int128>(b.value());
      } else {
        sum_ += static_cast<__int128>((a * b).value());
      }
    }
    Residue3 value() const { return Residue3::reduce(sum_); }

   private:
    __int128 sum_ = 0;
  };
};

template <class Scalar>
class TruncatedSeries {
 public:
  using scalar_type = Scalar;
  using Ops = ScalarOps<Scalar>;

  /// Canonical zero series with an empty window at exponent 0.
  TruncatedSeries() = default;

  /// Dense window starting at `offset`; order = offset + coeffs.size().
  TruncatedSeries(std::int64_t offset, std::vector<Scalar> coeffs) : offset_(offset), coeffs_(std::move(coeffs)) {}

  /// 0 + O(q^order).
  static TruncatedSeries zero(std::int64_t order) { return TruncatedSeries(order, {}); }

  /// 1 + O(q^order); the zero series when order <= 0.
  static TruncatedSeries one(std::int64_t order) {
    if (order <= 0) return zero(order);
    std::vector<Scalar> c(static_cast<std::size_t>(order), Ops::zero());
    c[0] = Ops::from_int(1);
    return TruncatedSeries(0, std::move(c));
  }

  std::int64_t offset() const noexcept { return offset_; }
  std::int64_t order() const noexcept { return offset_ + static_cast<std::int64_t>(coeffs_.size()); }
  std::span<const Scalar> coefficients() const noexcept { return coeffs_; }
  std::vector<Scalar>& mutable_coefficients() noexcept { return coeffs_; }
  bool empty_window() const noexcept { return coeffs_.empty(); }

  /// Coefficient of q^exponent. Exponents below the window are zero; at or above
  /// the order they are unknown and rejected.
  Scalar coefficient(std::int64_t exponent) const {
    if (exponent >= order()) {
      throw std::out_of_range("coefficient of q^" + std::to_string(exponent) + " is beyond the truncation order " +
                              std::to_string(order()));
    }
    if (exponent < offset_) return Ops::zero();
    return coeffs_[static_cast<std::size_t>(exponent - offset_)];
  }

  /// Exponent of the lowest nonzero coefficient inside the window.
  std::optional<std::int64_t> valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (!Ops::is_zero(coeffs_[i])) return offset_ + static_cast<std::int64_t>(i);
    }
    return std::nullopt;
  }

  /// Same series with the window cut at `new_order` (never extended).
  TruncatedSeries truncated(std::int64_t new_order) const {
    if (new_order >= order()) return *this;
    if (new_order <= offset_) return zero(new_order);
    return TruncatedSeries(offset_, std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + (new_order - offset_)));
  }

  /// Equal orders and equal coefficients for every exponent below the order.
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) return false;
    const std::int64_t lo = std::min(a.offset_, b.offset_);
    for (std::int64_t e = lo; e < a.order(); ++e) {
      if (a.coefficient(e) != b.coefficient(e)) return false;
    }
    return true;
  }

 private:
  std::int64_t offset_ = 0;
  std::vector<Scalar> coeffs_;
};

using Series = TruncatedSeries<BigInt>;
using ResidueSeries = TruncatedSeries<Residue3>;

namespace detail {

template <class Scalar>
struct Term {
  std::int64_t index;
  Scalar value;
};

/// Nonzero entries of a coefficient window, by window index.
template <class Scalar>
std::vector<Term<Scalar>> nonzero_terms(std::span<const Scalar> c) {
  std::vector<Term<Scalar>> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!ScalarOps<Scalar>::is_zero(c[i])) out.push_back({static_cast<std::int64_t>(i), c[i]});
  }
  return out;
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace detail

/// Build a series from (exponent, coefficient) pairs; every exponent must be
/// below `order`. Repeated exponents are summed.
template <class Scalar>
TruncatedSeries<Scalar> series_from_terms(const std::vector<std::pair<std::int64_t, Scalar>>& terms,
                                          std::int64_t order) {
  std::int64_t lo = 0;
  if (!terms.empty()) {
    lo = terms.front().first;
    for (const auto& [e, c] : terms) lo = std::min(lo, e);
  }
  for (const auto& [e, c] : terms) {
    if (e >= order) {
      throw std::invalid_argument("term q^" + std::to_string(e) + " lies outside the window (order " +
                                  std::to_string(order) + ")");
    }
  }
  if (lo >= order) return TruncatedSeries<Scalar>::zero(order);
  std::vector<Scalar> c(static_cast<std::size_t>(order - lo), ScalarOps<Scalar>::zero());
  for (const auto& [e, v] : terms) c[static_cast<std::size_t>(e - lo)] += v;
  return TruncatedSeries<Scalar>(lo, std::move(c));
}

template <class Scalar>
TruncatedSeries<Scalar> operator+(const TruncatedSeries<Scalar>& a, const TruncatedSeries<Scalar>& b) {
  const std::int64_t order = std::min(a.order(), b.order());
  const std::int64_t lo = std::min(a.offset(), b.offset());
  if (lo >= order) return TruncatedSeries<Scalar>::zero(order);
  std::vector<Scalar> c(static_cast<std::size_t>(order - lo), ScalarOps<Scalar>::zero());
  for (std::int64_t e = a.offset(); e < order; ++e) c[static_cast<std::size_t>(e - lo)] += a.coefficient(e);
  for (std::int64_t e = b.offset(); e < order; ++e) c[static_cast<std::size_t>(e - lo)] += b.coefficient(e);
  return TruncatedSeries<Scalar>(lo, std::move(c));
}

template <class Scalar>
TruncatedSeries<Scalar> operator-(const TruncatedSeries<Scalar>& a) {
  std::vector<Scalar> c(a.coefficients().begin(), a.coefficients().end());
  for (auto& x : c) x = -x;
  return TruncatedSeries<Scalar>(a.offset(), std::move(c));
}

template <class Scalar>
TruncatedSeries<Scalar> operator-(const TruncatedSeries<Scalar>& a, const TruncatedSeries<Scalar>& b) {
  return a + (-b);
}

/// Multiply every coefficient by a constant.
template <class Scalar>
TruncatedSeries<Scalar> scale(const TruncatedSeries<Scalar>& a, const Scalar& k) {
  std::vector<Scalar> c(a.coefficients().begin(), a.coefficients().end());
  for (auto& x : c) x *= k;
  return TruncatedSeries<Scalar>(a.offset(), std::move(c));
}

/// Multiply by q^k.
template <class Scalar>
TruncatedSeries<Scalar> shift(const TruncatedSeries<Scalar>& a, std::int64_t k) {
  std::vector<Scalar> c(a.coefficients().begin(), a.coefficients().end());
  return TruncatedSeries<Scalar>(a.offset() + k, std::move(c));
}

/// Cauchy product. The loop runs over the nonzero coefficients of the sparser
/// operand, so products with eta factors cost O(N * nnz).
template <class Scalar>
TruncatedSeries<Scalar> operator*(const TruncatedSeries<Scalar>& a, const TruncatedSeries<Scalar>& b) {
  const std::int64_t lo = a.offset() + b.offset();
  const std::int64_t order = std::min(a.order() + b.offset(), b.order() + a.offset());
  if (lo >= order) return TruncatedSeries<Scalar>::zero(order);

  auto ta = detail::nonzero_terms(a.coefficients());
  auto tb = detail::nonzero_terms(b.coefficients());
  const bool a_sparse = ta.size() <= tb.size();
  const auto& sparse = a_sparse ? ta : tb;
  std::span<const Scalar> dense = a_sparse ? b.coefficients() : a.coefficients();

  const std::size_t n = static_cast<std::size_t>(order - lo);
  std::vector<Scalar> c(n, ScalarOps<Scalar>::zero());
  typename ScalarOps<Scalar>::Accumulator acc;
  for (std::size_t out = 0; out < n; ++out) {
    acc.reset();
    bool any = false;
    for (const auto& t : sparse) {
      const auto idx = static_cast<std::int64_t>(out) - t.index;
      if (idx < 0) break;
      if (static_cast<std::size_t>(idx) >= dense.size()) continue;
      acc.add(t.value, dense[static_cast<std::size_t>(idx)]);
      any = true;
    }
    if (any) c[out] = acc.value();
  }
  return TruncatedSeries<Scalar>(lo, std::move(c));
}

/// a / b where the lowest nonzero coefficient of b is +1 or -1.
///
/// Long division by the recurrence c[n] = (a[n] - sum_{k>=1} b_k c[n-k]) / b_0,
/// skipping zero b_k; dividing by an eta factor is O(N * nnz(b)).
template <class Scalar>
TruncatedSeries<Scalar> divide(const TruncatedSeries<Scalar>& a, const TruncatedSeries<Scalar>& b) {
  using Ops = ScalarOps<Scalar>;
  const auto vb = b.valuation();
  if (!vb) throw std::domain_error("division by a series that is zero in its window");
  const int lead_sign = Ops::unit_sign(b.coefficient(*vb));
  if (lead_sign == 0) throw std::domain_error("leading coefficient of divisor is not +1 or -1");

  // a / b = q^(a.offset - vb) * A(q) / B(q) with A, B normalized to start at q^0.
  const std::int64_t rel_b = b.order() - *vb;
  const std::int64_t rel_a = a.order() - a.offset();
  const std::int64_t len = std::min(rel_a, rel_b);
  const std::int64_t lo = a.offset() - *vb;
  if (len <= 0) return TruncatedSeries<Scalar>::zero(lo + std::max<std::int64_t>(len, 0));

  std::span<const Scalar> bc = b.coefficients().subspan(static_cast<std::size_t>(*vb - b.offset()));
  std::vector<detail::Term<Scalar>> tail;
  for (std::size_t k = 1; k < bc.size() && static_cast<std::int64_t>(k) < len; ++k) {
    if (!Ops::is_zero(bc[k])) tail.push_back({static_cast<std::int64_t>(k), bc[k]});
  }

  std::vector<Scalar> c(static_cast<std::size_t>(len), Ops::zero());
  typename Ops::Accumulator acc;
  for (std::int64_t n = 0; n < len; ++n) {
    acc.reset();
    for (const auto& t : tail) {
      if (t.index > n) break;
      acc.add(t.value, c[static_cast<std::size_t>(n - t.index)]);
    }
    Scalar v = a.coefficients()[static_cast<std::size_t>(n)] - acc.value();
    c[static_cast<std::size_t>(n)] = lead_sign > 0 ? v : Scalar(-v);
  }
  return TruncatedSeries<Scalar>(lo, std::move(c));
}

/// 1/a; the lowest nonzero coefficient of a must be +1 or -1.
/// The result starts at q^(-valuation(a)) and keeps a's relative precision.
template <class Scalar>
TruncatedSeries<Scalar> inverse(const TruncatedSeries<Scalar>& a) {
  const auto v = a.valuation();
  if (!v) throw std::domain_error("inverse of a series that is zero in its window");
  return divide(TruncatedSeries<Scalar>::one(a.order() - *v), a);
}

/// a^e by binary powering; negative e inverts first.
template <class Scalar>
TruncatedSeries<Scalar> power(const TruncatedSeries<Scalar>& a, std::int64_t e) {
  if (e < 0) return power(inverse(a), -e);
  const auto v = a.valuation();
  if (e == 0) {
    const std::int64_t rel = v ? a.order() - *v : a.order() - a.offset();
    return TruncatedSeries<Scalar>::one(rel);
  }
  TruncatedSeries<Scalar> result;
  bool have = false;
  TruncatedSeries<Scalar> base = a;
  while (e > 0) {
    if (e & 1) {
      result = have ? result * base : base;
      have = true;
    }
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

/// q -> q^r. Exponent k moves to r*k; the new order is r*(order-1)+1.
template <class Scalar>
TruncatedSeries<Scalar> substitute_power(const TruncatedSeries<Scalar>& a, std::int64_t r) {
  if (r < 1) throw std::invalid_argument("substitute_power requires r >= 1");
  const std::int64_t new_order = r * (a.order() - 1) + 1;
  if (a.empty_window()) return TruncatedSeries<Scalar>::zero(new_order);
  const std::int64_t lo = r * a.offset();
  std::vector<Scalar> c(static_cast<std::size_t>(new_order - lo), ScalarOps<Scalar>::zero());
  auto src = a.coefficients();
  for (std::size_t i = 0; i < src.size(); ++i) c[i * static_cast<std::size_t>(r)] = src[i];
  return TruncatedSeries<Scalar>(lo, std::move(c));
}

/// Keep the coefficients at exponents congruent to s mod r. With `rescale`,
/// exponent r*n+s becomes n; otherwise exponents are kept in place.
template <class Scalar>
TruncatedSeries<Scalar> extract_progression(const TruncatedSeries<Scalar>& a, std::int64_t r, std::int64_t s,
                                            bool rescale) {
  if (r < 1) throw std::invalid_argument("extract_progression requires r >= 1");
  if (s < 0 || s >= r) throw std::invalid_argument("extract_progression requires 0 <= s < r");
  if (!rescale) {
    std::vector<Scalar> c(a.coefficients().begin(), a.coefficients().end());
    for (std::size_t i = 0; i < c.size(); ++i) {
      const std::int64_t e = a.offset() + static_cast<std::int64_t>(i);
      if (((e % r) + r) % r != s) c[i] = ScalarOps<Scalar>::zero();
    }
    return TruncatedSeries<Scalar>(a.offset(), std::move(c));
  }
  const std::int64_t lo = detail::ceil_div(a.offset() - s, r);
  const std::int64_t hi = detail::ceil_div(a.order() - s, r);
  if (lo >= hi) return TruncatedSeries<Scalar>::zero(hi);
  std::vector<Scalar> c;
  c.reserve(static_cast<std::size_t>(hi - lo));
  for (std::int64_t n = lo; n < hi; ++n) c.push_back(a.coefficient(r * n + s));
  return TruncatedSeries<Scalar>(lo, std::move(c));
}

/// Exponents inside the common window where a and b differ.
template <class Scalar>
std::vector<std::int64_t> mismatches(const TruncatedSeries<Scalar>& a, const TruncatedSeries<Scalar>& b) {
  std::vector<std::int64_t> out;
  const std::int64_t hi = std::min(a.order(), b.order());
  for (std::int64_t e = std::min(a.offset(), b.offset()); e < hi; ++e) {
    if (a.coefficient(e) != b.coefficient(e)) out.push_back(e);
  }
  return out;
}

/// Reduce an exact series modulo 3^39.
ResidueSeries to_residue(const Series& a);

}  // namespace qcong
