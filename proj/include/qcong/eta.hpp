#pragma once

// Euler products E(q^r) = prod_{m>=1} (1 - q^{rm}) and quotients built from them.

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcong/series.hpp"

namespace qcong {

/// q^power_of_q * prod E(q^scale)^exponent.
struct EtaFactor {
  std::int64_t scale = 1;
  std::int64_t exponent = 0;
  friend bool operator==(const EtaFactor&, const EtaFactor&) = default;
};

class EtaQuotientSpec {
 public:
  EtaQuotientSpec() = default;
  EtaQuotientSpec(std::int64_t power_of_q, std::vector<EtaFactor> factors);

  /// Parse `q^s * E(r1)^e1 * E(r2)^e2 ...`. Any factor may be omitted or
  /// repeated; `E(r)` without an exponent means exponent 1.
  static EtaQuotientSpec parse(std::string_view text);

  std::int64_t power_of_q() const noexcept { return power_of_q_; }
  /// Factors sorted by scale, duplicates merged, zero exponents dropped.
  const std::vector<EtaFactor>& factors() const noexcept { return factors_; }

  EtaQuotientSpec& times(std::int64_t scale, std::int64_t exponent);
  EtaQuotientSpec& times_q(std::int64_t k);

  std::string to_string() const;

  friend bool operator==(const EtaQuotientSpec&, const EtaQuotientSpec&) = default;

 private:
  void normalize();

  std::int64_t power_of_q_ = 0;
  std::vector<EtaFactor> factors_;
};

/// E(q^r) to O(q^order) from the pentagonal number theorem.
template <class Scalar = BigInt>
TruncatedSeries<Scalar> euler_series(std::int64_t r, std::int64_t order) {
  if (r < 1) throw std::invalid_argument("euler_series requires r >= 1");
  if (order < 1) throw std::invalid_argument("euler_series requires order >= 1");
  std::vector<Scalar> c(static_cast<std::size_t>(order), ScalarOps<Scalar>::zero());
  for (std::int64_t k = 0;; ++k) {
    const std::int64_t sign = (k % 2 == 0) ? 1 : -1;
    const std::int64_t e1 = r * (k * (3 * k - 1) / 2);
    const std::int64_t e2 = r * (k * (3 * k + 1) / 2);
    if (e1 >= order) break;
    c[static_cast<std::size_t>(e1)] = ScalarOps<Scalar>::from_int(sign);
    if (k > 0 && e2 < order) c[static_cast<std::size_t>(e2)] = ScalarOps<Scalar>::from_int(sign);
  }
  return TruncatedSeries<Scalar>(0, std::move(c));
}

/// E(q^r)^3 = sum_{n>=0} (-1)^n (2n+1) q^{r n(n+1)/2} (Jacobi).
template <class Scalar = BigInt>
TruncatedSeries<Scalar> jacobi_cube(std::int64_t order, std::int64_t r = 1) {
  if (r < 1) throw std::invalid_argument("jacobi_cube requires r >= 1");
  if (order < 1) throw std::invalid_argument("jacobi_cube requires order >= 1");
  std::vector<Scalar> c(static_cast<std::size_t>(order), ScalarOps<Scalar>::zero());
  for (std::int64_t n = 0;; ++n) {
    const std::int64_t e = r * (n * (n + 1) / 2);
    if (e >= order) break;
    c[static_cast<std::size_t>(e)] = ScalarOps<Scalar>::from_int((n % 2 == 0 ? 1 : -1) * (2 * n + 1));
  }
  return TruncatedSeries<Scalar>(0, std::move(c));
}

/// P(q) = sum_{n in Z} (-1)^n (6n+1) q^{n(3n+1)/2}, with E(q)^3 = P(q^3) - 3q E(q^9)^3.
template <class Scalar = BigInt>
TruncatedSeries<Scalar> p_cap_series(std::int64_t order) {
  if (order < 1) throw std::invalid_argument("p_cap_series requires order >= 1");
  std::vector<Scalar> c(static_cast<std::size_t>(order), ScalarOps<Scalar>::zero());
  // Exponent n(3n+1)/2 >= 3n^2/2 - |n|/2 exceeds order beyond this bound.
  const auto bound = static_cast<std::int64_t>(std::ceil(std::sqrt(2.0 * static_cast<double>(order) / 3.0))) + 2;
  for (std::int64_t n = -bound; n <= bound; ++n) {
    const std::int64_t e = n * (3 * n + 1) / 2;
    if (e >= order) continue;
    const std::int64_t sign = (n % 2 == 0) ? 1 : -1;
    c[static_cast<std::size_t>(e)] += ScalarOps<Scalar>::from_int(sign * (6 * n + 1));
  }
  return TruncatedSeries<Scalar>(0, std::move(c));
}

namespace detail {

/// Multiply (e > 0) or divide (e < 0) `acc` by E(q^r)^|e|, using Jacobi cubes
/// for groups of three so that every step is a sparse operation.
template <class Scalar>
void apply_eta_factor(TruncatedSeries<Scalar>& acc, std::int64_t r, std::int64_t e, std::int64_t len) {
  if (e == 0 || len <= 0) return;
  const std::int64_t mag = e < 0 ? -e : e;
  const auto cube = jacobi_cube<Scalar>(len, r);
  const auto single = euler_series<Scalar>(r, len);
  auto step = [&](const TruncatedSeries<Scalar>& f) { acc = e > 0 ? acc * f : divide(acc, f); };
  for (std::int64_t i = 0; i < mag / 3; ++i) step(cube);
  for (std::int64_t i = 0; i < mag % 3; ++i) step(single);
}

}  // namespace detail

/// Expansion of the quotient correct for every exponent below `order`.
template <class Scalar = BigInt>
TruncatedSeries<Scalar> eta_quotient(const EtaQuotientSpec& spec, std::int64_t order) {
  if (order < 1) throw std::invalid_argument("eta_quotient requires order >= 1");
  const std::int64_t s = spec.power_of_q();
  const std::int64_t len = order - s;
  if (len <= 0) return TruncatedSeries<Scalar>::zero(order);
  auto acc = TruncatedSeries<Scalar>::one(len);
  // Numerator factors first keeps every division exact over the integers.
  for (const auto& f : spec.factors())
    if (f.exponent > 0) detail::apply_eta_factor(acc, f.scale, f.exponent, len);
  for (const auto& f : spec.factors())
    if (f.exponent < 0) detail::apply_eta_factor(acc, f.scale, f.exponent, len);
  return shift(acc, s);
}

}  // namespace qcong
