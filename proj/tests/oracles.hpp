#pragma once

// Slow reference implementations used only by the tests. None of this shares
// code with the library's series routines.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "qcong/bigint.hpp"
#include "qcong/series.hpp"

namespace oracle {

using qcong::BigInt;

/// Dense coefficient list starting at q^0.
using Poly = std::vector<BigInt>;

inline Poly mul(const Poly& a, const Poly& b, std::size_t n) {
  Poly c(n);
  for (std::size_t i = 0; i < a.size() && i < n; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) c[i + j] += a[i] * b[j];
  return c;
}

/// prod_{m>=1} (1 - q^{rm}) by multiplying out the factors one at a time.
inline Poly euler_product(std::int64_t r, std::size_t n) {
  Poly acc(n);
  acc[0] = 1;
  for (std::int64_t m = 1; static_cast<std::size_t>(r * m) < n; ++m) {
    Poly next = acc;
    for (std::size_t i = static_cast<std::size_t>(r * m); i < n; ++i) next[i] -= acc[i - static_cast<std::size_t>(r * m)];
    acc = std::move(next);
  }
  return acc;
}

/// 1/a for a[0] = 1, by long division.
inline Poly inverse(const Poly& a, std::size_t n) {
  Poly c(n);
  c[0] = 1;
  for (std::size_t k = 1; k < n; ++k) {
    BigInt s = 0;
    for (std::size_t i = 1; i <= k && i < a.size(); ++i) s += a[i] * c[k - i];
    c[k] = -s;
  }
  return c;
}

inline Poly power(const Poly& a, int e, std::size_t n) {
  Poly base = e < 0 ? inverse(a, n) : a;
  Poly acc(n);
  acc[0] = 1;
  for (int i = 0; i < (e < 0 ? -e : e); ++i) acc = mul(acc, base, n);
  return acc;
}

/// Number of partitions p(0..n-1) by the part-by-part recursion.
inline Poly partitions(std::size_t n) {
  Poly p(n);
  p[0] = 1;
  for (std::size_t part = 1; part < n; ++part)
    for (std::size_t t = part; t < n; ++t) p[t] += p[t - part];
  return p;
}

inline Poly coefficients(const qcong::Series& s, std::int64_t from, std::int64_t to) {
  Poly out;
  for (std::int64_t e = from; e < to; ++e) out.push_back(s.coefficient(e));
  return out;
}

/// Random series with offset in [min_off, max_off], length in [1, max_len] and
/// small coefficients.
inline qcong::Series random_series(std::mt19937_64& rng, std::int64_t min_off, std::int64_t max_off, int max_len,
                                   int max_abs = 9) {
  std::uniform_int_distribution<std::int64_t> off(min_off, max_off);
  std::uniform_int_distribution<int> len(1, max_len);
  std::uniform_int_distribution<long> coef(-max_abs, max_abs);
  std::vector<BigInt> c(static_cast<std::size_t>(len(rng)));
  for (auto& x : c) x = coef(rng);
  return qcong::Series(off(rng), std::move(c));
}

/// Random series with constant term +-1.
inline qcong::Series random_unimodular(std::mt19937_64& rng, int max_len) {
  auto s = random_series(rng, 0, 0, max_len);
  s.mutable_coefficients()[0] = (rng() & 1) ? 1 : -1;
  return s;
}

}  // namespace oracle
