#pragma once

// Partition-triple counting functions:
//   p3(n)      : 1 / E(q)^3
//   T_l(n)     : E(q^l)^3 / E(q)^3          (l-regular partition triples)
//   p_{l,3}(n) : 1 / (E(q)^3 E(q^l)^3)      (2-color partition triples)

#include <cstdint>
#include <string>

#include "qcong/bigint.hpp"
#include "qcong/eta.hpp"
#include "qcong/series.hpp"

namespace qcong {

enum class CountKind { P3, RegularTriple, TwoColorTriple };

std::string to_string(CountKind kind);
/// Accepts "p3", "t"/"regular", "p3l"/"two-color" (case-insensitive).
CountKind parse_count_kind(const std::string& name);

struct CountingFunction {
  CountKind kind = CountKind::P3;
  std::int64_t ell = 1;  // unused for P3

  static CountingFunction p3() { return {CountKind::P3, 1}; }
  static CountingFunction regular(std::int64_t ell);
  static CountingFunction two_color(std::int64_t ell);

  /// "p3", "T_9", "p_{9,3}".
  std::string name() const;
  EtaQuotientSpec generating_function() const;

  friend bool operator==(const CountingFunction&, const CountingFunction&) = default;
};

template <class Scalar = BigInt>
TruncatedSeries<Scalar> count_series(const CountingFunction& f, std::int64_t order) {
  if (order < 1) throw std::invalid_argument("count_series requires order >= 1");
  return eta_quotient<Scalar>(f.generating_function(), order);
}

/// Largest n accepted by enumerate_count.
inline constexpr int kEnumerateLimit = 30;

/// Counts by a coin-change recursion over the admissible (part, color) pairs,
/// independent of the series code.
BigInt enumerate_count(const CountingFunction& f, int n);

}  // namespace qcong
