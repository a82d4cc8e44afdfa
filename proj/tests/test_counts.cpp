#include <doctest.h>

#include "oracles.hpp"
#include "qcong/count_tables.hpp"
#include "qcong/counts.hpp"

using namespace qcong;

namespace {

oracle::Poly head(const Series& s, std::int64_t n) { return oracle::coefficients(s, 0, n); }

// Triples of partitions with parts drawn from `allowed`, by convolution of
// single-colour restricted partition counts.
oracle::Poly restricted_triples(std::size_t n, bool (*allowed)(std::size_t, std::int64_t), std::int64_t ell) {
  oracle::Poly one(n);
  one[0] = 1;
  for (std::size_t part = 1; part < n; ++part) {
    if (!allowed(part, ell)) continue;
    for (std::size_t t = part; t < n; ++t) one[t] += one[t - part];
  }
  return oracle::mul(oracle::mul(one, one, n), one, n);
}

bool any_part(std::size_t, std::int64_t) { return true; }
bool not_multiple(std::size_t part, std::int64_t ell) { return part % static_cast<std::size_t>(ell) != 0; }
bool multiple(std::size_t part, std::int64_t ell) { return part % static_cast<std::size_t>(ell) == 0; }

}  // namespace

TEST_CASE("count_series examples") {
  CHECK(head(count_series(CountingFunction::p3(), 6), 6) == oracle::Poly{1, 3, 9, 22, 51, 108});
  const auto p = oracle::partitions(6);
  CHECK(oracle::mul(oracle::mul(p, p, 6), p, 6) == oracle::Poly{1, 3, 9, 22, 51, 108});

  // T_3(4) = p3(4) - 3 p3(1) = 51 - 9 and T_3(5) = p3(5) - 3 p3(2) = 81.
  const auto t3 = count_series(CountingFunction::regular(3), 6);
  CHECK(head(t3, 6) == oracle::Poly{1, 3, 9, 19, 42, 81});
  CHECK(enumerate_count(CountingFunction::regular(3), 4) == 42);
  CHECK(enumerate_count(CountingFunction::regular(3), 5) == 81);

  for (std::int64_t ell : {1, 2, 3, 7, 27}) {
    CHECK(count_series(CountingFunction::regular(ell), 1).coefficient(0) == 1);
    CHECK(count_series(CountingFunction::two_color(ell), 1).coefficient(0) == 1);
  }
  CHECK(head(count_series(CountingFunction::regular(1), 5), 5) == oracle::Poly{1, 0, 0, 0, 0});
}

TEST_CASE("enumerate_count examples") {
  CHECK(enumerate_count(CountingFunction::p3(), 2) == 9);
  CHECK(enumerate_count(CountingFunction::regular(3), 2) == 9);
  CHECK(enumerate_count(CountingFunction::regular(2), 1) == 3);
  CHECK(enumerate_count(CountingFunction::p3(), 0) == 1);
  CHECK(enumerate_count(CountingFunction::two_color(2), 2) == 9 + 3);
  CHECK_THROWS_AS(enumerate_count(CountingFunction::p3(), kEnumerateLimit + 1), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_count(CountingFunction::p3(), -1), std::invalid_argument);
  CHECK_THROWS_AS(CountingFunction::regular(0), std::invalid_argument);
}

TEST_CASE("enumeration agrees with the series for n <= 25") {
  const std::size_t n = 26;
  const auto p3 = restricted_triples(n, any_part, 1);
  CHECK(head(count_series(CountingFunction::p3(), n), n) == p3);
  for (std::int64_t ell : {2, 3, 6, 9, 15, 27}) {
    CAPTURE(ell);
    const auto t = count_series(CountingFunction::regular(ell), n);
    const auto two = count_series(CountingFunction::two_color(ell), n);
    const auto t_oracle = restricted_triples(n, not_multiple, ell);
    const auto two_oracle = oracle::mul(p3, restricted_triples(n, multiple, ell), n);
    CHECK(head(t, n) == t_oracle);
    CHECK(head(two, n) == two_oracle);
    for (int k = 0; k < static_cast<int>(n); ++k) {
      CHECK(enumerate_count(CountingFunction::regular(ell), k) == t.coefficient(k));
      CHECK(enumerate_count(CountingFunction::two_color(ell), k) == two.coefficient(k));
    }
  }
  for (int k = 0; k < static_cast<int>(n); ++k) CHECK(enumerate_count(CountingFunction::p3(), k) == p3[k]);
}

TEST_CASE("T_3(3n+2) is divisible by 9 for n <= 200") {
  const auto t3 = count_series(CountingFunction::regular(3), 3 * 200 + 3);
  for (int n = 0; n <= 200; ++n) CHECK(BigInt(t3.coefficient(3 * n + 2) % 9) == 0);
}

TEST_CASE("table lookups agree with series coefficients") {
  const std::int64_t n = 2000;
  auto& tables = CountTables::global();
  const auto exact = tables.exact(n);
  const auto residue = tables.residue(n);
  REQUIRE(static_cast<std::int64_t>(exact->size()) > n);
  REQUIRE(static_cast<std::int64_t>(residue->size()) > n);
  const auto p3 = count_series(CountingFunction::p3(), n + 1);
  for (std::int64_t k = 0; k <= n; ++k) CHECK((*exact)[static_cast<std::size_t>(k)] == p3.coefficient(k));

  for (auto f : {CountingFunction::p3(), CountingFunction::regular(5), CountingFunction::regular(27),
                 CountingFunction::two_color(3), CountingFunction::two_color(10)}) {
    const auto s = count_series(f, n + 1);
    CAPTURE(f.name());
    for (std::int64_t k = 0; k <= n; k += 37) {
      CHECK(count_coefficient(*exact, f, k) == s.coefficient(k));
      CHECK(count_coefficient(*residue, f, k) == Residue3::from_big(s.coefficient(k)));
    }
  }
  // A snapshot taken earlier stays valid and unchanged after growth.
  const auto before = tables.exact(100);
  const BigInt p3_100 = (*before)[100];
  tables.exact(n + 500);
  CHECK((*before)[100] == p3_100);
}

TEST_CASE("names and parsing") {
  CHECK(CountingFunction::p3().name() == "p3");
  CHECK(CountingFunction::regular(9).name() == "T_9");
  CHECK(CountingFunction::two_color(9).name() == "p_{9,3}");
  CHECK(parse_count_kind("P3") == CountKind::P3);
  CHECK(parse_count_kind("regular") == CountKind::RegularTriple);
  CHECK(parse_count_kind("t") == CountKind::RegularTriple);
  CHECK(parse_count_kind("two-color") == CountKind::TwoColorTriple);
  CHECK(parse_count_kind("p3l") == CountKind::TwoColorTriple);
  CHECK_THROWS_AS(parse_count_kind("pp"), std::invalid_argument);
  CHECK(CountingFunction::regular(3).generating_function() == EtaQuotientSpec::parse("E(3)^3 * E(1)^-3"));
}
