#include "qcong/arith3.hpp"

#include <cmath>
#include <stdexcept>

namespace qcong {

Valuation3 pi3(const BigInt& n) {
  if (sgn(n) == 0) return Valuation3::infinity();
  BigInt rest;
  const BigInt three(3);
  const auto removed = mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), three.get_mpz_t());
  return Valuation3::finite(static_cast<int>(removed));
}

Valuation3 pi3(std::int64_t n) {
  if (n == 0) return Valuation3::infinity();
  int v = 0;
  while (n % 3 == 0) {
    n /= 3;
    ++v;
  }
  return Valuation3::finite(v);
}

int pi3_capped(Residue3 r) {
  std::uint64_t x = r.value();
  if (x == 0) return Residue3::kExponent;
  int v = 0;
  while (x % 3 == 0) {
    x /= 3;
    ++v;
  }
  return v;
}

Valuation3 series_min_valuation3(const Series& a, std::int64_t upto) {
  if (upto > a.order()) {
    throw std::invalid_argument("series_min_valuation3: upto " + std::to_string(upto) + " exceeds order " +
                                std::to_string(a.order()));
  }
  Valuation3 best = Valuation3::infinity();
  for (std::int64_t e = a.offset(); e < upto; ++e) {
    const auto v = pi3(a.coefficient(e));
    if (v < best) best = v;
  }
  return best;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t m) {
  unsigned __int128 result = 1;
  unsigned __int128 base = static_cast<unsigned __int128>(b % m);
  while (e > 0) {
    if (e & 1) result = result * base % static_cast<unsigned __int128>(m);
    base = base * base % static_cast<unsigned __int128>(m);
    e >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

}  // namespace

int legendre(std::int64_t a, std::int64_t p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("legendre: " + std::to_string(p) + " is not an odd prime");
  std::int64_t r = a % p;
  if (r < 0) r += p;
  if (r == 0) return 0;
  const std::int64_t t = pow_mod(r, (p - 1) / 2, p);
  return t == 1 ? 1 : -1;
}

bool is_sum_of_two_squares(std::int64_t n) {
  if (n < 0) return false;
  if (n == 0) return true;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (p % 4 == 3 && e % 2 == 1) return false;
  }
  // Remaining cofactor is 1 or a prime to the first power.
  return n % 4 != 3;
}

bool is_sum_of_two_squares_brute(std::int64_t n) {
  if (n < 0) return false;
  for (std::int64_t x = 0; x * x <= n; ++x) {
    const std::int64_t rest = n - x * x;
    auto y = static_cast<std::int64_t>(std::sqrt(static_cast<double>(rest)));
    while (y * y > rest) --y;
    while ((y + 1) * (y + 1) <= rest) ++y;
    if (y * y == rest) return true;
  }
  return false;
}

bool is_x2_plus_3y2(std::int64_t n) {
  if (n < 0) return false;
  for (std::int64_t y = 0; 3 * y * y <= n; ++y) {
    const std::int64_t rest = n - 3 * y * y;
    auto x = static_cast<std::int64_t>(std::sqrt(static_cast<double>(rest)));
    while (x * x > rest) --x;
    while ((x + 1) * (x + 1) <= rest) ++x;
    if (x * x == rest) return true;
  }
  return false;
}

}  // namespace qcong
