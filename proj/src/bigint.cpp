#include "qcong/bigint.hpp"

#include <limits>
#include <stdexcept>

#include "qcong/series.hpp"

namespace qcong {

BigInt pow_big(long base, unsigned long exp) {
  BigInt r;
  BigInt b(base);
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("64-bit overflow in parameter arithmetic");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("64-bit overflow in parameter arithmetic");
  return r;
}

std::int64_t checked_pow(std::int64_t base, int exp) {
  if (exp < 0) throw std::invalid_argument("checked_pow: negative exponent");
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

Residue3 Residue3::from_big(const BigInt& x) {
  static const BigInt modulus = pow_big(3, kExponent);
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
  return from_raw(r.get_ui());
}

ResidueSeries to_residue(const Series& a) {
  std::vector<Residue3> c;
  c.reserve(a.coefficients().size());
  for (const auto& x : a.coefficients()) c.push_back(Residue3::from_big(x));
  return ResidueSeries(a.offset(), std::move(c));
}

}  // namespace qcong
