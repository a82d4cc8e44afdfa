#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace qcong {

using BigInt = mpz_class;

/// base^exp as a big integer.
BigInt pow_big(long base, unsigned long exp);

/// base^exp in 64-bit arithmetic; throws std::overflow_error on overflow.
std::int64_t checked_pow(std::int64_t base, int exp);

std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

inline std::string to_decimal(const BigInt& x) { return x.get_str(10); }

}  // namespace qcong
