#pragma once

// The huffing operator H and the table m_{i,j} with
//   H(1/zeta^i) = sum_{j>=1} m_{i,j} / T^j,
//   zeta = E(q)^3 / (q E(q^9)^3),  T = E(q^3)^12 / (q^3 E(q^9)^12).

#include <array>
#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "qcong/bigint.hpp"
#include "qcong/series.hpp"

namespace qcong {

using SeedBlock = std::array<std::array<BigInt, 5>, 5>;

/// The first five rows of m_{i,j}, columns 1..5.
const SeedBlock& published_seeds();

/// Lazily grown table of m_{i,j} (i, j >= 1).
///
/// Rows 1..5 come from the seed block (zero beyond column 5); for i > 5,
/// m_{i,1} = 0 and m_{i,j} = 27 m_{i-1,j-1} + 9 m_{i-2,j-1} + m_{i-3,j-1}.
/// Entries with j > i vanish identically and are not stored. Reads are safe
/// from several threads; growth takes an exclusive lock.
class MTable {
 public:
  MTable();
  explicit MTable(SeedBlock seeds);

  MTable(const MTable&) = delete;
  MTable& operator=(const MTable&) = delete;

  BigInt entry(int i, int j) const;

  /// Rows materialized so far.
  int rows() const;

 private:
  void grow_to(int i) const;

  SeedBlock seeds_;
  mutable std::shared_mutex mutex_;
  // rows_[i-1] holds m_{i,1..i}.
  mutable std::vector<std::vector<BigInt>> rows_;
};

/// Process-wide table built from the published seeds.
const MTable& default_mtable();

/// m_{i,j} from the default table.
BigInt m_entry(int i, int j);

/// H(sum a_n q^n) = sum a_{3n} q^{3n}; exponents are kept in place.
template <class Scalar>
TruncatedSeries<Scalar> huff(const TruncatedSeries<Scalar>& a) {
  return extract_progression(a, 3, 0, false);
}

/// Expands both sides of H(1/zeta^i) = sum_j m_{i,j} T^{-j} below q^order.
struct HIdentitySides {
  Series lhs;
  Series rhs;
  bool holds() const { return lhs == rhs; }
};

HIdentitySides p0_sides(const MTable& table, int i, std::int64_t order);
bool check_p0(int i, std::int64_t order, const MTable& table = default_mtable());

/// The five shifted forms of the H-identity used in the recurrences for the
/// coefficient vectors:
///   P3: H(q^{i-3} E3^{12i}    / E1^{12i})    = sum m_{4i,  i+j}   q^{3j-3} E9^{12j}   / E3^{12j}
///   P4: H(q^{i-2} E3^{12i-3}  / E1^{12i+3})  = sum m_{4i+1,i+j}   q^{3j-3} E9^{12j-3} / E3^{12j+3}
///   P1: H(q^{i-3} E3^{12i-9}  / E1^{12i-9})  = sum m_{4i-3,i+j-1} q^{3j-3} E9^{12j-3} / E3^{12j-3}
///   P2: H(q^{i-1} E3^{12i-3}  / E1^{12i-3})  = sum m_{4i-1,i+j-1} q^{3j-3} E9^{12j-9} / E3^{12j-9}
///   P5: H(q^{i-1} E3^{12i}    / E1^{12i+6})  = sum m_{4i+2,i+j}   q^{3j-3} E9^{12j-6} / E3^{12j}
enum class HLemma { P1, P2, P3, P4, P5 };

std::string to_string(HLemma v);
HLemma parse_h_lemma(const std::string& name);

HIdentitySides h_lemma_sides(HLemma variant, int i, std::int64_t order, const MTable& table = default_mtable());
bool check_h_lemma(HLemma variant, int i, std::int64_t order, const MTable& table = default_mtable());

}  // namespace qcong
