#pragma once

// Shared tables of p3(n) for the verifier, and coefficient formulas for T_l and
// p_{l,3} that read single coefficients off the p3 table:
//   T_l(N)     = sum_{t>=0} (-1)^t (2t+1) p3(N - l t(t+1)/2)
//   p_{l,3}(N) = sum_{m>=0} p3(m) p3(N - l m)
// so that a progression An+B only costs a few table lookups per index.

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "qcong/bigint.hpp"
#include "qcong/counts.hpp"
#include "qcong/residue.hpp"

namespace qcong {

/// Indices up to this bound are evaluated exactly; beyond it the verifier
/// works modulo 3^39.
inline constexpr std::int64_t kExactIndexLimit = 80000;

class CountTables {
 public:
  /// p3(0..upto), exact. Snapshots are immutable; growth replaces the table.
  std::shared_ptr<const std::vector<BigInt>> exact(std::int64_t upto);
  /// p3(0..upto) modulo 3^39.
  std::shared_ptr<const std::vector<Residue3>> residue(std::int64_t upto);

  static CountTables& global();

 private:
  std::mutex exact_mutex_;
  std::mutex residue_mutex_;
  std::shared_ptr<const std::vector<BigInt>> exact_;
  std::shared_ptr<const std::vector<Residue3>> residue_;
};

template <class Scalar>
Scalar count_coefficient(const std::vector<Scalar>& p3, const CountingFunction& f, std::int64_t n);

extern template BigInt count_coefficient<BigInt>(const std::vector<BigInt>&, const CountingFunction&, std::int64_t);
extern template Residue3 count_coefficient<Residue3>(const std::vector<Residue3>&, const CountingFunction&,
                                                     std::int64_t);

}  // namespace qcong
