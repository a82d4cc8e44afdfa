#pragma once

// Coefficient vectors of the generating-function identities.
//
// Every family is seeded by one of Hirschhorn's vectors x_k and advanced level
// by level with a rule of the form
//     next_j = sum_i prev_i * m_{4i + row_offset, i + j + col_shift},
// where the rule may alternate with the parity of the level. Because m_{i,j}
// vanishes outside ceil(i/3) <= j <= i, every vector has finite support and
// entries 1..J at one level depend only on entries 1..3J+3 of the level
// below, so everything here is exact.
//
// Level conventions: families with an odd/even structure (R, Y, Z, V, W) use
// level mu = 2*beta+1 or 2*beta+2; S and U use mu = beta+1. For X the level is
// the index k of x_k.

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "qcong/arith3.hpp"
#include "qcong/bigint.hpp"
#include "qcong/hmatrix.hpp"

namespace qcong {

enum class Family { X, R, S, Y, Z, U, V, W };

std::string to_string(Family f);
Family parse_family(const std::string& name);

/// Which x vector seeds level 1. The S and V families are seeded with
/// x_{2alpha+1} as stated; `Alternate` seeds them with x_{2alpha+2} instead,
/// for comparing the two readings. Other families ignore it.
enum class SeedReading { Stated, Alternate };

struct StepRule {
  int row_offset;  // m_{4i + row_offset, ...}
  int col_shift;   // m_{..., i + j + col_shift}
};

/// Rule taking level `level` to level+1 (for X: x_level to x_{level+1}).
StepRule step_rule(Family f, int level);

/// Index k of the x_k seeding level 1 of family f.
int seed_index(Family f, int alpha, SeedReading reading = SeedReading::Stated);

struct CoeffVector {
  Family family = Family::X;
  int alpha = 0;
  int level = 1;
  std::vector<BigInt> values;  // values[j-1]

  /// Entry j (1-based); zero beyond the stored range.
  BigInt at(int j) const;
  int jmax() const { return static_cast<int>(values.size()); }
};

/// Lower bound on pi(entry j) for the given family, alpha and level.
/// Throws std::invalid_argument for combinations without a stated bound.
int valuation_bound(Family f, int alpha, int mu, int j);

/// Name of the lemma giving the bound (C1..C14).
std::string bound_lemma(Family f, int mu);

/// Memoizing store of coefficient vectors over an m-table.
class VectorStore {
 public:
  explicit VectorStore(const MTable& table = default_mtable());

  CoeffVector x_vector(int k, int jmax) const;
  CoeffVector family_vector(Family f, int alpha, int mu, int jmax,
                            SeedReading reading = SeedReading::Stated) const;

 private:
  std::vector<BigInt> compute(std::vector<StepRule> const& rules, int jmax) const;

  const MTable& table_;
  mutable std::mutex mutex_;
  mutable std::map<std::tuple<int, int, int, int>, std::vector<BigInt>> cache_;
};

const VectorStore& default_vectors();

CoeffVector x_vector(int k, int jmax);
CoeffVector family_vector(Family f, int alpha, int mu, int jmax, SeedReading reading = SeedReading::Stated);

struct BoundViolation {
  int alpha = 0;
  int mu = 0;
  int j = 0;
  BigInt value;
  Valuation3 valuation = Valuation3::infinity();
  int bound = 0;
};

struct ValuationReport {
  Family family = Family::X;
  int checked = 0;
  std::vector<BoundViolation> violations;
  bool passed() const { return checked > 0 && violations.empty(); }
};

/// Entries of one vector that fall below their bound.
std::vector<BoundViolation> check_vector_bounds(const CoeffVector& v);

/// Checks every entry j <= jmax for alpha <= alpha_max and levels mu <= mu_max.
/// For X the levels are k = 2alpha+1 and 2alpha+2 and mu_max is not used.
ValuationReport check_valuation_bounds(Family f, int alpha_max, int mu_max, int jmax,
                                       const VectorStore& store = default_vectors());

}  // namespace qcong
