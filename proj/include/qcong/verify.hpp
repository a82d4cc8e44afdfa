#pragma once

// Checking catalog entries against computed coefficients.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcong/arith3.hpp"
#include "qcong/catalog.hpp"

namespace qcong {

enum class Status { Pass, Fail, Skipped };
std::string to_string(Status s);

enum class Arithmetic { Exact, Residue };

struct Failure {
  std::int64_t n = 0;
  BigInt value;  // the coefficient; its residue mod 3^39 under Arithmetic::Residue
  Valuation3 valuation = Valuation3::infinity();
  std::optional<int> required;  // empty for exact equality
};

/// At most this many failures are listed; failure_count has the total.
inline constexpr std::size_t kMaxListedFailures = 20;

struct Report {
  std::string case_id;
  std::string check;  // "congruence", "identity-exact", "identity-mod"
  CaseKind kind = CaseKind::Theorem;
  bool gating = true;  // whether a FAIL affects the suite status
  std::vector<std::pair<std::string, std::int64_t>> params;
  std::string function;
  std::string progression;
  std::optional<int> required;  // modulus exponent; empty for exact comparisons
  std::int64_t checked = 0;
  std::vector<Failure> failures;
  std::int64_t failure_count = 0;
  /// Smallest valuation seen (of the coefficient, or of the difference of the
  /// two sides); empty when every value checked was 0. Under residue
  /// arithmetic 39 means "at least 39".
  std::optional<int> max_exponent_holding;
  Arithmetic arithmetic = Arithmetic::Exact;
  std::vector<std::string> notes;
  Status status = Status::Skipped;

  void add_failure(Failure f);
  void observe(int valuation);
  /// PASS iff something was checked and nothing failed.
  void finalize();
};

Report verify_congruence(const CongruenceInstance& inst, std::int64_t n_max);

/// Two-branch check: with c the coefficient at n = 0, requires
///   coefficient == c (-1)^k (2k+1)  mod 3^e   when n = k(k+1)/2,
///   coefficient == 0               mod 3^e   otherwise.
/// A note records whether the form without c, (-1)^n (2n+1), also holds.
Report verify_mr10(const CongruenceInstance& inst, std::int64_t n_max);
Report verify_mr10(int alpha, int beta, std::int64_t ell, std::int64_t n_max,
                   std::optional<int> exponent_override = std::nullopt);

enum class IdentityMode { Exact, Mod };
std::string to_string(IdentityMode m);

struct IdentityCheck {
  IdentityMode mode = IdentityMode::Exact;
  std::optional<int> exponent;  // MOD only; defaults to the C-lemma bound at j = 1
  SeedReading seed = SeedReading::Stated;
};

/// Compares sum_n f(An+B) q^n with sum_{j<=order+1} v_j q^{j-1} E3^{aj+b}/E1^{cj+d}
/// for the first `order` coefficients.
Report verify_gf_identity(const IdentityInstance& inst, std::int64_t order, const IdentityCheck& check = {});

/// The two sides as exact series (the left side only when its indices stay
/// within the exact range).
struct IdentitySides {
  Series lhs;
  Series rhs;
};
IdentitySides identity_sides(const IdentityInstance& inst, std::int64_t order,
                             SeedReading seed = SeedReading::Stated);

struct SeedComparison {
  std::string id;
  int alpha = 0;
  int beta = 0;
  bool stated_exact = false;
  bool alternate_exact = false;
};

/// Runs the s- and v-family identities (T12, T22) in EXACT mode under both
/// seed readings.
std::vector<SeedComparison> compare_seed_readings(int alpha_max, int beta_max, std::int64_t order);

}  // namespace qcong
