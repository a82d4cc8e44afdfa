#pragma once

// Declarative catalog of the congruence families and generating-function
// identities, and their instantiation at concrete parameters.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qcong/bigint.hpp"
#include "qcong/counts.hpp"
#include "qcong/vectors.hpp"

namespace qcong {

/// Parameter assignment. Each case reads only the names in its `parameters` list.
struct Params {
  int alpha = 0;
  int beta = 0;
  int k = 0;             // exponent of p, or the conjecture index k >= 1
  int lam = 0;           // the extra index in the two conjectures
  std::int64_t p = 0;    // auxiliary prime
  std::int64_t r = 0;    // B4 residue parameter, 7 or 11
  std::int64_t ell = 0;  // class member for the residue-class families
};

/// Indices A*n + B.
struct Progression {
  std::int64_t A = 1;
  std::int64_t B = 0;

  Progression() = default;
  Progression(std::int64_t a, std::int64_t b);
  std::int64_t at(std::int64_t n) const { return checked_add(checked_mul(A, n), B); }
  std::string to_string() const;
};

/// Ratio num/den that must be an integer; throws std::logic_error otherwise
/// (a non-integral shift means a mistranscribed formula).
std::int64_t exact_quotient(std::int64_t num, std::int64_t den, const std::string& what);

enum class CaseKind { Theorem, Prior, Conjecture };
std::string to_string(CaseKind kind);

/// Which l a case is stated for, when l is not a fixed formula.
///   OddClass : l == +-3^{2a+1} (mod 3^{2a+2})
///   EvenClass: l == +-3^{2a+2} (mod 3^{2a+3})
enum class ClassRule { None, OddClass, EvenClass };

/// Admissible auxiliary primes.
enum class PrimeRule { None, ThreeModFour, OddPrime, MinusThreeNonResidue };

bool in_class(ClassRule rule, int alpha, std::int64_t ell);
/// The `count` smallest positive members of the class with the given sign
/// (+1: l == 3^m, -1: l == -3^m modulo 3^{m+1}).
std::vector<std::int64_t> class_representatives(ClassRule rule, int alpha, int sign, int count);

struct CongruenceCase {
  std::string id;
  CaseKind kind = CaseKind::Theorem;
  std::string statement;
  std::vector<std::string> parameters;
  ClassRule class_rule = ClassRule::None;
  PrimeRule prime_rule = PrimeRule::None;
  bool triangular_branch = false;  // the two-branch MR10 statement
  std::function<CountingFunction(const Params&)> function;
  std::function<Progression(const Params&)> progression;
  std::function<int(const Params&)> exponent;
};

/// Right-hand side q^{j-1} E(q^3)^{a j + b} / E(q)^{c j + d} weighted by a
/// coefficient vector.
struct RhsPattern {
  int a = 12;
  int b = 0;
  int c = 12;
  int d = 0;
};

struct GfIdentity {
  std::string id;
  std::string statement;
  std::vector<std::string> parameters;
  ClassRule class_rule = ClassRule::None;
  Family family = Family::X;
  std::function<CountingFunction(const Params&)> function;
  std::function<Progression(const Params&)> progression;
  std::function<int(const Params&)> level;
  RhsPattern pattern;
};

const std::vector<CongruenceCase>& congruence_catalog();
const std::vector<GfIdentity>& identity_catalog();

/// Throws std::invalid_argument for unknown ids.
const CongruenceCase& find_case(const std::string& id);
const GfIdentity& find_identity(const std::string& id);

struct CongruenceInstance {
  const CongruenceCase* spec = nullptr;
  Params params;
  CountingFunction function;
  Progression progression;
  int exponent = 0;
  BigInt modulus;
  std::int64_t excluded_divisor = 0;  // skip n divisible by this (0: none)

  bool admissible(std::int64_t n) const { return excluded_divisor == 0 || n % excluded_divisor != 0; }
};

struct IdentityInstance {
  const GfIdentity* spec = nullptr;
  Params params;
  CountingFunction function;
  Progression progression;
  int level = 1;
  /// C-lemma bound on the j = 1 coefficient; the default modulus exponent
  /// for MOD comparisons.
  int lemma_exponent = 0;
};

/// Validates the parameters (ranges, class membership, prime conditions) and
/// evaluates the formulas. Throws std::invalid_argument on bad parameters.
CongruenceInstance instantiate(const CongruenceCase& c, const Params& params);
CongruenceInstance instantiate(const std::string& case_id, const Params& params);
IdentityInstance instantiate(const GfIdentity& g, const Params& params);

/// The listed parameters as (name, value) pairs, in catalog order.
std::vector<std::pair<std::string, std::int64_t>> describe(const std::vector<std::string>& names, const Params& p);

}  // namespace qcong
