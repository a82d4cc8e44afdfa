#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <set>

#include "oracles.hpp"
#include "qcong/catalog.hpp"
#include "qcong/count_tables.hpp"
#include "qcong/counts.hpp"
#include "qcong/report_json.hpp"
#include "qcong/suite.hpp"
#include "qcong/verify.hpp"

using namespace qcong;

namespace {

Params ab(int alpha, int beta) {
  Params p;
  p.alpha = alpha;
  p.beta = beta;
  return p;
}

Params abl(int alpha, int beta, std::int64_t ell) {
  Params p = ab(alpha, beta);
  p.ell = ell;
  return p;
}

// T_l(N) from the naive product oracle, independent of the count tables.
oracle::Poly regular_triples(std::int64_t ell, std::size_t n) {
  const auto p3 = oracle::inverse(oracle::power(oracle::euler_product(1, n), 3, n), n);
  return oracle::mul(p3, oracle::power(oracle::euler_product(ell, n), 3, n), n);
}

}  // namespace

TEST_CASE("catalog lists every family once") {
  std::set<std::string> ids;
  for (const auto& c : congruence_catalog()) CHECK(ids.insert(c.id).second);
  for (const char* id : {"G1", "B1", "B2", "B3", "B4", "T1", "T2", "T3", "BC1", "BC2"}) CHECK(ids.count(id) == 1);
  for (int i = 1; i <= 24; ++i) CHECK(ids.count("MR" + std::to_string(i)) == 1);

  std::set<std::string> gf;
  for (const auto& g : identity_catalog()) CHECK(gf.insert(g.id).second);
  CHECK(gf == std::set<std::string>{"H1", "H2", "T11", "D6", "T12", "T21", "T22", "T23", "T24", "T25", "T31", "T311",
                                    "T32", "T321"});

  CHECK(find_case("MR1").exponent(ab(1, 1)) == 7);
  CHECK(find_case("MR1").exponent(ab(0, 1)) == 4);
  Params conj;
  conj.k = 1;
  conj.lam = 1;
  CHECK(find_case("BC2").exponent(conj) == 4);
  CHECK(find_case("BC2").kind == CaseKind::Conjecture);
  CHECK(find_case("T3").exponent(ab(0, 2)) == 8);
  CHECK(find_case("G1").kind == CaseKind::Prior);
  CHECK(find_case("MR10").triangular_branch);
  CHECK_THROWS_AS(find_case("MR99"), std::invalid_argument);
  CHECK_THROWS_AS(find_identity("T99"), std::invalid_argument);
}

TEST_CASE("instantiation examples") {
  const auto mr1 = instantiate("MR1", ab(0, 0));
  CHECK(mr1.function == CountingFunction::regular(3));
  CHECK(mr1.progression.A == 3);
  CHECK(mr1.progression.B == 2);
  CHECK(mr1.modulus == 9);

  const auto mr5 = instantiate("MR5", ab(0, 0));
  CHECK(mr5.function == CountingFunction::regular(9));
  CHECK(mr5.progression.to_string() == "3n+2");
  CHECK(mr5.modulus == 9);

  const auto mr15 = instantiate("MR15", ab(0, 0));
  CHECK(mr15.function == CountingFunction::two_color(3));
  CHECK(mr15.progression.to_string() == "3n+2");
  CHECK(mr15.modulus == 9);

  Params prime = ab(0, 0);
  prime.p = 7;
  const auto mr4 = instantiate("MR4", prime);
  CHECK(mr4.exponent == 4);
  CHECK(mr4.excluded_divisor == 7);
  CHECK_FALSE(mr4.admissible(14));
  CHECK(mr4.admissible(15));
}

TEST_CASE("overlapping statements encode the same progressions") {
  const auto mr1 = instantiate("MR1", ab(0, 0));
  const auto g1 = instantiate("G1", ab(0, 0));
  CHECK(mr1.function == g1.function);
  CHECK(mr1.progression.A == g1.progression.A);
  CHECK(mr1.progression.B == g1.progression.B);
  CHECK(mr1.modulus == g1.modulus);

  const auto mr5 = instantiate("MR5", ab(0, 0));
  const auto b1 = instantiate("B1", ab(0, 0));
  CHECK(mr5.function == b1.function);
  CHECK(mr5.progression.A == b1.progression.A);
  CHECK(mr5.progression.B == b1.progression.B);
  CHECK(mr5.modulus == b1.modulus);
}

TEST_CASE("instantiation rejects bad parameters") {
  CHECK_THROWS_AS(instantiate("MR7", abl(0, 0, 4)), std::invalid_argument);
  CHECK_THROWS_AS(instantiate("MR7", abl(0, 0, 9)), std::invalid_argument);
  CHECK_NOTHROW(instantiate("MR7", abl(0, 0, 6)));
  Params p = ab(0, 0);
  p.p = 5;
  CHECK_THROWS_AS(instantiate("MR4", p), std::invalid_argument);
  p.p = 15;
  CHECK_THROWS_AS(instantiate("MR11", abl(0, 0, 3)), std::invalid_argument);
  Params b4 = ab(0, 0);
  b4.r = 5;
  CHECK_THROWS_AS(instantiate("B4", b4), std::invalid_argument);
  Params conj;
  conj.k = 0;
  CHECK_THROWS_AS(instantiate("BC1", conj), std::invalid_argument);
  CHECK_THROWS_AS(instantiate("MR1", ab(-1, 0)), std::invalid_argument);
  CHECK_THROWS_AS(Progression(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(exact_quotient(13, 8, "test"), std::logic_error);
  CHECK(exact_quotient(16, 8, "test") == 2);
}

TEST_CASE("class representatives") {
  CHECK(class_representatives(ClassRule::OddClass, 0, 1, 4) == std::vector<std::int64_t>{3, 12, 21, 30});
  CHECK(class_representatives(ClassRule::OddClass, 0, -1, 4) == std::vector<std::int64_t>{6, 15, 24, 33});
  CHECK(class_representatives(ClassRule::EvenClass, 0, 1, 4) == std::vector<std::int64_t>{9, 36, 63, 90});
  CHECK(class_representatives(ClassRule::EvenClass, 0, -1, 4) == std::vector<std::int64_t>{18, 45, 72, 99});
  CHECK(class_representatives(ClassRule::OddClass, 1, 1, 2) == std::vector<std::int64_t>{27, 108});
  for (int alpha = 0; alpha <= 2; ++alpha)
    for (int sign : {1, -1})
      for (auto rule : {ClassRule::OddClass, ClassRule::EvenClass})
        for (auto ell : class_representatives(rule, alpha, sign, 6)) CHECK(in_class(rule, alpha, ell));
  CHECK_FALSE(in_class(ClassRule::OddClass, 0, 9));
  CHECK_FALSE(in_class(ClassRule::EvenClass, 0, 3));
}

TEST_CASE("congruence examples") {
  const auto mr1 = verify_congruence(instantiate("MR1", ab(0, 0)), 200);
  CHECK(mr1.status == Status::Pass);
  CHECK(mr1.checked == 201);
  CHECK(mr1.required == 2);
  const auto t3 = regular_triples(3, 3 * 200 + 3);
  CHECK(t3[2] == 9);
  CHECK(t3[5] == 81);
  for (int n = 0; n <= 200; ++n) CHECK(BigInt(t3[3 * n + 2] % 9) == 0);

  Params prime = ab(0, 0);
  prime.p = 7;
  const auto mr4 = verify_congruence(instantiate("MR4", prime), 50);
  CHECK(mr4.status == Status::Pass);
  CHECK(mr4.required == 4);
  CHECK(mr4.checked == 51 - 8);

  const auto g1 = verify_congruence(instantiate("G1", ab(0, 1)), 100);
  CHECK(g1.status == Status::Pass);
  CHECK(g1.progression == "27n+20");
  CHECK(g1.required == 4);
}

TEST_CASE("a raised modulus produces a structured counterexample") {
  auto inst = instantiate("MR1", ab(0, 0));
  inst.exponent = 3;
  inst.modulus = 27;
  const auto r = verify_congruence(inst, 100);
  CHECK(r.status == Status::Fail);
  CHECK(r.max_exponent_holding == 2);
  REQUIRE_FALSE(r.failures.empty());
  CHECK(r.failures.size() <= kMaxListedFailures);
  CHECK(r.failure_count >= static_cast<std::int64_t>(r.failures.size()));
  const auto t3 = regular_triples(3, 303);
  const auto& f = r.failures.front();
  CHECK(f.n == 0);
  CHECK(f.value == t3[2]);
  CHECK(f.valuation == Valuation3::finite(2));
  CHECK(f.required == 3);

  const auto j = to_json(r);
  CHECK(j["case"] == "MR1");
  CHECK(j["status"] == "FAIL");
  CHECK(j["checked"] == 101);
  CHECK(j["params"]["alpha"] == 0);
  CHECK(j["failures"][0]["n"] == 0);
  CHECK(j["failures"][0]["value"] == "9");
  CHECK(j["failures"][0]["valuation"] == 2);
  CHECK(j["failures"][0]["required"] == 3);
}

TEST_CASE("two-branch triangular check") {
  // At l = 3 the displayed modulus 3^4 does not hold: T_3(9*4+2) = 25894458
  // has valuation 3 although 4 is not triangular.
  const auto t3 = regular_triples(3, 9 * 60 + 3);
  CHECK(t3[38] == BigInt("25894458"));
  CHECK(pi3(t3[38]) == Valuation3::finite(3));

  const auto r = verify_mr10(0, 0, 3, 60);
  CHECK(r.status == Status::Fail);
  CHECK(r.required == 4);
  CHECK(r.max_exponent_holding == 2);
  const bool lists_four = std::any_of(r.failures.begin(), r.failures.end(), [](const Failure& f) {
    return f.n == 4 && f.value == BigInt("25894458") && f.valuation == Valuation3::finite(3);
  });
  CHECK(lists_four);

  // Down to what holds, and one step beyond.
  CHECK(verify_mr10(0, 0, 3, 60, 2).status == Status::Pass);
  CHECK(verify_mr10(0, 0, 3, 60, 3).status == Status::Fail);
  CHECK_FALSE(r.notes.empty());
}

TEST_CASE("failing statements list the largest exponent that holds") {
  for (std::int64_t ell : {6, 12}) {
    const auto r = verify_congruence(instantiate("MR7", abl(0, 1, ell)), 100);
    CAPTURE(ell);
    CHECK(r.status == Status::Fail);
    REQUIRE(r.max_exponent_holding.has_value());
    CHECK(*r.max_exponent_holding < *r.required);
    auto lowered = instantiate("MR7", abl(0, 1, ell));
    lowered.exponent = *r.max_exponent_holding;
    CHECK(verify_congruence(lowered, 100).status == Status::Pass);
  }
}

TEST_CASE("property: verification is monotone in n_max") {
  const std::vector<std::pair<std::string, Params>> cases = {
      {"MR1", ab(1, 0)}, {"MR7", abl(0, 1, 6)}, {"MR8", abl(0, 0, 6)}, {"MR12", abl(0, 0, 18)},
      {"MR15", ab(0, 1)}, {"MR21", abl(0, 1, 6)}, {"G1", ab(0, 2)}};
  for (const auto& [id, params] : cases) {
    const auto inst = instantiate(id, params);
    Status prev = Status::Pass;
    std::int64_t prev_failures = 0;
    std::optional<int> prev_holding;
    for (std::int64_t n_max : {5, 20, 50, 100}) {
      const auto r = verify_congruence(inst, n_max);
      CAPTURE(id);
      CAPTURE(n_max);
      if (prev == Status::Fail) CHECK(r.status == Status::Fail);
      CHECK(r.failure_count >= prev_failures);
      if (prev_holding && r.max_exponent_holding) CHECK(*r.max_exponent_holding <= *prev_holding);
      prev = r.status;
      prev_failures = r.failure_count;
      prev_holding = r.max_exponent_holding;
    }
  }
}

TEST_CASE("large indices switch to residue arithmetic consistently") {
  const auto inst = instantiate("MR1", ab(1, 1));
  CHECK(inst.progression.A == 243);
  CHECK(inst.progression.at(320) < kExactIndexLimit);
  CHECK(inst.progression.at(400) > kExactIndexLimit);
  const auto small = verify_congruence(inst, 320);
  const auto large = verify_congruence(inst, 400);
  CHECK(small.arithmetic == Arithmetic::Exact);
  CHECK(large.arithmetic == Arithmetic::Residue);
  CHECK(small.status == Status::Pass);
  CHECK(large.status == Status::Pass);
  CHECK(large.checked == 401);
}

TEST_CASE("generating-function identities") {
  CHECK(verify_gf_identity(instantiate(find_identity("H1"), ab(0, 0)), 40).status == Status::Pass);
  CHECK(verify_gf_identity(instantiate(find_identity("H1"), ab(0, 0)), 60).status == Status::Pass);
  CHECK(verify_gf_identity(instantiate(find_identity("T11"), ab(0, 1)), 30).status == Status::Pass);

  const auto sides = identity_sides(instantiate(find_identity("H1"), ab(0, 0)), 40);
  const auto direct = scale(eta_quotient(EtaQuotientSpec::parse("E(3)^9 * E(1)^-12"), 40), BigInt(9));
  CHECK(sides.lhs == direct);
  CHECK(sides.rhs == direct);

  for (const char* id : {"H1", "H2", "T11", "D6", "T12", "T21", "T22", "T23"})
    for (int alpha = 0; alpha <= 1; ++alpha)
      for (int beta = 0; beta <= 1; ++beta) {
        const auto inst = instantiate(find_identity(id), ab(alpha, beta));
        const auto r = verify_gf_identity(inst, 20);
        CAPTURE(id);
        CAPTURE(alpha);
        CAPTURE(beta);
        CHECK(r.status == Status::Pass);
        CHECK(r.check == "identity-exact");
        // The leading coefficient is the first vector entry, and every
        // coefficient inherits the j = 1 valuation bound.
        const auto s = identity_sides(inst, 20);
        CHECK(series_min_valuation3(s.lhs, 20).at_least(inst.lemma_exponent));
      }
}

TEST_CASE("exact identity sides match brute-force progressions") {
  const auto inst = instantiate(find_identity("T21"), ab(0, 0));
  const auto s = identity_sides(inst, 15);
  const auto f = count_series(inst.function, inst.progression.at(15));
  for (int n = 0; n < 15; ++n) CHECK(s.lhs.coefficient(n) == f.coefficient(inst.progression.at(n)));
}

TEST_CASE("identity comparisons in both modes") {
  const auto t31 = instantiate(find_identity("T31"), abl(0, 0, 15));
  const auto mod = verify_gf_identity(t31, 30, {IdentityMode::Mod, std::nullopt, SeedReading::Stated});
  CHECK(mod.status == Status::Pass);
  CHECK(mod.check == "identity-mod");
  CHECK(mod.required == t31.lemma_exponent);

  // The right side as displayed differs from sum T_3(3n+2) q^n = 9 E3^9 / E1^9 at q^3.
  const auto exact = verify_gf_identity(instantiate(find_identity("T31"), abl(0, 0, 3)), 30);
  CHECK(exact.status == Status::Fail);
  const auto lhs = identity_sides(instantiate(find_identity("T31"), abl(0, 0, 3)), 10).lhs;
  CHECK(lhs == scale(eta_quotient(EtaQuotientSpec::parse("E(3)^9 * E(1)^-9"), 10), BigInt(9)));
  CHECK(lhs.coefficient(3) == 2214);
}

TEST_CASE("seed readings") {
  for (const auto& c : compare_seed_readings(1, 1, 20)) {
    CAPTURE(c.id);
    CAPTURE(c.alpha);
    CAPTURE(c.beta);
    CHECK(c.stated_exact);
    CHECK_FALSE(c.alternate_exact);
  }
}

TEST_CASE("suite runs") {
  SuiteConfig empty;
  empty.alpha.clear();
  empty.beta.clear();
  empty.prior_beta.clear();
  empty.conjecture_k.clear();
  empty.identity_alpha.clear();
  empty.identity_beta.clear();
  const auto none = run_suite(empty);
  CHECK(none.overall == Status::Skipped);
  for (const auto& r : none.reports) CHECK(r.status == Status::Skipped);

  SuiteConfig small;
  small.only = {"MR1", "G1", "H1", "BC1"};
  small.threads = 1;
  const auto one = run_suite(small);
  CHECK(one.overall == Status::Pass);
  CHECK(one.discrepancies.empty());
  small.threads = 4;
  CHECK(to_json(run_suite(small)).dump() == to_json(one).dump());

  SuiteConfig failing;
  failing.only = {"MR10"};
  failing.threads = 2;
  const auto red = run_suite(failing);
  CHECK(red.overall == Status::Fail);
  CHECK_FALSE(red.discrepancies.empty());

  SuiteConfig conj;
  conj.only = {"BC1", "BC2"};
  for (const auto& r : run_suite(conj).reports) {
    CHECK(r.kind == CaseKind::Conjecture);
    CHECK_FALSE(r.gating);
  }
}

TEST_CASE("suite configuration") {
  CHECK_THROWS_AS(SuiteConfig::from_json(nlohmann::json::parse(R"({"alphas": [0]})")), std::invalid_argument);
  const auto c = SuiteConfig::from_json(nlohmann::json::parse(R"({"n_max": 7, "primes": {"MR4": [3]}})"));
  CHECK(c.n_max == 7);
  CHECK(c.primes.at("MR4") == std::vector<std::int64_t>{3});
  CHECK(c.alpha == std::vector<int>{0, 1});
  unsetenv(kThreadsEnv);
  CHECK(resolve_threads(3) == 3);
  CHECK(resolve_threads(0) >= 1);
}

TEST_CASE("shipped default suite matches the built-in defaults") {
  const auto file = SuiteConfig::load(QCONG_TEST_DEFAULT_SUITE);
  const SuiteConfig builtin;
  CHECK(file.alpha == builtin.alpha);
  CHECK(file.beta == builtin.beta);
  CHECK(file.primes == builtin.primes);
  CHECK(file.prior_beta == builtin.prior_beta);
  CHECK(file.n_max == builtin.n_max);
  CHECK(file.n_max_small_step == builtin.n_max_small_step);
  CHECK(file.n_max_prime == builtin.n_max_prime);
  CHECK(file.n_max_prior == builtin.n_max_prior);
  CHECK(file.identity_order == builtin.identity_order);
  CHECK(file.class_representatives == builtin.class_representatives);
  CHECK(file.conjectures_gate == builtin.conjectures_gate);
}
