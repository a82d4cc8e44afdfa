#include "qcong/catalog.hpp"

#include <sstream>
#include <stdexcept>

#include "qcong/arith3.hpp"

namespace qcong {

Progression::Progression(std::int64_t a, std::int64_t b) : A(a), B(b) {
  if (a < 1) throw std::invalid_argument("progression step must be positive");
  if (b < 0) throw std::invalid_argument("progression shift must be nonnegative");
}

std::string Progression::to_string() const {
  std::ostringstream os;
  os << A << "n+" << B;
  return os.str();
}

std::int64_t exact_quotient(std::int64_t num, std::int64_t den, const std::string& what) {
  if (den == 0 || num % den != 0) {
    throw std::logic_error("non-integral progression shift in " + what + ": " + std::to_string(num) + "/" +
                           std::to_string(den));
  }
  return num / den;
}

std::string to_string(CaseKind kind) {
  switch (kind) {
    case CaseKind::Theorem: return "theorem";
    case CaseKind::Prior: return "prior";
    case CaseKind::Conjecture: return "conjecture";
  }
  return "?";
}

namespace {

std::int64_t pow3(int e) {
  if (e < 0) throw std::invalid_argument("negative power of 3");
  return checked_pow(3, e);
}

int class_power(ClassRule rule, int alpha) { return rule == ClassRule::OddClass ? 2 * alpha + 1 : 2 * alpha + 2; }

using Fn = std::function<CountingFunction(const Params&)>;
using Prog = std::function<Progression(const Params&)>;
using Exp = std::function<int(const Params&)>;

Fn regular(std::function<std::int64_t(const Params&)> ell) {
  return [ell](const Params& p) { return CountingFunction::regular(ell(p)); };
}
Fn two_color(std::function<std::int64_t(const Params&)> ell) {
  return [ell](const Params& p) { return CountingFunction::two_color(ell(p)); };
}
std::int64_t class_ell(const Params& p) { return p.ell; }

// Progression A n + num/den, checking integrality.
Prog prog(std::string id, std::function<std::int64_t(const Params&)> a, std::function<std::int64_t(const Params&)> num,
          std::int64_t den = 1) {
  return [id, a, num, den](const Params& p) { return Progression(a(p), exact_quotient(num(p), den, id)); };
}

// p^(2k+1) and p^(2k+2).
std::int64_t podd(const Params& p) { return checked_pow(p.p, 2 * p.k + 1); }
std::int64_t peven(const Params& p) { return checked_pow(p.p, 2 * p.k + 2); }

std::vector<CongruenceCase> build_cases() {
  std::vector<CongruenceCase> c;
  const std::vector<std::string> B = {"beta"};
  const std::vector<std::string> AB = {"alpha", "beta"};
  const std::vector<std::string> ABL = {"alpha", "beta", "ell"};
  const std::vector<std::string> ABPK = {"alpha", "beta", "p", "k"};
  const std::vector<std::string> ABLPK = {"alpha", "beta", "ell", "p", "k"};

  // Earlier results.
  c.push_back({"G1", CaseKind::Prior, "T_3(3^{2b+1} n + (3^{2b+2}-1)/4) == 0 mod 3^{2b+2}", B, ClassRule::None,
               PrimeRule::None, false, regular([](const Params&) { return 3; }),
               prog("G1", [](const Params& p) { return pow3(2 * p.beta + 1); },
                    [](const Params& p) { return pow3(2 * p.beta + 2) - 1; }, 4),
               [](const Params& p) { return 2 * p.beta + 2; }});
  c.push_back({"B1", CaseKind::Prior, "T_9(3^{b+1}(n+1) - 1) == 0 mod 3^{2b+2}", B, ClassRule::None, PrimeRule::None,
               false, regular([](const Params&) { return 9; }),
               prog("B1", [](const Params& p) { return pow3(p.beta + 1); },
                    [](const Params& p) { return pow3(p.beta + 1) - 1; }),
               [](const Params& p) { return 2 * p.beta + 2; }});
  c.push_back({"B2", CaseKind::Prior, "T_9(3^{b+2} n + 2*3^{b+1} - 1) == 0 mod 3^{2b+3}", B, ClassRule::None,
               PrimeRule::None, false, regular([](const Params&) { return 9; }),
               prog("B2", [](const Params& p) { return pow3(p.beta + 2); },
                    [](const Params& p) { return 2 * pow3(p.beta + 1) - 1; }),
               [](const Params& p) { return 2 * p.beta + 3; }});
  c.push_back({"B3", CaseKind::Prior, "T_27(3^{2b+3} n + (3^{2b+4}-13)/4) == 0 mod 3^{2b+5}", B, ClassRule::None,
               PrimeRule::None, false, regular([](const Params&) { return 27; }),
               prog("B3", [](const Params& p) { return pow3(2 * p.beta + 3); },
                    [](const Params& p) { return pow3(2 * p.beta + 4) - 13; }, 4),
               [](const Params& p) { return 2 * p.beta + 5; }});
  c.push_back({"B4", CaseKind::Prior, "T_27(3^{2b+4} n + (r*3^{2b+3}-13)/4) == 0 mod 3^{2b+7}, r in {7,11}",
               {"beta", "r"}, ClassRule::None, PrimeRule::None, false, regular([](const Params&) { return 27; }),
               prog("B4", [](const Params& p) { return pow3(2 * p.beta + 4); },
                    [](const Params& p) { return checked_mul(p.r, pow3(2 * p.beta + 3)) - 13; }, 4),
               [](const Params& p) { return 2 * p.beta + 7; }});
  c.push_back({"T1", CaseKind::Prior, "p_{3,3}(3^{b+1} n + (3^{b+1}+1)/2) == 0 mod 3^{b+2}", B, ClassRule::None,
               PrimeRule::None, false, two_color([](const Params&) { return 3; }),
               prog("T1", [](const Params& p) { return pow3(p.beta + 1); },
                    [](const Params& p) { return pow3(p.beta + 1) + 1; }, 2),
               [](const Params& p) { return p.beta + 2; }});
  c.push_back({"T2", CaseKind::Prior, "p_{9,3}(3^{2b+1} n + (3^{2b+1}+5)/4) == 0 mod 3^{2b+2}", B, ClassRule::None,
               PrimeRule::None, false, two_color([](const Params&) { return 9; }),
               prog("T2", [](const Params& p) { return pow3(2 * p.beta + 1); },
                    [](const Params& p) { return pow3(2 * p.beta + 1) + 5; }, 4),
               [](const Params& p) { return 2 * p.beta + 2; }});
  c.push_back({"T3", CaseKind::Prior, "p_{9,3}(3^{2b+2} n + (3^{2b+3}+5)/4) == 0 mod 3^{2b+4}", B, ClassRule::None,
               PrimeRule::None, false, two_color([](const Params&) { return 9; }),
               prog("T3", [](const Params& p) { return pow3(2 * p.beta + 2); },
                    [](const Params& p) { return pow3(2 * p.beta + 3) + 5; }, 4),
               [](const Params& p) { return 2 * p.beta + 4; }});

  // Conjectures; `lam` is the second index, k >= 1.
  c.push_back({"BC1", CaseKind::Conjecture,
               "T_{3^{2k}}(3^{lam+2k-1} n + 3^{lam+2k-1} - (3^{2k}-1)/8) == 0 mod 3^{3k+2lam-1}", {"k", "lam"},
               ClassRule::None, PrimeRule::None, false, regular([](const Params& p) { return pow3(2 * p.k); }),
               [](const Params& p) {
                 const std::int64_t a = pow3(p.lam + 2 * p.k - 1);
                 return Progression(a, a - exact_quotient(pow3(2 * p.k) - 1, 8, "BC1"));
               },
               [](const Params& p) { return 3 * p.k + 2 * p.lam - 1; }});
  c.push_back({"BC2", CaseKind::Conjecture,
               "T_{3^{2k-1}}(3^{2lam+2k-1} n + (2*3^{2lam+2k} - 3^{2k-1} + 1)/8) == 0 mod 3^{3k+2lam-1}",
               {"k", "lam"}, ClassRule::None, PrimeRule::None, false,
               regular([](const Params& p) { return pow3(2 * p.k - 1); }),
               prog("BC2", [](const Params& p) { return pow3(2 * p.lam + 2 * p.k - 1); },
                    [](const Params& p) { return 2 * pow3(2 * p.lam + 2 * p.k) - pow3(2 * p.k - 1) + 1; }, 8),
               [](const Params& p) { return 3 * p.k + 2 * p.lam - 1; }});

  // T_{3^{2a+1}}.
  const auto t_odd = regular([](const Params& p) { return pow3(2 * p.alpha + 1); });
  c.push_back({"MR1", CaseKind::Theorem,
               "T_{3^{2a+1}}(3^{2a+2b+1} n + (2*3^{2a+2b+2} - 3^{2a+1} + 1)/8) == 0 mod 3^{3a+2b+2}", AB,
               ClassRule::None, PrimeRule::None, false, t_odd,
               prog("MR1", [](const Params& p) { return pow3(2 * p.alpha + 2 * p.beta + 1); },
                    [](const Params& p) { return 2 * pow3(2 * p.alpha + 2 * p.beta + 2) - pow3(2 * p.alpha + 1) + 1; },
                    8),
               [](const Params& p) { return 3 * p.alpha + 2 * p.beta + 2; }});
  c.push_back({"MR2", CaseKind::Theorem,
               "T_{3^{2a+1}}(3^{2a+2b+2} n + (14*3^{2a+2b+1} - 3^{2a+1} + 1)/8) == 0 mod 3^{3a+2b+4}", AB,
               ClassRule::None, PrimeRule::None, false, t_odd,
               prog("MR2", [](const Params& p) { return pow3(2 * p.alpha + 2 * p.beta + 2); },
                    [](const Params& p) { return 14 * pow3(2 * p.alpha + 2 * p.beta + 1) - pow3(2 * p.alpha + 1) + 1; },
                    8),
               [](const Params& p) { return 3 * p.alpha + 2 * p.beta + 4; }});
  c.push_back({"MR3", CaseKind::Theorem,
               "T_{3^{2a+1}}(3^{2a+2b+2} n + (22*3^{2a+2b+1} - 3^{2a+1} + 1)/8) == 0 mod 3^{3a+2b+5}", AB,
               ClassRule::None, PrimeRule::None, false, t_odd,
               prog("MR3", [](const Params& p) { return pow3(2 * p.alpha + 2 * p.beta + 2); },
                    [](const Params& p) { return 22 * pow3(2 * p.alpha + 2 * p.beta + 1) - pow3(2 * p.alpha + 1) + 1; },
                    8),
               [](const Params& p) { return 3 * p.alpha + 2 * p.beta + 5; }});
  c.push_back(
      {"MR4", CaseKind::Theorem,
       "T_{3^{2a+1}}(3^{2a+2b+2} p^{2k+1} n + (2 p^{2k+2} 3^{2a+2b+2} - 3^{2a+1} + 1)/8) == 0 mod 3^{3a+2b+4}, "
       "p == 3 mod 4, p does not divide n",
       ABPK, ClassRule::None, PrimeRule::ThreeModFour, false, t_odd,
       prog("MR4", [](const Params& p) { return checked_mul(pow3(2 * p.alpha + 2 * p.beta + 2), podd(p)); },
            [](const Params& p) {
              return checked_mul(2 * peven(p), pow3(2 * p.alpha + 2 * p.beta + 2)) - pow3(2 * p.alpha + 1) + 1;
            },
            8),
       [](const Params& p) { return 3 * p.alpha + 2 * p.beta + 4; }});

  // T_{3^{2a+2}}.
  const auto t_even = regular([](const Params& p) { return pow3(2 * p.alpha + 2); });
  c.push_back({"MR5", CaseKind::Theorem, "T_{3^{2a+2}}(3^{2a+b+1}(n+1) - (3^{2a+2}-1)/8) == 0 mod 3^{3a+2b+2}", AB,
               ClassRule::None, PrimeRule::None, false, t_even,
               [](const Params& p) {
                 const std::int64_t a = pow3(2 * p.alpha + p.beta + 1);
                 return Progression(a, a - exact_quotient(pow3(2 * p.alpha + 2) - 1, 8, "MR5"));
               },
               [](const Params& p) { return 3 * p.alpha + 2 * p.beta + 2; }});
  c.push_back({"MR6", CaseKind::Theorem, "T_{3^{2a+2}}(3^{2a+b+1}(3n+2) - (3^{2a+2}-1)/8) == 0 mod 3^{3a+2b+3}", AB,
               ClassRule::None, PrimeRule::None, false, t_even,
               [](const Params& p) {
                 const std::int64_t a = pow3(2 * p.alpha + p.beta + 1);
                 return Progression(3 * a, 2 * a - exact_quotient(pow3(2 * p.alpha + 2) - 1, 8, "MR6"));
               },
               [](const Params& p) { return 3 * p.alpha + 2 * p.beta + 3; }});

  // T_l, l == +-3^{2a+1} mod 3^{2a+2}.
  const auto t_class = regular(class_ell);
  auto odd_class_b = [](std::int64_t mult, int extra) {
    // (mult * 3^{2a+2b+extra} + 2*3^{2a+1} + 1)
    return [mult, extra](const Params& p) {
      return checked_mul(mult, pow3(2 * p.alpha + 2 * p.beta + extra)) + 2 * pow3(2 * p.alpha + 1) + 1;
    };
  };
  c.push_back({"MR7", CaseKind::Theorem,
               "T_l(3^{2a+2b+1} n + (3^{2a+2b+2} + 2*3^{2a+1} + 1)/8) == 0 mod 3^{3a+b+2}, l == +-3^{2a+1} mod "
               "3^{2a+2}",
               ABL, ClassRule::OddClass, PrimeRule::None, false, t_class,
               prog("MR7", [](const Params& p) { return pow3(2 * p.alpha + 2 * p.beta + 1); }, odd_class_b(1, 2), 8),
               [](const Params& p) { return 3 * p.alpha + p.beta + 2; }});
  c.push_back({"MR8", CaseKind::Theorem,
               "T_l(3^{2a+2b+2} n + (11*3^{2a+2b+1} + 2*3^{2a+1} + 1)/8) == 0 mod 3^{3a+b+4}, l == +-3^{2a+1} mod "
               "3^{2a+2}",
               ABL, ClassRule::OddClass, PrimeRule::None, false, t_class,
               prog("MR8", [](const Params& p) { return pow3(2 * p.alpha + 2 * p.beta + 2); }, odd_class_b(11, 1), 8),
               [](const Params& p) { return 3 * p.alpha + p.beta + 4; }});
  c.push_back({"MR9", CaseKind::Theorem,
               "T_l(3^{2a+2b+2} n + (19*3^{2a+2b+1} + 2*3^{2a+1} + 1)/8) == 0 mod 3^{3a+b+5}, l == +-3^{2a+1} mod "
               "3^{2a+2}",
               ABL, ClassRule::OddClass, PrimeRule::None, false, t_class,
               prog("MR9", [](const Params& p) { return pow3(2 * p.alpha + 2 * p.beta + 2); }, odd_class_b(19, 1), 8),
               [](const Params& p) { return 3 * p.alpha + p.beta + 5; }});
  c.push_back({"MR10", CaseKind::Theorem,
               "T_l(3^{2a+2b+2} n + (3^{2a+2b+2} + 2*3^{2a+1} + 1)/8) == c (-1)^k (2k+1) mod 3^{3a+b+4} if n = "
               "k(k+1)/2, == 0 otherwise, l == +-3^{2a+1} mod 3^{2a+2}",
               ABL, ClassRule::OddClass, PrimeRule::None, true, t_class,
               prog("MR10", [](const Params& p) { return pow3(2 * p.alpha + 2 * p.beta + 2); }, odd_class_b(1, 2), 8),
               [](const Params& p) { return 3 * p.alpha + p.beta + 4; }});
  c.push_back(
      {"MR11", CaseKind::Theorem,
       "T_l(3^{2a+2b+2} p^{2k+1} n + (p^{2k+2} 3^{2a+2b+2} + 2*3^{2a+1} + 1)/8) == 0 mod 3^{3a+b+4}, "
       "l == +-3^{2a+1} mod 3^{2a+2}, p odd prime not dividing n",
       ABLPK, ClassRule::OddClass, PrimeRule::OddPrime, false, t_class,
       prog("MR11", [](const Params& p) { return checked_mul(pow3(2 * p.alpha + 2 * p.beta + 2), podd(p)); },
            [](const Params& p) {
              return checked_mul(peven(p), pow3(2 * p.alpha + 2 * p.beta + 2)) + 2 * pow3(2 * p.alpha + 1) + 1;
            },
            8),
       [](const Params& p) { return 3 * p.alpha + p.beta + 4; }});

  // T_l, l == +-3^{2a+2} mod 3^{2a+3}.
  auto even_class_b = [](std::int64_t mult, int extra) {
    return [mult, extra](const Params& p) {
      return checked_mul(mult, pow3(2 * p.alpha + 2 * p.beta + extra)) + 2 * pow3(2 * p.alpha + 2) + 1;
    };
  };
  c.push_back({"MR12", CaseKind::Theorem,
               "T_l(3^{2a+2b+2} n + (5*3^{2a+2b+2} + 2*3^{2a+2} + 1)/8) == 0 mod 3^{3a+3b+4}, l == +-3^{2a+2} mod "
               "3^{2a+3}",
               ABL, ClassRule::EvenClass, PrimeRule::None, false, t_class,
               prog("MR12", [](const Params& p) { return pow3(2 * p.alpha + 2 * p.beta + 2); }, even_class_b(5, 2), 8),
               [](const Params& p) { return 3 * p.alpha + 3 * p.beta + 4; }});
  c.push_back({"MR13", CaseKind::Theorem,
               "T_l(3^{2a+2b+3} n + (13*3^{2a+2b+2} + 2*3^{2a+2} + 1)/8) == 0 mod 3^{3a+3b+5}, l == +-3^{2a+2} mod "
               "3^{2a+3}",
               ABL, ClassRule::EvenClass, PrimeRule::None, false, t_class,
               prog("MR13", [](const Params& p) { return pow3(2 * p.alpha + 2 * p.beta + 3); }, even_class_b(13, 2), 8),
               [](const Params& p) { return 3 * p.alpha + 3 * p.beta + 5; }});
  c.push_back({"MR14", CaseKind::Theorem,
               "T_l(3^{2a+2b+3} n + (7*3^{2a+2b+3} + 2*3^{2a+2} + 1)/8) == 0 mod 3^{3a+3b+6}, l == +-3^{2a+2} mod "
               "3^{2a+3}",
               ABL, ClassRule::EvenClass, PrimeRule::None, false, t_class,
               prog("MR14", [](const Params& p) { return pow3(2 * p.alpha + 2 * p.beta + 3); }, even_class_b(7, 3), 8),
               [](const Params& p) { return 3 * p.alpha + 3 * p.beta + 6; }});

  // p_{3^{2a+1},3}.
  const auto p_odd = two_color([](const Params& p) { return pow3(2 * p.alpha + 1); });
  c.push_back({"MR15", CaseKind::Theorem,
               "p_{3^{2a+1},3}(3^{2a+b+1} n + (4*3^{2a+b+1} + 3^{2a+1} + 1)/8) == 0 mod 3^{3a+b+2}", AB,
               ClassRule::None, PrimeRule::None, false, p_odd,
               prog("MR15", [](const Params& p) { return pow3(2 * p.alpha + p.beta + 1); },
                    [](const Params& p) { return 4 * pow3(2 * p.alpha + p.beta + 1) + pow3(2 * p.alpha + 1) + 1; }, 8),
               [](const Params& p) { return 3 * p.alpha + p.beta + 2; }});
  c.push_back(
      {"MR16", CaseKind::Theorem,
       "p_{3^{2a+1},3}(3^{2a+b+1} p^{2k+1} n + (4 p^{2k+2} 3^{2a+b+1} + 3^{2a+1} + 1)/8) == 0 mod 3^{3a+b+4}, "
       "(-3/p) = -1, p does not divide n",
       ABPK, ClassRule::None, PrimeRule::MinusThreeNonResidue, false, p_odd,
       prog("MR16", [](const Params& p) { return checked_mul(pow3(2 * p.alpha + p.beta + 1), podd(p)); },
            [](const Params& p) {
              return checked_mul(4 * peven(p), pow3(2 * p.alpha + p.beta + 1)) + pow3(2 * p.alpha + 1) + 1;
            },
            8),
       [](const Params& p) { return 3 * p.alpha + p.beta + 4; }});

  // p_{3^{2a+2},3}.
  const auto p_even = two_color([](const Params& p) { return pow3(2 * p.alpha + 2); });
  auto p_even_b = [](std::int64_t mult, int extra) {
    return [mult, extra](const Params& p) {
      return checked_mul(mult, pow3(2 * p.alpha + 2 * p.beta + extra)) + pow3(2 * p.alpha + 2) + 1;
    };
  };
  c.push_back({"MR17", CaseKind::Theorem,
               "p_{3^{2a+2},3}(3^{2a+2b+1} n + (2*3^{2a+2b+1} + 3^{2a+2} + 1)/8) == 0 mod 3^{3a+2b+2}", AB,
               ClassRule::None, PrimeRule::None, false, p_even,
               prog("MR17", [](const Params& p) { return pow3(2 * p.alpha + 2 * p.beta + 1); }, p_even_b(2, 1), 8),
               [](const Params& p) { return 3 * p.alpha + 2 * p.beta + 2; }});
  c.push_back({"MR171", CaseKind::Theorem,
               "p_{3^{2a+2},3}(3^{2a+2b+2} n + (10*3^{2a+2b+1} + 3^{2a+2} + 1)/8) == 0 mod 3^{3a+2b+3}", AB,
               ClassRule::None, PrimeRule::None, false, p_even,
               prog("MR171", [](const Params& p) { return pow3(2 * p.alpha + 2 * p.beta + 2); }, p_even_b(10, 1), 8),
               [](const Params& p) { return 3 * p.alpha + 2 * p.beta + 3; }});
  c.push_back({"MR18", CaseKind::Theorem,
               "p_{3^{2a+2},3}(3^{2a+2b+3} n + (14*3^{2a+2b+2} + 3^{2a+2} + 1)/8) == 0 mod 3^{3a+2b+6}", AB,
               ClassRule::None, PrimeRule::None, false, p_even,
               prog("MR18", [](const Params& p) { return pow3(2 * p.alpha + 2 * p.beta + 3); }, p_even_b(14, 2), 8),
               [](const Params& p) { return 3 * p.alpha + 2 * p.beta + 6; }});
  c.push_back({"MR19", CaseKind::Theorem,
               "p_{3^{2a+2},3}(3^{2a+2b+3} n + (22*3^{2a+2b+2} + 3^{2a+2} + 1)/8) == 0 mod 3^{3a+2b+7}", AB,
               ClassRule::None, PrimeRule::None, false, p_even,
               prog("MR19", [](const Params& p) { return pow3(2 * p.alpha + 2 * p.beta + 3); }, p_even_b(22, 2), 8),
               [](const Params& p) { return 3 * p.alpha + 2 * p.beta + 7; }});
  c.push_back(
      {"MR20", CaseKind::Theorem,
       "p_{3^{2a+2},3}(3^{2a+2b+1} p^{2k+1} n + (2 p^{2k+2} 3^{2a+2b+1} + 3^{2a+2} + 1)/8) == 0 mod 3^{3a+2b+4}, "
       "p == 3 mod 4, p does not divide n",
       ABPK, ClassRule::None, PrimeRule::ThreeModFour, false, p_even,
       prog("MR20", [](const Params& p) { return checked_mul(pow3(2 * p.alpha + 2 * p.beta + 1), podd(p)); },
            [](const Params& p) {
              return checked_mul(2 * peven(p), pow3(2 * p.alpha + 2 * p.beta + 1)) + pow3(2 * p.alpha + 2) + 1;
            },
            8),
       [](const Params& p) { return 3 * p.alpha + 2 * p.beta + 4; }});

  // p_{l,3}, l == +-3^{2a+1} mod 3^{2a+2}.
  const auto p_class = two_color(class_ell);
  auto p_class_b = [](std::int64_t mult, int extra) {
    return [mult, extra](const Params& p) {
      return checked_mul(mult, pow3(2 * p.alpha + 2 * p.beta + extra)) - 2 * pow3(2 * p.alpha + 1) + 1;
    };
  };
  c.push_back({"MR21", CaseKind::Theorem,
               "p_{l,3}(3^{2a+2b+1} n + (7*3^{2a+2b+1} - 2*3^{2a+1} + 1)/8) == 0 mod 3^{3a+3b+2}, l == +-3^{2a+1} "
               "mod 3^{2a+2}",
               ABL, ClassRule::OddClass, PrimeRule::None, false, p_class,
               prog("MR21", [](const Params& p) { return pow3(2 * p.alpha + 2 * p.beta + 1); }, p_class_b(7, 1), 8),
               [](const Params& p) { return 3 * p.alpha + 3 * p.beta + 2; }});
  c.push_back({"MR22", CaseKind::Theorem,
               "p_{l,3}(3^{2a+2b+2} n + (23*3^{2a+2b+1} - 2*3^{2a+1} + 1)/8) == 0 mod 3^{3a+3b+4}, l == +-3^{2a+1} "
               "mod 3^{2a+2}",
               ABL, ClassRule::OddClass, PrimeRule::None, false, p_class,
               prog("MR22", [](const Params& p) { return pow3(2 * p.alpha + 2 * p.beta + 2); }, p_class_b(23, 1), 8),
               [](const Params& p) { return 3 * p.alpha + 3 * p.beta + 4; }});
  c.push_back({"MR23", CaseKind::Theorem,
               "p_{l,3}(3^{2a+2b+2} n + (5*3^{2a+2b+2} - 2*3^{2a+1} + 1)/8) == 0 mod 3^{3a+3b+3}, l == +-3^{2a+1} "
               "mod 3^{2a+2}",
               ABL, ClassRule::OddClass, PrimeRule::None, false, p_class,
               prog("MR23", [](const Params& p) { return pow3(2 * p.alpha + 2 * p.beta + 2); }, p_class_b(5, 2), 8),
               [](const Params& p) { return 3 * p.alpha + 3 * p.beta + 3; }});
  c.push_back({"MR24", CaseKind::Theorem,
               "p_{l,3}(3^{2a+2b+3} n + (13*3^{2a+2b+2} - 2*3^{2a+1} + 1)/8) == 0 mod 3^{3a+3b+4}, l == +-3^{2a+1} "
               "mod 3^{2a+2}",
               ABL, ClassRule::OddClass, PrimeRule::None, false, p_class,
               prog("MR24", [](const Params& p) { return pow3(2 * p.alpha + 2 * p.beta + 3); }, p_class_b(13, 2), 8),
               [](const Params& p) { return 3 * p.alpha + 3 * p.beta + 4; }});
  return c;
}

std::vector<GfIdentity> build_identities() {
  std::vector<GfIdentity> g;
  const std::vector<std::string> A = {"alpha"};
  const std::vector<std::string> AB = {"alpha", "beta"};
  const std::vector<std::string> ABL = {"alpha", "beta", "ell"};
  const auto p3 = [](const Params&) { return CountingFunction::p3(); };
  const auto t_odd = regular([](const Params& p) { return pow3(2 * p.alpha + 1); });
  const auto t_even = regular([](const Params& p) { return pow3(2 * p.alpha + 2); });
  const auto p_odd = two_color([](const Params& p) { return pow3(2 * p.alpha + 1); });
  const auto p_even = two_color([](const Params& p) { return pow3(2 * p.alpha + 2); });
  const auto odd_level = [](const Params& p) { return 2 * p.beta + 1; };
  const auto even_level = [](const Params& p) { return 2 * p.beta + 2; };
  const auto simple_level = [](const Params& p) { return p.beta + 1; };

  g.push_back({"H1", "sum p3(3^{2a+1} n + (5*3^{2a+1}+1)/8) q^n = sum_j x_{2a+1,j} q^{j-1} E3^{12j-3} / E1^{12j}", A,
               ClassRule::None, Family::X, p3,
               [](const Params& p) {
                 const std::int64_t a = pow3(2 * p.alpha + 1);
                 return Progression(a, exact_quotient(5 * a + 1, 8, "H1"));
               },
               [](const Params& p) { return 2 * p.alpha + 1; }, {12, -3, 12, 0}});
  g.push_back({"H2", "sum p3(3^{2a+2} n + (7*3^{2a+2}+1)/8) q^n = sum_j x_{2a+2,j} q^{j-1} E3^{12j} / E1^{12j+3}", A,
               ClassRule::None, Family::X, p3,
               [](const Params& p) {
                 const std::int64_t a = pow3(2 * p.alpha + 2);
                 return Progression(a, exact_quotient(7 * a + 1, 8, "H2"));
               },
               [](const Params& p) { return 2 * p.alpha + 2; }, {12, 0, 12, 3}});

  const auto mr1_shift = [](const Params& p) {
    return 2 * pow3(2 * p.alpha + 2 * p.beta + 2) - pow3(2 * p.alpha + 1) + 1;
  };
  g.push_back({"T11",
               "sum T_{3^{2a+1}}(3^{2a+2b+1} n + (2*3^{2a+2b+2} - 3^{2a+1} + 1)/8) q^n = sum_j r_{2b+1,j} q^{j-1} "
               "E3^{12j-3} / E1^{12j-3}",
               AB, ClassRule::None, Family::R, t_odd,
               prog("T11", [](const Params& p) { return pow3(2 * p.alpha + 2 * p.beta + 1); }, mr1_shift, 8), odd_level,
               {12, -3, 12, -3}});
  g.push_back({"D6",
               "sum T_{3^{2a+1}}(3^{2a+2b+2} n + (2*3^{2a+2b+2} - 3^{2a+1} + 1)/8) q^n = sum_j r_{2b+2,j} q^{j-1} "
               "E3^{12j-9} / E1^{12j-9}",
               AB, ClassRule::None, Family::R, t_odd,
               prog("D6", [](const Params& p) { return pow3(2 * p.alpha + 2 * p.beta + 2); }, mr1_shift, 8), even_level,
               {12, -9, 12, -9}});
  g.push_back({"T12",
               "sum T_{3^{2a+2}}(3^{2a+b+1}(n+1) - (3^{2a+2}-1)/8) q^n = sum_j s_{b+1,j} q^{j-1} E3^{12j} / E1^{12j}",
               AB, ClassRule::None, Family::S, t_even,
               [](const Params& p) {
                 const std::int64_t a = pow3(2 * p.alpha + p.beta + 1);
                 return Progression(a, a - exact_quotient(pow3(2 * p.alpha + 2) - 1, 8, "T12"));
               },
               simple_level, {12, 0, 12, 0}});

  const auto y_shift = [](const Params& p) {
    return pow3(2 * p.alpha + 2 * p.beta + 2) + 2 * pow3(2 * p.alpha + 1) + 1;
  };
  g.push_back({"T31",
               "sum T_l(3^{2a+2b+1} n + (3^{2a+2b+2} + 2*3^{2a+1} + 1)/8) q^n = sum_j y_{2b+1,j} q^{j-1} E3^{12j-6} "
               "/ E1^{12j-3}",
               ABL, ClassRule::OddClass, Family::Y, regular(class_ell),
               prog("T31", [](const Params& p) { return pow3(2 * p.alpha + 2 * p.beta + 1); }, y_shift, 8), odd_level,
               {12, -6, 12, -3}});
  g.push_back({"T311",
               "sum T_l(3^{2a+2b+2} n + (3^{2a+2b+2} + 2*3^{2a+1} + 1)/8) q^n = sum_j y_{2b+2,j} q^{j-1} E3^{12j-9} "
               "/ E1^{12j-6}",
               ABL, ClassRule::OddClass, Family::Y, regular(class_ell),
               prog("T311", [](const Params& p) { return pow3(2 * p.alpha + 2 * p.beta + 2); }, y_shift, 8),
               even_level, {12, -9, 12, -6}});
  g.push_back({"T32",
               "sum T_l(3^{2a+2b+2} n + (5*3^{2a+2b+2} + 2*3^{2a+2} + 1)/8) q^n = sum_j z_{2b+1,j} q^{j-1} "
               "E3^{12j-3} / E1^{12j}",
               ABL, ClassRule::EvenClass, Family::Z, regular(class_ell),
               prog("T32", [](const Params& p) { return pow3(2 * p.alpha + 2 * p.beta + 2); },
                    [](const Params& p) {
                      return 5 * pow3(2 * p.alpha + 2 * p.beta + 2) + 2 * pow3(2 * p.alpha + 2) + 1;
                    },
                    8),
               odd_level, {12, -3, 12, 0}});
  g.push_back({"T321",
               "sum T_l(3^{2a+2b+3} n + (7*3^{2a+2b+3} + 2*3^{2a+2} + 1)/8) q^n = sum_j z_{2b+2,j} q^{j-1} E3^{12j} "
               "/ E1^{12j+3}",
               ABL, ClassRule::EvenClass, Family::Z, regular(class_ell),
               prog("T321", [](const Params& p) { return pow3(2 * p.alpha + 2 * p.beta + 3); },
                    [](const Params& p) {
                      return 7 * pow3(2 * p.alpha + 2 * p.beta + 3) + 2 * pow3(2 * p.alpha + 2) + 1;
                    },
                    8),
               even_level, {12, 0, 12, 3}});

  g.push_back({"T21",
               "sum p_{3^{2a+1},3}(3^{2a+b+1} n + (4*3^{2a+b+1} + 3^{2a+1} + 1)/8) q^n = sum_j u_{b+1,j} q^{j-1} "
               "E3^{12j-3} / E1^{12j+3}",
               AB, ClassRule::None, Family::U, p_odd,
               prog("T21", [](const Params& p) { return pow3(2 * p.alpha + p.beta + 1); },
                    [](const Params& p) { return 4 * pow3(2 * p.alpha + p.beta + 1) + pow3(2 * p.alpha + 1) + 1; }, 8),
               simple_level, {12, -3, 12, 3}});
  g.push_back({"T22",
               "sum p_{3^{2a+2},3}(3^{2a+2b+1} n + (2*3^{2a+2b+1} + 3^{2a+2} + 1)/8) q^n = sum_j v_{2b+1,j} q^{j-1} "
               "E3^{12j-6} / E1^{12j}",
               AB, ClassRule::None, Family::V, p_even,
               prog("T22", [](const Params& p) { return pow3(2 * p.alpha + 2 * p.beta + 1); },
                    [](const Params& p) { return 2 * pow3(2 * p.alpha + 2 * p.beta + 1) + pow3(2 * p.alpha + 2) + 1; },
                    8),
               odd_level, {12, -6, 12, 0}});
  g.push_back({"T23",
               "sum p_{3^{2a+2},3}(3^{2a+2b+2} n + (2*3^{2a+2b+3} + 3^{2a+2} + 1)/8) q^n = sum_j v_{2b+2,j} q^{j-1} "
               "E3^{12j} / E1^{12j+6}",
               AB, ClassRule::None, Family::V, p_even,
               prog("T23", [](const Params& p) { return pow3(2 * p.alpha + 2 * p.beta + 2); },
                    [](const Params& p) { return 2 * pow3(2 * p.alpha + 2 * p.beta + 3) + pow3(2 * p.alpha + 2) + 1; },
                    8),
               even_level, {12, 0, 12, 6}});
  g.push_back({"T24",
               "sum p_{l,3}(3^{2a+2b+1} n + (7*3^{2a+2b+1} - 2*3^{2a+1} + 1)/8) q^n = sum_j w_{2b+1,j} q^{j-1} "
               "E3^{12j} / E1^{12j+3}",
               ABL, ClassRule::OddClass, Family::W, two_color(class_ell),
               prog("T24", [](const Params& p) { return pow3(2 * p.alpha + 2 * p.beta + 1); },
                    [](const Params& p) {
                      return 7 * pow3(2 * p.alpha + 2 * p.beta + 1) - 2 * pow3(2 * p.alpha + 1) + 1;
                    },
                    8),
               odd_level, {12, 0, 12, 3}});
  g.push_back({"T25",
               "sum p_{l,3}(3^{2a+2b+2} n + (5*3^{2a+2b+2} - 2*3^{2a+1} + 1)/8) q^n = sum_j w_{2b+2,j} q^{j-1} "
               "E3^{12j-3} / E1^{12j}",
               ABL, ClassRule::OddClass, Family::W, two_color(class_ell),
               prog("T25", [](const Params& p) { return pow3(2 * p.alpha + 2 * p.beta + 2); },
                    [](const Params& p) {
                      return 5 * pow3(2 * p.alpha + 2 * p.beta + 2) - 2 * pow3(2 * p.alpha + 1) + 1;
                    },
                    8),
               even_level, {12, -3, 12, 0}});
  return g;
}

void check_common(const std::string& id, ClassRule rule, const Params& p) {
  if (p.alpha < 0 || p.beta < 0 || p.k < 0 || p.lam < 0) {
    throw std::invalid_argument(id + ": parameters must be nonnegative");
  }
  if (p.alpha > 6 || p.beta > 6 || p.k > 6 || p.lam > 6) {
    throw std::invalid_argument(id + ": parameters beyond the supported range (<= 6)");
  }
  if (rule != ClassRule::None) {
    if (p.ell < 1) throw std::invalid_argument(id + ": a class member ell is required");
    if (!in_class(rule, p.alpha, p.ell)) {
      const int m = class_power(rule, p.alpha);
      throw std::invalid_argument(id + ": ell = " + std::to_string(p.ell) + " is not +-3^" + std::to_string(m) +
                                  " mod 3^" + std::to_string(m + 1));
    }
  }
}

}  // namespace

bool in_class(ClassRule rule, int alpha, std::int64_t ell) {
  if (rule == ClassRule::None) return true;
  if (ell < 1) return false;
  const int m = class_power(rule, alpha);
  const std::int64_t unit = pow3(m);
  const std::int64_t r = ell % (3 * unit);
  return r == unit || r == 2 * unit;
}

std::vector<std::int64_t> class_representatives(ClassRule rule, int alpha, int sign, int count) {
  if (rule == ClassRule::None) throw std::invalid_argument("no residue class for this case");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  const std::int64_t unit = pow3(class_power(rule, alpha));
  std::vector<std::int64_t> out;
  const std::int64_t first = sign > 0 ? unit : 2 * unit;
  for (int t = 0; t < count; ++t) out.push_back(first + 3 * unit * t);
  return out;
}

const std::vector<CongruenceCase>& congruence_catalog() {
  static const std::vector<CongruenceCase> cases = build_cases();
  return cases;
}

const std::vector<GfIdentity>& identity_catalog() {
  static const std::vector<GfIdentity> ids = build_identities();
  return ids;
}

const CongruenceCase& find_case(const std::string& id) {
  for (const auto& c : congruence_catalog())
    if (c.id == id) return c;
  throw std::invalid_argument("unknown congruence case: " + id);
}

const GfIdentity& find_identity(const std::string& id) {
  for (const auto& g : identity_catalog())
    if (g.id == id) return g;
  throw std::invalid_argument("unknown identity: " + id);
}

CongruenceInstance instantiate(const CongruenceCase& c, const Params& params) {
  check_common(c.id, c.class_rule, params);
  if (c.kind == CaseKind::Conjecture && params.k < 1) throw std::invalid_argument(c.id + " requires k >= 1");
  if (c.id == "B4" && params.r != 7 && params.r != 11) throw std::invalid_argument("B4 requires r in {7, 11}");
  CongruenceInstance inst;
  inst.spec = &c;
  inst.params = params;
  if (c.prime_rule != PrimeRule::None) {
    const std::int64_t p = params.p;
    if (!is_prime(p) || p == 2) throw std::invalid_argument(c.id + ": p must be an odd prime");
    if (c.prime_rule == PrimeRule::ThreeModFour && p % 4 != 3) {
      throw std::invalid_argument(c.id + ": p must be 3 mod 4");
    }
    if (c.prime_rule == PrimeRule::MinusThreeNonResidue && (p == 3 || legendre(-3, p) != -1)) {
      throw std::invalid_argument(c.id + ": p must satisfy (-3/p) = -1");
    }
    inst.excluded_divisor = p;
  }
  inst.function = c.function(params);
  inst.progression = c.progression(params);
  inst.exponent = c.exponent(params);
  if (inst.exponent < 1) throw std::invalid_argument(c.id + ": modulus exponent must be positive");
  inst.modulus = pow_big(3, static_cast<unsigned long>(inst.exponent));
  return inst;
}

CongruenceInstance instantiate(const std::string& case_id, const Params& params) {
  return instantiate(find_case(case_id), params);
}

IdentityInstance instantiate(const GfIdentity& g, const Params& params) {
  check_common(g.id, g.class_rule, params);
  IdentityInstance inst;
  inst.spec = &g;
  inst.params = params;
  inst.function = g.function(params);
  inst.progression = g.progression(params);
  inst.level = g.level(params);
  inst.lemma_exponent = valuation_bound(g.family, params.alpha, inst.level, 1);
  return inst;
}

std::vector<std::pair<std::string, std::int64_t>> describe(const std::vector<std::string>& names, const Params& p) {
  std::vector<std::pair<std::string, std::int64_t>> out;
  for (const auto& n : names) {
    if (n == "alpha") out.emplace_back(n, p.alpha);
    else if (n == "beta") out.emplace_back(n, p.beta);
    else if (n == "k") out.emplace_back(n, p.k);
    else if (n == "lam") out.emplace_back(n, p.lam);
    else if (n == "p") out.emplace_back(n, p.p);
    else if (n == "r") out.emplace_back(n, p.r);
    else if (n == "ell") out.emplace_back(n, p.ell);
  }
  return out;
}

}  // namespace qcong
