#include "qcong/cli.hpp"

#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qcong/count_tables.hpp"
#include "qcong/counts.hpp"
#include "qcong/eta.hpp"
#include "qcong/hmatrix.hpp"
#include "qcong/report_json.hpp"
#include "qcong/suite.hpp"
#include "qcong/vectors.hpp"
#include "qcong/verify.hpp"

#ifndef QCONG_DEFAULT_SUITE
#define QCONG_DEFAULT_SUITE "config/default_suite.json"
#endif

namespace qcong {

namespace {

struct Options {
  std::string format = "text";

  // expand
  std::string spec;
  std::int64_t order = 20;

  // count
  std::string kind = "p3";
  std::int64_t ell = 1;
  std::int64_t n_min = 0;
  std::int64_t n_max = 20;
  bool oracle = false;

  // mtable
  int imax = 5;
  int jmax = 5;

  // vector
  std::string family = "x";
  int alpha = 0;
  int level = 1;
  std::string seed = "stated";
  bool bounds_only = false;

  // verify
  std::string case_id;
  int beta = 0;
  int k = 0;
  int lam = 0;
  std::int64_t p = 0;
  std::int64_t r = 0;
  std::int64_t class_ell = 0;
  std::optional<int> exponent;
  std::string mode = "exact";
  std::string config = QCONG_DEFAULT_SUITE;
  std::optional<int> threads;
  int alpha_max = 1;
  int beta_max = 1;
};

std::string join_csv(const std::vector<std::string>& items) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? "," : "") + items[i];
  return s;
}

int emit_report(const Report& r, const Options& o, std::ostream& out) {
  if (o.format == "json") {
    out << to_json(r).dump(2) << '\n';
  } else {
    out << r.case_id << ' ';
    for (const auto& [k, v] : r.params) out << k << '=' << v << ' ';
    out << r.function << '(' << r.progression << ") " << r.check;
    if (r.required) out << " mod 3^" << *r.required;
    out << ": " << to_string(r.status) << " (" << r.checked << " checked, " << r.failure_count << " failing";
    out << ", largest exponent holding "
        << (r.max_exponent_holding ? std::to_string(*r.max_exponent_holding) : std::string("inf")) << ")\n";
    for (const auto& f : r.failures) {
      out << "  n=" << f.n << " value=" << to_decimal(f.value) << " valuation=" << f.valuation.to_string() << '\n';
    }
    for (const auto& n : r.notes) out << "  note: " << n << '\n';
  }
  return r.status == Status::Fail ? kExitFail : kExitPass;
}

Params params_of(const Options& o) {
  Params p;
  p.alpha = o.alpha;
  p.beta = o.beta;
  p.k = o.k;
  p.lam = o.lam;
  p.p = o.p;
  p.r = o.r;
  p.ell = o.class_ell;
  return p;
}

int run_expand(const Options& o, std::ostream& out) {
  const auto spec = EtaQuotientSpec::parse(o.spec);
  const Series s = eta_quotient(spec, o.order);
  std::vector<std::string> coeffs;
  const std::int64_t lo = std::min<std::int64_t>(s.offset(), 0);
  for (std::int64_t e = lo; e < o.order; ++e) coeffs.push_back(to_decimal(s.coefficient(e)));
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["spec"] = spec.to_string();
    j["offset"] = lo;
    j["order"] = o.order;
    j["coefficients"] = coeffs;
    out << j.dump(2) << '\n';
  } else if (o.format == "csv") {
    out << join_csv(coeffs) << '\n';
  } else {
    for (std::size_t i = 0; i < coeffs.size(); ++i) out << lo + static_cast<std::int64_t>(i) << ' ' << coeffs[i] << '\n';
  }
  return kExitPass;
}

int run_count(const Options& o, std::ostream& out) {
  if (o.n_min > o.n_max) throw std::invalid_argument("--nmin exceeds --nmax");
  const CountKind kind = parse_count_kind(o.kind);
  const CountingFunction f = kind == CountKind::P3 ? CountingFunction::p3()
                             : kind == CountKind::RegularTriple ? CountingFunction::regular(o.ell)
                                                                : CountingFunction::two_color(o.ell);
  std::vector<std::pair<std::int64_t, BigInt>> rows;
  if (o.oracle) {
    for (std::int64_t n = o.n_min; n <= o.n_max; ++n) rows.emplace_back(n, enumerate_count(f, static_cast<int>(n)));
  } else {
    const Series s = count_series(f, o.n_max + 1);
    for (std::int64_t n = o.n_min; n <= o.n_max; ++n) rows.emplace_back(n, s.coefficient(n));
  }
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["function"] = f.name();
    nlohmann::ordered_json vals = nlohmann::ordered_json::array();
    for (const auto& [n, v] : rows) vals.push_back({{"n", n}, {"value", to_decimal(v)}});
    j["values"] = std::move(vals);
    out << j.dump(2) << '\n';
  } else if (o.format == "csv") {
    out << "n,value\n";
    for (const auto& [n, v] : rows) out << n << ',' << to_decimal(v) << '\n';
  } else {
    for (const auto& [n, v] : rows) out << f.name() << '(' << n << ") = " << to_decimal(v) << '\n';
  }
  return kExitPass;
}

int run_mtable(const Options& o, std::ostream& out) {
  const MTable& t = default_mtable();
  if (o.format == "json") {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 1; i <= o.imax; ++i) {
      std::vector<std::string> row;
      for (int j = 1; j <= o.jmax; ++j) row.push_back(to_decimal(t.entry(i, j)));
      rows.push_back(row);
    }
    out << nlohmann::ordered_json{{"imax", o.imax}, {"jmax", o.jmax}, {"rows", rows}}.dump(2) << '\n';
    return kExitPass;
  }
  for (int i = 1; i <= o.imax; ++i) {
    std::vector<std::string> row;
    for (int j = 1; j <= o.jmax; ++j) row.push_back(to_decimal(t.entry(i, j)));
    if (o.format == "csv") {
      out << join_csv(row) << '\n';
    } else {
      for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
      out << '\n';
    }
  }
  return kExitPass;
}

int run_vector(const Options& o, std::ostream& out) {
  const Family f = parse_family(o.family);
  if (o.seed != "stated" && o.seed != "alternate") throw std::invalid_argument("--seed must be stated or alternate");
  const SeedReading reading = o.seed == "stated" ? SeedReading::Stated : SeedReading::Alternate;
  const CoeffVector v = f == Family::X ? x_vector(o.level, o.jmax) : family_vector(f, o.alpha, o.level, o.jmax, reading);
  const auto violations = check_vector_bounds(v);
  if (o.format == "json") {
    auto j = to_json(v);
    j["violations"] = violations.size();
    out << j.dump(2) << '\n';
  } else {
    for (int j = 1; j <= v.jmax(); ++j) {
      out << to_string(f) << '[' << j << "] = " << to_decimal(v.at(j)) << "  (valuation " << pi3(v.at(j)).to_string()
          << ", bound " << valuation_bound(v.family, v.alpha, v.level, j) << ")\n";
    }
  }
  return violations.empty() ? kExitPass : kExitFail;
}

int run_verify_congruence(const Options& o, std::ostream& out) {
  CongruenceInstance inst = instantiate(o.case_id, params_of(o));
  if (o.exponent) {
    inst.exponent = *o.exponent;
    inst.modulus = pow_big(3, static_cast<unsigned long>(*o.exponent));
  }
  return emit_report(verify_congruence(inst, o.n_max), o, out);
}

int run_verify_identity(const Options& o, std::ostream& out) {
  const IdentityInstance inst = instantiate(find_identity(o.case_id), params_of(o));
  IdentityCheck check;
  if (o.mode == "exact") {
    check.mode = IdentityMode::Exact;
  } else if (o.mode == "mod") {
    check.mode = IdentityMode::Mod;
  } else {
    throw std::invalid_argument("--mode must be exact or mod");
  }
  check.exponent = o.exponent;
  if (o.seed != "stated" && o.seed != "alternate") throw std::invalid_argument("--seed must be stated or alternate");
  check.seed = o.seed == "stated" ? SeedReading::Stated : SeedReading::Alternate;
  return emit_report(verify_gf_identity(inst, o.order, check), o, out);
}

int run_verify_suite(const Options& o, std::ostream& out) {
  SuiteConfig cfg = SuiteConfig::load(o.config);
  if (o.threads) cfg.threads = *o.threads;
  const SuiteReport s = run_suite(cfg);
  if (o.format == "json") {
    out << to_json(s).dump(2) << '\n';
  } else {
    for (const auto& r : s.reports) {
      out << to_string(r.status) << ' ' << r.case_id << ' ' << r.check;
      for (const auto& [k, v] : r.params) out << ' ' << k << '=' << v;
      if (!r.gating) out << " (informational)";
      out << '\n';
    }
    out << "discrepancies:\n";
    for (const auto& d : s.discrepancies) out << "  " << d << '\n';
    out << "overall: " << to_string(s.overall) << '\n';
  }
  return s.overall == Status::Fail ? kExitFail : kExitPass;
}

int run_verify_seeds(const Options& o, std::ostream& out) {
  const auto rows = compare_seed_readings(o.alpha_max, o.beta_max, o.order);
  if (o.format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      j.push_back({{"identity", r.id},
                   {"alpha", r.alpha},
                   {"beta", r.beta},
                   {"stated_seed_exact", r.stated_exact},
                   {"alternate_seed_exact", r.alternate_exact}});
    }
    out << j.dump(2) << '\n';
  } else {
    for (const auto& r : rows) {
      out << r.id << " alpha=" << r.alpha << " beta=" << r.beta << " stated=" << (r.stated_exact ? "exact" : "fails")
          << " alternate=" << (r.alternate_exact ? "exact" : "fails") << '\n';
    }
  }
  return kExitPass;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partition-triple congruences modulo powers of 3", "qcong"};
  app.require_subcommand(1);
  Options o;
  const auto formats = CLI::IsMember({"text", "csv", "json"});
  const auto json_text = CLI::IsMember({"text", "json"});

  auto* expand = app.add_subcommand("expand", "Expand an eta quotient q^s * E(r)^e * ...");
  expand->add_option("--spec", o.spec, "Quotient, e.g. \"q^-1 * E(3)^3 * E(1)^-3\"")->required();
  expand->add_option("--order", o.order, "Number of coefficients")->check(CLI::PositiveNumber);
  expand->add_option("--format", o.format)->check(formats);

  auto* count = app.add_subcommand("count", "Values of p3, T_l or p_{l,3}");
  count->add_option("--kind", o.kind, "p3, t or p3l")->check(CLI::IsMember({"p3", "t", "p3l"}));
  count->add_option("--ell", o.ell)->check(CLI::PositiveNumber);
  count->add_option("--nmin", o.n_min)->check(CLI::NonNegativeNumber);
  count->add_option("--nmax", o.n_max)->check(CLI::NonNegativeNumber);
  count->add_flag("--oracle", o.oracle, "Use the direct enumeration (n <= 30)");
  count->add_option("--format", o.format)->check(formats);

  auto* mtable = app.add_subcommand("mtable", "Print m_{i,j}");
  mtable->add_option("--imax", o.imax)->check(CLI::PositiveNumber);
  mtable->add_option("--jmax", o.jmax)->check(CLI::PositiveNumber);
  mtable->add_option("--format", o.format)->check(formats);

  auto* vector = app.add_subcommand("vector", "Print a coefficient vector with valuations");
  vector->add_option("--family", o.family, "x, r, s, y, z, u, v or w")
      ->transform(CLI::IsMember({"x", "r", "s", "y", "z", "u", "v", "w"}, CLI::ignore_case));
  vector->add_option("--alpha", o.alpha)->check(CLI::NonNegativeNumber);
  vector->add_option("--level", o.level, "Level mu (k for the x family)")->check(CLI::PositiveNumber);
  vector->add_option("--jmax", o.jmax)->check(CLI::PositiveNumber);
  vector->add_option("--seed", o.seed, "stated or alternate")->check(CLI::IsMember({"stated", "alternate"}));
  vector->add_option("--format", o.format)->check(json_text);

  auto* verify = app.add_subcommand("verify", "Check congruences and identities");
  verify->require_subcommand(1);
  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--alpha", o.alpha)->check(CLI::NonNegativeNumber);
    sub->add_option("--beta", o.beta)->check(CLI::NonNegativeNumber);
    sub->add_option("--ell", o.class_ell, "Member of the residue class")->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format)->check(json_text);
  };
  auto* vc = verify->add_subcommand("congruence", "Check one congruence family at given parameters");
  vc->add_option("--case", o.case_id, "Catalog id, e.g. MR1")->required();
  add_params(vc);
  vc->add_option("--k", o.k)->check(CLI::NonNegativeNumber);
  vc->add_option("--lam", o.lam)->check(CLI::NonNegativeNumber);
  vc->add_option("--p", o.p, "Auxiliary prime")->check(CLI::PositiveNumber);
  vc->add_option("--r", o.r, "B4 parameter (7 or 11)")->check(CLI::PositiveNumber);
  vc->add_option("--nmax", o.n_max)->check(CLI::NonNegativeNumber);
  vc->add_option("--exponent", o.exponent, "Override the modulus exponent")->check(CLI::PositiveNumber);

  auto* vi = verify->add_subcommand("identity", "Check one generating-function identity");
  vi->add_option("--id", o.case_id, "Identity id, e.g. H1")->required();
  add_params(vi);
  vi->add_option("--order", o.order, "Extracted terms")->check(CLI::PositiveNumber);
  vi->add_option("--mode", o.mode, "exact or mod")->check(CLI::IsMember({"exact", "mod"}));
  vi->add_option("--exponent", o.exponent, "Modulus exponent for --mode mod")->check(CLI::PositiveNumber);
  vi->add_option("--seed", o.seed, "stated or alternate")->check(CLI::IsMember({"stated", "alternate"}));

  auto* vs = verify->add_subcommand("suite", "Run the configured grid over the catalog");
  vs->add_option("--config", o.config, "Suite configuration (JSON)");
  vs->add_option("--threads", o.threads, "Worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  vs->add_option("--format", o.format)->check(json_text);

  auto* vseed = verify->add_subcommand("seeds", "Compare the two seed readings for T12 and T22");
  vseed->add_option("--alpha-max", o.alpha_max)->check(CLI::NonNegativeNumber);
  vseed->add_option("--beta-max", o.beta_max)->check(CLI::NonNegativeNumber);
  vseed->add_option("--order", o.order)->check(CLI::PositiveNumber);
  vseed->add_option("--format", o.format)->check(json_text);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "qcong: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*expand) return run_expand(o, out);
    if (*count) return run_count(o, out);
    if (*mtable) return run_mtable(o, out);
    if (*vector) return run_vector(o, out);
    if (*vc) return run_verify_congruence(o, out);
    if (*vi) return run_verify_identity(o, out);
    if (*vs) return run_verify_suite(o, out);
    if (*vseed) return run_verify_seeds(o, out);
  } catch (const std::invalid_argument& e) {
    err << "qcong: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "qcong: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    err << "qcong: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "qcong: no subcommand\n";
  return kExitUsage;
}

}  // namespace qcong
