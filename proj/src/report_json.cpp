#include "qcong/report_json.hpp"

#include <cctype>

namespace qcong {

namespace {

nlohmann::ordered_json valuation_json(const Valuation3& v) {
  if (v.is_infinite()) return nullptr;
  return v.value();
}

}  // namespace

nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["case"] = r.case_id;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  j["checked"] = r.checked;
  j["status"] = to_string(r.status);
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const auto& f : r.failures) {
    nlohmann::ordered_json e;
    e["n"] = f.n;
    e["value"] = to_decimal(f.value);
    e["valuation"] = valuation_json(f.valuation);
    e["required"] = f.required ? nlohmann::ordered_json(*f.required) : nlohmann::ordered_json(nullptr);
    failures.push_back(std::move(e));
  }
  j["failures"] = std::move(failures);
  j["failure_count"] = r.failure_count;
  j["check"] = r.check;
  std::string kind = to_string(r.kind);
  for (auto& ch : kind) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  j["kind"] = kind;
  j["gating"] = r.gating;
  j["function"] = r.function;
  j["progression"] = r.progression;
  j["required"] = r.required ? nlohmann::ordered_json(*r.required) : nlohmann::ordered_json(nullptr);
  j["max_exponent_holding"] =
      r.max_exponent_holding ? nlohmann::ordered_json(*r.max_exponent_holding) : nlohmann::ordered_json(nullptr);
  j["arithmetic"] = r.arithmetic == Arithmetic::Exact ? "exact" : "residue";
  if (r.arithmetic == Arithmetic::Residue) j["value_modulus"] = "3^39";
  j["notes"] = r.notes;
  return j;
}

nlohmann::ordered_json to_json(const SuiteReport& s) {
  nlohmann::ordered_json j;
  j["status"] = to_string(s.overall);
  std::size_t pass = 0, fail = 0, skipped = 0;
  for (const auto& r : s.reports) {
    if (r.status == Status::Pass) ++pass;
    else if (r.status == Status::Fail) ++fail;
    else ++skipped;
  }
  j["summary"] = {{"pass", pass}, {"fail", fail}, {"skipped", skipped}};
  j["discrepancies"] = s.discrepancies;
  nlohmann::ordered_json reports = nlohmann::ordered_json::array();
  for (const auto& r : s.reports) reports.push_back(to_json(r));
  j["reports"] = std::move(reports);
  return j;
}

nlohmann::ordered_json to_json(const CoeffVector& v) {
  nlohmann::ordered_json j;
  j["family"] = to_string(v.family);
  j["alpha"] = v.alpha;
  j["level"] = v.level;
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (int i = 1; i <= v.jmax(); ++i) {
    nlohmann::ordered_json e;
    e["j"] = i;
    e["value"] = to_decimal(v.at(i));
    e["valuation"] = valuation_json(pi3(v.at(i)));
    try {
      e["bound"] = valuation_bound(v.family, v.alpha, v.level, i);
    } catch (const std::invalid_argument&) {
      e["bound"] = nullptr;
    }
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

nlohmann::ordered_json to_json(const ValuationReport& r) {
  nlohmann::ordered_json j;
  j["family"] = to_string(r.family);
  j["checked"] = r.checked;
  j["status"] = r.passed() ? "PASS" : (r.checked == 0 ? "SKIPPED" : "FAIL");
  nlohmann::ordered_json v = nlohmann::ordered_json::array();
  for (const auto& b : r.violations) {
    v.push_back({{"alpha", b.alpha},
                 {"level", b.mu},
                 {"j", b.j},
                 {"value", to_decimal(b.value)},
                 {"valuation", valuation_json(b.valuation)},
                 {"bound", b.bound}});
  }
  j["violations"] = std::move(v);
  return j;
}

}  // namespace qcong
