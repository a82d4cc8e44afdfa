#pragma once

#include <json.hpp>

#include "qcong/suite.hpp"
#include "qcong/vectors.hpp"
#include "qcong/verify.hpp"

namespace qcong {

/// {"case", "params", "checked", "status", "failures": [{"n", "value", "valuation", "required"}], ...}
/// Big integers are written as decimal strings.
nlohmann::ordered_json to_json(const Report& r);
nlohmann::ordered_json to_json(const SuiteReport& s);
nlohmann::ordered_json to_json(const CoeffVector& v);
nlohmann::ordered_json to_json(const ValuationReport& r);

}  // namespace qcong
