#include "qcong/counts.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <vector>

namespace qcong {

std::string to_string(CountKind kind) {
  switch (kind) {
    case CountKind::P3: return "p3";
    case CountKind::RegularTriple: return "t";
    case CountKind::TwoColorTriple: return "p3l";
  }
  return "?";
}

CountKind parse_count_kind(const std::string& name) {
  std::string n = name;
  std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (n == "p3") return CountKind::P3;
  if (n == "t" || n == "regular") return CountKind::RegularTriple;
  if (n == "p3l" || n == "two-color" || n == "two_color") return CountKind::TwoColorTriple;
  throw std::invalid_argument("unknown counting function: " + name);
}

CountingFunction CountingFunction::regular(std::int64_t ell) {
  if (ell < 1) throw std::invalid_argument("ell must be positive");
  return {CountKind::RegularTriple, ell};
}

CountingFunction CountingFunction::two_color(std::int64_t ell) {
  if (ell < 1) throw std::invalid_argument("ell must be positive");
  return {CountKind::TwoColorTriple, ell};
}

std::string CountingFunction::name() const {
  switch (kind) {
    case CountKind::P3: return "p3";
    case CountKind::RegularTriple: return "T_" + std::to_string(ell);
    case CountKind::TwoColorTriple: return "p_{" + std::to_string(ell) + ",3}";
  }
  return "?";
}

EtaQuotientSpec CountingFunction::generating_function() const {
  switch (kind) {
    case CountKind::P3: return EtaQuotientSpec(0, {{1, -3}});
    case CountKind::RegularTriple: return EtaQuotientSpec(0, {{1, -3}, {ell, 3}});
    case CountKind::TwoColorTriple: return EtaQuotientSpec(0, {{1, -3}, {ell, -3}});
  }
  throw std::invalid_argument("unknown counting function");
}

BigInt enumerate_count(const CountingFunction& f, int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (n > kEnumerateLimit) {
    throw std::invalid_argument("enumerate_count is limited to n <= " + std::to_string(kEnumerateLimit));
  }
  if (f.kind != CountKind::P3 && f.ell < 1) throw std::invalid_argument("ell must be positive");

  // One "coin" per admissible (part size, color); each may repeat freely.
  std::vector<int> coins;
  for (int part = 1; part <= n; ++part) {
    int colors = 3;
    if (f.kind == CountKind::RegularTriple && part % f.ell == 0) colors = 0;
    if (f.kind == CountKind::TwoColorTriple && part % f.ell == 0) colors = 6;
    for (int c = 0; c < colors; ++c) coins.push_back(part);
  }
  std::vector<BigInt> ways(static_cast<std::size_t>(n) + 1);
  ways[0] = 1;
  for (int coin : coins) {
    for (int total = coin; total <= n; ++total) ways[total] += ways[total - coin];
  }
  return ways[n];
}

}  // namespace qcong
