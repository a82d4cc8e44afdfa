#include "qcong/hmatrix.hpp"

#include <stdexcept>

#include "qcong/eta.hpp"

namespace qcong {

const SeedBlock& published_seeds() {
  static const SeedBlock seeds = [] {
    SeedBlock s;
    for (auto& row : s)
      for (auto& x : row) x = 0;
    s[0][0] = pow_big(3, 2);
    s[1][0] = 2 * 3;
    s[1][1] = pow_big(3, 5);
    s[2][0] = 1;
    s[2][1] = pow_big(3, 5);
    s[2][2] = pow_big(3, 8);
    s[3][1] = 2 * 9 * 5;
    s[3][2] = 4 * pow_big(3, 7);
    s[3][3] = pow_big(3, 11);
    s[4][1] = 3 * 5;
    s[4][2] = 4 * pow_big(3, 5) * 5;
    s[4][3] = pow_big(3, 10) * 5;
    s[4][4] = pow_big(3, 14);
    return s;
  }();
  return seeds;
}

MTable::MTable() : MTable(published_seeds()) {}

MTable::MTable(SeedBlock seeds) : seeds_(std::move(seeds)) {}

int MTable::rows() const {
  std::shared_lock lock(mutex_);
  return static_cast<int>(rows_.size());
}

void MTable::grow_to(int i) const {
  std::unique_lock lock(mutex_);
  while (static_cast<int>(rows_.size()) < i) {
    const int r = static_cast<int>(rows_.size()) + 1;
    std::vector<BigInt> row(static_cast<std::size_t>(r));
    if (r <= 5) {
      for (int j = 1; j <= r; ++j) row[static_cast<std::size_t>(j - 1)] = seeds_[r - 1][j - 1];
    } else {
      auto prev = [&](int back, int j) -> const BigInt* {
        const auto& src = rows_[static_cast<std::size_t>(r - back - 1)];
        return j <= static_cast<int>(src.size()) ? &src[static_cast<std::size_t>(j - 1)] : nullptr;
      };
      for (int j = 2; j <= r; ++j) {
        BigInt v = 0;
        if (const auto* a = prev(1, j - 1)) v += 27 * *a;
        if (const auto* b = prev(2, j - 1)) v += 9 * *b;
        if (const auto* c = prev(3, j - 1)) v += *c;
        row[static_cast<std::size_t>(j - 1)] = std::move(v);
      }
    }
    rows_.push_back(std::move(row));
  }
}

BigInt MTable::entry(int i, int j) const {
  if (i < 1 || j < 1) throw std::invalid_argument("m_{i,j} requires i, j >= 1");
  if (i <= 5 && j <= 5) return seeds_[i - 1][j - 1];
  if (j > i) return 0;
  {
    std::shared_lock lock(mutex_);
    if (static_cast<int>(rows_.size()) >= i) return rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  }
  grow_to(i);
  std::shared_lock lock(mutex_);
  return rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

const MTable& default_mtable() {
  static const MTable table;
  return table;
}

BigInt m_entry(int i, int j) { return default_mtable().entry(i, j); }

namespace {

// sum_{j=1}^{jmax} coeff(j) q^{3j+shift} E(q^9)^{a j + b} / E(q^3)^{c j + d}, below q^order.
template <class CoeffFn>
Series theta_sum(CoeffFn coeff, int jmax, std::int64_t shift, std::int64_t a, std::int64_t b, std::int64_t c,
                 std::int64_t d, std::int64_t order) {
  Series acc(0, std::vector<BigInt>(static_cast<std::size_t>(std::max<std::int64_t>(order, 0))));
  for (int j = 1; j <= jmax; ++j) {
    const BigInt m = coeff(j);
    if (sgn(m) == 0) continue;
    const std::int64_t qpow = 3 * j + shift;
    if (qpow >= order) continue;
    EtaQuotientSpec spec(qpow, {{9, a * j + b}, {3, -(c * j + d)}});
    acc = acc + scale(eta_quotient<BigInt>(spec, order), m);
  }
  return acc;
}

Series huff_of(const EtaQuotientSpec& spec, std::int64_t order) { return huff(eta_quotient<BigInt>(spec, order)); }

}  // namespace

HIdentitySides p0_sides(const MTable& table, int i, std::int64_t order) {
  if (i < 1) throw std::invalid_argument("check_p0 requires i >= 1");
  if (order < 3) throw std::invalid_argument("check_p0 requires order >= 3");
  // 1/zeta^i = q^i E(q^9)^{3i} / E(q)^{3i};  T^{-j} = q^{3j} E(q^9)^{12j} / E(q^3)^{12j}.
  Series lhs = huff_of(EtaQuotientSpec(i, {{9, 3 * i}, {1, -3 * i}}), order);
  const int jmax = static_cast<int>(order / 3) + 1;
  Series rhs = theta_sum([&](int j) { return table.entry(i, j); }, jmax, 0, 12, 0, 12, 0, order);
  return {lhs.truncated(order), rhs.truncated(order)};
}

bool check_p0(int i, std::int64_t order, const MTable& table) { return p0_sides(table, i, order).holds(); }

std::string to_string(HLemma v) {
  switch (v) {
    case HLemma::P1: return "P1";
    case HLemma::P2: return "P2";
    case HLemma::P3: return "P3";
    case HLemma::P4: return "P4";
    case HLemma::P5: return "P5";
  }
  return "?";
}

HLemma parse_h_lemma(const std::string& name) {
  for (auto v : {HLemma::P1, HLemma::P2, HLemma::P3, HLemma::P4, HLemma::P5}) {
    if (to_string(v) == name) return v;
  }
  throw std::invalid_argument("unknown H-lemma variant: " + name);
}

HIdentitySides h_lemma_sides(HLemma variant, int i, std::int64_t order, const MTable& table) {
  if (i < 1) throw std::invalid_argument("check_h_lemma requires i >= 1");
  struct Shape {
    std::int64_t q_shift;       // q^{i + q_shift}
    std::int64_t e3, e1;        // E3^{12i + e3} / E1^{12i + e1}
    int row, col;               // m_{4i + row, i + j + col}
    std::int64_t b9, d3;        // E9^{12j + b9} / E3^{12j + d3}
  };
  Shape s{};
  switch (variant) {
    case HLemma::P3: s = {-3, 0, 0, 0, 0, 0, 0}; break;
    case HLemma::P4: s = {-2, -3, 3, 1, 0, -3, 3}; break;
    case HLemma::P1: s = {-3, -9, -9, -3, -1, -3, -3}; break;
    case HLemma::P2: s = {-1, -3, -3, -1, -1, -9, -9}; break;
    case HLemma::P5: s = {-1, 0, 6, 2, 0, -6, 0}; break;
  }
  Series lhs = huff_of(EtaQuotientSpec(i + s.q_shift, {{3, 12 * i + s.e3}, {1, -(12 * i + s.e1)}}), order);
  const int jmax = static_cast<int>(order / 3) + 2;
  Series rhs = theta_sum([&](int j) { return table.entry(4 * i + s.row, i + j + s.col); }, jmax, -3, 12, s.b9, 12,
                         s.d3, order);
  return {lhs.truncated(order), rhs.truncated(order)};
}

bool check_h_lemma(HLemma variant, int i, std::int64_t order, const MTable& table) {
  return h_lemma_sides(variant, i, order, table).holds();
}

}  // namespace qcong
