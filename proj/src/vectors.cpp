#include "qcong/vectors.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcong {

std::string to_string(Family f) {
  switch (f) {
    case Family::X: return "x";
    case Family::R: return "r";
    case Family::S: return "s";
    case Family::Y: return "y";
    case Family::Z: return "z";
    case Family::U: return "u";
    case Family::V: return "v";
    case Family::W: return "w";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  std::string n = name;
  std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (auto f : {Family::X, Family::R, Family::S, Family::Y, Family::Z, Family::U, Family::V, Family::W}) {
    if (to_string(f) == n) return f;
  }
  throw std::invalid_argument("unknown coefficient family: " + name);
}

StepRule step_rule(Family f, int level) {
  if (level < 1) throw std::invalid_argument("levels start at 1");
  const bool odd = level % 2 == 1;
  switch (f) {
    case Family::X: return odd ? StepRule{0, 0} : StepRule{1, 0};
    case Family::R: return odd ? StepRule{-1, -1} : StepRule{-3, -1};
    case Family::S: return {0, 0};
    case Family::Y: return odd ? StepRule{-1, -1} : StepRule{-2, -1};
    case Family::Z: return odd ? StepRule{0, 0} : StepRule{1, 0};
    case Family::U: return {1, 0};
    case Family::V: return odd ? StepRule{0, 0} : StepRule{2, 0};
    case Family::W: return odd ? StepRule{1, 0} : StepRule{0, 0};
  }
  throw std::invalid_argument("unknown family");
}

int seed_index(Family f, int alpha, SeedReading reading) {
  if (alpha < 0) throw std::invalid_argument("alpha must be nonnegative");
  switch (f) {
    case Family::X: throw std::invalid_argument("the x family is not seeded from another vector");
    case Family::Z: return 2 * alpha + 2;
    case Family::S:
    case Family::V: return reading == SeedReading::Stated ? 2 * alpha + 1 : 2 * alpha + 2;
    default: return 2 * alpha + 1;
  }
}

BigInt CoeffVector::at(int j) const {
  if (j < 1) throw std::invalid_argument("vector entries are indexed from 1");
  return j <= jmax() ? values[static_cast<std::size_t>(j - 1)] : BigInt(0);
}

namespace {

int floor_half(int x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

// 3alpha + f(beta) part of each lemma, keyed by family and level parity.
struct BoundShape {
  int beta_coeff;
  int constant;
  const char* lemma;
};

BoundShape bound_shape(Family f, int mu) {
  if (mu < 1) throw std::invalid_argument("no valuation bound for level " + std::to_string(mu));
  const bool odd = mu % 2 == 1;
  switch (f) {
    case Family::X: return odd ? BoundShape{0, 2, "C1"} : BoundShape{0, 4, "C2"};
    case Family::R: return odd ? BoundShape{2, 2, "C3"} : BoundShape{2, 2, "C4"};
    case Family::S: return {2, 2, "C5"};
    case Family::Y: return odd ? BoundShape{1, 2, "C6"} : BoundShape{1, 2, "C7"};
    case Family::Z: return odd ? BoundShape{3, 4, "C8"} : BoundShape{3, 6, "C9"};
    case Family::U: return {1, 2, "C10"};
    case Family::V: return odd ? BoundShape{2, 2, "C11"} : BoundShape{2, 4, "C12"};
    case Family::W: return odd ? BoundShape{3, 2, "C13"} : BoundShape{3, 3, "C14"};
  }
  throw std::invalid_argument("unknown family");
}

int beta_of(Family f, int mu) {
  switch (f) {
    case Family::X: return 0;
    case Family::S:
    case Family::U: return mu - 1;
    default: return (mu - 1) / 2;
  }
}

}  // namespace

std::string bound_lemma(Family f, int mu) { return bound_shape(f, mu).lemma; }

int valuation_bound(Family f, int alpha, int mu, int j) {
  if (alpha < 0) throw std::invalid_argument("alpha must be nonnegative");
  if (j < 1) throw std::invalid_argument("j must be positive");
  if (f == Family::X && mu >= 1 && (mu - 1) / 2 != alpha) {
    throw std::invalid_argument("x_" + std::to_string(mu) + " does not belong to alpha = " + std::to_string(alpha));
  }
  const BoundShape s = bound_shape(f, mu);
  return 3 * alpha + s.beta_coeff * beta_of(f, mu) + s.constant + floor_half(9 * j - 10) + (j == 1 ? 1 : 0);
}

VectorStore::VectorStore(const MTable& table) : table_(table) {}

std::vector<BigInt> VectorStore::compute(std::vector<StepRule> const& rules, int jmax) const {
  // Support bounds bottom-up, then required lengths top-down.
  const std::size_t steps = rules.size();
  std::vector<long long> support(steps + 1);
  support[0] = 1;
  for (std::size_t t = 0; t < steps; ++t) support[t + 1] = 3 * support[t] + 3;
  std::vector<long long> need(steps + 1);
  need[steps] = jmax;
  for (std::size_t t = steps; t > 0; --t) need[t - 1] = std::min(support[t - 1], 3 * need[t] + 3);

  std::vector<BigInt> cur{BigInt(9)};  // x_1 = (9, 0, 0, ...)
  for (std::size_t t = 0; t < steps; ++t) {
    const auto len = static_cast<std::size_t>(std::min(need[t + 1], support[t + 1]));
    std::vector<BigInt> next(len);
    const StepRule rule = rules[t];
    for (std::size_t i = 1; i <= cur.size(); ++i) {
      const BigInt& prev = cur[i - 1];
      if (sgn(prev) == 0) continue;
      const int ii = static_cast<int>(i);
      const int row = 4 * ii + rule.row_offset;
      for (std::size_t j = 1; j <= len; ++j) {
        const int col = ii + static_cast<int>(j) + rule.col_shift;
        if (col < 1 || col > row) continue;
        if (3 * col < row) continue;  // below the band, m vanishes
        const BigInt m = table_.entry(row, col);
        if (sgn(m) != 0) mpz_addmul(next[j - 1].get_mpz_t(), prev.get_mpz_t(), m.get_mpz_t());
      }
    }
    cur = std::move(next);
  }
  if (static_cast<int>(cur.size()) < jmax) cur.resize(static_cast<std::size_t>(jmax));
  cur.resize(static_cast<std::size_t>(jmax));
  return cur;
}

CoeffVector VectorStore::x_vector(int k, int jmax) const {
  if (k < 1) throw std::invalid_argument("x_k requires k >= 1");
  if (jmax < 1) throw std::invalid_argument("jmax must be positive");
  const auto key = std::make_tuple(static_cast<int>(Family::X), 0, k, 0);
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end() && static_cast<int>(it->second.size()) >= jmax) {
      return {Family::X, (k - 1) / 2, k, {it->second.begin(), it->second.begin() + jmax}};
    }
  }
  std::vector<StepRule> rules;
  for (int level = 1; level < k; ++level) rules.push_back(step_rule(Family::X, level));
  auto values = compute(rules, jmax);
  {
    std::lock_guard lock(mutex_);
    auto& slot = cache_[key];
    if (slot.size() < values.size()) slot = values;
  }
  return {Family::X, (k - 1) / 2, k, std::move(values)};
}

CoeffVector VectorStore::family_vector(Family f, int alpha, int mu, int jmax, SeedReading reading) const {
  if (f == Family::X) throw std::invalid_argument("use x_vector for the x family");
  if (mu < 1) throw std::invalid_argument("levels start at 1");
  if (jmax < 1) throw std::invalid_argument("jmax must be positive");
  const int k0 = seed_index(f, alpha, reading);
  const auto key = std::make_tuple(static_cast<int>(f), alpha, mu, static_cast<int>(reading));
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end() && static_cast<int>(it->second.size()) >= jmax) {
      return {f, alpha, mu, {it->second.begin(), it->second.begin() + jmax}};
    }
  }
  std::vector<StepRule> rules;
  for (int level = 1; level < k0; ++level) rules.push_back(step_rule(Family::X, level));
  for (int level = 1; level < mu; ++level) rules.push_back(step_rule(f, level));
  auto values = compute(rules, jmax);
  {
    std::lock_guard lock(mutex_);
    auto& slot = cache_[key];
    if (slot.size() < values.size()) slot = values;
  }
  return {f, alpha, mu, std::move(values)};
}

const VectorStore& default_vectors() {
  static const VectorStore store;
  return store;
}

CoeffVector x_vector(int k, int jmax) { return default_vectors().x_vector(k, jmax); }

CoeffVector family_vector(Family f, int alpha, int mu, int jmax, SeedReading reading) {
  return default_vectors().family_vector(f, alpha, mu, jmax, reading);
}

std::vector<BoundViolation> check_vector_bounds(const CoeffVector& v) {
  std::vector<BoundViolation> out;
  for (int j = 1; j <= v.jmax(); ++j) {
    const BigInt& x = v.values[static_cast<std::size_t>(j - 1)];
    const int bound = valuation_bound(v.family, v.alpha, v.level, j);
    const Valuation3 val = pi3(x);
    if (!val.at_least(bound)) out.push_back({v.alpha, v.level, j, x, val, bound});
  }
  return out;
}

ValuationReport check_valuation_bounds(Family f, int alpha_max, int mu_max, int jmax, const VectorStore& store) {
  ValuationReport report;
  report.family = f;
  auto absorb = [&](const CoeffVector& v) {
    report.checked += v.jmax();
    for (auto& viol : check_vector_bounds(v)) report.violations.push_back(std::move(viol));
  };
  for (int alpha = 0; alpha <= alpha_max; ++alpha) {
    if (f == Family::X) {
      absorb(store.x_vector(2 * alpha + 1, jmax));
      absorb(store.x_vector(2 * alpha + 2, jmax));
      continue;
    }
    for (int mu = 1; mu <= mu_max; ++mu) absorb(store.family_vector(f, alpha, mu, jmax));
  }
  return report;
}

}  // namespace qcong
