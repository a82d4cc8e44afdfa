#include "qcong/count_tables.hpp"

#include <stdexcept>

namespace qcong {

namespace {

// p3(n) = sum_{t>=1} (-1)^(t+1) (2t+1) p3(n - t(t+1)/2), from E(q)^3 / E(q)^3 = 1.
void extend_exact(std::vector<BigInt>& p, std::int64_t upto) {
  if (p.empty()) p.emplace_back(1);
  for (auto n = static_cast<std::int64_t>(p.size()); n <= upto; ++n) {
    BigInt acc = 0;
    for (std::int64_t t = 1;; ++t) {
      const std::int64_t tri = t * (t + 1) / 2;
      if (tri > n) break;
      const auto weight = static_cast<unsigned long>(2 * t + 1);
      const BigInt& prev = p[static_cast<std::size_t>(n - tri)];
      if (t % 2 == 1) {
        mpz_addmul_ui(acc.get_mpz_t(), prev.get_mpz_t(), weight);
      } else {
        mpz_submul_ui(acc.get_mpz_t(), prev.get_mpz_t(), weight);
      }
    }
    p.push_back(std::move(acc));
  }
}

void extend_residue(std::vector<Residue3>& p, std::int64_t upto) {
  if (p.empty()) p.emplace_back(1);
  for (auto n = static_cast<std::int64_t>(p.size()); n <= upto; ++n) {
    __int128 acc = 0;
    for (std::int64_t t = 1;; ++t) {
      const std::int64_t tri = t * (t + 1) / 2;
      if (tri > n) break;
      const auto term = static_cast<__int128>(p[static_cast<std::size_t>(n - tri)].value()) * (2 * t + 1);
      acc += (t % 2 == 1) ? term : -term;
    }
    p.push_back(Residue3::reduce(acc));
  }
}

}  // namespace

CountTables& CountTables::global() {
  static CountTables tables;
  return tables;
}

std::shared_ptr<const std::vector<BigInt>> CountTables::exact(std::int64_t upto) {
  if (upto < 0) throw std::invalid_argument("negative table bound");
  std::lock_guard lock(exact_mutex_);
  if (!exact_ || static_cast<std::int64_t>(exact_->size()) <= upto) {
    auto grown = exact_ ? std::make_shared<std::vector<BigInt>>(*exact_) : std::make_shared<std::vector<BigInt>>();
    extend_exact(*grown, upto);
    exact_ = std::move(grown);
  }
  return exact_;
}

std::shared_ptr<const std::vector<Residue3>> CountTables::residue(std::int64_t upto) {
  if (upto < 0) throw std::invalid_argument("negative table bound");
  std::lock_guard lock(residue_mutex_);
  if (!residue_ || static_cast<std::int64_t>(residue_->size()) <= upto) {
    auto grown =
        residue_ ? std::make_shared<std::vector<Residue3>>(*residue_) : std::make_shared<std::vector<Residue3>>();
    extend_residue(*grown, upto);
    residue_ = std::move(grown);
  }
  return residue_;
}

template <class Scalar>
Scalar count_coefficient(const std::vector<Scalar>& p3, const CountingFunction& f, std::int64_t n) {
  if (n < 0) return Scalar(0);
  if (n >= static_cast<std::int64_t>(p3.size())) throw std::out_of_range("p3 table too short");
  const auto at = [&](std::int64_t i) -> const Scalar& { return p3[static_cast<std::size_t>(i)]; };
  switch (f.kind) {
    case CountKind::P3: return at(n);
    case CountKind::RegularTriple: {
      Scalar acc(0);
      for (std::int64_t t = 0;; ++t) {
        const std::int64_t shift = f.ell * (t * (t + 1) / 2);
        if (shift > n) break;
        const Scalar w(static_cast<long>((t % 2 == 0 ? 1 : -1) * (2 * t + 1)));
        acc += w * at(n - shift);
      }
      return acc;
    }
    case CountKind::TwoColorTriple: {
      Scalar acc(0);
      for (std::int64_t m = 0; f.ell * m <= n; ++m) acc += at(m) * at(n - f.ell * m);
      return acc;
    }
  }
  throw std::invalid_argument("unknown counting function");
}

template BigInt count_coefficient<BigInt>(const std::vector<BigInt>&, const CountingFunction&, std::int64_t);
template Residue3 count_coefficient<Residue3>(const std::vector<Residue3>&, const CountingFunction&, std::int64_t);

}  // namespace qcong
