#pragma once

// Grid runs over the whole catalog.

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcong/verify.hpp"

namespace qcong {

/// Environment variable overriding the configured thread count.
inline constexpr const char* kThreadsEnv = "QCONG_THREADS";

struct SuiteConfig {
  std::vector<int> alpha{0, 1};
  std::vector<int> beta{0, 1};
  std::vector<int> k{0};
  /// Auxiliary primes per case id (MR4, MR11, MR16, MR20).
  std::map<std::string, std::vector<std::int64_t>> primes{
      {"MR4", {7, 11}}, {"MR11", {7, 11}}, {"MR16", {5, 11}}, {"MR20", {7, 11}}};
  std::vector<int> prior_beta{0, 1, 2};
  std::vector<std::int64_t> prior_r{7, 11};
  std::vector<int> conjecture_k{1};
  std::vector<int> conjecture_lam{0, 1};
  int class_representatives = 4;

  std::int64_t n_max = 100;
  std::int64_t n_max_small_step = 300;  // used when A <= small_step
  std::int64_t small_step = 27;
  std::int64_t n_max_prime = 50;
  std::int64_t n_max_prior = 200;
  std::int64_t n_max_conjecture = 50;

  bool identities = true;
  std::int64_t identity_order = 30;
  std::vector<int> identity_alpha{0, 1};
  std::vector<int> identity_beta{0, 1};

  bool congruences = true;
  /// Restrict to these ids (congruences and identities); empty means all.
  std::vector<std::string> only;
  bool conjectures_gate = false;
  int threads = 0;  // 0: hardware concurrency

  /// Missing keys keep their defaults; unknown keys are rejected.
  static SuiteConfig from_json(const nlohmann::json& j);
  static SuiteConfig load(const std::filesystem::path& path);
};

struct SuiteReport {
  std::vector<Report> reports;
  Status overall = Status::Skipped;
  /// One line per failing report, with the offending indices.
  std::vector<std::string> discrepancies;
};

/// Thread count after applying the environment override; at least 1.
int resolve_threads(int configured);

SuiteReport run_suite(const SuiteConfig& config);

}  // namespace qcong
