#include "qcong/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qcong/count_tables.hpp"

namespace qcong {

namespace {

template <class T>
void read(const nlohmann::json& j, const char* key, T& out) {
  if (j.contains(key)) j.at(key).get_to(out);
}

bool selected(const SuiteConfig& c, const std::string& id) {
  return c.only.empty() || std::find(c.only.begin(), c.only.end(), id) != c.only.end();
}

struct Task {
  std::function<Report()> run;
  std::int64_t top_index = 0;  // largest coefficient index touched
};

std::vector<Task> congruence_tasks(const SuiteConfig& cfg) {
  std::vector<Task> tasks;
  for (const auto& c : congruence_catalog()) {
    if (!selected(cfg, c.id)) continue;
    std::vector<Params> grid;
    std::int64_t n_max = cfg.n_max;
    if (c.kind == CaseKind::Prior) {
      n_max = cfg.n_max_prior;
      for (int b : cfg.prior_beta) {
        Params p;
        p.beta = b;
        if (c.id == "B4") {
          for (auto r : cfg.prior_r) {
            p.r = r;
            grid.push_back(p);
          }
        } else {
          grid.push_back(p);
        }
      }
    } else if (c.kind == CaseKind::Conjecture) {
      n_max = cfg.n_max_conjecture;
      for (int k : cfg.conjecture_k)
        for (int lam : cfg.conjecture_lam) {
          Params p;
          p.k = k;
          p.lam = lam;
          grid.push_back(p);
        }
    } else {
      for (int a : cfg.alpha)
        for (int b : cfg.beta) {
          Params p;
          p.alpha = a;
          p.beta = b;
          std::vector<Params> with_ell;
          if (c.class_rule != ClassRule::None) {
            for (int sign : {1, -1})
              for (auto ell : class_representatives(c.class_rule, a, sign, cfg.class_representatives)) {
                p.ell = ell;
                with_ell.push_back(p);
              }
            std::sort(with_ell.begin(), with_ell.end(), [](const Params& x, const Params& y) { return x.ell < y.ell; });
          } else {
            with_ell.push_back(p);
          }
          for (auto q : with_ell) {
            if (c.prime_rule != PrimeRule::None) {
              auto it = cfg.primes.find(c.id);
              if (it == cfg.primes.end()) continue;
              for (auto prime : it->second)
                for (int k : cfg.k) {
                  q.p = prime;
                  q.k = k;
                  grid.push_back(q);
                }
            } else {
              grid.push_back(q);
            }
          }
        }
    }
    for (const auto& p : grid) {
      const CongruenceInstance inst = instantiate(c, p);
      std::int64_t n = n_max;
      if (c.kind == CaseKind::Theorem) {
        if (c.prime_rule != PrimeRule::None) {
          n = cfg.n_max_prime;
        } else if (inst.progression.A <= cfg.small_step) {
          n = cfg.n_max_small_step;
        }
      }
      tasks.push_back({[inst, n] { return verify_congruence(inst, n); }, inst.progression.at(std::max<std::int64_t>(n, 0))});
    }
    if (grid.empty()) {
      tasks.push_back({[&c] {
                         Report r;
                         r.case_id = c.id;
                         r.check = "congruence";
                         r.kind = c.kind;
                         r.gating = c.kind != CaseKind::Conjecture;
                         r.finalize();
                         return r;
                       },
                       0});
    }
  }
  return tasks;
}

std::vector<Task> identity_tasks(const SuiteConfig& cfg) {
  std::vector<Task> tasks;
  const std::int64_t order = cfg.identity_order;
  for (const auto& g : identity_catalog()) {
    if (!selected(cfg, g.id)) continue;
    const bool uses_beta = std::find(g.parameters.begin(), g.parameters.end(), "beta") != g.parameters.end();
    const std::vector<int> betas = uses_beta ? cfg.identity_beta : std::vector<int>{0};
    std::size_t before = tasks.size();
    for (int a : cfg.identity_alpha)
      for (int b : betas) {
        Params p;
        p.alpha = a;
        p.beta = b;
        std::vector<std::int64_t> ells{0};
        if (g.class_rule != ClassRule::None) {
          ells.clear();
          for (int sign : {1, -1})
            for (auto ell : class_representatives(g.class_rule, a, sign, cfg.class_representatives)) ells.push_back(ell);
          std::sort(ells.begin(), ells.end());
        }
        for (auto ell : ells) {
          p.ell = ell;
          const IdentityInstance inst = instantiate(g, p);
          const std::int64_t top = inst.progression.at(order - 1);
          if (g.class_rule == ClassRule::None) {
            tasks.push_back({[inst, order] { return verify_gf_identity(inst, order); }, top});
          } else {
            // For residue-class members the exact outcome is recorded; the
            // congruence modulo the lemma bound is what is required.
            tasks.push_back({[inst, order] {
                               Report r = verify_gf_identity(inst, order, {IdentityMode::Exact, {}, SeedReading::Stated});
                               r.gating = false;
                               return r;
                             },
                             top});
            tasks.push_back({[inst, order] { return verify_gf_identity(inst, order, {IdentityMode::Mod, {}, SeedReading::Stated}); },
                             top});
          }
        }
      }
    if (tasks.size() == before) {
      tasks.push_back({[&g] {
                         Report r;
                         r.case_id = g.id;
                         r.check = "identity-exact";
                         r.finalize();
                         return r;
                       },
                       0});
    }
  }
  return tasks;
}

std::string describe_failure(const Report& r) {
  std::ostringstream os;
  os << r.case_id << " [" << r.check << "]";
  for (const auto& [k, v] : r.params) os << ' ' << k << '=' << v;
  os << ": " << r.function << '(' << r.progression << "), " << r.failure_count << " of " << r.checked
     << " indices fail";
  if (r.required) os << " mod 3^" << *r.required;
  os << "; n =";
  for (std::size_t i = 0; i < r.failures.size(); ++i) os << (i ? ", " : " ") << r.failures[i].n;
  if (r.failure_count > static_cast<std::int64_t>(r.failures.size())) os << ", ...";
  os << "; largest exponent holding: " << (r.max_exponent_holding ? std::to_string(*r.max_exponent_holding) : "inf");
  return os.str();
}

}  // namespace

SuiteConfig SuiteConfig::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("suite config must be a JSON object");
  static const std::set<std::string> known = {
      "alpha",       "beta",           "k",          "primes",           "prior_beta",        "prior_r",
      "conjecture_k", "conjecture_lam", "class_representatives", "n_max", "n_max_small_step", "small_step",
      "n_max_prime", "n_max_prior",    "n_max_conjecture", "identities", "identity_order",   "identity_alpha",
      "identity_beta", "congruences",  "only",       "conjectures_gate", "threads",           "description"};
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) throw std::invalid_argument("unknown suite config key: " + key);
  }
  SuiteConfig c;
  try {
    read(j, "alpha", c.alpha);
    read(j, "beta", c.beta);
    read(j, "k", c.k);
    read(j, "primes", c.primes);
    read(j, "prior_beta", c.prior_beta);
    read(j, "prior_r", c.prior_r);
    read(j, "conjecture_k", c.conjecture_k);
    read(j, "conjecture_lam", c.conjecture_lam);
    read(j, "class_representatives", c.class_representatives);
    read(j, "n_max", c.n_max);
    read(j, "n_max_small_step", c.n_max_small_step);
    read(j, "small_step", c.small_step);
    read(j, "n_max_prime", c.n_max_prime);
    read(j, "n_max_prior", c.n_max_prior);
    read(j, "n_max_conjecture", c.n_max_conjecture);
    read(j, "identities", c.identities);
    read(j, "identity_order", c.identity_order);
    read(j, "identity_alpha", c.identity_alpha);
    read(j, "identity_beta", c.identity_beta);
    read(j, "congruences", c.congruences);
    read(j, "only", c.only);
    read(j, "conjectures_gate", c.conjectures_gate);
    read(j, "threads", c.threads);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed suite config: ") + e.what());
  }
  auto nonneg = [](const std::vector<int>& v, const char* what) {
    for (int x : v)
      if (x < 0) throw std::invalid_argument(std::string(what) + " entries must be nonnegative");
  };
  nonneg(c.alpha, "alpha");
  nonneg(c.beta, "beta");
  nonneg(c.k, "k");
  nonneg(c.prior_beta, "prior_beta");
  nonneg(c.identity_alpha, "identity_alpha");
  nonneg(c.identity_beta, "identity_beta");
  for (int k : c.conjecture_k)
    if (k < 1) throw std::invalid_argument("conjecture_k entries must be >= 1");
  if (c.identity_order < 1) throw std::invalid_argument("identity_order must be >= 1");
  if (c.class_representatives < 0 || c.threads < 0) throw std::invalid_argument("counts must be nonnegative");
  if (c.n_max < 0 || c.n_max_small_step < 0 || c.n_max_prime < 0 || c.n_max_prior < 0 || c.n_max_conjecture < 0) {
    throw std::invalid_argument("n_max values must be nonnegative");
  }
  return c;
}

SuiteConfig SuiteConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open suite config " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("cannot parse suite config " + path.string() + ": " + e.what());
  }
  return from_json(j);
}

int resolve_threads(int configured) {
  if (const char* env = std::getenv(kThreadsEnv); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 0) throw std::invalid_argument(std::string(kThreadsEnv) + " must be a nonnegative integer");
    configured = static_cast<int>(v);
  }
  if (configured <= 0) configured = static_cast<int>(std::thread::hardware_concurrency());
  return std::max(configured, 1);
}

SuiteReport run_suite(const SuiteConfig& config) {
  std::vector<Task> tasks;
  if (config.congruences) tasks = congruence_tasks(config);
  if (config.identities) {
    auto more = identity_tasks(config);
    tasks.insert(tasks.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  }

  // Fill the shared tables once, up front, rather than growing them piecemeal.
  std::int64_t top_exact = 0;
  std::int64_t top_residue = -1;
  for (const auto& t : tasks) {
    if (t.top_index <= kExactIndexLimit) {
      top_exact = std::max(top_exact, t.top_index);
    } else {
      top_residue = std::max(top_residue, t.top_index);
    }
  }
  CountTables::global().exact(top_exact);
  if (top_residue >= 0) CountTables::global().residue(top_residue);

  SuiteReport out;
  out.reports.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        out.reports[i] = tasks[i].run();
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const int threads = std::min<int>(resolve_threads(config.threads), static_cast<int>(std::max<std::size_t>(tasks.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (error) std::rethrow_exception(error);

  bool any_fail = false;
  bool any_pass = false;
  for (auto& r : out.reports) {
    if (r.kind == CaseKind::Conjecture && config.conjectures_gate) r.gating = true;
    if (r.status == Status::Fail) {
      out.discrepancies.push_back(describe_failure(r));
      if (r.gating) any_fail = true;
    }
    if (r.status != Status::Skipped) any_pass = true;
  }
  out.overall = any_fail ? Status::Fail : (any_pass ? Status::Pass : Status::Skipped);
  return out;
}

}  // namespace qcong
