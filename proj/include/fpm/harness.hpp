#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>

#include "fpm/oracle.hpp"

namespace fpm {

/// Bounds on generated test cases.
struct SizeProfile {
  int max_generators = 4;
  long long max_entry = 24;  // |integer entry| bound
  int max_degree = 3;        // polynomial degree bound
  int max_extra_relations = 2;
};

struct CampaignConfig {
  std::string law;
  std::uint64_t seed = 1;
  int case_count = 100;
  SizeProfile profile;
  std::vector<RingContext> contexts;  // empty means the default set
  Int oracle_bound = 64;
  Int hom_tensor_bound = 36;
};

struct Violation {
  int case_index = 0;
  std::string case_desc;
  std::string expected;
  std::string got;
  std::string witness;
};

struct Report {
  std::string law;
  std::uint64_t seed = 0;
  int cases_run = 0;
  std::vector<Violation> violations;
  double runtime_seconds = 0.0;
  int oracle_cross_checks = 0;

  bool pass() const { return violations.empty(); }
};

/// Deterministic generator: only raw mt19937_64 draws, so identical seeds
/// give identical case streams on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t u64() { return eng_(); }
  /// Uniform-ish draw in [lo, hi], inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin() { return u64() & 1u; }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<size_t>(u64() % v.size())];
  }

private:
  std::mt19937_64 eng_;
};

std::vector<std::string> law_names();
bool is_known_law(const std::string& law);
std::vector<RingContext> default_contexts();

/// Random module: half presentation-matrix mode, half invariant-factor mode.
PresentedModule generate_module(Rng& rng, const SizeProfile& profile,
                                const RingContext& ctx);
/// Random module guaranteed finite (no free part over base contexts).
PresentedModule generate_finite_module(Rng& rng, const SizeProfile& profile,
                                       const RingContext& ctx);
Ideal generate_ideal(Rng& rng, const SizeProfile& profile,
                     const RingContext& ctx, const PresentedModule* bias);

/// Greedy minimization: repeatedly divides invariant factors by a prime (or
/// drops a free generator) while the violation persists.
PresentedModule shrink_module(
    const PresentedModule& M,
    const std::function<bool(const PresentedModule&)>& violates);

Report run_campaign(const CampaignConfig& cfg);

}  // namespace fpm
