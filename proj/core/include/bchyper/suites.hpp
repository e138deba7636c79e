#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bchyper/numbers.hpp"

namespace bchyper {

/// Deterministic generator: mt19937_64 with 53-bit uniform doubles, so a seed
/// gives the same draws on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Integer in [lo, hi].
  int integer(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Seed of case `index` within a suite run.
std::uint64_t case_seed(std::uint64_t seed, int index);

struct SuiteCase {
  std::uint64_t seed = 0;
  std::string params;
  std::string z;
  double residual1 = 0.0;
  double residual2 = 0.0;
  bool passed = false;
  bool skipped = false;
  std::string note;
};

struct SuiteResult {
  std::string theorem;
  std::uint64_t seed = 0;
  int samples = 0;
  double tol = 0.0;
  std::vector<SuiteCase> cases;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  bool ok() const { return failed == 0; }
};

struct SuiteConfig {
  std::uint64_t seed = 7;
  /// 0 selects the per-theorem default.
  int samples = 0;
  /// 0 selects the per-theorem default.
  double tol = 0.0;
  /// Quadrature nodes per axis for thm3.1, thm3.5 and thm3.8; 0 keeps 64
  /// (128 for the double integral).
  int nodes = 0;
};

/// Admissible draws are rejection-sampled; a case is skipped after this many
/// failed attempts.
inline constexpr int kMaxAttempts = 100;

/// thm2.1 thm2.2 thm3.1 thm3.5 thm3.8 thm4.1 thm4.2 thm4.3 thm5.1 thm5.2
/// thm6.1 thm6.2 thm6.3 thm6.4 thm7.1 cs-eigen cs-norm
const std::vector<std::string>& theorem_ids();
bool is_theorem_id(const std::string& id);
int default_samples(const std::string& id);
double default_tolerance(const std::string& id);

/// Throws InvalidParams for an unknown id.
SuiteResult run_suite(const std::string& id, const SuiteConfig& config);

}  // namespace bchyper
