#include <gtest/gtest.h>

#include <set>

#include "bchyper/errors.hpp"
#include "bchyper/suites.hpp"

namespace {

using namespace bchyper;

TEST(Suites, Registry) {
  const std::vector<std::string> expected{"thm2.1", "thm2.2", "thm3.1", "thm3.5", "thm3.8",
                                          "thm4.1", "thm4.2", "thm4.3", "thm5.1", "thm5.2",
                                          "thm6.1", "thm6.2", "thm6.3", "thm6.4", "thm7.1",
                                          "cs-eigen", "cs-norm"};
  EXPECT_EQ(theorem_ids(), expected);
  for (const auto& id : expected) {
    EXPECT_TRUE(is_theorem_id(id));
    EXPECT_GE(default_samples(id), 1);
  }
  EXPECT_FALSE(is_theorem_id("thm9.9"));
  EXPECT_THROW(run_suite("thm9.9", {}), InvalidParams);
  EXPECT_EQ(default_tolerance("thm4.1"), 1e-9);
  EXPECT_GE(default_samples("thm4.1"), 500);
}

TEST(Suites, RngIsPortableMt19937) {
  Rng a(7);
  std::mt19937_64 ref(7);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.raw(), ref());
  Rng b(11);
  for (int i = 0; i < 1000; ++i) {
    const double u = b.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    const int k = b.integer(-2, 3);
    EXPECT_GE(k, -2);
    EXPECT_LE(k, 3);
  }
}

TEST(Suites, CaseSeedsDistinct) {
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 1000; ++i) seen.insert(case_seed(7, i));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_NE(case_seed(7, 0), case_seed(8, 0));
}

TEST(Suites, EverySuitePassesAtDefaults) {
  for (const auto& id : theorem_ids()) {
    SuiteConfig cfg;
    cfg.seed = 3;
    cfg.samples = 20;
    const SuiteResult r = run_suite(id, cfg);
    EXPECT_EQ(r.theorem, id);
    EXPECT_EQ(r.samples, 20);
    EXPECT_EQ(static_cast<int>(r.cases.size()), 20) << id;
    EXPECT_EQ(r.passed + r.failed + r.skipped, 20) << id;
    EXPECT_TRUE(r.ok()) << id;
    EXPECT_EQ(r.tol, default_tolerance(id)) << id;
  }
}

TEST(Suites, Deterministic) {
  SuiteConfig cfg;
  cfg.seed = 42;
  cfg.samples = 30;
  for (const char* id : {"thm4.3", "thm6.1", "cs-norm"}) {
    const SuiteResult a = run_suite(id, cfg);
    const SuiteResult b = run_suite(id, cfg);
    ASSERT_EQ(a.cases.size(), b.cases.size());
    for (std::size_t i = 0; i < a.cases.size(); ++i) {
      EXPECT_EQ(a.cases[i].seed, b.cases[i].seed);
      EXPECT_EQ(a.cases[i].params, b.cases[i].params);
      EXPECT_EQ(a.cases[i].z, b.cases[i].z);
      EXPECT_EQ(a.cases[i].residual1, b.cases[i].residual1);
      EXPECT_EQ(a.cases[i].residual2, b.cases[i].residual2);
    }
  }
}

TEST(Suites, TinyToleranceFails) {
  SuiteConfig cfg;
  cfg.samples = 20;
  cfg.tol = 1e-300;
  const SuiteResult r = run_suite("thm3.1", cfg);
  EXPECT_FALSE(r.ok());
  EXPECT_GT(r.failed, 0);
}

TEST(Suites, NodesOverrideChangesQuadrature) {
  SuiteConfig coarse;
  coarse.samples = 5;
  coarse.nodes = 16;
  SuiteConfig fine = coarse;
  fine.nodes = 64;
  const SuiteResult a = run_suite("thm3.1", coarse);
  const SuiteResult b = run_suite("thm3.1", fine);
  bool differs = false;
  for (std::size_t i = 0; i < a.cases.size(); ++i) {
    EXPECT_EQ(a.cases[i].params, b.cases[i].params);
    differs = differs || a.cases[i].residual1 != b.cases[i].residual1;
  }
  EXPECT_TRUE(differs);
}

}  // namespace
