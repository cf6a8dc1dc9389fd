#include <gtest/gtest.h>

#include "constellation/verify.hpp"

using namespace constellation;

namespace {

// Smaller sampling than the CLI defaults; acceptance runs the full sizes.
VerifyOptions quick() {
  VerifyOptions o;
  o.exhaustive_max_m = 5;
  o.samples = 120;
  o.fano_trials = 20'000;
  o.xi_samples = 30;
  return o;
}

}  // namespace

TEST(Suites, EverySuitePassesAndAllOperationsAreReached) {
  OperationLog log;
  for (const auto& name : suite_names()) {
    const auto r = run_suite(name, quick(), &log);
    EXPECT_TRUE(r.passed()) << name;
    for (const auto& c : r.checks)
      if (!c.passed) ADD_FAILURE() << name << ": " << c.name << "  " << c.detail;
  }
  for (const auto& op : public_operations()) EXPECT_TRUE(log.count(op)) << "not reached: " << op;
}

TEST(Suites, DeterministicAcrossRuns) {
  const auto a = run_suite("xi-criterion", quick());
  const auto b = run_suite("xi-criterion", quick());
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].name, b.checks[i].name);
    EXPECT_EQ(a.checks[i].detail, b.checks[i].detail);
  }
}

TEST(Suites, UnknownSuiteIsAnError) { EXPECT_THROW(run_suite("no-such-suite"), std::exception); }

TEST(Suites, IsomorphismHelper) {
  const auto a = SimplicialComplex::from_maximal_faces(4, {{0, 1}, {2, 3}});
  const auto b = SimplicialComplex::from_maximal_faces(4, {{0, 2}, {1, 3}});
  const auto c = SimplicialComplex::from_maximal_faces(4, {{0, 1}, {1, 2}});
  EXPECT_TRUE(isomorphic(a, b));
  EXPECT_FALSE(isomorphic(a, c));
}
