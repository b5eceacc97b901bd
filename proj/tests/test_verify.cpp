#include <gtest/gtest.h>

#include "fistab/io.hpp"
#include "fistab/verify.hpp"

using namespace fistab;

TEST(Verify, EverySuitePassesAFewTrials) {
  for (const auto& [name, fn] : verify_suites()) {
    auto rep = verify(name, 6, 99);
    EXPECT_TRUE(rep.passed()) << rep.text(OutputFormat::Plain);
    EXPECT_GT(rep.checks, 0u) << name;
  }
}

TEST(Verify, SameSeedSameBytes) {
  for (const std::string suite : {"degrees", "partitions", "colim"}) {
    const auto a = verify(suite, 8, 5).text(OutputFormat::KeyValue);
    const auto b = verify(suite, 8, 5).text(OutputFormat::KeyValue);
    EXPECT_EQ(a, b) << suite;
  }
}

TEST(Verify, ThreadCountDoesNotChangeTheReport) {
  const auto one = verify("homology", 10, 17, 1).text(OutputFormat::Plain);
  const auto three = verify("homology", 10, 17, 3).text(OutputFormat::Plain);
  EXPECT_EQ(one, three);
}

TEST(Verify, UnknownSuiteThrows) { EXPECT_THROW(verify("nope", 1, 1), InvalidArgument); }

TEST(Verify, FailuresCarryReplayableArtifacts) {
  // fails on roughly half the trials, recording the instance
  TrialFn fn = [](Rng& rng, TrialOutcome& out) {
    auto v = representable(Ring::Rationals, static_cast<std::size_t>(rng.uniform(0, 2)), 3);
    out.check(rng.coin(), "coin came up tails");
    if (!out.ok) out.artifact = to_text(v);
  };
  const auto rep = run_trials("forced", fn, 12, 4, 2);
  ASSERT_FALSE(rep.passed());
  for (const auto& [i, t] : rep.failures) {
    EXPECT_EQ(t.failure, "coin came up tails");
    const std::string head = "# suite forced trial " + std::to_string(i) + " trial-seed " +
                             std::to_string(Rng::trial_seed(4, i)) + "\n";
    EXPECT_EQ(t.artifact.rfind(head, 0), 0u) << t.artifact;
    EXPECT_EQ(module_from_text(t.artifact).N, 3u);
  }
  EXPECT_EQ(rep.text(OutputFormat::Plain), run_trials("forced", fn, 12, 4, 1).text(OutputFormat::Plain));
}

TEST(Verify, ExceptionsBecomeFailures) {
  TrialFn fn = [](Rng&, TrialOutcome&) { throw InvalidArgument("boom"); };
  const auto rep = run_trials("throws", fn, 2, 1);
  ASSERT_EQ(rep.failures.size(), 2u);
  EXPECT_NE(rep.failures[0].second.failure.find("boom"), std::string::npos);
}

TEST(Verify, ReportListsFailedTrials) {
  VerifyReport rep;
  rep.suite = "s";
  rep.trials = 3;
  rep.seed = 7;
  TrialOutcome t;
  t.check(false, "broken thing");
  rep.failures.emplace_back(2, t);
  const auto kv = rep.text(OutputFormat::KeyValue);
  EXPECT_NE(kv.find("result=FAIL"), std::string::npos);
  EXPECT_NE(kv.find("failed_trial=2"), std::string::npos);
  EXPECT_NE(kv.find("trial_seed=" + std::to_string(Rng::trial_seed(7, 2))), std::string::npos);
  EXPECT_NE(kv.find("reason=\"broken thing\""), std::string::npos);
}
