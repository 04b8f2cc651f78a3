#include <gtest/gtest.h>

#include "einf/suites.hpp"

using namespace einf;

namespace {
SweepConfig small() {
  SweepConfig c;
  c.max_arity = 3;
  c.max_degree = 2;
  return c;
}
}  // namespace

TEST(Suites, AllPassAtSmallBounds) {
  for (const auto& name : suite_names()) {
    const SuiteReport r = run_suite_serial(name, small());
    EXPECT_TRUE(r.passed()) << report_to_text(r);
    EXPECT_GT(r.instances_checked, 0u) << name;
  }
}

TEST(Suites, ParallelMatchesSerial) {
  for (const auto& name : suite_names()) {
    const SuiteReport a = run_suite_serial(name, small());
    const SuiteReport b = run_suite_parallel(name, small(), 3);
    EXPECT_EQ(a.instances_checked, b.instances_checked) << name;
    EXPECT_EQ(a.failures, b.failures) << name;
    EXPECT_EQ(report_to_text(a, false), report_to_text(b, false));
  }
}

TEST(Suites, CorruptedSignsAreDetected) {
  SweepConfig c = small();
  c.x_sign_rule = SignRule::no_koszul;
  const SuiteReport serial = run_suite_serial("d2_x", c);
  EXPECT_FALSE(serial.passed());
  EXPECT_EQ(run_suite_parallel("d2_x", c, 2).failures, serial.failures);
}

TEST(Suites, UnknownSuite) {
  try {
    run_suite("nope", small());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::unknown_suite);
  }
}

TEST(Suites, ConfigValidation) {
  SweepConfig c;
  c.max_arity = 0;
  EXPECT_THROW(c.validate(), Error);
  c = SweepConfig{};
  c.parallelism = 0;
  EXPECT_THROW(c.validate(), Error);
  EXPECT_NO_THROW(SweepConfig{}.validate());
}

TEST(Suites, ConfigFromJson) {
  const SweepConfig c =
      config_from_json(nlohmann::json::parse(R"({"max_arity": 2, "parallelism": 3, "suites": ["d2_e"]})"));
  EXPECT_EQ(c.max_arity, 2);
  EXPECT_EQ(c.max_degree, SweepConfig{}.max_degree);
  EXPECT_EQ(c.parallelism, 3);
  EXPECT_EQ(c.suites, std::vector<std::string>{"d2_e"});
  EXPECT_THROW(config_from_json(nlohmann::json::array()), Error);
}

TEST(Suites, ReportFormats) {
  const SuiteReport r = run_suite_serial("d2_e", small());
  EXPECT_EQ(report_to_text(r, false).rfind("PASS", 0), 0u) << report_to_text(r, false);
  const auto j = report_to_json(r, false);
  EXPECT_EQ(j["suite"], "d2_e");
  EXPECT_EQ(j["passed"], true);
  EXPECT_EQ(j["failure_count"], 0);
  EXPECT_FALSE(j.contains("wall_time_seconds"));
}
