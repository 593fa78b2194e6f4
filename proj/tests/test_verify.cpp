#include <gtest/gtest.h>

#include <map>
#include <set>

#include <json.hpp>

#include "tambara/error.hpp"
#include "tambara/verify.hpp"

using namespace tambara;

namespace {

Check failing_on(int every, int max_shrink) {
  Check c;
  c.name = "fails-sometimes";
  c.cases = 20;
  c.max_shrink = max_shrink;
  c.run = [every](const CaseContext& ctx) -> std::optional<std::string> {
    if (ctx.index % every != 0) return std::nullopt;
    // Still fails at shrink levels 1 and 2, passes from 3 on.
    if (ctx.shrink >= 3) return std::nullopt;
    return "case " + std::to_string(ctx.index) + " at shrink " + std::to_string(ctx.shrink);
  };
  return c;
}

Check constant(std::string name, bool fails, bool negative) {
  Check c;
  c.name = std::move(name);
  c.cases = 5;
  c.negative = negative;
  c.run = [fails](const CaseContext& ctx) -> std::optional<std::string> {
    if (fails) return "witness " + std::to_string(ctx.index);
    return std::nullopt;
  };
  return c;
}

}  // namespace

TEST(Verify, TwelveSuites) {
  auto names = suite_names();
  EXPECT_EQ(names.size(), 12U);
  for (const auto& n : names) EXPECT_FALSE(suite_checks(n).empty()) << n;
}

TEST(Verify, UnknownSuiteThrows) {
  try {
    run_suite("no-such-suite", 42);
    FAIL() << "expected UnknownSuite";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownSuite);
  }
  EXPECT_THROW(suite_checks("lindner"), Error);
}

TEST(Verify, ReportsAreByteIdentical) {
  for (const char* s : {"lccdc-axioms", "lindner-laws", "mackey-preservation"}) {
    std::string a = report_json(run_suite(s, 42, {}, 1));
    std::string b = report_json(run_suite(s, 42, {}, 1));
    std::string c = report_json(run_suite(s, 42, {}, 4));
    EXPECT_EQ(a, b) << s;
    EXPECT_EQ(a, c) << s;
  }
}

TEST(Verify, RerunOfPassingCaseIsClean) {
  auto checks = suite_checks("lindner-laws");
  ASSERT_FALSE(checks.empty());
  auto a = rerun_case("lindner-laws", checks.front().name, 0, 1);
  auto b = rerun_case("lindner-laws", checks.front().name, 0, 2);
  EXPECT_FALSE(a.has_value());
  EXPECT_FALSE(b.has_value());
}

TEST(Verify, JsonHasNoTimings) {
  auto j = nlohmann::json::parse(report_json(run_suite("lccdc-axioms", 7)));
  EXPECT_EQ(j["suite"], "lccdc-axioms");
  EXPECT_EQ(j["seed"], 7);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_TRUE(j["failures"].empty());
  std::string dumped = j.dump();
  EXPECT_EQ(dumped.find("elapsed"), std::string::npos);
  EXPECT_EQ(dumped.find("time"), std::string::npos);
}

TEST(Verify, FailuresAreShrunk) {
  SuiteReport r = run_checks("local", {failing_on(7, 5)}, 3, {}, 2);
  EXPECT_FALSE(r.pass());
  ASSERT_EQ(r.failures.size(), 3U);  // cases 0, 7, 14
  EXPECT_EQ(r.failures[0].index, 0);
  EXPECT_EQ(r.failures[1].index, 7);
  for (const auto& f : r.failures) {
    EXPECT_EQ(f.shrink, 2);
    EXPECT_NE(f.witness.find("at shrink 2"), std::string::npos);
  }
  EXPECT_EQ(r.checks[0].failed, 3);
}

TEST(Verify, ShrinkStopsAtMaximum) {
  SuiteReport r = run_checks("local", {failing_on(10, 1)}, 3);
  ASSERT_EQ(r.failures.size(), 2U);
  EXPECT_EQ(r.failures[0].shrink, 1);
}

TEST(Verify, NegativeControls) {
  SuiteReport r = run_checks("local", {constant("observed", true, true), constant("missed", false, true)}, 1);
  ASSERT_EQ(r.checks.size(), 2U);
  EXPECT_TRUE(r.checks[0].pass);
  EXPECT_EQ(r.checks[0].observed, "witness 0");
  EXPECT_FALSE(r.checks[1].pass);
  EXPECT_TRUE(r.failures.empty());
  EXPECT_FALSE(r.pass());
}

TEST(Verify, CapsAreSkipsAndOtherErrorsAreFailures) {
  Check capped;
  capped.name = "capped";
  capped.cases = 4;
  capped.run = [](const CaseContext&) -> std::optional<std::string> {
    fail(ErrorKind::SizeCapExceeded, "too big");
  };
  Check broken;
  broken.name = "broken";
  broken.cases = 2;
  broken.max_shrink = 0;
  broken.run = [](const CaseContext&) -> std::optional<std::string> { fail(ErrorKind::NotComposable, "bad"); };
  SuiteReport r = run_checks("local", {capped, broken}, 1);
  EXPECT_EQ(r.checks[0].skipped, 4);
  EXPECT_TRUE(r.checks[0].pass);
  EXPECT_EQ(r.checks[1].failed, 2);
  EXPECT_FALSE(r.pass());
  EXPECT_NE(r.failures[0].witness.find("bad"), std::string::npos);
}

TEST(Verify, RerunReplaysNegativeControl) {
  auto w = rerun_case("mackey-preservation", "empty-source-is-mackey", 0, 42);
  ASSERT_TRUE(w.has_value());
  EXPECT_NE(w->find("a copy of N"), std::string::npos);
  EXPECT_FALSE(rerun_case("mackey-preservation", "zero-preserved", 0, 42).has_value());
}

TEST(Verify, BrokenRelationIsRejected) {
  auto w = rerun_case("indexing-axioms", "broken-relation-rejected", 0, 42);
  ASSERT_TRUE(w.has_value());
  EXPECT_NE(w->find("rejected"), std::string::npos);
}

TEST(Coverage, EveryLawInExactlyOneSuite) {
  std::map<std::string, int> laws;
  for (const auto& e : coverage_manifest()) ++laws[e.law];
  for (const auto& [law, n] : laws) EXPECT_EQ(n, 1) << law;
}

TEST(Coverage, EntriesNameRealChecks) {
  std::map<std::string, std::set<std::string>> checks;
  for (const auto& s : suite_names())
    for (const auto& c : suite_checks(s)) checks[s].insert(c.name);
  std::set<std::pair<std::string, std::string>> covered;
  for (const auto& e : coverage_manifest()) {
    ASSERT_TRUE(checks.count(e.suite)) << e.suite;
    EXPECT_TRUE(checks[e.suite].count(e.check)) << e.suite << "/" << e.check;
    covered.insert({e.suite, e.check});
  }
  for (const auto& [s, names] : checks)
    for (const auto& c : names) EXPECT_TRUE(covered.count({s, c})) << s << "/" << c << " has no law";
}

TEST(Coverage, CheckNamesUniqueAcrossSuites) {
  std::map<std::string, std::string> owner;
  for (const auto& s : suite_names())
    for (const auto& c : suite_checks(s)) {
      auto [it, fresh] = owner.emplace(c.name, s);
      EXPECT_TRUE(fresh) << c.name << " in " << s << " and " << it->second;
    }
}
