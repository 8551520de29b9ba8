#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>

#include "oracles.hpp"
#include "support.hpp"

namespace oodc {
namespace {

class PositiveRule : public ::testing::TestWithParam<test::RuleCase> {};
class NegativeRule : public ::testing::TestWithParam<test::RuleCase> {};

TEST_P(PositiveRule, ResolvesDesugarsAndRuns) {
  const auto& c = GetParam();
  auto p = test::check_file(c.file);
  ASSERT_TRUE(p.ok()) << c.file << ": " << test::diagnostic_codes(p);
  auto methods = test::resolved_methods(p.units[0]);
  EXPECT_NE(std::find(methods.begin(), methods.end(), c.method), methods.end()) << c.file;
  EXPECT_EQ(test::line_containing(test::desugar_text(p), c.desugared), c.desugared) << c.file;
  auto ex = test::run_program(p);
  ASSERT_TRUE(ex.plain.ok()) << c.file;
  EXPECT_TRUE(ex.outcome.ok()) << c.file;
  EXPECT_EQ(ex.outcome.output, c.output) << c.file;
  auto base = test::check_file(c.file, Mode::base());
  EXPECT_FALSE(base.ok()) << c.file;
}

TEST_P(NegativeRule, ReportsExactCode) {
  const auto& c = GetParam();
  auto p = test::check_file(c.file);
  EXPECT_FALSE(p.ok()) << c.file;
  EXPECT_EQ(test::diagnostic_codes(p), c.code) << c.file;
}

std::string case_name(const ::testing::TestParamInfo<test::RuleCase>& info) {
  std::string file = info.param.file;
  auto slash = file.rfind('/');
  file = file.substr(slash + 1, file.size() - slash - 4);
  return file;
}

INSTANTIATE_TEST_SUITE_P(Rules, PositiveRule, ::testing::ValuesIn(test::positive_rule_cases()), case_name);
INSTANTIATE_TEST_SUITE_P(Rules, NegativeRule, ::testing::ValuesIn(test::negative_rule_cases()), case_name);

TEST(RuleTable, EveryRuleHasBothPolarities) {
  std::set<std::string> pos, neg;
  for (const auto& c : test::positive_rule_cases()) pos.insert(c.rule);
  for (const auto& c : test::negative_rule_cases()) neg.insert(c.rule);
  for (const auto& r : pos) EXPECT_TRUE(neg.count(r)) << r;
  EXPECT_GE(test::positive_rule_cases().size() + test::negative_rule_cases().size(), 40u);
}

TEST(RuleTable, CoversEveryFixture) {
  std::set<std::string> listed;
  for (const auto& c : test::positive_rule_cases()) listed.insert(c.file);
  for (const auto& c : test::negative_rule_cases()) listed.insert(c.file);
  for (const auto& f : test::list_files("fixtures/rules", ".mj"))
    if (f.find("/warn_") == std::string::npos) EXPECT_TRUE(listed.count(f)) << f;
}

}  // namespace
}  // namespace oodc
