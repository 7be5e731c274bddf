#include <gtest/gtest.h>

#include "generators.hpp"
#include "limitlab/errors.hpp"
#include "limitlab/low_basis.hpp"
#include "oracles.hpp"

namespace limitlab {
namespace {

BinaryString b(const char* bits) { return BinaryString(bits); }
ClopenSet omega(const char* bits) { return ClopenSet::interval(b(bits)); }

TEST(ForceTest, TwoQueries) {
  ForcingInstance instance{omega("0"), {{"T1", omega("1")}, {"T2", omega("10")}}};
  const auto outcome = force(instance, 2);
  ASSERT_EQ(outcome.steps.size(), 2u);
  EXPECT_EQ(outcome.steps[0].verdict, Verdict::kHalts);
  EXPECT_EQ(outcome.steps[1].verdict, Verdict::kDiverges);
  EXPECT_EQ(outcome.final_set, ClopenSet::normalize(std::vector<BinaryString>{b("0"), b("10")}));
  EXPECT_EQ(outcome.witness_prefix, b("11"));
}

TEST(ForceTest, NoQueries) {
  const auto outcome = force({omega("0"), {}}, 2);
  EXPECT_EQ(outcome.final_set, omega("0"));
  EXPECT_EQ(outcome.witness_prefix, b("10"));
}

TEST(ForceTest, EmptyQueryDiverges) {
  const auto outcome = force({omega("0"), {{"empty", ClopenSet()}}}, 2);
  EXPECT_EQ(outcome.steps[0].verdict, Verdict::kDiverges);
  EXPECT_EQ(outcome.final_set, omega("0"));
  EXPECT_EQ(outcome.witness_prefix, b("10"));
}

TEST(ForceTest, Errors) {
  EXPECT_THROW(force({ClopenSet::full(), {}}, 3), ValidationError);
  EXPECT_THROW(force({omega("0"), {{"deep", omega("0101")}}}, 3), ConfigError);
}

class ForcePropertyTest : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(ForcePropertyTest, VerdictsAreConsistentWithWitness) {
  gen::Rng rng(GetParam());
  for (int trial = 0; trial < 40; ++trial) {
    const auto instance = gen::random_forcing_instance(rng, 5);
    const auto outcome = force(instance, 5);
    const auto wider = force(instance, 8);
    ASSERT_EQ(outcome.steps.size(), wider.steps.size());
    for (std::size_t i = 0; i < outcome.steps.size(); ++i) {
      const auto& step = outcome.steps[i];
      EXPECT_EQ(step.verdict, wider.steps[i].verdict);
      EXPECT_FALSE(step.before.is_full());
      const auto& query = instance.queries[i].region;
      if (step.verdict == Verdict::kHalts) {
        // Every point outside U lies in T.
        const auto u = oracle::points(step.before, 5);
        const auto t = oracle::points(query, 5);
        for (std::size_t k = 0; k < u.size(); ++k) EXPECT_TRUE(u[k] || t[k]);
      } else {
        EXPECT_FALSE(query.intersects(outcome.witness_prefix));
      }
    }
    EXPECT_FALSE(outcome.final_set.is_full());
    EXPECT_LT(outcome.final_set.measure(), 1);
    EXPECT_TRUE(outcome.final_set.contains(instance.initial));
    EXPECT_FALSE(outcome.final_set.intersects(outcome.witness_prefix));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, ForcePropertyTest, ::testing::Values(31u, 32u));

}  // namespace
}  // namespace limitlab
