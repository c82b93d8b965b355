#include <gtest/gtest.h>

#include "lifetrace/constants.hpp"
#include "lifetrace/serialize.hpp"

using namespace lifetrace;

TEST(ConstantsTest, LifeBundle) {
  const TraceConstants t = life_constants();
  EXPECT_EQ(t.n, 2);
  EXPECT_EQ(t.ell, 4);
  EXPECT_EQ(t.k, 3);
  EXPECT_EQ(t.p, 3);
  EXPECT_EQ(t.C, 0u);
  EXPECT_EQ(t.c, 4);
  // p * |A|^(2n(k+p)) and p * |A|^(n(k+p)).
  EXPECT_EQ(t.q, 3ull << 24);
  EXPECT_EQ(t.q_refined, 12288u);
  for (int d = 0; d < 4; ++d) EXPECT_EQ(t.padding(d), 4);
  EXPECT_TRUE(t.provenance.verified);
}

TEST(ConstantsTest, RequireVerified) {
  EXPECT_NO_THROW(require_verified(life_constants(), game_of_life()));
  EXPECT_THROW(require_verified(life_constants(), outer_totalistic("B36/S23")), std::invalid_argument);
  TraceConstants t = life_constants();
  t.provenance.verified = false;
  EXPECT_THROW(require_verified(t, game_of_life()), std::invalid_argument);
}

TEST(ConstantsTest, FinalizeSaturates) {
  TraceConstants t = life_constants();
  t.k = 40;
  t.p = 40;
  finalize_constants(t);
  EXPECT_EQ(t.q, std::numeric_limits<std::uint64_t>::max());
}

TEST(ConstantsTest, JsonRoundTrip) {
  const TraceConstants t = life_constants();
  const TraceConstants u = constants_from_json(to_json(t));
  EXPECT_EQ(to_json(u), to_json(t));
  Json bad = to_json(t);
  bad["p"] = 0;
  EXPECT_THROW(constants_from_json(bad), std::invalid_argument);
  bad = to_json(t);
  bad.erase("directions");
  EXPECT_THROW(constants_from_json(bad), std::invalid_argument);
}

TEST(ConstantsTest, ConstantZeroRuleIsDegenerate) {
  const ConstantsReport r = compute_trace_constants(constant_zero_rule());
  ASSERT_TRUE(r.complete) << r.failure;
  EXPECT_EQ(r.constants.ell, 0);
  EXPECT_EQ(r.constants.k, 0);
  EXPECT_EQ(r.constants.p, 1);
  EXPECT_EQ(r.constants.C, 0u);
  EXPECT_TRUE(r.constants.provenance.verified);
  EXPECT_NO_THROW(require_verified(r.constants, constant_zero_rule()));
}

TEST(ConstantsTest, IdentityRule) {
  // The image of x is x itself: the stripes extend by zero rows.
  const ConstantsReport r = compute_trace_constants(identity_rule());
  ASSERT_TRUE(r.complete) << r.failure;
  EXPECT_EQ(r.constants.k, 0);
  EXPECT_EQ(r.constants.p, 1);
}

TEST(ConstantsTest, UnstableWithinTinyBudgetIsReported) {
  ConstantsOptions o;
  o.ell_max = 2;
  const ConstantsReport r = compute_trace_constants(game_of_life(), o);
  EXPECT_FALSE(r.complete);
  EXPECT_FALSE(r.failure.empty());
  EXPECT_FALSE(r.stability.stable_at.has_value());
}
