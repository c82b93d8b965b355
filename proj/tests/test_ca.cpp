#include <gtest/gtest.h>

#include <random>

#include "lifetrace/ca.hpp"
#include "lifetrace/pattern_io.hpp"
#include "support.hpp"

using namespace lifetrace;
using testsupport::from_bits;
using testsupport::random_pattern;
using testsupport::to_grid;

TEST(LocalRuleTest, LifeMatchesReferenceOnEveryNeighborhood) {
  const LocalRule life = game_of_life();
  ASSERT_EQ(life.neighborhood_count(), 512u);
  for (std::uint64_t code = 0; code < 512; ++code) {
    const Pattern w = from_bits(3, 3, code);
    EXPECT_EQ(int(life.apply_code(code)), oracle::life(to_grid(w), 1, 1)) << code;
  }
}

TEST(LocalRuleTest, OuterTotalisticNotationGivesLife) {
  EXPECT_EQ(outer_totalistic("B3/S23").fingerprint(), game_of_life().fingerprint());
  EXPECT_NE(outer_totalistic("B36/S23").fingerprint(), game_of_life().fingerprint());
}

TEST(LocalRuleTest, EncodeDecodeRoundTrip) {
  const LocalRule life = game_of_life();
  for (std::uint64_t code = 0; code < 512; code += 7) EXPECT_EQ(life.encode(life.decode(code)), code);
}

TEST(ForbiddenSetTest, LifeHas140Members) {
  EXPECT_EQ(derive_forbidden(game_of_life()).size(), 140u);
}

TEST(ForbiddenSetTest, MembershipIsNonzeroImage) {
  const LocalRule life = game_of_life();
  const ForbiddenSet f = derive_forbidden(life);
  for (std::uint64_t code = 0; code < 512; ++code) {
    const Pattern w = from_bits(3, 3, code);
    EXPECT_EQ(f.contains(w), apply_rule(life, w).at(1, 1) != 0) << code;
  }
}

TEST(ForbiddenSetTest, LifeIsInvariantUnderRotationsAndReflections) {
  const ForbiddenSet f = derive_forbidden(game_of_life());
  EXPECT_TRUE(f.rotation_invariant());
  EXPECT_EQ(f.reflected_horizontally(), f);
  EXPECT_EQ(f.reflected_vertically(), f);
}

TEST(ForbiddenSetTest, ShiftRuleIsNotRotationInvariant) {
  // Output = the northern neighbour.
  std::vector<Symbol> table(512);
  for (std::uint64_t code = 0; code < 512; ++code) table[code] = Symbol((code >> 7) & 1);
  const ForbiddenSet f = derive_forbidden(LocalRule::from_table(2, 1, table));
  EXPECT_EQ(f.size(), 256u);
  EXPECT_FALSE(f.rotation_invariant());
  EXPECT_EQ(f.rotated(4), f);
}

TEST(PatternTest, RotationIsABijectionOfOrderFour) {
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    const Pattern p = random_pattern(rng, 1 + int(rng() % 6), 1 + int(rng() % 6), 50, {int(rng() % 7) - 3, 2});
    const Pattern q = rotate90(p);
    EXPECT_EQ(q.width(), p.height());
    EXPECT_EQ(q.height(), p.width());
    for (int y = p.domain().y; y < p.domain().y_end(); ++y)
      for (int x = p.domain().x; x < p.domain().x_end(); ++x) {
        const Coordinate c = rotate90(Coordinate{x, y});
        EXPECT_EQ(q.at(c.x, c.y), p.at(x, y));
      }
    EXPECT_EQ(rotate(p, 4), p);
    EXPECT_EQ(rotate90(rotate90(rotate90(q))), p);
  }
}

TEST(PatternTest, RotationSendsWestToNorth) {
  EXPECT_EQ(rotate90(Coordinate{-1, 0}), (Coordinate{0, 1}));
  EXPECT_EQ(rotate90(Coordinate{0, 1}), (Coordinate{1, 0}));
}

TEST(PatternTest, ApplyRuleCommutesWithTranslation) {
  std::mt19937 rng(3);
  const LocalRule life = game_of_life();
  for (int t = 0; t < 30; ++t) {
    const Pattern p = random_pattern(rng, 6, 5);
    const int dx = int(rng() % 9) - 4, dy = int(rng() % 9) - 4;
    EXPECT_EQ(apply_rule(life, p.translated(dx, dy)), apply_rule(life, p).translated(dx, dy));
  }
}

TEST(PatternTest, ApplyRuleErodesTheDomain) {
  const Pattern p(Coordinate{0, 0}, 5, 4);
  const Pattern img = apply_rule(game_of_life(), p);
  EXPECT_EQ(img.domain(), (Rect{1, 1, 3, 2}));
  EXPECT_TRUE(apply_rule(game_of_life(), Pattern(Coordinate{0, 0}, 2, 5)).empty());
}

TEST(PatternTest, ApplyRuleMatchesReference) {
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    const Pattern p = random_pattern(rng, 7, 6, 40);
    EXPECT_EQ(to_grid(apply_rule(game_of_life(), p)), oracle::image(to_grid(p)));
  }
}

TEST(PaddingTest, Shapes) {
  std::mt19937 rng(9);
  const Pattern p = random_pattern(rng, 3, 2);
  EXPECT_EQ(pad0(p, 0), p);
  const Pattern q = pad0(p, 4);
  EXPECT_EQ(q.width(), 3 + 8);
  EXPECT_EQ(q.height(), 2 + 8);
  EXPECT_EQ(q.restricted(p.domain()), p);
  EXPECT_TRUE(pad0(Pattern(Coordinate{0, 0}, 2, 2), 3).is_zero());
  EXPECT_THROW(pad0(p, -1), std::invalid_argument);
}

TEST(FiniteConfigTest, SupportBox) {
  Pattern p(Rect{-5, -5, 11, 11});
  EXPECT_TRUE(FiniteConfig(p).is_zero());
  p.set(2, -1, 1);
  p.set(-3, 4, 1);
  EXPECT_EQ(FiniteConfig(p).support_box(), (Rect{-3, -1, 6, 6}));
}

TEST(PatternIoTest, PlainRoundTrip) {
  std::mt19937 rng(4);
  for (int t = 0; t < 20; ++t) {
    const Pattern p = random_pattern(rng, 1 + int(rng() % 8), 1 + int(rng() % 8));
    EXPECT_EQ(parse_pattern(format_pattern(p)), p);
    EXPECT_EQ(parse_pattern(format_pattern(p, PatternFormat::Rle)), p);
  }
}

TEST(PatternIoTest, TopLineIsNorth) {
  const Pattern p = parse_pattern("# glider\nO..\n...\n..1\n");
  EXPECT_EQ(p.domain(), (Rect{0, 0, 3, 3}));
  EXPECT_EQ(p.at(0, 2), 1);
  EXPECT_EQ(p.at(2, 0), 1);
  EXPECT_EQ(p.at(0, 0), 0);
}

TEST(PatternIoTest, Rle) {
  const Pattern p = parse_pattern("x = 3, y = 3\nbo$2bo$3o!\n");
  EXPECT_EQ(format_pattern(p), ".O.\n..O\nOOO\n");
}

TEST(PatternIoTest, RaggedRowsAreZeroExtended) {
  const Pattern p = parse_pattern("O\n.OO\n");
  EXPECT_EQ(p.width(), 3);
  EXPECT_EQ(p.at(2, 1), 0);
}

TEST(PatternIoTest, RejectsGarbage) { EXPECT_THROW(parse_pattern("O?O\n"), std::invalid_argument); }

TEST(RuleFileTest, TotalisticAndTable) {
  EXPECT_EQ(parse_rule("alphabet 2\nradius 1\nrule B3/S23\n").fingerprint(), game_of_life().fingerprint());
  std::string digits;
  for (int code = 0; code < 512; ++code) digits.push_back(char('0' + game_of_life().apply_code(std::uint64_t(code))));
  EXPECT_EQ(parse_rule("# life again\ntable " + digits + "\n").fingerprint(), game_of_life().fingerprint());
  EXPECT_THROW(parse_rule("table 0101\n"), std::invalid_argument);
}
