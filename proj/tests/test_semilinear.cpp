#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <random>

#include "lifetrace/semilinear.hpp"
#include "lifetrace/serialize.hpp"
#include "support.hpp"

using namespace lifetrace;

namespace {

// A configuration with every region nonconstant: random core, random periods.
SemilinearConfig random_config(std::mt19937& rng) {
  const CoreBox box{-int(rng() % 3), int(rng() % 4), -int(rng() % 2), int(rng() % 3)};
  const Periods per{1 + int(rng() % 3), 1 + int(rng() % 3), 1 + int(rng() % 3), 1 + int(rng() % 3)};
  const Rect ext{box.x0 - per.west, box.y0 - per.south, box.x1 - box.x0 + 1 + per.west + per.east,
                 box.y1 - box.y0 + 1 + per.south + per.north};
  return SemilinearConfig::from_parts(2, box, per, testsupport::random_pattern(rng, ext.width, ext.height, 50,
                                                                                Coordinate{ext.x, ext.y}));
}

// Direct evaluation of the nine-region semantics.
Symbol reference_at(const SemilinearConfig& c, int x, int y) {
  const CoreBox& b = c.core();
  const Periods& p = c.periods();
  auto fold = [](int v, int lo, int hi, int pl, int ph) {
    while (v > hi + ph) v -= ph;
    while (v < lo - pl) v += pl;
    return v;
  };
  return c.generator().at(fold(x, b.x0, b.x1, p.west, p.east), fold(y, b.y0, b.y1, p.south, p.north));
}

Pattern centered(const Pattern& p) {
  return p.moved_to(Coordinate{-(p.width() / 2), -(p.height() / 2)});
}

}  // namespace

TEST(SemilinearTest, ZeroConfiguration) {
  const SemilinearConfig z = SemilinearConfig::zero();
  EXPECT_EQ(z.periods(), (Periods{1, 1, 1, 1}));
  for (int y = -20; y <= 20; y += 7)
    for (int x = -20; x <= 20; x += 3) EXPECT_EQ(z.at(x, y), 0);
  EXPECT_TRUE(same_configuration(z, SemilinearConfig::from_finite(Pattern(Rect{3, 3, 4, 2}))));
}

TEST(SemilinearTest, FromFinite) {
  const Pattern p = testsupport::from_bits(3, 2, 0b101101, Coordinate{-1, 4});
  const SemilinearConfig c = SemilinearConfig::from_finite(p);
  for (int y = -5; y <= 12; ++y)
    for (int x = -8; x <= 8; ++x) EXPECT_EQ(c.at(x, y), p.value_or_zero(x, y));
}

TEST(SemilinearTest, FoldMatchesReference) {
  std::mt19937 rng(3);
  for (int t = 0; t < 40; ++t) {
    const SemilinearConfig c = random_config(rng);
    for (int y = -25; y <= 25; ++y)
      for (int x = -25; x <= 25; ++x) ASSERT_EQ(c.at(x, y), reference_at(c, x, y)) << x << "," << y;
  }
}

TEST(SemilinearTest, RegionsArePeriodic) {
  std::mt19937 rng(4);
  for (int t = 0; t < 20; ++t) {
    const SemilinearConfig c = random_config(rng);
    const auto regions = c.regions();
    ASSERT_EQ(regions.size(), 9u);
    EXPECT_TRUE(regions_partition(regions, Rect{-100, -100, 200, 200}));
    for (const RegionSpec& r : regions)
      for (int y = -30; y <= 30; ++y)
        for (int x = -30; x <= 30; ++x) {
          if (!r.contains(x, y)) continue;
          for (Coordinate v : r.periods) {
            // Each period points away from the core, so stepping by it stays inside.
            ASSERT_TRUE(r.contains(x + v.x, y + v.y));
            ASSERT_EQ(c.at(x, y), c.at(x + v.x, y + v.y)) << to_string(r.kind);
          }
        }
  }
}

TEST(SemilinearTest, RotationActsOnCells) {
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    const SemilinearConfig c = random_config(rng);
    const SemilinearConfig r = c.rotated(1);
    for (int y = -15; y <= 15; ++y)
      for (int x = -15; x <= 15; ++x) {
        const Coordinate to = rotate90(Coordinate{x, y});
        ASSERT_EQ(r.at(to.x, to.y), c.at(x, y));
      }
    EXPECT_EQ(c.rotated(4), c);
    EXPECT_EQ(c.rotated(1).rotated(3), c);
  }
}

TEST(SemilinearTest, SameConfigurationIgnoresRepresentation) {
  std::mt19937 rng(6);
  const SemilinearConfig c = random_config(rng);
  // Doubling every period describes the same configuration.
  Periods doubled = c.periods();
  doubled.north *= 2;
  doubled.south *= 2;
  doubled.east *= 2;
  doubled.west *= 2;
  const SemilinearConfig d = SemilinearConfig::build(2, c.core(), doubled, [&](int x, int y) { return c.at(x, y); });
  EXPECT_NE(c, d);
  EXPECT_TRUE(same_configuration(c, d));
  const SemilinearConfig e = replace_quadrant_all_ones(c, Quadrant::SouthWest);
  EXPECT_EQ(same_configuration(c, e), same_configuration(e, c));
}

TEST(SemilinearTest, ImageOfFiniteConfiguration) {
  const Pattern glider = testsupport::from_bits(3, 3, 0b111100010, Coordinate{-1, -1});
  const SemilinearConfig x = SemilinearConfig::from_finite(glider);
  const FiniteConfig y(apply_rule(game_of_life(), glider.embedded(glider.domain().dilated(2))));
  EXPECT_TRUE(verify_image(game_of_life(), x, y));
  EXPECT_FALSE(verify_image(game_of_life(), x, FiniteConfig(glider)));
}

TEST(SemilinearTest, VerifyDetectsFarAwayMismatch) {
  // The all-ones quadrant maps to a configuration with an infinite support,
  // so it cannot have a finite image; the mismatch may be far from the core.
  const SemilinearConfig z = SemilinearConfig::zero();
  for (Quadrant q : {Quadrant::NorthEast, Quadrant::NorthWest, Quadrant::SouthEast, Quadrant::SouthWest}) {
    const SemilinearConfig bad = replace_quadrant_all_ones(z, q);
    EXPECT_FALSE(verify_image(game_of_life(), bad, FiniteConfig{}));
    EXPECT_EQ(replace_quadrant_all_ones(bad, q), bad);
    EXPECT_EQ(parse_quadrant(to_string(q)), q);
  }
  EXPECT_TRUE(verify_image(game_of_life(), z, FiniteConfig{}));
}

TEST(SemilinearTest, VerifyAgreesWithBruteForceUnderMutation) {
  std::mt19937 rng(12);
  Pattern xw;
  ASSERT_TRUE(testsupport::repaired_window(rng, 3, 11, xw));
  const FiniteConfig y = testsupport::image_of(xw);
  const PeriodizationResult res = periodize(game_of_life(), y, xw, life_constants());
  ASSERT_TRUE(res.certificate.verified);
  const SemilinearConfig& x = res.config;
  int rejected = 0;
  for (int t = 0; t < 40; ++t) {
    Pattern g = x.generator();
    const int i = int(rng() % unsigned(g.width())), j = int(rng() % unsigned(g.height()));
    g.set_local(i, j, Symbol(1 - g.local(i, j)));
    const SemilinearConfig m = SemilinearConfig::from_parts(2, x.core(), x.periods(), g);
    // Beyond two periods past the core every cell repeats one already compared.
    const CoreBox& b = m.core();
    const Periods& p = m.periods();
    const int L = std::max({std::abs(b.x0), std::abs(b.x1), std::abs(b.y0), std::abs(b.y1)}) + 2 * p.max() + 2;
    const Rect big{-L - 1, -L - 1, 2 * L + 3, 2 * L + 3};
    const oracle::Grid img = oracle::image(testsupport::to_grid(m.window(big)));
    bool matches = true;
    for (int yy = -L; yy <= L && matches; ++yy)
      for (int xx = -L; xx <= L && matches; ++xx)
        matches = img[std::size_t(yy + L)][std::size_t(xx + L)] == y.at(xx, yy);
    EXPECT_EQ(verify_image(game_of_life(), m, y), matches) << t;
    rejected += !matches;
  }
  EXPECT_GT(rejected, 0);
}

TEST(SemilinearTest, NorthStageKeepsLowerRowsAndIsIdempotent) {
  const ForbiddenSet f = derive_forbidden(game_of_life());
  std::mt19937 rng(21);
  for (int t = 0; t < 3; ++t) {
    Pattern xw;
    ASSERT_TRUE(testsupport::repaired_window(rng, 2, 10, xw));
    const FiniteConfig y = testsupport::image_of(xw);
    const PeriodizationResult res = periodize(game_of_life(), y, xw, life_constants());
    ASSERT_TRUE(res.certificate.verified);
    const SemilinearConfig& x = res.config;
    const int th = res.certificate.threshold;
    const SemilinearConfig a = periodize_north(x, f, th, 3, 3);
    for (int yy = -20; yy <= th; ++yy)
      for (int xx = -20; xx <= 20; ++xx) ASSERT_EQ(a.at(xx, yy), x.at(xx, yy));
    EXPECT_EQ(a.periods().north % 3, 0);
    EXPECT_TRUE(verify_image(game_of_life(), a, y));
    EXPECT_TRUE(same_configuration(periodize_north(a, f, th, 3, 3), a));
  }
}

TEST(SemilinearTest, HalfplaneOfZeroWindow) {
  const Pattern w(Rect{0, 0, 6, 4});
  for (Side s : {Side::North, Side::South, Side::East, Side::West}) {
    const HalfplaneResult h = periodize_halfplane(game_of_life(), w, s, life_constants());
    EXPECT_TRUE(h.continuation.is_zero());
    EXPECT_EQ(h.period, 3);
    EXPECT_TRUE(verify_image(game_of_life(), h.config, FiniteConfig{}));
  }
}

TEST(SemilinearTest, PeriodizeZeroBackground) {
  std::mt19937 rng(31);
  for (int t = 0; t < 6; ++t) {
    const Pattern small = testsupport::random_pattern(rng, 5, 5, 40, Coordinate{-2, -2});
    const Pattern xw = small.embedded(Rect{-12, -12, 25, 25});
    const FiniteConfig y = testsupport::image_of(xw);
    const PeriodizationResult res = periodize(game_of_life(), y, xw, life_constants());
    EXPECT_TRUE(res.certificate.verified);
    EXPECT_TRUE(res.certificate.protected_agrees);
    EXPECT_EQ(res.certificate.stages.size(), 6u);
    EXPECT_LE(res.config.periods().max(), 12288);
  }
}

TEST(SemilinearTest, PeriodizeNonzeroBackground) {
  std::mt19937 rng(7);
  int done = 0;
  for (int t = 0; t < 6; ++t) {
    Pattern xw;
    if (!testsupport::repaired_window(rng, 3, 11, xw)) continue;
    const FiniteConfig y = testsupport::image_of(xw);
    const PeriodizationResult res = periodize(game_of_life(), y, xw, life_constants());
    EXPECT_TRUE(res.certificate.verified);
    EXPECT_TRUE(res.certificate.protected_agrees);
    // Once all four sides are replaced every stage maps to y.
    for (std::size_t i = 4; i < res.certificate.stages.size(); ++i)
      EXPECT_TRUE(verify_image(game_of_life(), res.certificate.stages[i].config, y)) << res.certificate.stages[i].name;
    ++done;
  }
  EXPECT_GE(done, 4);
}

TEST(SemilinearTest, PeriodizeRejectsBadInput) {
  const Pattern glider = centered(testsupport::from_bits(3, 3, 0b111100010));
  const FiniteConfig y(glider);
  EXPECT_THROW(periodize(game_of_life(), y, Pattern(Rect{-3, -3, 7, 7}), life_constants()), std::invalid_argument);
  // Large enough, but its image is 0.
  EXPECT_THROW(periodize(game_of_life(), y, Pattern(Rect{-15, -15, 31, 31}), life_constants()),
               std::invalid_argument);
  TraceConstants t = life_constants();
  t.provenance.verified = false;
  EXPECT_THROW(periodize(game_of_life(), FiniteConfig{}, Pattern(Rect{-15, -15, 31, 31}), t), std::invalid_argument);
}

TEST(SemilinearTest, SpliceKeepsLowerRows) {
  std::mt19937 rng(41);
  const SemilinearConfig c = random_config(rng);
  const SemilinearConfig s = splice_north(c, c.core().y1 + 2, 2, 100);
  for (int y = -10; y <= c.core().y1 + 2; ++y)
    for (int x = -10; x <= 10; ++x) EXPECT_EQ(s.at(x, y), c.at(x, y));
  EXPECT_THROW(splice_north(c, c.core().y1 + 2, 2, 0), NotPeriodizable);
  EXPECT_THROW(splice_north(c, c.core().y0 - 5, 2, 10), std::invalid_argument);
}

TEST(SemilinearTest, JsonRoundTrip) {
  std::mt19937 rng(8);
  for (int t = 0; t < 10; ++t) {
    const SemilinearConfig c = random_config(rng);
    EXPECT_EQ(semilinear_from_json(to_json(c)), c);
  }
  Json bad = to_json(random_config(rng));
  bad["periods"]["north"] = 0;
  EXPECT_THROW(semilinear_from_json(bad), std::invalid_argument);
}

TEST(SemilinearTest, RenderMarksCore) {
  const std::string s = render(SemilinearConfig::from_finite(Pattern(Rect{0, 0, 1, 1}, 1)), Rect{-2, -2, 5, 5});
  EXPECT_NE(s.find('O'), std::string::npos);
  EXPECT_NE(s.find('+'), std::string::npos);
  EXPECT_NE(s.find('|'), std::string::npos);
}
