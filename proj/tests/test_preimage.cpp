#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "lifetrace/preimage.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace lifetrace;
using testsupport::from_bits;
using testsupport::to_grid;

namespace {

void expect_valid_witness(const Pattern& target, const SearchOutcome& r) {
  ASSERT_EQ(r.verdict, Verdict::Sat);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->domain(), target.domain().dilated(1));
  EXPECT_EQ(oracle::image(to_grid(*r.witness)), to_grid(target));
}

LocalRule max_rule() {
  return LocalRule::from_function(2, 1, [](std::span<const Symbol> w) {
    return *std::max_element(w.begin(), w.end());
  });
}

}  // namespace

TEST(PreimageTest, ZeroTargetHasZeroWitness) {
  const Pattern target(Rect{-2, 3, 4, 3});
  const SearchOutcome r = find_preimage(game_of_life(), target);
  expect_valid_witness(target, r);
  EXPECT_TRUE(r.witness->is_zero());
}

TEST(PreimageTest, SmallTargetsAgreeWithEnumeration) {
  for (auto [w, h] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}})
    for (std::uint64_t bits = 0; bits < (1u << (w * h)); ++bits) {
      const Pattern t = from_bits(w, h, bits);
      const SearchOutcome r = find_preimage(game_of_life(), t);
      const bool expected = oracle::has_preimage_by_enumeration(to_grid(t));
      EXPECT_EQ(r.verdict == Verdict::Sat, expected) << w << "x" << h << " " << bits;
      if (expected) expect_valid_witness(t, r);
    }
}

TEST(PreimageTest, RandomTargetsAgreeWithColumnOracle) {
  std::mt19937 rng(11);
  for (int t = 0; t < 60; ++t) {
    const Pattern target = testsupport::random_pattern(rng, 3, 3, 50);
    const SearchOutcome r = find_preimage(game_of_life(), target);
    const bool expected = oracle::has_preimage_by_columns(to_grid(target));
    EXPECT_EQ(r.verdict == Verdict::Sat, expected);
    if (expected) expect_valid_witness(target, r);
  }
}

TEST(PreimageTest, OrphanDetection) {
  // Under the maximum rule a lone 1 needs a 1 nearby, which the 0s around
  // it forbid.
  const Pattern lone = from_bits(3, 3, 1u << 4);
  EXPECT_TRUE(is_orphan(max_rule(), lone));
  EXPECT_FALSE(is_orphan(max_rule(), from_bits(3, 3, 0b111111111)));
  EXPECT_FALSE(is_orphan(game_of_life(), from_bits(3, 3, 0b111111111)));
  EXPECT_TRUE(is_orphan(constant_zero_rule(), from_bits(1, 1, 1)));
}

TEST(PreimageTest, DimacsHeaderCounts) {
  const Pattern one(Rect{0, 0, 1, 1}, 1);
  const std::string d1 = to_dimacs({game_of_life(), one});
  EXPECT_NE(d1.find("p cnf 9 372"), std::string::npos);
  const Pattern zero(Rect{0, 0, 1, 1}, 0);
  EXPECT_NE(to_dimacs({game_of_life(), zero}).find("p cnf 9 140"), std::string::npos);
}

TEST(PreimageTest, DimacsMatchesReferenceCnf) {
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    const Pattern target = testsupport::random_pattern(rng, 3, 2, 40);
    const PreimageProblem problem{game_of_life(), target};
    const oracle::Cnf ref = oracle::life_cnf(to_grid(target));
    std::istringstream in(to_dimacs(problem));
    std::string line;
    std::set<std::set<int>> ours;
    int vars = 0, clauses = 0;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == 'c') continue;
      if (line[0] == 'p') {
        std::istringstream h(line.substr(5));
        h >> vars >> clauses;
        continue;
      }
      std::istringstream ls(line);
      std::set<int> c;
      for (int lit; ls >> lit && lit != 0;) c.insert(lit);
      ours.insert(c);
    }
    std::set<std::set<int>> theirs;
    for (const auto& c : ref.clauses) theirs.insert(std::set<int>(c.begin(), c.end()));
    EXPECT_EQ(vars, ref.variables);
    EXPECT_EQ(std::size_t(clauses), ref.clauses.size());
    EXPECT_EQ(ours, theirs);
  }
}

TEST(PreimageTest, SearchAgreesWithDpll) {
  std::mt19937 rng(17);
  for (int t = 0; t < 25; ++t) {
    const Pattern target = testsupport::random_pattern(rng, 4, 4, 35);
    const SearchOutcome r = find_preimage(game_of_life(), target);
    EXPECT_EQ(r.verdict == Verdict::Sat, oracle::has_preimage_by_dpll(to_grid(target))) << t;
  }
}

TEST(PreimageTest, DecodeDimacsModel) {
  const Pattern target = from_bits(2, 1, 0b01, Coordinate{4, -1});
  const PreimageProblem problem{game_of_life(), target};
  const Pattern w = *find_preimage(problem).witness;
  const Rect d = problem.search_domain();
  std::string model = "v";
  for (int j = 0; j < d.height; ++j)
    for (int i = 0; i < d.width; ++i) {
      const int var = 1 + j * d.width + i;
      model += " " + std::to_string(w.local(i, j) ? var : -var);
    }
  model += " 0\n";
  EXPECT_EQ(decode_dimacs_model(problem, model), w);
  EXPECT_TRUE(decode_dimacs_model(problem, "").is_zero());
  EXPECT_THROW(decode_dimacs_model(problem, "v 1000 0"), std::invalid_argument);
}

TEST(PreimageTest, BudgetIsReported) {
  const Pattern target = from_bits(3, 3, 0b111111111);
  const SearchOutcome r = find_preimage(game_of_life(), target, SearchBudget{5});
  EXPECT_EQ(r.verdict, Verdict::Indeterminate);
  EXPECT_FALSE(r.witness.has_value());
  EXPECT_THROW(is_orphan(game_of_life(), target, SearchBudget{5}), BudgetExceeded);
}

TEST(PreimageTest, FiniteGardenOfEden) {
  const TraceConstants t = life_constants();
  EXPECT_FALSE(is_finite_goe(game_of_life(), Pattern(Rect{0, 0, 1, 1}), t));
  EXPECT_FALSE(is_finite_goe(game_of_life(), Pattern(Rect{0, 0, 1, 1}, 1), t));
  TraceConstants unverified = t;
  unverified.provenance.verified = false;
  EXPECT_THROW(is_finite_goe(game_of_life(), Pattern(Rect{0, 0, 1, 1}), unverified), std::invalid_argument);
}

TEST(PreimageTest, PaddingIsMonotone) {
  // Orphans stay orphans under further zero padding.
  const Pattern p = from_bits(3, 1, 0b010);
  bool was_orphan = false;
  for (int c = 0; c <= 2; ++c) {
    const bool o = is_orphan(max_rule(), pad0(p, c));
    if (was_orphan) EXPECT_TRUE(o) << c;
    was_orphan = o;
  }
  EXPECT_TRUE(was_orphan);
}

TEST(PreimageTest, BoundaryProbeOnZeroWitness) {
  const Pattern zero(Rect{0, 0, 3, 3});
  for (Side s : {Side::North, Side::South, Side::East, Side::West})
    EXPECT_EQ(boundary_extension_probe(game_of_life(), zero, s, 3), 3) << to_string(s);
  EXPECT_EQ(parse_side("west"), Side::West);
  EXPECT_THROW(parse_side("up"), std::invalid_argument);
}

TEST(PreimageTest, SearchIsDeterministic) {
  std::mt19937 rng(23);
  for (int t = 0; t < 10; ++t) {
    const Pattern target = testsupport::random_pattern(rng, 3, 3, 30);
    const SearchOutcome a = find_preimage(game_of_life(), target);
    const SearchOutcome b = find_preimage(game_of_life(), target);
    EXPECT_EQ(a.verdict, b.verdict);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(a.stats.nodes, b.stats.nodes);
  }
}

TEST(PreimageTest, OtherRules) {
  // The identity rule: the witness is the target plus an arbitrary border.
  const Pattern t = from_bits(2, 2, 0b1001);
  const SearchOutcome r = find_preimage(identity_rule(), t);
  ASSERT_EQ(r.verdict, Verdict::Sat);
  EXPECT_EQ(r.witness->restricted(t.domain()), t);
  EXPECT_EQ(find_preimage(constant_zero_rule(), t).verdict, Verdict::Unsat);
  EXPECT_THROW(to_dimacs({identity_rule(3), Pattern(Rect{0, 0, 1, 1})}), std::invalid_argument);
}
