#include <benchmark/benchmark.h>

#include <random>

#include "lifetrace/automata.hpp"
#include "lifetrace/encoding.hpp"
#include "lifetrace/preimage.hpp"
#include "lifetrace/semilinear.hpp"
#include "lifetrace/traces.hpp"

using namespace lifetrace;

namespace {

Pattern random_pattern(std::mt19937& rng, int w, int h, Coordinate origin = {0, 0}) {
  Pattern p(Rect{origin.x, origin.y, w, h});
  for (int j = 0; j < h; ++j)
    for (int i = 0; i < w; ++i) p.set_local(i, j, Symbol(rng() % 2));
  return p;
}

const ForbiddenSet& life_f() {
  static const ForbiddenSet f = derive_forbidden(game_of_life());
  return f;
}

void BM_FindPreimage(benchmark::State& state) {
  const int size = int(state.range(0));
  std::mt19937 rng(1);
  std::vector<Pattern> targets;
  for (int i = 0; i < 16; ++i) targets.push_back(random_pattern(rng, size, size));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(find_preimage(game_of_life(), targets[i++ % targets.size()]));
}
BENCHMARK(BM_FindPreimage)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_IsFiniteGoe(benchmark::State& state) {
  Pattern glider(Rect{-1, -1, 3, 3});
  for (auto [x, y] : {std::pair{0, 1}, {1, 0}, {-1, -1}, {0, -1}, {1, -1}}) glider.set(x, y, 1);
  for (auto _ : state) benchmark::DoNotOptimize(is_finite_goe(game_of_life(), glider, life_constants()));
}
BENCHMARK(BM_IsFiniteGoe)->Unit(benchmark::kMillisecond);

void BM_TraceLadder(benchmark::State& state) {
  const int ell = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_S_subshift(life_f(), 2, ell));
}
BENCHMARK(BM_TraceLadder)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_CheckStable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_stable(life_f(), 2, 8));
}
BENCHMARK(BM_CheckStable)->Unit(benchmark::kMillisecond);

void BM_DeterminizeMinimize(benchmark::State& state) {
  const int n = int(state.range(0));
  std::mt19937 rng(3);
  automata::Nfa a(2);
  for (int s = 0; s < n; ++s) a.add_state(s == 0, rng() % 2 == 0);
  for (int s = 0; s < n; ++s)
    for (automata::Letter l = 0; l < 2; ++l)
      for (int t = 0; t < n; ++t)
        if (rng() % unsigned(n) < 2) a.add_transition(automata::State(s), l, automata::State(t));
  for (auto _ : state) benchmark::DoNotOptimize(automata::minimize(automata::determinize(a)));
}
BENCHMARK(BM_DeterminizeMinimize)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_Periodize(benchmark::State& state) {
  std::mt19937 rng(4);
  const Pattern x = random_pattern(rng, 5, 5, Coordinate{-2, -2});
  const Pattern xw = x.embedded(Rect{-12, -12, 25, 25});
  const FiniteConfig y(apply_rule(game_of_life(), xw.embedded(xw.domain().dilated(1))));
  for (auto _ : state) benchmark::DoNotOptimize(periodize(game_of_life(), y, xw, life_constants()));
}
BENCHMARK(BM_Periodize)->Unit(benchmark::kMillisecond);

void BM_EncodeDecode(benchmark::State& state) {
  std::mt19937 rng(5);
  const FiniteConfig y(random_pattern(rng, 41, 41, Coordinate{-20, -20}));
  for (auto _ : state) benchmark::DoNotOptimize(decode_config(encode_config(y).word));
}
BENCHMARK(BM_EncodeDecode);

}  // namespace

BENCHMARK_MAIN();
