#include "lifetrace/traces.hpp"

#include <algorithm>
#include <functional>

namespace lifetrace {

using automata::Dfa;
using automata::Limits;
using automata::Nfa;
using automata::Word;

namespace {

void require_level(int ell) {
  if (ell < 0) throw std::invalid_argument("extension depth must be non-negative");
}

void require_kp(int k, int p) {
  if (k < 0 || p < 1) throw std::invalid_argument("need k >= 0 and p >= 1");
}

}  // namespace

Nfa build_L_automaton(const ForbiddenSet& f, int n, int ell, const Limits& limits) {
  return direct_extension_nfa(f, n, ell, limits);
}

Dfa build_L_language(const ForbiddenSet& f, int n, int ell, const Limits& limits) {
  require_level(ell);
  Dfa d = stripe_rectangles(f, n, limits);
  for (int i = 0; i < ell; ++i) d = pre_image_finite(d, f, n, limits);
  return d;
}

Dfa build_S_subshift(const ForbiddenSet& f, int n, int ell, const Limits& limits) {
  return automata::extendable_core(build_L_language(f, n, ell, limits), limits).core;
}

Dfa build_S_subshift_direct(const ForbiddenSet& f, int n, int ell, const Limits& limits) {
  const Nfa trimmed = automata::trim_biextendable(build_L_automaton(f, n, ell, limits));
  return automata::minimize(automata::determinize(trimmed, limits));
}

Dfa build_P_base(const ForbiddenSet& f, int n, int k, int p, const Limits& limits) {
  require_kp(k, p);
  Dfa x = automata::extendable_core(periodic_rectangles(f, n, p, limits), limits).core;
  for (int j = 1; j <= n + k - 1; ++j)
    x = automata::extendable_core(pre_image_finite(x, f, n, limits), limits).core;
  return x;
}

Dfa build_P_automaton(const ForbiddenSet& f, int n, int k, int p, const Limits& limits) {
  const Dfa base = build_P_base(f, n, k, p, limits);
  return automata::extendable_core(pre_image_finite(base, f, n, limits), limits).core;
}

Dfa build_P_automaton_direct(const ForbiddenSet& f, int n, int k, int p, const Limits& limits) {
  const Nfa trimmed = automata::trim_biextendable(direct_periodic_nfa(f, n, k, p, limits));
  return automata::minimize(automata::determinize(trimmed, limits));
}

automata::InclusionResult subshift_in_P(const Dfa& s, const ForbiddenSet& f, int n, int k, int p,
                                        const Limits& limits) {
  return includes_in_pre_image(s, build_P_base(f, n, k, p, limits), f, n, limits);
}

TraceLadder::TraceLadder(ForbiddenSet f, int n, Limits limits) : f_(std::move(f)), n_(n), limits_(limits) {}

const Dfa& TraceLadder::L(int ell) {
  require_level(ell);
  if (L_.empty()) L_.push_back(stripe_rectangles(f_, n_, limits_));
  while (int(L_.size()) <= ell) L_.push_back(pre_image_finite(L_.back(), f_, n_, limits_));
  return L_[std::size_t(ell)];
}

const Dfa& TraceLadder::S(int ell) {
  require_level(ell);
  while (int(S_.size()) <= ell) S_.push_back(automata::extendable_core(L(int(S_.size())), limits_).core);
  return S_[std::size_t(ell)];
}

const Dfa& TraceLadder::P_base(int k, int p) {
  require_kp(k, p);
  auto& chain = bases_[p];
  if (chain.empty()) chain.push_back(automata::extendable_core(periodic_rectangles(f_, n_, p, limits_), limits_).core);
  const std::size_t index = std::size_t(n_ + k - 1);
  while (chain.size() <= index)
    chain.push_back(automata::extendable_core(pre_image_finite(chain.back(), f_, n_, limits_), limits_).core);
  return chain[index];
}

RotationClasses rotation_classes(const ForbiddenSet& f) {
  RotationClasses rc;
  for (int i = 0; i < 4; ++i) {
    rc.rotated[std::size_t(i)] = i == 0 ? f : rc.rotated[std::size_t(i) - 1].rotated90();
    rc.same_as[std::size_t(i)] = i;
    for (int j = 0; j < i; ++j)
      if (rc.rotated[std::size_t(j)] == rc.rotated[std::size_t(i)]) {
        rc.same_as[std::size_t(i)] = j;
        break;
      }
  }
  return rc;
}

StabilityResult check_stable(const ForbiddenSet& f, int n, int ell_max, const Limits& limits) {
  if (ell_max < 0) throw std::invalid_argument("ell_max must be non-negative");
  StabilityResult result;
  result.n = n;
  result.ell_max = ell_max;
  const RotationClasses rc = rotation_classes(f);
  bool all_stable = true;
  int overall = 0;
  for (int i = 0; i < 4; ++i) {
    const auto ui = std::size_t(i);
    const int src = rc.same_as[ui];
    if (src != i) {
      result.directions[ui] = result.directions[std::size_t(src)];
      result.directions[ui].rotation = i;
      result.directions[ui].same_as = src;
      result.traces[ui] = result.traces[std::size_t(src)];
      continue;
    }
    DirectionReport& dir = result.directions[ui];
    dir.rotation = i;
    dir.same_as = i;
    TraceLadder ladder(rc.rotated[ui], n, limits);
    for (int ell = 0; ell <= ell_max; ++ell) {
      LevelReport level;
      level.ell = ell;
      level.L_states = ladder.L(ell).num_states();
      const Dfa& s = ladder.S(ell);
      level.S_states = s.num_states();
      level.S_hash = automata::language_hash(s);
      const auto inc = automata::includes(ladder.S(ell + 1), s);
      level.equals_next = inc.holds;
      level.separating = inc.counterexample;
      dir.levels.push_back(level);
      if (inc.holds) {
        dir.stable_at = ell;
        result.traces[ui] = s;
        break;
      }
    }
    if (dir.stable_at) overall = std::max(overall, *dir.stable_at);
    else all_stable = false;
  }
  if (all_stable) result.stable_at = overall;
  return result;
}

namespace {

PeriodizabilityResult periodizable_with(const RotationClasses& rc, const std::array<const Dfa*, 4>& traces, int n,
                                        int ell, int k, int p, const Limits& limits) {
  require_kp(k, p);
  PeriodizabilityResult r;
  r.n = n;
  r.ell = ell;
  r.k = k;
  r.p = p;
  r.holds = true;
  for (int i = 0; i < 4; ++i) {
    const auto ui = std::size_t(i);
    const int src = rc.same_as[ui];
    if (src != i) {
      r.directions[ui] = r.directions[std::size_t(src)];
      r.directions[ui].rotation = i;
      r.directions[ui].same_as = src;
      continue;
    }
    PeriodizabilityDirection& d = r.directions[ui];
    d.rotation = i;
    d.same_as = i;
    const Dfa base = build_P_base(rc.rotated[ui], n, k, p, limits);
    d.base_states = base.num_states();
    const auto inc = includes_in_pre_image(*traces[ui], base, rc.rotated[ui], n, limits);
    d.holds = inc.holds;
    d.witness = inc.counterexample;
    r.holds = r.holds && d.holds;
  }
  return r;
}

}  // namespace

PeriodizabilityResult check_periodizable(const ForbiddenSet& f, const StabilityResult& stability, int k, int p,
                                         const Limits& limits) {
  if (!stability.stable_at) throw StabilityNotEstablished("traces are not stable up to the examined level");
  std::array<const Dfa*, 4> traces{};
  for (std::size_t i = 0; i < 4; ++i) traces[i] = &stability.traces[i];
  return periodizable_with(rotation_classes(f), traces, stability.n, *stability.stable_at, k, p, limits);
}

PeriodizabilityResult check_periodizable(const ForbiddenSet& f, int n, int ell, int k, int p, const Limits& limits) {
  require_level(ell);
  const RotationClasses rc = rotation_classes(f);
  std::array<Dfa, 4> s;
  std::array<const Dfa*, 4> traces{};
  for (int i = 0; i < 4; ++i) {
    const auto ui = std::size_t(i);
    if (rc.same_as[ui] != i) continue;
    TraceLadder ladder(rc.rotated[ui], n, limits);
    const auto inc = automata::includes(ladder.S(ell + 1), ladder.S(ell));
    if (!inc.holds)
      throw StabilityNotEstablished("S_{n,l} differs from S_{n,l+1} in direction " + std::to_string(i) +
                                    "; periodizability is only checked against a stable trace");
    s[ui] = ladder.S(ell);
  }
  for (std::size_t i = 0; i < 4; ++i) traces[i] = &s[std::size_t(rc.same_as[i])];
  return periodizable_with(rc, traces, n, ell, k, p, limits);
}

ExtensionConstantResult min_extension_constant(const ForbiddenSet& f, int n, int ell,
                                               std::optional<std::size_t> C_max, const Limits& limits) {
  ExtensionConstantResult result;
  const RotationClasses rc = rotation_classes(f);
  bool all = true;
  std::size_t overall = 0;
  for (int i = 0; i < 4; ++i) {
    const auto ui = std::size_t(i);
    if (rc.same_as[ui] != i) {
      result.per_direction[ui] = result.per_direction[std::size_t(rc.same_as[ui])];
      continue;
    }
    TraceLadder ladder(rc.rotated[ui], n, limits);
    const Dfa& l = ladder.L(ell);
    const Dfa& s = ladder.S(ell);
    const auto dead = l.dead_states();
    const std::size_t live = std::size_t(std::count(dead.begin(), dead.end(), false));
    const std::size_t bound = C_max.value_or(live + 1);
    result.C_max = std::max(result.C_max, bound);
    Dfa e = l;
    for (std::size_t c = 0; c <= bound; ++c) {
      if (automata::includes(s, e).holds) {
        result.per_direction[ui] = c;
        break;
      }
      if (c < bound) e = automata::one_step_extension(e, limits);
    }
    if (result.per_direction[ui]) overall = std::max(overall, *result.per_direction[ui]);
    else all = false;
  }
  if (all) result.C = overall;
  return result;
}

std::vector<ForcedStep> forced_rows(const ForbiddenSet& f, const Pattern& window, int steps, SideCells sides) {
  const int r = f.radius(), side = f.side(), A = f.alphabet_size();
  const int w = window.width();
  if (window.height() < 2 * r) throw std::invalid_argument("forced_rows needs a window of height at least 2r");
  if (w <= 0) throw std::invalid_argument("forced_rows needs a non-empty window");
  constexpr std::size_t kMaxRows = std::size_t{1} << 20;

  // rows[0] is the current bottom row; only the lowest 2r rows matter.
  std::vector<std::vector<Symbol>> rows;
  for (int j = 0; j < 2 * r; ++j) {
    std::vector<Symbol> row(static_cast<std::size_t>(w));
    for (int i = 0; i < w; ++i) row[std::size_t(i)] = window.local(i, j);
    rows.push_back(std::move(row));
  }
  const bool zero_sides = sides == SideCells::Zero;
  const int first_right = zero_sides ? 0 : side - 1;
  const int last_right = zero_sides ? w - 1 + 2 * r : w - 1;

  std::vector<ForcedStep> out;
  std::vector<Symbol> candidate(static_cast<std::size_t>(w));
  for (int step = 0; step < steps; ++step) {
    ForcedStep result;
    auto cell = [&](int row, int x) -> Symbol {
      if (x < 0 || x >= w) return 0;
      return row == 0 ? candidate[std::size_t(x)] : rows[std::size_t(row - 1)][std::size_t(x)];
    };
    auto window_ok = [&](int right) {
      std::uint64_t code = 0, weight = 1;
      for (int j = 0; j < side; ++j)
        for (int i = 0; i < side; ++i) {
          code += weight * cell(j, right - side + 1 + i);
          weight *= std::uint64_t(A);
        }
      return !f.contains_code(code);
    };
    std::function<void(int)> place = [&](int x) {
      if (x == w) {
        for (int right = std::max(w, first_right); right <= last_right; ++right)
          if (!window_ok(right)) return;
        if (result.rows.size() >= kMaxRows) throw automata::CapacityError("forced_rows: too many continuations");
        result.rows.push_back(candidate);
        return;
      }
      for (int v = 0; v < A; ++v) {
        candidate[std::size_t(x)] = Symbol(v);
        if (x >= first_right && !window_ok(x)) continue;
        place(x + 1);
      }
    };
    place(0);
    const bool unique = result.unique();
    if (unique) {
      rows.insert(rows.begin(), result.rows.front());
      rows.pop_back();
    }
    out.push_back(std::move(result));
    if (!unique) break;
  }
  return out;
}

namespace {

Pattern two_row_pattern(const std::vector<std::pair<int, int>>& top_bottom) {
  Pattern p(Coordinate{0, 0}, int(top_bottom.size()), 2);
  for (std::size_t i = 0; i < top_bottom.size(); ++i) {
    p.set_local(int(i), 1, Symbol(top_bottom[i].first));
    p.set_local(int(i), 0, Symbol(top_bottom[i].second));
  }
  return p;
}

}  // namespace

Pattern make_Pn_pattern(int n) {
  if (n < 0) throw std::invalid_argument("P_n needs n >= 0");
  std::vector<std::pair<int, int>> cols = {{0, 0}, {1, 1}, {0, 0}, {0, 1}, {0, 0}, {1, 1}, {0, 0}, {1, 0}, {0, 0},
                                           {1, 1}, {0, 0}, {1, 0}, {0, 0}, {0, 1}, {0, 0}, {1, 0}, {0, 0}, {0, 1}};
  for (int i = 0; i < n; ++i) {
    cols.emplace_back(0, 0);
    cols.emplace_back(0, 1);
  }
  cols.emplace_back(0, 0);
  return two_row_pattern(cols);
}

Pattern life_separating_word() {
  static const char* top = "110010000000001000101010100010";
  static const char* bottom = "001000011100101010100010001000";
  std::vector<std::pair<int, int>> cols;
  for (int i = 0; i < 30; ++i) cols.emplace_back(top[i] - '0', bottom[i] - '0');
  return two_row_pattern(cols);
}

}  // namespace lifetrace
