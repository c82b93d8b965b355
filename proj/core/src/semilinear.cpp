#include "lifetrace/semilinear.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "lifetrace/stripe.hpp"

namespace lifetrace {

namespace {

constexpr std::uint64_t kMaxStates = std::uint64_t{1} << 22;
constexpr std::int64_t kMaxPeriod = std::int64_t{1} << 24;

int mod(long a, long m) { return int(((a % m) + m) % m); }

int turns_for(Side side) {
  switch (side) {
    case Side::North: return 0;
    case Side::West: return 1;
    case Side::South: return 2;
    case Side::East: return 3;
  }
  return 0;
}

}  // namespace

int Periods::max() const { return std::max({north, south, east, west}); }

std::string to_string(RegionKind k) {
  switch (k) {
    case RegionKind::Core: return "core";
    case RegionKind::North: return "N";
    case RegionKind::South: return "S";
    case RegionKind::East: return "E";
    case RegionKind::West: return "W";
    case RegionKind::NorthEast: return "NE";
    case RegionKind::NorthWest: return "NW";
    case RegionKind::SouthEast: return "SE";
    case RegionKind::SouthWest: return "SW";
  }
  return "?";
}

bool RegionSpec::contains(int x, int y) const {
  return (!x_min || x >= *x_min) && (!x_max || x <= *x_max) && (!y_min || y >= *y_min) && (!y_max || y <= *y_max);
}

SemilinearConfig::SemilinearConfig(int alphabet_size, CoreBox box, Periods periods, Pattern generator)
    : alphabet_size_(alphabet_size), box_(box), periods_(periods), generator_(std::move(generator)) {}

SemilinearConfig SemilinearConfig::zero(int alphabet_size) {
  return SemilinearConfig(alphabet_size, CoreBox{0, 0, 0, 0}, Periods{}, Pattern(Rect{-1, -1, 3, 3}));
}

SemilinearConfig SemilinearConfig::from_finite(const Pattern& p, int alphabet_size) {
  if (p.empty()) return zero(alphabet_size);
  const Rect d = p.domain();
  const CoreBox box{d.x, d.x_end() - 1, d.y, d.y_end() - 1};
  return SemilinearConfig(alphabet_size, box, Periods{}, p.embedded(d.dilated(1)));
}

Rect SemilinearConfig::extended_box() const {
  return Rect{box_.x0 - periods_.west, box_.y0 - periods_.south, box_.x1 - box_.x0 + 1 + periods_.west + periods_.east,
              box_.y1 - box_.y0 + 1 + periods_.south + periods_.north};
}

SemilinearConfig SemilinearConfig::build(int alphabet_size, CoreBox box, Periods periods, const Evaluator& eval) {
  if (box.x0 > box.x1 || box.y0 > box.y1) throw std::invalid_argument("empty core box");
  if (periods.north < 1 || periods.south < 1 || periods.east < 1 || periods.west < 1)
    throw std::invalid_argument("periods must be positive");
  SemilinearConfig c(alphabet_size, box, periods, Pattern());
  const Rect ext = c.extended_box();
  Pattern g(ext);
  for (int y = ext.y; y < ext.y_end(); ++y)
    for (int x = ext.x; x < ext.x_end(); ++x) g.set(x, y, eval(x, y));
  c.generator_ = std::move(g);
  return c;
}

SemilinearConfig SemilinearConfig::from_parts(int alphabet_size, CoreBox box, Periods periods, Pattern generator) {
  SemilinearConfig c(alphabet_size, box, periods, Pattern());
  if (box.x0 > box.x1 || box.y0 > box.y1) throw std::invalid_argument("empty core box");
  if (periods.north < 1 || periods.south < 1 || periods.east < 1 || periods.west < 1)
    throw std::invalid_argument("periods must be positive");
  if (!(generator.domain() == c.extended_box())) throw std::invalid_argument("generator does not cover the extended box");
  c.generator_ = std::move(generator);
  return c;
}

int SemilinearConfig::fold_x(int x) const {
  if (x > box_.x1) return box_.x1 + 1 + mod(long(x) - box_.x1 - 1, periods_.east);
  if (x < box_.x0) return box_.x0 - 1 - mod(long(box_.x0) - 1 - x, periods_.west);
  return x;
}

int SemilinearConfig::fold_y(int y) const {
  if (y > box_.y1) return box_.y1 + 1 + mod(long(y) - box_.y1 - 1, periods_.north);
  if (y < box_.y0) return box_.y0 - 1 - mod(long(box_.y0) - 1 - y, periods_.south);
  return y;
}

Symbol SemilinearConfig::at(int x, int y) const { return generator_.at(fold_x(x), fold_y(y)); }

Pattern SemilinearConfig::window(const Rect& r) const {
  Pattern p(r);
  for (int y = r.y; y < r.y_end(); ++y)
    for (int x = r.x; x < r.x_end(); ++x) p.set(x, y, at(x, y));
  return p;
}

SemilinearConfig SemilinearConfig::rotated(int quarter_turns) const {
  SemilinearConfig c = *this;
  for (int i = 0; i < mod(quarter_turns, 4); ++i) {
    const SemilinearConfig old = c;
    const CoreBox box{old.box_.y0, old.box_.y1, -old.box_.x1, -old.box_.x0};
    const Periods per{old.periods_.west, old.periods_.east, old.periods_.north, old.periods_.south};
    c = build(alphabet_size_, box, per, [&old](int x, int y) { return old.at(-y, x); });
  }
  return c;
}

std::vector<RegionSpec> SemilinearConfig::regions() const {
  struct Span {
    std::optional<int> lo, hi;
    int anchor_lo, anchor_len;
    int period;  // signed outward period, 0 for the core span
  };
  const Span xs[3] = {{std::nullopt, box_.x0 - 1, box_.x0 - periods_.west, periods_.west, -periods_.west},
                      {box_.x0, box_.x1, box_.x0, box_.x1 - box_.x0 + 1, 0},
                      {box_.x1 + 1, std::nullopt, box_.x1 + 1, periods_.east, periods_.east}};
  const Span ys[3] = {{std::nullopt, box_.y0 - 1, box_.y0 - periods_.south, periods_.south, -periods_.south},
                      {box_.y0, box_.y1, box_.y0, box_.y1 - box_.y0 + 1, 0},
                      {box_.y1 + 1, std::nullopt, box_.y1 + 1, periods_.north, periods_.north}};
  const RegionKind kinds[3][3] = {{RegionKind::SouthWest, RegionKind::West, RegionKind::NorthWest},
                                  {RegionKind::South, RegionKind::Core, RegionKind::North},
                                  {RegionKind::SouthEast, RegionKind::East, RegionKind::NorthEast}};
  std::vector<RegionSpec> out;
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) {
      RegionSpec r;
      r.kind = kinds[i][j];
      r.x_min = xs[i].lo;
      r.x_max = xs[i].hi;
      r.y_min = ys[j].lo;
      r.y_max = ys[j].hi;
      r.anchor = Rect{xs[i].anchor_lo, ys[j].anchor_lo, xs[i].anchor_len, ys[j].anchor_len};
      if (xs[i].period != 0) r.periods.push_back({xs[i].period, 0});
      if (ys[j].period != 0) r.periods.push_back({0, ys[j].period});
      r.generator = generator_.restricted(r.anchor);
      out.push_back(std::move(r));
    }
  return out;
}

bool regions_partition(const std::vector<RegionSpec>& regions, const Rect& window) {
  for (int y = window.y; y < window.y_end(); ++y)
    for (int x = window.x; x < window.x_end(); ++x) {
      int hits = 0;
      for (const auto& r : regions) hits += r.contains(x, y) ? 1 : 0;
      if (hits != 1) return false;
    }
  // Each axis: the distinct intervals must be consecutive and cover Z.
  auto axis_ok = [&](bool horizontal) {
    std::vector<std::pair<std::optional<int>, std::optional<int>>> iv;
    for (const auto& r : regions) iv.emplace_back(horizontal ? r.x_min : r.y_min, horizontal ? r.x_max : r.y_max);
    std::sort(iv.begin(), iv.end(), [](const auto& a, const auto& b) {
      if (!a.first) return bool(b.first);
      if (!b.first) return false;
      return *a.first < *b.first;
    });
    iv.erase(std::unique(iv.begin(), iv.end()), iv.end());
    if (iv.empty() || iv.front().first || iv.back().second) return false;
    for (std::size_t i = 0; i + 1 < iv.size(); ++i) {
      if (!iv[i].second || !iv[i + 1].first || *iv[i].second + 1 != *iv[i + 1].first) return false;
      if (iv[i + 1].second && *iv[i + 1].second < *iv[i + 1].first) return false;
    }
    return true;
  };
  return axis_ok(true) && axis_ok(false);
}

bool same_configuration(const SemilinearConfig& a, const SemilinearConfig& b) {
  const auto& A = a.core();
  const auto& B = b.core();
  const int x_lo = std::min(A.x0, B.x0) - std::lcm(a.periods().west, b.periods().west);
  const int x_hi = std::max(A.x1, B.x1) + std::lcm(a.periods().east, b.periods().east);
  const int y_lo = std::min(A.y0, B.y0) - std::lcm(a.periods().south, b.periods().south);
  const int y_hi = std::max(A.y1, B.y1) + std::lcm(a.periods().north, b.periods().north);
  for (int y = y_lo; y <= y_hi; ++y)
    for (int x = x_lo; x <= x_hi; ++x)
      if (a.at(x, y) != b.at(x, y)) return false;
  return true;
}

std::optional<Coordinate> first_image_mismatch(const LocalRule& rule, const SemilinearConfig& x, const FiniteConfig& y) {
  const int r = rule.radius();
  const CoreBox& c = x.core();
  int x_lo = c.x0 - r, x_hi = c.x1 + r, y_lo = c.y0 - r, y_hi = c.y1 + r;
  const Rect s = y.support_box();
  if (!s.empty()) {
    x_lo = std::min(x_lo, s.x);
    x_hi = std::max(x_hi, s.x_end() - 1);
    y_lo = std::min(y_lo, s.y);
    y_hi = std::max(y_hi, s.y_end() - 1);
  }
  x_lo -= x.periods().west;
  x_hi += x.periods().east;
  y_lo -= x.periods().south;
  y_hi += x.periods().north;
  const Rect cells{x_lo, y_lo, x_hi - x_lo + 1, y_hi - y_lo + 1};
  const Pattern image = apply_rule(rule, x.window(cells.dilated(r)));
  for (int yy = cells.y; yy < cells.y_end(); ++yy)
    for (int xx = cells.x; xx < cells.x_end(); ++xx)
      if (image.at(xx, yy) != y.at(xx, yy)) return Coordinate{xx, yy};
  return std::nullopt;
}

bool verify_image(const LocalRule& rule, const SemilinearConfig& x, const FiniteConfig& y) {
  return !first_image_mismatch(rule, x, y).has_value();
}

Quadrant parse_quadrant(const std::string& s) {
  if (s == "NE") return Quadrant::NorthEast;
  if (s == "NW") return Quadrant::NorthWest;
  if (s == "SE") return Quadrant::SouthEast;
  if (s == "SW") return Quadrant::SouthWest;
  throw std::invalid_argument("unknown quadrant '" + s + "' (expected NE, NW, SE or SW)");
}

std::string to_string(Quadrant q) {
  switch (q) {
    case Quadrant::NorthEast: return "NE";
    case Quadrant::NorthWest: return "NW";
    case Quadrant::SouthEast: return "SE";
    case Quadrant::SouthWest: return "SW";
  }
  return "?";
}

SemilinearConfig replace_quadrant_all_ones(const SemilinearConfig& x, Quadrant q) {
  const CoreBox& c = x.core();
  const Periods& p = x.periods();
  const bool east = q == Quadrant::NorthEast || q == Quadrant::SouthEast;
  const bool north = q == Quadrant::NorthEast || q == Quadrant::NorthWest;
  const int xa = east ? c.x1 + 1 : c.x0 - p.west, xb = east ? c.x1 + p.east : c.x0 - 1;
  const int ya = north ? c.y1 + 1 : c.y0 - p.south, yb = north ? c.y1 + p.north : c.y0 - 1;
  Pattern g = x.generator();
  for (int yy = ya; yy <= yb; ++yy)
    for (int xx = xa; xx <= xb; ++xx) g.set(xx, yy, 1);
  return SemilinearConfig::from_parts(x.alphabet_size(), c, p, std::move(g));
}

namespace {

// Continuation search for one north stage (see the header comment).
class NorthStage {
 public:
  NorthStage(const SemilinearConfig& x, const ForbiddenSet& f, int t, int k, int p)
      : x_(x), f_(f), table_(f), t_(t), k_(k), p_(p) {
    r_ = f.radius();
    n_ = 2 * r_;
    A_ = std::uint64_t(f.alphabet_size());
    m_ = k + p;
    H_ = n_ + m_;
    M_ = table_.column_count();
    choices_ = 1;
    for (int i = 0; i < m_; ++i) {
      choices_ *= A_;
      if (choices_ > kMaxStates) throw automata::CapacityError("continuation alphabet too large");
    }
    states_ = 1;
    for (int i = 0; i < n_; ++i) {
      states_ *= choices_;
      if (states_ > kMaxStates) throw automata::CapacityError("continuation state space too large");
    }
    high_ = states_ / choices_;
  }

  SemilinearConfig run() {
    const CoreBox& box = x_.core();
    const Periods& per = x_.periods();
    if (t_ < box.y0) throw std::invalid_argument("threshold row below the core box");

    // The DP is anchored where the stripe band itself stops being periodic,
    // using its least periods, so the result depends only on rows <= t.
    const int pw = least_period(box.x0 - per.west, per.west);
    const int pe = least_period(box.x1 + 1, per.east);
    int x0 = box.x0;
    while (x0 <= box.x1 && stripe(x0) == stripe(x0 - pw)) ++x0;
    int x1 = box.x1;
    while (x1 >= x0 && stripe(x1) == stripe(x1 + pe)) --x1;
    const int first = x0, last = x1 + n_;

    std::vector<std::uint64_t> west_stripes, east_stripes;
    for (int i = 0; i < pw; ++i) west_stripes.push_back(stripe(x0 - pw + i));
    for (int i = 0; i < pe; ++i) east_stripes.push_back(stripe(x1 + 1 + i));
    const Graph west = graph(west_stripes), east = graph(east_stripes);
    const std::vector<bool> L = backward_infinite(west), R = forward_infinite(east);
    const int start_phase = pw - 1;
    const int end_phase = (n_ - 1) % pe;

    // feasible[X - first + 1][s]: the state s at column X reaches an R-node at `last`.
    const std::size_t cols = std::size_t(last - first + 2);
    std::vector<std::vector<bool>> feasible(cols, std::vector<bool>(states_, false));
    for (std::uint64_t s = 0; s < states_; ++s) feasible[cols - 1][s] = R[node(s, end_phase)];
    std::vector<std::vector<std::uint64_t>> window_stripes(cols);
    for (int X = first; X <= last; ++X) {
      auto& ws = window_stripes[std::size_t(X - first + 1)];
      for (int i = 0; i <= n_; ++i) ws.push_back(stripe(X - n_ + i));
    }
    for (int X = last; X >= first; --X) {
      const auto& ws = window_stripes[std::size_t(X - first + 1)];
      auto& prev = feasible[std::size_t(X - first)];
      const auto& next = feasible[std::size_t(X - first + 1)];
      for (std::uint64_t s = 0; s < states_; ++s)
        for (std::uint64_t c = 0; c < choices_ && !prev[s]; ++c)
          if (next[shift(s, c)] && valid(s, c, ws)) prev[s] = true;
    }
    std::optional<std::uint64_t> start;
    for (std::uint64_t s = 0; s < states_ && !start; ++s)
      if (L[node(s, start_phase)] && feasible[0][s]) start = s;
    if (!start) throw NotPeriodizable("no periodic continuation above row " + std::to_string(t_));

    std::unordered_map<int, std::uint64_t> choice;
    for (int i = 0; i < n_; ++i) choice[x0 - n_ + i] = digit_of_state(*start, i);
    std::uint64_t s = *start;
    for (int X = first; X <= last; ++X) {
      const auto& ws = window_stripes[std::size_t(X - first + 1)];
      const auto& next = feasible[std::size_t(X - first + 1)];
      std::uint64_t c = 0;
      while (!(next[shift(s, c)] && valid(s, c, ws))) ++c;
      choice[X] = c;
      s = shift(s, c);
    }

    // East tail: least forward walk inside R until a node repeats.
    std::unordered_map<std::uint64_t, int> seen;
    int steps = 0, phase = end_phase;
    std::uint64_t v = s;
    while (true) {
      const std::uint64_t id = node(v, phase);
      auto [it, fresh] = seen.emplace(id, steps);
      if (!fresh) break;
      const int next_phase = (phase + 1) % pe;
      std::uint64_t c = 0;
      while (!(east.edge(v, phase, c) && R[node(shift(v, c), next_phase)])) ++c;
      v = shift(v, c);
      phase = next_phase;
      choice[last + ++steps] = c;
    }
    const int east_i = seen[node(v, phase)], east_j = steps;

    // West tail: least backward walk inside L until a node repeats.
    seen.clear();
    steps = 0;
    phase = start_phase;
    v = *start;
    while (true) {
      const std::uint64_t id = node(v, phase);
      auto [it, fresh] = seen.emplace(id, steps);
      if (!fresh) break;
      const int prev_phase = (phase + pw - 1) % pw;
      const std::uint64_t newest = v % choices_, rest = v / choices_;
      std::uint64_t c = 0;
      for (;; ++c) {
        const std::uint64_t u = c * high_ + rest;
        if (west.edge(u, prev_phase, newest) && L[node(u, prev_phase)]) {
          v = u;
          break;
        }
      }
      phase = prev_phase;
      ++steps;
      choice[x0 - n_ - steps] = c;
    }
    const int west_i = seen[node(v, phase)], west_j = steps;

    const int west_lo = x0 - n_ - west_j, east_hi = last + east_j;
    const int west_cycle = west_j - west_i, east_cycle = east_j - east_i;
    auto choice_at = [&](int X) {
      if (X < west_lo) X += ((west_lo - X + west_cycle - 1) / west_cycle) * west_cycle;
      if (X > east_hi) X -= ((X - east_hi + east_cycle - 1) / east_cycle) * east_cycle;
      return choice.at(X);
    };
    const std::int64_t pw_new = std::lcm(std::int64_t(west_cycle), std::int64_t(per.west));
    const std::int64_t pe_new = std::lcm(std::int64_t(east_cycle), std::int64_t(per.east));
    if (pw_new > kMaxPeriod || pe_new > kMaxPeriod) throw automata::CapacityError("continuation period too large");

    const CoreBox nb{std::min(box.x0, x0 - west_i), std::max(box.x1, x1 + east_i), box.y0, t_ + k_};
    const Periods np{p_, per.south, int(pe_new), int(pw_new)};
    const int m = m_, k = k_, p = p_, t = t_;
    const std::uint64_t A = A_;
    return SemilinearConfig::build(x_.alphabet_size(), nb, np, [&](int xx, int yy) -> Symbol {
      if (yy <= t) return x_.at(xx, yy);
      int j = yy - t - 1;
      if (j >= m) j = k + (j - k) % p;
      std::uint64_t c = choice_at(xx);
      for (int i = j + 1; i < m; ++i) c /= A;
      return Symbol(c % A);
    });
  }

 private:
  // Least d dividing `period` such that the band's stripes from `from` on
  // repeat with period d.
  int least_period(int from, int period) const {
    for (int d = 1; d < period; ++d) {
      if (period % d) continue;
      bool ok = true;
      for (int i = 0; i + d < period && ok; ++i) ok = stripe(from + i) == stripe(from + i + d);
      if (ok) return d;
    }
    return period;
  }

  struct Graph {
    const NorthStage* stage;
    std::vector<std::vector<std::uint64_t>> stripes_by_phase;  // window stripes ending at phase ph
    int period;
    bool edge(std::uint64_t s, int ph, std::uint64_t c) const {
      return stage->valid(s, c, stripes_by_phase[std::size_t((ph + 1) % period)]);
    }
  };

  std::uint64_t node(std::uint64_t s, int phase) const { return std::uint64_t(phase) * states_ + s; }
  std::uint64_t shift(std::uint64_t s, std::uint64_t c) const { return (s % high_) * choices_ + c; }
  std::uint64_t digit_of_state(std::uint64_t s, int i) const {
    for (int j = i + 1; j < n_; ++j) s /= choices_;
    return s % choices_;
  }

  std::uint64_t stripe(int x) const {
    std::uint64_t code = 0, w = 1;
    for (int i = 0; i < n_; ++i) {
      code += x_.at(x, t_ - n_ + 1 + i) * w;
      w *= A_;
    }
    return code;
  }

  // Row j (0 = bottom of the stripe) of the full column (stripe, choice).
  Symbol cell(std::uint64_t stripe_code, std::uint64_t c, int j) const {
    if (j >= H_) j = n_ + k_ + (j - n_ - k_) % p_;
    if (j < n_) {
      for (int i = 0; i < j; ++i) stripe_code /= A_;
      return Symbol(stripe_code % A_);
    }
    for (int i = j - n_ + 1; i < m_; ++i) c /= A_;
    return Symbol(c % A_);
  }

  const std::vector<std::uint64_t>& subs(std::uint64_t stripe_code) const {
    auto it = subs_.find(stripe_code);
    if (it != subs_.end()) return it->second;
    std::vector<std::uint64_t> v(choices_ * std::uint64_t(H_));
    for (std::uint64_t c = 0; c < choices_; ++c)
      for (int b = 0; b < H_; ++b) {
        std::uint64_t code = 0, w = 1;
        for (int dy = 0; dy <= n_; ++dy) {
          code += cell(stripe_code, c, b + dy) * w;
          w *= A_;
        }
        v[c * std::uint64_t(H_) + std::uint64_t(b)] = code;
      }
    return subs_.emplace(stripe_code, std::move(v)).first->second;
  }

  // Windows whose east column holds choice c, the state s holding the 2r
  // choices to its west, and `stripes` the 2r+1 stripe codes west to east.
  bool valid(std::uint64_t s, std::uint64_t c, const std::vector<std::uint64_t>& stripes) const {
    std::uint64_t cs[16];
    for (int i = n_ - 1; i >= 0; --i) {
      cs[i] = s % choices_;
      s /= choices_;
    }
    cs[n_] = c;
    const std::uint64_t* sub[16];
    for (int i = 0; i <= n_; ++i) sub[i] = subs(stripes[std::size_t(i)]).data() + cs[i] * std::uint64_t(H_);
    for (int b = 0; b < H_; ++b) {
      std::uint64_t idx = 0;
      for (int i = n_; i >= 0; --i) idx = idx * M_ + sub[i][b];
      if (table_.forbidden_index(idx)) return false;
    }
    return true;
  }

  Graph graph(const std::vector<std::uint64_t>& stripes) const {
    Graph g{this, {}, int(stripes.size())};
    const int P = g.period;
    for (int ph = 0; ph < P; ++ph) {
      std::vector<std::uint64_t> ws;
      for (int i = 0; i <= n_; ++i) ws.push_back(stripes[std::size_t(mod(ph - n_ + i, P))]);
      g.stripes_by_phase.push_back(std::move(ws));
    }
    return g;
  }

  // Nodes with an infinite path into them (backward) or out of them (forward).
  std::vector<bool> prune(const Graph& g, bool backward) const {
    const int P = g.period;
    const std::uint64_t total = states_ * std::uint64_t(P);
    if (total > kMaxStates * 4) throw automata::CapacityError("continuation graph too large");
    std::vector<std::uint32_t> degree(total, 0);
    for (int ph = 0; ph < P; ++ph)
      for (std::uint64_t s = 0; s < states_; ++s)
        for (std::uint64_t c = 0; c < choices_; ++c)
          if (g.edge(s, ph, c)) {
            if (backward) ++degree[node(shift(s, c), (ph + 1) % P)];
            else ++degree[node(s, ph)];
          }
    std::vector<bool> alive(total, true);
    std::vector<std::uint64_t> queue;
    for (std::uint64_t v = 0; v < total; ++v)
      if (degree[v] == 0) {
        alive[v] = false;
        queue.push_back(v);
      }
    while (!queue.empty()) {
      const std::uint64_t v = queue.back();
      queue.pop_back();
      const int ph = int(v / states_);
      const std::uint64_t s = v % states_;
      auto drop = [&](std::uint64_t w) {
        if (alive[w] && --degree[w] == 0) {
          alive[w] = false;
          queue.push_back(w);
        }
      };
      if (backward) {
        for (std::uint64_t c = 0; c < choices_; ++c)
          if (g.edge(s, ph, c)) drop(node(shift(s, c), (ph + 1) % P));
      } else {
        const int pp = (ph + P - 1) % P;
        const std::uint64_t newest = s % choices_, rest = s / choices_;
        for (std::uint64_t c = 0; c < choices_; ++c) {
          const std::uint64_t u = c * high_ + rest;
          if (g.edge(u, pp, newest)) drop(node(u, pp));
        }
      }
    }
    return alive;
  }
  std::vector<bool> backward_infinite(const Graph& g) const { return prune(g, true); }
  std::vector<bool> forward_infinite(const Graph& g) const { return prune(g, false); }

  const SemilinearConfig& x_;
  const ForbiddenSet& f_;
  WindowTable table_;
  int t_, k_, p_;
  int r_ = 1, n_ = 2, m_ = 1, H_ = 3;
  std::uint64_t A_ = 2, M_ = 8, choices_ = 2, states_ = 4, high_ = 2;
  mutable std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> subs_;
};

}  // namespace

SemilinearConfig periodize_north(const SemilinearConfig& x, const ForbiddenSet& f, int t, int k, int p) {
  if (k < 0 || p < 1) throw std::invalid_argument("need k >= 0 and p >= 1");
  if (x.alphabet_size() != f.alphabet_size()) throw std::invalid_argument("alphabet mismatch");
  if (2 * f.radius() + 1 > 16) throw std::invalid_argument("radius too large for periodization");
  return NorthStage(x, f, t, k, p).run();
}

SemilinearConfig periodize_side(const SemilinearConfig& x, const ForbiddenSet& f, Side side, int t, int k, int p) {
  const int q = turns_for(side);
  const SemilinearConfig done = periodize_north(x.rotated(q), f.rotated(q), t, k, p);
  return done.rotated(4 - q);
}

SemilinearConfig splice_north(const SemilinearConfig& x, int h1, int n, std::uint64_t bound) {
  const CoreBox& box = x.core();
  if (h1 <= box.y0) throw std::invalid_argument("splice row must lie above the core's bottom row");
  const int xa = box.x0 - x.periods().west, xb = box.x1 + x.periods().east;
  auto same_stripe = [&](int a, int b) {
    for (int i = 0; i < n; ++i)
      for (int xx = xa; xx <= xb; ++xx)
        if (x.at(xx, a + i) != x.at(xx, b + i)) return false;
    return true;
  };
  // Above the core every stripe recurs after pN rows, so some a <= y1 + 1 works.
  const int a_last = std::max(h1, box.y1 + 1);
  for (int a = h1; a <= a_last; ++a)
    for (std::uint64_t d = 1; d <= bound; ++d) {
      if (!same_stripe(a, a + int(d))) continue;
      const int P = int(d);
      const CoreBox nb{box.x0, box.x1, box.y0, a - 1};
      Periods np = x.periods();
      np.north = P;
      return SemilinearConfig::build(x.alphabet_size(), nb, np, [&](int xx, int yy) {
        return yy < a ? x.at(xx, yy) : x.at(xx, a + (yy - a) % P);
      });
    }
  throw NotPeriodizable("no repeated stripe within " + std::to_string(bound) + " rows above row " + std::to_string(h1));
}

HalfplaneResult periodize_halfplane(const LocalRule& rule, const Pattern& x_window, Side side,
                                    const TraceConstants& constants) {
  require_verified(constants, rule);
  const ForbiddenSet f = derive_forbidden(rule);
  if (constants.n != f.stripe_height()) throw std::invalid_argument("constants use a different stripe height");
  const int q = turns_for(side);
  const DirectionConstants& d = constants.directions[std::size_t(q)];
  const Pattern w = rotate(x_window, q);
  const SemilinearConfig x = SemilinearConfig::from_finite(w, rule.alphabet_size());
  HalfplaneResult out;
  out.threshold = w.domain().y_end() - 1;
  out.period = d.p;
  const SemilinearConfig done = periodize_north(x, f.rotated(q), out.threshold, d.k, d.p);
  out.continuation = rotate(done.window(Rect{w.domain().x, out.threshold + 1, w.width(), d.k + d.p}), 4 - q);
  out.config = done.rotated(4 - q);
  return out;
}

PeriodizationResult periodize(const LocalRule& rule, const FiniteConfig& y, const Pattern& x_window,
                              const TraceConstants& constants) {
  require_verified(constants, rule);
  const ForbiddenSet f = derive_forbidden(rule);
  const int r = rule.radius();
  if (constants.n != f.stripe_height()) throw std::invalid_argument("constants use a different stripe height");

  const Rect s = y.support_box();
  int N = 0;
  if (!s.empty()) N = std::max({std::abs(s.x), std::abs(s.x_end() - 1), std::abs(s.y), std::abs(s.y_end() - 1)});
  int reach = 0;
  for (const auto& d : constants.directions) reach = std::max(reach, d.k + d.p);
  const int need = N + r + reach;
  const Rect required{-need, -need, 2 * need + 1, 2 * need + 1};
  if (!x_window.domain().contains(required))
    throw std::invalid_argument("preimage window must cover [-" + std::to_string(need) + ", " + std::to_string(need) +
                                "]^2");
  const Pattern image = apply_rule(rule, x_window);
  for (int yy = image.domain().y; yy < image.domain().y_end(); ++yy)
    for (int xx = image.domain().x; xx < image.domain().x_end(); ++xx)
      if (image.at(xx, yy) != y.at(xx, yy))
        throw std::invalid_argument("window is not a preimage of y at (" + std::to_string(xx) + ", " +
                                    std::to_string(yy) + ")");

  PeriodizationCertificate cert;
  cert.y = y.pattern();
  cert.x_window = x_window;
  cert.constants = constants;
  cert.N = N;
  cert.threshold = N + r;
  const int t = cert.threshold;

  SemilinearConfig x = SemilinearConfig::from_finite(x_window, rule.alphabet_size());
  cert.stages.push_back({"x", x});
  const Side order[4] = {Side::North, Side::South, Side::West, Side::East};
  for (int i = 0; i < 4; ++i) {
    const auto& d = constants.directions[std::size_t(turns_for(order[i]))];
    x = periodize_side(x, f, order[i], t, d.k, d.p);
    cert.stages.push_back({"x" + std::to_string(i + 1), x});
  }
  for (Side side : order) {
    const int q = turns_for(side);
    const auto& d = constants.directions[std::size_t(q)];
    x = splice_north(x.rotated(q), N + r + d.k + 1, constants.n, std::max<std::uint64_t>(constants.q_refined, 1))
            .rotated(4 - q);
  }
  cert.stages.push_back({"x5", x});

  const int shown = need + 2;
  cert.display = Rect{-shown, -shown, 2 * shown + 1, 2 * shown + 1};
  const Rect protect{-N - r, -N - r, 2 * (N + r) + 1, 2 * (N + r) + 1};
  cert.protected_agrees = true;
  for (const auto& stage : cert.stages)
    if (!(stage.config.window(protect) == x_window.restricted(protect))) cert.protected_agrees = false;
  cert.verified = verify_image(rule, x, y);
  return PeriodizationResult{x, std::move(cert)};
}

std::string render(const SemilinearConfig& x, const Rect& window) {
  const CoreBox& c = x.core();
  std::string out;
  auto bar = [&](int xx) { return xx == c.x0 || xx == c.x1 + 1; };
  auto rule_line = [&]() {
    for (int xx = window.x; xx < window.x_end(); ++xx) {
      if (bar(xx)) out.push_back('+');
      out.push_back('-');
    }
    if (bar(window.x_end())) out.push_back('+');
    out.push_back('\n');
  };
  for (int yy = window.y_end() - 1; yy >= window.y; --yy) {
    if (yy == c.y1) rule_line();
    for (int xx = window.x; xx < window.x_end(); ++xx) {
      if (bar(xx)) out.push_back('|');
      const Symbol v = x.at(xx, yy);
      out.push_back(v == 0 ? '.' : v == 1 ? 'O' : char('0' + v));
    }
    if (bar(window.x_end())) out.push_back('|');
    out.push_back('\n');
    if (yy == c.y0) rule_line();
  }
  return out;
}

}  // namespace lifetrace
