#pragma once

// Reference implementations used only by the tests. Nothing here calls into
// the library's search, automata or encoding code; patterns are plain
// row-major grids of 0/1 with row 0 at the bottom.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Grid = std::vector<std::vector<int>>;  // grid[y][x]

// Life with the 3x3 sum including the centre: born on 3, survives on 3 or 4.
inline int life(const Grid& g, int x, int y) {
  int sum = 0;
  for (int dy = -1; dy <= 1; ++dy)
    for (int dx = -1; dx <= 1; ++dx) sum += g[std::size_t(y + dy)][std::size_t(x + dx)];
  const int c = g[std::size_t(y)][std::size_t(x)];
  return (c == 0 && sum == 3) || (c == 1 && (sum == 3 || sum == 4)) ? 1 : 0;
}

inline Grid zeros(int w, int h) { return Grid(std::size_t(h), std::vector<int>(std::size_t(w), 0)); }

// Image of a (w+2) x (h+2) grid: the w x h grid of outputs.
inline Grid image(const Grid& g) {
  const int h = int(g.size()) - 2, w = int(g[0].size()) - 2;
  Grid out = zeros(w, h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) out[std::size_t(y)][std::size_t(x)] = life(g, x + 1, y + 1);
  return out;
}

// Every candidate preimage rectangle in turn; practical up to about 25
// preimage cells.
inline bool has_preimage_by_enumeration(const Grid& target) {
  const int h = int(target.size()), w = int(target[0].size());
  const int W = w + 2, H = h + 2, cells = W * H;
  Grid g = zeros(W, H);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << cells); ++code) {
    for (int i = 0; i < cells; ++i) g[std::size_t(i / W)][std::size_t(i % W)] = int((code >> i) & 1);
    if (image(g) == target) return true;
  }
  return false;
}

// Exhaustive search column by column: the set of reachable pairs of
// consecutive preimage columns is propagated west to east, and a new column
// is kept when the target column it completes is matched.
inline bool has_preimage_by_columns(const Grid& target) {
  const int h = int(target.size()), w = int(target[0].size());
  const int H = h + 2;
  const int cols = 1 << H;
  auto out = [&](int a, int b, int c, int y) {
    Grid g = zeros(3, 3);
    for (int dy = 0; dy < 3; ++dy) {
      g[std::size_t(dy)][0] = (a >> (y + dy)) & 1;
      g[std::size_t(dy)][1] = (b >> (y + dy)) & 1;
      g[std::size_t(dy)][2] = (c >> (y + dy)) & 1;
    }
    return life(g, 1, 1);
  };
  std::vector<char> reach(std::size_t(cols) * std::size_t(cols), 1);
  for (int x = 0; x < w; ++x) {
    std::vector<char> next(reach.size(), 0);
    for (int a = 0; a < cols; ++a)
      for (int b = 0; b < cols; ++b) {
        if (!reach[std::size_t(a) * std::size_t(cols) + std::size_t(b)]) continue;
        for (int c = 0; c < cols; ++c) {
          if (next[std::size_t(b) * std::size_t(cols) + std::size_t(c)]) continue;
          bool ok = true;
          for (int y = 0; y < h && ok; ++y) ok = out(a, b, c, y) == target[std::size_t(y)][std::size_t(x)];
          if (ok) next[std::size_t(b) * std::size_t(cols) + std::size_t(c)] = 1;
        }
      }
    reach = std::move(next);
  }
  return std::find(reach.begin(), reach.end(), 1) != reach.end();
}

// --------------------------------------------------------------------- CNF

using Clause = std::vector<int>;
struct Cnf {
  int variables = 0;
  std::vector<Clause> clauses;
};

// Blocked-assignment clauses for a Life preimage, built from the reference
// rule; variable 1 + y * W + x for preimage cell (x, y).
inline Cnf life_cnf(const Grid& target) {
  const int h = int(target.size()), w = int(target[0].size());
  const int W = w + 2;
  Cnf cnf;
  cnf.variables = W * (h + 2);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      for (int code = 0; code < 512; ++code) {
        Grid g = zeros(3, 3);
        for (int i = 0; i < 9; ++i) g[std::size_t(i / 3)][std::size_t(i % 3)] = (code >> i) & 1;
        if (life(g, 1, 1) == target[std::size_t(y)][std::size_t(x)]) continue;
        Clause c;
        for (int i = 0; i < 9; ++i) {
          const int var = 1 + (y + i / 3) * W + (x + i % 3);
          c.push_back(((code >> i) & 1) ? -var : var);
        }
        cnf.clauses.push_back(c);
      }
  return cnf;
}

inline bool satisfies(const Cnf& cnf, const std::vector<int>& value) {
  for (const auto& c : cnf.clauses) {
    bool sat = false;
    for (int lit : c) sat = sat || (lit > 0 ? value[std::size_t(lit)] == 1 : value[std::size_t(-lit)] == 0);
    if (!sat) return false;
  }
  return true;
}

// Plain DPLL with unit propagation. value[v] is -1 (free), 0 or 1.
inline bool dpll(const Cnf& cnf, std::vector<int>& value) {
  std::vector<int> trail;
  auto undo = [&](std::size_t mark) {
    while (trail.size() > mark) {
      value[std::size_t(trail.back())] = -1;
      trail.pop_back();
    }
  };
  std::function<bool()> solve = [&]() -> bool {
    const std::size_t mark = trail.size();
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& c : cnf.clauses) {
        int free_lit = 0, free_count = 0;
        bool sat = false;
        for (int lit : c) {
          const int v = value[std::size_t(std::abs(lit))];
          if (v == -1) {
            ++free_count;
            free_lit = lit;
          } else if ((lit > 0) == (v == 1)) {
            sat = true;
            break;
          }
        }
        if (sat) continue;
        if (free_count == 0) {
          undo(mark);
          return false;
        }
        if (free_count == 1) {
          value[std::size_t(std::abs(free_lit))] = free_lit > 0 ? 1 : 0;
          trail.push_back(std::abs(free_lit));
          changed = true;
        }
      }
    }
    int branch = 0;
    for (int v = 1; v <= cnf.variables && !branch; ++v)
      if (value[std::size_t(v)] == -1) branch = v;
    if (!branch) return true;
    for (int val : {0, 1}) {
      const std::size_t inner = trail.size();
      value[std::size_t(branch)] = val;
      trail.push_back(branch);
      if (solve()) return true;
      undo(inner);
    }
    undo(mark);
    return false;
  };
  return solve();
}

inline bool has_preimage_by_dpll(const Grid& target) {
  const Cnf cnf = life_cnf(target);
  std::vector<int> value(std::size_t(cnf.variables) + 1, -1);
  if (!dpll(cnf, value)) return false;
  for (auto& v : value)
    if (v == -1) v = 0;
  return satisfies(cnf, value);
}

// ----------------------------------------------------------- stripe words

// Is the height-2 word (columns given as bottom/top bits, bottom least
// significant) extendable upward by `ell` rows inside its own width with no
// 3x3 window of Life output 1?
inline bool in_L_by_search(const std::vector<int>& word, int ell) {
  const int m = int(word.size());
  Grid g = zeros(m, 2 + ell);
  for (int x = 0; x < m; ++x) {
    g[0][std::size_t(x)] = word[std::size_t(x)] & 1;
    g[1][std::size_t(x)] = (word[std::size_t(x)] >> 1) & 1;
  }
  auto row_ok = [&](int top) {  // windows whose top row is `top`
    if (top < 2 || m < 3) return true;
    for (int x = 1; x + 1 < m; ++x)
      if (life(g, x, top - 1) != 0) return false;
    return true;
  };
  if (!row_ok(1)) return false;
  std::function<bool(int)> fill = [&](int row) -> bool {
    if (row == 2 + ell) return true;
    for (int code = 0; code < (1 << m); ++code) {
      for (int x = 0; x < m; ++x) g[std::size_t(row)][std::size_t(x)] = (code >> x) & 1;
      if (row_ok(row) && fill(row + 1)) return true;
    }
    return false;
  };
  return fill(2);
}

// ------------------------------------------------------------------ automata

struct RefNfa {
  int alphabet = 1;
  int states = 0;
  std::vector<std::vector<std::vector<int>>> delta;  // delta[s][a] = targets
  std::vector<bool> initial, final;

  // Subsets as bit masks (at most 32 states).
  std::uint32_t initial_mask() const {
    std::uint32_t m = 0;
    for (int s = 0; s < states; ++s)
      if (initial[std::size_t(s)]) m |= 1u << s;
    return m;
  }
  std::uint32_t step(std::uint32_t mask, int a) const {
    std::uint32_t m = 0;
    for (int s = 0; s < states; ++s)
      if (mask >> s & 1)
        for (int t : delta[std::size_t(s)][std::size_t(a)]) m |= 1u << t;
    return m;
  }
  bool accepting(std::uint32_t mask) const {
    for (int s = 0; s < states; ++s)
      if ((mask >> s & 1) && final[std::size_t(s)]) return true;
    return false;
  }

  bool accepts(const std::vector<int>& w) const {
    std::set<int> cur;
    for (int s = 0; s < states; ++s)
      if (initial[std::size_t(s)]) cur.insert(s);
    for (int a : w) {
      std::set<int> next;
      for (int s : cur)
        for (int t : delta[std::size_t(s)][std::size_t(a)]) next.insert(t);
      cur = std::move(next);
    }
    for (int s : cur)
      if (final[std::size_t(s)]) return true;
    return false;
  }
};

inline RefNfa random_nfa(std::mt19937& rng, int max_states, int max_alphabet) {
  RefNfa a;
  a.states = 1 + int(rng() % unsigned(max_states));
  a.alphabet = 1 + int(rng() % unsigned(max_alphabet));
  a.delta.assign(std::size_t(a.states), std::vector<std::vector<int>>(std::size_t(a.alphabet)));
  a.initial.assign(std::size_t(a.states), false);
  a.final.assign(std::size_t(a.states), false);
  const unsigned density = 1 + rng() % 3;
  for (int s = 0; s < a.states; ++s) {
    a.initial[std::size_t(s)] = rng() % 3 == 0;
    a.final[std::size_t(s)] = rng() % 2 == 0;
    for (int l = 0; l < a.alphabet; ++l)
      for (int t = 0; t < a.states; ++t)
        if (rng() % (unsigned(a.states) + density) < density) a.delta[std::size_t(s)][std::size_t(l)].push_back(t);
  }
  return a;
}

// Calls f on every word of length 0..max_length in length-lexicographic order.
inline void for_each_word(int alphabet, int max_length, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> w;
  for (int len = 0; len <= max_length; ++len) {
    w.assign(std::size_t(len), 0);
    while (true) {
      f(w);
      int i = len - 1;
      while (i >= 0 && w[std::size_t(i)] == alphabet - 1) w[std::size_t(i--)] = 0;
      if (i < 0) break;
      ++w[std::size_t(i)];
    }
  }
}

}  // namespace oracle
