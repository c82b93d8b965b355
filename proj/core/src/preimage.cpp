#include "lifetrace/preimage.hpp"

#include <sstream>

namespace lifetrace {

namespace {

constexpr std::uint64_t kMaxPrefixTable = std::uint64_t{1} << 20;

// Achievable outputs of a window given the first j cells in column-major
// order (west column first, bottom to top), as bitmasks over symbols.
class PrefixTables {
 public:
  explicit PrefixTables(const LocalRule& rule) : A_(std::uint64_t(rule.alphabet_size())), cells_(rule.window_cells()) {
    if (!rule.materialized() || rule.neighborhood_count() > kMaxPrefixTable || rule.alphabet_size() > 64) return;
    const int s = rule.side();
    tables_.resize(cells_ + 1);
    tables_[cells_].resize(rule.neighborhood_count());
    std::vector<std::uint64_t> weight(cells_);
    for (std::size_t t = 0; t < cells_; ++t) {
      const std::size_t col = t / std::size_t(s), row = t % std::size_t(s);
      std::uint64_t w = 1;
      for (std::size_t e = 0; e < row * std::size_t(s) + col; ++e) w *= A_;
      weight[t] = w;
    }
    for (std::uint64_t pv = 0; pv < rule.neighborhood_count(); ++pv) {
      std::uint64_t rest = pv, code = 0;
      for (std::size_t t = 0; t < cells_; ++t) {
        code += (rest % A_) * weight[t];
        rest /= A_;
      }
      tables_[cells_][pv] = std::uint64_t{1} << rule.apply_code(code);
    }
    for (std::size_t j = cells_; j-- > 0;) {
      const std::uint64_t size = tables_[j + 1].size() / A_;
      std::uint64_t stride = size;
      tables_[j].assign(size, 0);
      for (std::uint64_t pv = 0; pv < size; ++pv)
        for (std::uint64_t v = 0; v < A_; ++v) tables_[j][pv] |= tables_[j + 1][pv + v * stride];
    }
  }

  bool available() const { return !tables_.empty(); }
  bool feasible(std::size_t assigned, std::uint64_t prefix, Symbol target) const {
    return (tables_[assigned][prefix] >> target) & 1u;
  }

 private:
  std::uint64_t A_;
  std::size_t cells_;
  std::vector<std::vector<std::uint64_t>> tables_;
};

// Backtracking over the cells of `domain` in column-major order. `fixed`
// pins cells (-1 = free); `target` constrains the windows centred on its
// cells (-1 = unconstrained).
class WindowSearch {
 public:
  WindowSearch(const LocalRule& rule, Rect domain, std::vector<int> fixed, std::vector<int> target)
      : rule_(rule), domain_(domain), fixed_(std::move(fixed)), target_(std::move(target)), prefix_(rule) {
    const int r = rule.radius(), s = rule.side();
    const std::size_t cells = std::size_t(domain.area());
    touching_.resize(cells);
    cm_.assign(cells, 0);
    rm_.assign(cells, 0);
    std::vector<std::uint64_t> powers(rule.window_cells(), 1);
    for (std::size_t i = 1; i < powers.size(); ++i) powers[i] = powers[i - 1] * std::uint64_t(rule.alphabet_size());
    for (int cx = domain.x + r; cx < domain.x_end() - r; ++cx)
      for (int cy = domain.y + r; cy < domain.y_end() - r; ++cy) {
        const std::size_t c = index(cx, cy);
        if (target_[c] < 0) continue;
        for (int i = 0; i < s; ++i)
          for (int j = 0; j < s; ++j) {
            const std::size_t t = std::size_t(i * s + j);
            touching_[index(cx - r + i, cy - r + j)].push_back(
                Touch{c, t, powers[t], powers[std::size_t(j * s + i)], t + 1 == rule.window_cells()});
          }
      }
    order_.reserve(cells);
    for (int x = domain.x; x < domain.x_end(); ++x)
      for (int y = domain.y; y < domain.y_end(); ++y) order_.push_back(index(x, y));
  }

  SearchOutcome run(const SearchBudget& budget) {
    const auto start = std::chrono::steady_clock::now();
    SearchOutcome out;
    const std::size_t K = order_.size();
    const int A = rule_.alphabet_size();
    std::vector<int> next(K + 1, 0);
    std::vector<Symbol> value(K, 0);
    std::size_t i = 0;
    bool done = false;
    while (!done) {
      if (i == K) {
        out.verdict = Verdict::Sat;
        Pattern w(domain_);
        for (std::size_t k = 0; k < K; ++k) w.cells()[order_[k]] = value[k];
        out.witness = std::move(w);
        break;
      }
      const std::size_t cell = order_[i];
      bool advanced = false;
      while (next[i] < A) {
        const int v = next[i]++;
        if (fixed_[cell] >= 0 && fixed_[cell] != v) continue;
        if (++out.stats.nodes > budget.max_nodes) {
          out.verdict = Verdict::Indeterminate;
          done = true;
          break;
        }
        value[i] = Symbol(v);
        if (assign(cell, Symbol(v))) {
          advanced = true;
          break;
        }
        unassign(cell, Symbol(v));
      }
      if (done) break;
      if (advanced) {
        next[++i] = 0;
      } else {
        if (i == 0) {
          out.verdict = Verdict::Unsat;
          break;
        }
        --i;
        unassign(order_[i], value[i]);
      }
    }
    out.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
  }

 private:
  struct Touch {
    std::size_t center;
    std::size_t position;  // column-major index inside the window
    std::uint64_t cm_weight;
    std::uint64_t rm_weight;
    bool last;
  };

  std::size_t index(int x, int y) const {
    return std::size_t(y - domain_.y) * std::size_t(domain_.width) + std::size_t(x - domain_.x);
  }

  bool assign(std::size_t cell, Symbol v) {
    bool ok = true;
    for (const Touch& t : touching_[cell]) {
      cm_[t.center] += v * t.cm_weight;
      rm_[t.center] += v * t.rm_weight;
      if (!ok) continue;
      const Symbol want = Symbol(target_[t.center]);
      if (t.last) ok = rule_.apply_code(rm_[t.center]) == want;
      else if (prefix_.available()) ok = prefix_.feasible(t.position + 1, cm_[t.center], want);
    }
    return ok;
  }

  void unassign(std::size_t cell, Symbol v) {
    for (const Touch& t : touching_[cell]) {
      cm_[t.center] -= v * t.cm_weight;
      rm_[t.center] -= v * t.rm_weight;
    }
  }

  const LocalRule& rule_;
  Rect domain_;
  std::vector<int> fixed_, target_;
  PrefixTables prefix_;
  std::vector<std::vector<Touch>> touching_;
  std::vector<std::uint64_t> cm_, rm_;
  std::vector<std::size_t> order_;
};

std::vector<int> targets_on(const Rect& domain, const Pattern& target) {
  std::vector<int> t(std::size_t(domain.area()), -1);
  for (int y = target.domain().y; y < target.domain().y_end(); ++y)
    for (int x = target.domain().x; x < target.domain().x_end(); ++x)
      t[std::size_t(y - domain.y) * std::size_t(domain.width) + std::size_t(x - domain.x)] = target.at(x, y);
  return t;
}

// Output 1 exactly on the members of f.
LocalRule indicator_rule(const ForbiddenSet& f) {
  const int A = f.alphabet_size();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < std::size_t(f.side() * f.side()) && count <= kMaxPrefixTable; ++i) count *= std::uint64_t(A);
  if (count <= kMaxPrefixTable) {
    std::vector<Symbol> table(count);
    for (std::uint64_t code = 0; code < count; ++code) table[code] = f.contains_code(code) ? 1 : 0;
    return LocalRule::from_table(A, f.radius(), std::move(table));
  }
  return LocalRule::from_function(A, f.radius(), [f, A](std::span<const Symbol> w) {
    std::uint64_t code = 0, weight = 1;
    for (Symbol v : w) {
      code += v * weight;
      weight *= std::uint64_t(A);
    }
    return Symbol(f.contains_code(code) ? 1 : 0);
  });
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Sat: return "SAT";
    case Verdict::Unsat: return "UNSAT";
    case Verdict::Indeterminate: return "INDETERMINATE";
  }
  return "?";
}

SearchOutcome find_preimage(const PreimageProblem& problem, const SearchBudget& budget) {
  const Pattern& target = problem.target;
  if (target.empty()) throw std::invalid_argument("find_preimage needs a non-empty target");
  if (target.max_symbol() >= problem.rule.alphabet_size())
    throw std::invalid_argument("target uses symbols outside the rule's alphabet");
  const Rect domain = problem.search_domain();
  WindowSearch search(problem.rule, domain, std::vector<int>(std::size_t(domain.area()), -1), targets_on(domain, target));
  SearchOutcome out = search.run(budget);
  if (out.witness && !(apply_rule(problem.rule, *out.witness) == target))
    throw std::logic_error("preimage search produced an invalid witness");
  return out;
}

bool is_orphan(const LocalRule& rule, const Pattern& target, const SearchBudget& budget) {
  const SearchOutcome out = find_preimage(rule, target, budget);
  if (out.verdict == Verdict::Indeterminate)
    throw BudgetExceeded("preimage search exceeded " + std::to_string(budget.max_nodes) + " nodes");
  return out.verdict == Verdict::Unsat;
}

bool is_finite_goe(const LocalRule& rule, const Pattern& p, const TraceConstants& constants,
                   const SearchBudget& budget) {
  require_verified(constants, rule);
  return is_orphan(rule, pad0(p, constants.c), budget);
}

std::string to_dimacs(const PreimageProblem& problem) {
  const LocalRule& rule = problem.rule;
  if (rule.alphabet_size() != 2) throw std::invalid_argument("DIMACS export needs a binary alphabet");
  const Rect d = problem.search_domain();
  const int r = rule.radius(), s = rule.side();
  const Pattern& target = problem.target;
  std::vector<std::vector<int>> clauses;
  for (int cy = target.domain().y; cy < target.domain().y_end(); ++cy)
    for (int cx = target.domain().x; cx < target.domain().x_end(); ++cx) {
      const Symbol want = target.at(cx, cy);
      for (std::uint64_t code = 0; code < rule.neighborhood_count(); ++code) {
        if (rule.apply_code(code) == want) continue;
        std::vector<int> clause;
        for (int j = 0; j < s; ++j)
          for (int i = 0; i < s; ++i) {
            const int x = cx - r + i, y = cy - r + j;
            const int var = 1 + (y - d.y) * d.width + (x - d.x);
            const bool one = (code >> (j * s + i)) & 1u;
            clause.push_back(one ? -var : var);
          }
        clauses.push_back(std::move(clause));
      }
    }
  std::ostringstream out;
  out << "c lifetrace preimage CNF\n";
  out << "c domain x0=" << d.x << " y0=" << d.y << " W=" << d.width << " H=" << d.height << "\n";
  out << "c variable 1 + (y - y0) * W + (x - x0) is true iff cell (x, y) is 1\n";
  out << "p cnf " << d.area() << " " << clauses.size() << "\n";
  for (const auto& c : clauses) {
    for (int lit : c) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

Pattern decode_dimacs_model(const PreimageProblem& problem, const std::string& model) {
  const Rect d = problem.search_domain();
  Pattern p(d);
  std::istringstream in(model);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c' || line[0] == 's') continue;
    std::istringstream ls(line[0] == 'v' ? line.substr(1) : line);
    long lit;
    while (ls >> lit) {
      if (lit > d.area() || -lit > d.area())
        throw std::invalid_argument("model literal " + std::to_string(lit) + " names no variable of the problem");
      if (lit <= 0) continue;
      const long v = lit - 1;
      p.set_local(int(v % d.width), int(v / d.width), 1);
    }
  }
  return p;
}

Side parse_side(const std::string& s) {
  if (s == "N" || s == "north") return Side::North;
  if (s == "S" || s == "south") return Side::South;
  if (s == "E" || s == "east") return Side::East;
  if (s == "W" || s == "west") return Side::West;
  throw std::invalid_argument("unknown side '" + s + "' (expected N, S, E or W)");
}

std::string to_string(Side s) {
  switch (s) {
    case Side::North: return "N";
    case Side::South: return "S";
    case Side::East: return "E";
    case Side::West: return "W";
  }
  return "?";
}

int boundary_extension_probe(const LocalRule& rule, const Pattern& witness, Side side, int depth,
                             const SearchBudget& budget) {
  if (depth < 0) throw std::invalid_argument("probe depth must be non-negative");
  // Turn the requested side to the north; clockwise turns move west to north.
  const int turns = side == Side::North ? 0 : side == Side::West ? 1 : side == Side::South ? 2 : 3;
  const LocalRule eval = indicator_rule(derive_forbidden(rule).rotated(turns));
  const Pattern w = rotate(witness, turns);
  const int r = rule.radius();
  const Rect base = w.domain();
  if (base.width < 2 * r + 1 || base.height < 2 * r + 1) throw std::invalid_argument("witness too small to probe");
  int best = 0;
  for (int d = 1; d <= depth; ++d) {
    const Rect domain{base.x, base.y, base.width, base.height + d};
    std::vector<int> fixed(std::size_t(domain.area()), -1), target(std::size_t(domain.area()), -1);
    for (int y = base.y; y < base.y_end(); ++y)
      for (int x = base.x; x < base.x_end(); ++x)
        fixed[std::size_t(y - domain.y) * std::size_t(domain.width) + std::size_t(x - domain.x)] = w.at(x, y);
    for (int y = base.y_end() - r; y < domain.y_end() - r; ++y)
      for (int x = domain.x + r; x < domain.x_end() - r; ++x)
        target[std::size_t(y - domain.y) * std::size_t(domain.width) + std::size_t(x - domain.x)] = 0;
    WindowSearch search(eval, domain, std::move(fixed), std::move(target));
    const SearchOutcome out = search.run(budget);
    if (out.verdict == Verdict::Indeterminate)
      throw BudgetExceeded("boundary probe exceeded " + std::to_string(budget.max_nodes) + " nodes");
    if (out.verdict == Verdict::Unsat) break;
    best = d;
  }
  return best;
}

}  // namespace lifetrace
