#pragma once

// Exhaustive preimage search for rectangular patterns.
//
// The preimage of a target on [x, x+M) x [y, y+N) lives on the dilation
// [x-r, x+M+r) x [y-r, y+N+r). Cells are assigned column by column, west to
// east, bottom to top inside a column, trying symbols in increasing order.
// After every assignment each window containing the cell is tested: complete
// windows must produce the target symbol, and for small rules partially
// assigned windows must still be able to. Pruning never removes a solution,
// so the first witness found is the first one in this order.

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lifetrace/ca.hpp"
#include "lifetrace/constants.hpp"

namespace lifetrace {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct SearchBudget {
  std::uint64_t max_nodes = kDefaultNodeBudget;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Verdict { Sat, Unsat, Indeterminate };
std::string to_string(Verdict v);

struct SearchStats {
  std::uint64_t nodes = 0;
  double seconds = 0;
};

struct SearchOutcome {
  Verdict verdict = Verdict::Indeterminate;
  // On Sat: a pattern on the search domain whose image is the target.
  std::optional<Pattern> witness;
  SearchStats stats;
};

struct PreimageProblem {
  LocalRule rule;
  Pattern target;

  Rect search_domain() const { return target.domain().dilated(rule.radius()); }
};

SearchOutcome find_preimage(const PreimageProblem& problem, const SearchBudget& budget = {});
inline SearchOutcome find_preimage(const LocalRule& rule, const Pattern& target, const SearchBudget& budget = {}) {
  return find_preimage(PreimageProblem{rule, target}, budget);
}

// Throws BudgetExceeded when the search is inconclusive.
bool is_orphan(const LocalRule& rule, const Pattern& target, const SearchBudget& budget = {});

// Is conf_0(p) a Garden of Eden? Decided as is_orphan(pad0(p, c)); the
// constants must be verified for `rule`.
bool is_finite_goe(const LocalRule& rule, const Pattern& p, const TraceConstants& constants,
                   const SearchBudget& budget = {});

// Blocked-assignment CNF for a binary rule: one variable per search-domain
// cell, numbered 1 + (y - y0) * W + (x - x0) from the south-west corner
// (x0, y0) of the W-wide domain; for each target cell one clause per
// neighborhood whose image differs from the target symbol.
std::string to_dimacs(const PreimageProblem& problem);

// Reads a solver model ("v" lines or bare literals) back into a pattern on
// the search domain. Variables missing from the model are 0; a literal
// outside the variable range is an error.
Pattern decode_dimacs_model(const PreimageProblem& problem, const std::string& model);

enum class Side { North, South, East, West };
Side parse_side(const std::string& s);
std::string to_string(Side s);

// Largest d <= depth such that `witness` extends by d rows (or columns) on
// the given side with every newly determined image cell equal to 0. Each
// depth is decided by exhaustive search.
int boundary_extension_probe(const LocalRule& rule, const Pattern& witness, Side side, int depth,
                             const SearchBudget& budget = {});

}  // namespace lifetrace
