#pragma once

// The constant bundle that downstream modules consume: stripe height n,
// stability level l, preperiod k, period p, extension constant C, padding
// c = C + l, and the period bounds used by the semilinear construction.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lifetrace/automata.hpp"
#include "lifetrace/ca.hpp"
#include "lifetrace/traces.hpp"

namespace lifetrace {

// Direction i refers to the forbidden set rotated by i clockwise quarter
// turns, which governs the side that the rotation brings to the north:
// 0 north, 1 west, 2 south, 3 east.
struct DirectionConstants {
  int ell = 0;
  int k = 0;
  int p = 1;
  std::size_t C = 0;
};

struct Provenance {
  // Set only when every constant was established by the trace checks.
  bool verified = false;
  std::string rule_fingerprint;
  std::string method;
};

struct TraceConstants {
  int alphabet_size = 2;
  int radius = 1;
  int n = 2;
  int ell = 0;
  // Common preperiod and period for all directions (max of k, lcm of p).
  int k = 0;
  int p = 1;
  std::size_t C = 0;
  int c = 0;
  // p * |A|^(2n(k+p)) and the per-side bound p * |A|^(n(k+p)); saturating.
  std::uint64_t q = 0;
  std::uint64_t q_refined = 0;
  std::array<DirectionConstants, 4> directions{};
  Provenance provenance;

  // Padding needed on each side. Sides follow the direction numbering.
  int padding(int direction) const;
};

// Recomputes c, q and q_refined from the other fields.
void finalize_constants(TraceConstants& t);

// The constants for Life: n = 2, l = 4, k = 3, p = 3, C = 0, c = 4. They are
// established by compute_trace_constants and checked by the acceptance suite.
TraceConstants life_constants();

// Throws std::invalid_argument unless `t` is verified for this rule.
void require_verified(const TraceConstants& t, const LocalRule& rule);

struct ConstantsOptions {
  int ell_max = 8;
  int k_max = 6;
  int p_max = 6;
  std::optional<std::size_t> C_max;
  automata::Limits limits;
};

enum class SweepOutcome { Holds, Fails, ImpliedFails, ImpliedHolds };

struct SweepEntry {
  int direction = 0;
  int k = 0;
  int p = 1;
  SweepOutcome outcome = SweepOutcome::Fails;
  std::optional<automata::Word> witness;
  std::optional<std::pair<int, int>> implied_by;
};

struct ConstantsReport {
  bool complete = false;
  std::string failure;
  StabilityResult stability;
  ExtensionConstantResult extension;
  std::vector<SweepEntry> sweep;
  TraceConstants constants;
};

// Candidates (k, p) are ranked by max(k, p), then k + p, then p. A failure at
// (k, p) rules out every (k', p') with k' <= k and p' dividing p; a success
// carries over to k' >= k and multiples of p. Within a rank level the largest
// candidates are examined first so that failures prune the rest.
ConstantsReport compute_trace_constants(const LocalRule& rule, const ConstantsOptions& options = {});

}  // namespace lifetrace
