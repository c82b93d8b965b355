#pragma once

// One-sided trace languages of the SFT defined by a forbidden set F, read as
// languages of height-n stripes (see stripe.hpp for the letter encoding).
//
//   L_{n,l}   finite height-n words that extend upward by l rows
//   S_{n,l}   the subshift of bi-infinite stripes that extend upward by l rows
//   P_{n,k,p} stripes that extend to an upper half-plane whose rows above n+k
//             are vertically p-periodic
//
// Every check is done for the four rotations of F (direction i examines the
// rotation by i clockwise quarter turns). Rotations that produce an already
// examined forbidden set reuse its result.

#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lifetrace/automata.hpp"
#include "lifetrace/ca.hpp"
#include "lifetrace/stripe.hpp"

namespace lifetrace {

class StabilityNotEstablished : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Direct NFA for L_{n,l}: guessed height-(n+l) columns, every state initial and final.
automata::Nfa build_L_automaton(const ForbiddenSet& f, int n, int ell, const automata::Limits& limits = {});

// Minimal DFA for L_{n,l}, built one row at a time.
automata::Dfa build_L_language(const ForbiddenSet& f, int n, int ell, const automata::Limits& limits = {});

// Minimal DFA for the language of S_{n,l}.
automata::Dfa build_S_subshift(const ForbiddenSet& f, int n, int ell, const automata::Limits& limits = {});
// Same language from the direct NFA: trim, determinize, minimize. Only
// practical for small l; used as an independent cross-check.
automata::Dfa build_S_subshift_direct(const ForbiddenSet& f, int n, int ell, const automata::Limits& limits = {});

// Language of the height-n stripes sitting one row below the bottom of P's
// upper part, i.e. the subshift X with L(P_{n,k,p}) = factors of the
// one-row pre-image of L(X). Depends on k only through the number of layers.
automata::Dfa build_P_base(const ForbiddenSet& f, int n, int k, int p, const automata::Limits& limits = {});
// Minimal DFA for the language of P_{n,k,p}.
automata::Dfa build_P_automaton(const ForbiddenSet& f, int n, int k, int p, const automata::Limits& limits = {});
// Same language from direct_periodic_nfa; small parameters only.
automata::Dfa build_P_automaton_direct(const ForbiddenSet& f, int n, int k, int p, const automata::Limits& limits = {});

// Is L(s) contained in L(P_{n,k,p}) when s is the language of a subshift?
// Decided without materializing P (see includes_in_pre_image).
automata::InclusionResult subshift_in_P(const automata::Dfa& s, const ForbiddenSet& f, int n, int k, int p,
                                        const automata::Limits& limits = {});

// Lazily built L_{n,l} and S_{n,l} for one forbidden set. References stay
// valid while the ladder lives.
class TraceLadder {
 public:
  TraceLadder(ForbiddenSet f, int n, automata::Limits limits = {});

  const ForbiddenSet& forbidden() const { return f_; }
  int height() const { return n_; }
  const automata::Dfa& L(int ell);
  const automata::Dfa& S(int ell);
  // Base languages for P, cached by period (the k-th entry serves P_{n,k,p}).
  const automata::Dfa& P_base(int k, int p);

 private:
  ForbiddenSet f_;
  int n_;
  automata::Limits limits_;
  std::deque<automata::Dfa> L_, S_;
  std::map<int, std::deque<automata::Dfa>> bases_;
};

// Distinct rotations of f: index i holds the rotation by i quarter turns and
// same_as[i] the first j <= i with an identical rotated set.
struct RotationClasses {
  std::array<ForbiddenSet, 4> rotated;
  std::array<int, 4> same_as{};
};
RotationClasses rotation_classes(const ForbiddenSet& f);

struct LevelReport {
  int ell = 0;
  std::size_t L_states = 0;
  std::size_t S_states = 0;
  std::string S_hash;
  // S_{n,l} = S_{n,l+1}? Otherwise the shortest word of S_{n,l} \ S_{n,l+1}.
  bool equals_next = false;
  std::optional<automata::Word> separating;
};

struct DirectionReport {
  int rotation = 0;
  int same_as = 0;
  std::optional<int> stable_at;
  std::vector<LevelReport> levels;
};

struct StabilityResult {
  int n = 0;
  int ell_max = 0;
  // Smallest l with S_{n,l} = S_{n,l+1} in every direction.
  std::optional<int> stable_at;
  std::array<DirectionReport, 4> directions;
  // The trace T_n of each direction (S at the stable level), when stable.
  std::array<automata::Dfa, 4> traces;
};

StabilityResult check_stable(const ForbiddenSet& f, int n, int ell_max = 8, const automata::Limits& limits = {});

struct PeriodizabilityDirection {
  int rotation = 0;
  int same_as = 0;
  bool holds = false;
  std::optional<automata::Word> witness;  // in T_n but not in P_{n,k,p}
  std::size_t base_states = 0;
};

struct PeriodizabilityResult {
  int n = 0, ell = 0, k = 0, p = 1;
  bool holds = false;
  std::array<PeriodizabilityDirection, 4> directions;
};

// Uses the traces of a successful stability check.
PeriodizabilityResult check_periodizable(const ForbiddenSet& f, const StabilityResult& stability, int k, int p,
                                         const automata::Limits& limits = {});
// Establishes S_{n,l} = S_{n,l+1} in every direction first; throws
// StabilityNotEstablished otherwise.
PeriodizabilityResult check_periodizable(const ForbiddenSet& f, int n, int ell, int k, int p,
                                         const automata::Limits& limits = {});

struct ExtensionConstantResult {
  // Smallest C with ext_language(L_{n,l}, C) contained in L(S_{n,l}) in every direction.
  std::optional<std::size_t> C;
  std::array<std::optional<std::size_t>, 4> per_direction;
  std::size_t C_max = 0;
};

// C_max defaults to the state count of the minimal automaton for L_{n,l}
// (without its rejecting sink) plus one.
ExtensionConstantResult min_extension_constant(const ForbiddenSet& f, int n, int ell,
                                               std::optional<std::size_t> C_max = std::nullopt,
                                               const automata::Limits& limits = {});

enum class SideCells {
  Free,  // cells beyond the window's columns are unconstrained
  Zero,  // cells beyond the window's columns are 0 in every row
};

struct ForcedStep {
  // Every row that can be appended below the current pattern, in
  // lexicographic order (west cell most significant).
  std::vector<std::vector<Symbol>> rows;
  bool unique() const { return rows.size() == 1; }
};

// Appends rows below `window` one at a time. A candidate row is kept when no
// window of F occurs among the cells it completes. The walk continues while
// the continuation is unique and stops after `steps` rows or at the first
// step without a unique continuation (that step is still reported).
std::vector<ForcedStep> forced_rows(const ForbiddenSet& f, const Pattern& window, int steps,
                                    SideCells sides = SideCells::Free);

// The height-2 pattern P_n (width 19 + 2n) whose column continuations in a
// Life preimage of the zero configuration are forced with vertical period 3.
Pattern make_Pn_pattern(int n);

// The 30-column stripe separating S_{2,3} from S_{2,4} for Life, as a
// height-2 pattern.
Pattern life_separating_word();

}  // namespace lifetrace
