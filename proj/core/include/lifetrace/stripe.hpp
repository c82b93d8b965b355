#pragma once

// Stripe automata: finite automata whose letters are columns of a horizontal
// stripe. A height-h column over alphabet A is packed little-endian, the
// bottom cell being the least significant digit, so for binary height-2
// columns the letter is bottom + 2 * top.
//
// Two families of constructions live here.
//
//  * Direct ones follow the definitions literally: the NFA guesses full-height
//    columns and remembers the last 2r of them. They are simple and serve as
//    cross-checks, but their state count grows like |A|^(2r * height).
//
//  * Layered ones add one row at a time to finite rectangles and minimize
//    after every row. Subshift languages are recovered afterwards with
//    automata::extendable_core: by compactness, the bi-infinite stripes all
//    of whose factors extend upward are exactly the ones that extend upward.

#include <cstdint>
#include <span>
#include <vector>

#include "lifetrace/automata.hpp"
#include "lifetrace/ca.hpp"

namespace lifetrace {

class StripeAlphabet {
 public:
  StripeAlphabet(int alphabet_size, int height);

  int alphabet_size() const { return alphabet_size_; }
  int height() const { return height_; }
  std::uint32_t size() const { return size_; }

  // cells[0] is the bottom cell.
  automata::Letter encode(std::span<const Symbol> cells) const;
  std::vector<Symbol> decode(automata::Letter letter) const;
  Symbol cell(automata::Letter letter, int row) const;

  // Stripe pattern (rows 0..height-1, columns 0..len-1) to word and back.
  automata::Word word_of(const Pattern& stripe) const;
  Pattern pattern_of(const automata::Word& word) const;

 private:
  int alphabet_size_;
  int height_;
  std::uint32_t size_;
  std::vector<std::uint32_t> powers_;
};

// Membership of (2r+1)-column windows given as column codes of height 2r+1.
class WindowTable {
 public:
  explicit WindowTable(const ForbiddenSet& f);

  int radius() const { return radius_; }
  int side() const { return 2 * radius_ + 1; }
  int alphabet_size() const { return alphabet_size_; }
  // Number of height-(2r+1) columns.
  std::uint32_t column_count() const { return column_count_; }

  // cols[i] is the i-th column from the west.
  bool forbidden(std::span<const std::uint32_t> cols) const {
    std::uint64_t idx = 0;
    for (std::size_t i = cols.size(); i-- > 0;) idx = idx * column_count_ + cols[i];
    return table_[idx] != 0;
  }
  bool forbidden_index(std::uint64_t idx) const { return table_[idx] != 0; }

 private:
  int radius_;
  int alphabet_size_;
  std::uint32_t column_count_;
  std::vector<std::uint8_t> table_;
};

// Finite words: height-n rectangles with no forbidden window inside. Every
// word is accepted when n = 2r.
automata::Dfa stripe_rectangles(const ForbiddenSet& f, int n, const automata::Limits& limits = {});

// One layer, finite-word version: the height-n words s such that some word s'
// of the same length accepted by k sits one row higher with no forbidden
// window inside the (n+1)-row rectangle. The subset construction keeps only
// the maximal elements of each subset under right-language inclusion of k's
// states, which leaves the language unchanged and keeps the frontier small.
automata::Dfa pre_image_finite(const automata::Dfa& k, const ForbiddenSet& f, int n,
                               const automata::Limits& limits = {});

// Is every word of L(s) in the language of pre_image_finite(k, f, n)? Decided
// lazily without building the pre-image automaton: a breadth-first search over
// (state of s, pruned subset) that discards a pair when the same state was
// reached earlier with a subset contained in it. The counterexample is a
// shortest one. `limits` caps the number of search nodes.
automata::InclusionResult includes_in_pre_image(const automata::Dfa& s, const automata::Dfa& k, const ForbiddenSet& f,
                                                int n, const automata::Limits& limits = {});

// Finite words: height-n projections (rows i mod p, i < n) of height-p
// rectangles whose vertical p-periodic extension has no forbidden window
// inside.
automata::Dfa periodic_rectangles(const ForbiddenSet& f, int n, int p, const automata::Limits& limits = {});

// Direct finite-word automaton for height-n words extendable upward by `ell`
// rows: letters guessed as height-(n+ell) columns, states are histories of up
// to 2r columns, every state initial and final.
automata::Nfa direct_extension_nfa(const ForbiddenSet& f, int n, int ell, const automata::Limits& limits = {});

// Direct automaton for stripes extendable to a half-plane that is vertically
// p-periodic above row n+k. Letters are guessed height-(n+k+p) columns; windows
// whose rows run past the top are wrapped into the periodic band. States are
// histories of full columns; every state initial and final. Untrimmed.
automata::Nfa direct_periodic_nfa(const ForbiddenSet& f, int n, int k, int p, const automata::Limits& limits = {});

}  // namespace lifetrace
