#pragma once

// Finite automata over small indexed alphabets.
//
// Conventions:
//  * Letters are 0..alphabet_size-1. Words compare lexicographically by letter
//    index, and every witness returned here is the lexicographically least
//    among the shortest candidates.
//  * The empty word is accepted iff an initial state is final. The languages
//    built by the trace code are factor-closed and always contain it.
//  * DFAs are total; a rejecting sink is materialized when needed.
//  * Size limits are explicit. Exceeding one throws CapacityError, nothing is
//    silently truncated.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lifetrace::automata {

using State = std::uint32_t;
using Letter = std::uint32_t;
using Word = std::vector<Letter>;

inline constexpr std::size_t kDefaultMaxStates = std::size_t{1} << 22;

struct Limits {
  std::size_t max_states = kDefaultMaxStates;
};

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AlphabetMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Nfa {
 public:
  struct Edge {
    Letter letter;
    State target;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
  };

  Nfa() = default;
  explicit Nfa(std::size_t alphabet_size) : alphabet_size_(alphabet_size) {}

  std::size_t alphabet_size() const { return alphabet_size_; }
  std::size_t num_states() const { return edges_.size(); }
  std::size_t num_transitions() const;

  State add_state(bool initial = false, bool final = false);
  void add_transition(State from, Letter letter, State to);
  void set_initial(State s, bool v = true) { initial_.at(s) = v; }
  void set_final(State s, bool v = true) { final_.at(s) = v; }
  // Sort and deduplicate adjacency lists. Called by algorithms that need it.
  void normalize();

  bool is_initial(State s) const { return initial_[s]; }
  bool is_final(State s) const { return final_[s]; }
  const std::vector<Edge>& edges(State s) const { return edges_[s]; }
  std::vector<State> initial_states() const;

  // Every state initial and final: the canonical shape for factor-closed languages.
  bool all_initial_final() const;
  void make_all_initial_final();

  bool accepts(const Word& w) const;

 private:
  std::size_t alphabet_size_ = 0;
  std::vector<std::vector<Edge>> edges_;
  std::vector<bool> initial_;
  std::vector<bool> final_;
};

class Dfa {
 public:
  Dfa() = default;
  Dfa(std::size_t alphabet_size, std::size_t num_states);

  static Dfa universal(std::size_t alphabet_size);
  static Dfa empty_language(std::size_t alphabet_size);
  // Accepts exactly the given word.
  static Dfa singleton(std::size_t alphabet_size, const Word& w);

  std::size_t alphabet_size() const { return alphabet_size_; }
  std::size_t num_states() const { return final_.size(); }
  State initial() const { return initial_; }
  State next(State s, Letter a) const { return delta_[std::size_t(s) * alphabet_size_ + a]; }
  bool is_final(State s) const { return final_[s]; }
  std::size_t num_final() const;

  void set_initial(State s) { initial_ = s; }
  void set_next(State s, Letter a, State t) { delta_[std::size_t(s) * alphabet_size_ + a] = t; }
  void set_final(State s, bool v = true) { final_[s] = v; }

  // Set only by minimize(): no two states equivalent, all reachable.
  bool canonical_minimal() const { return minimal_; }
  void mark_minimal(bool v) { minimal_ = v; }

  bool accepts(const Word& w) const;
  State run(State from, const Word& w) const;
  // Non-final states with no path to a final state.
  std::vector<bool> dead_states() const;

  // Structural equality of the representation (use after minimize() for canonical comparison).
  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  std::size_t alphabet_size_ = 0;
  std::vector<State> delta_;
  std::vector<bool> final_;
  State initial_ = 0;
  bool minimal_ = false;
};

Nfa to_nfa(const Dfa& d);
Nfa reverse(const Nfa& a);

// Subset construction over reachable subsets.
Dfa determinize(const Nfa& a, const Limits& limits = {});

// Canonical minimal DFA: unreachable states dropped, Hopcroft partition
// refinement, then states renumbered in breadth-first order from the initial
// state with letters in increasing order.
Dfa minimize(const Dfa& d);

Dfa complement(const Dfa& d);
Dfa intersect(const Dfa& a, const Dfa& b);
Dfa unite(const Dfa& a, const Dfa& b);
// L(a) \ L(b)
Dfa difference(const Dfa& a, const Dfa& b);

// Shortest (then lexicographically least) accepted word, if any.
std::optional<Word> shortest_accepted(const Dfa& d);

struct EmptinessResult {
  bool empty = true;
  std::optional<Word> witness;
};
EmptinessResult is_empty(const Dfa& d);

struct InclusionResult {
  bool holds = true;
  // A word in the smaller language missing from the larger one.
  std::optional<Word> counterexample;
};
// Does L(a) include L(b)? The counterexample, if any, lies in L(b) \ L(a).
InclusionResult includes(const Dfa& a, const Dfa& b);

struct EquivalenceResult {
  bool equal = true;
  // Shortest word in the symmetric difference.
  std::optional<Word> counterexample;
};
EquivalenceResult equivalent(const Dfa& a, const Dfa& b);

// Keep only states lying on bi-infinite paths (iteratively drop states with no
// incoming or no outgoing transition), then mark every remaining state initial
// and final. Read as a factor-closed language, the result describes the
// largest subshift whose language is contained in the input's.
Nfa trim_biextendable(const Nfa& a);

// Two-sided quotient by length-C words: { w : exists u, v with |u| = |v| = C, uwv in L }.
// Computed as C rounds of one_step_extension, minimizing in between.
Dfa ext_language(const Dfa& d, std::size_t C, const Limits& limits = {});

// { w : a w b in L for some letters a, b }, minimal.
Dfa one_step_extension(const Dfa& d, const Limits& limits = {});

// Language of the largest subshift whose language is contained in L(d), for
// factor-closed L(d): one_step_extension iterated to its fixpoint. The loop
// stops after at most (states of the minimal DFA) + 1 rounds.
struct CoreResult {
  Dfa core;
  std::size_t rounds = 0;
};
CoreResult extendable_core(const Dfa& d, const Limits& limits = {});

// Right-language inclusion between states: result[x * n + y] is true iff every
// word accepted from x is accepted from y.
std::vector<bool> state_inclusion(const Dfa& d);

struct UniversalityResult {
  bool holds = true;
  // Lexicographically least among the shortest rejected words of length <= m.
  std::optional<Word> first_missing;
};
UniversalityResult universal_up_to_length(const Dfa& d, std::size_t m);

// Number of accepted words of each length 0..max_length (saturating).
std::vector<std::uint64_t> count_words(const Dfa& d, std::size_t max_length);

// Language fingerprint: hash of count_words up to max_length.
std::string language_hash(const Dfa& d, std::size_t max_length = 8);

}  // namespace lifetrace::automata
