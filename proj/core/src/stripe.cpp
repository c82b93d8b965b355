#include "lifetrace/stripe.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>

namespace lifetrace {

using automata::CapacityError;
using automata::Dfa;
using automata::Letter;
using automata::Limits;
using automata::Nfa;
using automata::State;
using automata::Word;

namespace {

constexpr std::uint64_t kMaxColumnCodes = std::uint64_t{1} << 24;

std::uint64_t checked_pow(std::uint64_t base, int exp, const char* what) {
  std::uint64_t v = 1;
  for (int i = 0; i < exp; ++i) {
    v *= base;
    if (v > kMaxColumnCodes) throw CapacityError(std::string(what) + " alphabet too large");
  }
  return v;
}

std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t v = 1;
  for (int i = 0; i < exp; ++i) v *= base;
  return v;
}

void require_stripe_height(const ForbiddenSet& f, int n) {
  if (n < f.stripe_height())
    throw std::invalid_argument("stripe height " + std::to_string(n) + " is below 2r = " +
                                std::to_string(f.stripe_height()));
}

// For a column of height `height` (packed little-endian), the code of the
// height-(2r+1) sub-column whose bottom is row b, rows mapped through `row_of`.
template <typename RowMap>
std::vector<std::uint32_t> subcolumns(int alphabet, int height, int side, int bottoms, RowMap row_of) {
  const std::uint64_t count = ipow(std::uint64_t(alphabet), height);
  std::vector<std::uint32_t> out(count * std::uint64_t(bottoms));
  std::vector<int> digits(static_cast<std::size_t>(height));
  for (std::uint64_t c = 0; c < count; ++c) {
    std::uint64_t v = c;
    for (int i = 0; i < height; ++i) {
      digits[std::size_t(i)] = int(v % std::uint64_t(alphabet));
      v /= std::uint64_t(alphabet);
    }
    for (int b = 0; b < bottoms; ++b) {
      std::uint32_t code = 0;
      for (int j = side - 1; j >= 0; --j) code = code * std::uint32_t(alphabet) + std::uint32_t(digits[std::size_t(row_of(b + j))]);
      out[c * std::uint64_t(bottoms) + std::uint64_t(b)] = code;
    }
  }
  return out;
}

// NFA over full columns with a history of the last 2r columns. `letter_of`
// maps a full column to its output letter, `bottoms` windows per column
// position are checked through `subs`. When `partial` is set, states with
// shorter histories (the start of a finite word) are included; with
// `all_initial` unset only the empty history is initial, which accepts the
// same language.
Nfa history_nfa(const WindowTable& w, std::uint64_t column_count, std::size_t out_alphabet, int bottoms,
                const std::vector<std::uint32_t>& subs, const std::vector<Letter>& letter_of, bool partial,
                bool all_initial, const Limits& limits) {
  const int hist = w.side() - 1;
  const std::uint64_t full = ipow(column_count, hist);
  std::uint64_t total = full;
  if (partial)
    for (int len = 0; len < hist; ++len) total += ipow(column_count, len);
  if (total > limits.max_states) throw CapacityError("stripe automaton needs " + std::to_string(total) + " states");

  // State layout: [partial histories by length][full histories]; a history
  // is packed with the oldest column least significant.
  std::vector<std::uint64_t> offset(std::size_t(hist) + 1, 0);
  std::uint64_t acc = 0;
  for (int len = 0; len <= hist; ++len) {
    offset[std::size_t(len)] = acc;
    if (len < hist && partial) acc += ipow(column_count, len);
  }
  offset[std::size_t(hist)] = acc;

  Nfa a(out_alphabet);
  for (std::uint64_t s = 0; s < total; ++s) a.add_state(all_initial || s == 0, true);
  const std::uint64_t top_weight = ipow(column_count, hist - 1);
  std::vector<std::uint32_t> window(static_cast<std::size_t>(w.side()));
  std::vector<std::uint64_t> cols(static_cast<std::size_t>(hist));
  for (int len = partial ? 0 : hist; len <= hist; ++len) {
    const std::uint64_t count = ipow(column_count, len);
    for (std::uint64_t h = 0; h < count; ++h) {
      const State from = State(offset[std::size_t(len)] + h);
      std::uint64_t v = h;
      for (int i = 0; i < len; ++i) {
        cols[std::size_t(i)] = v % column_count;
        v /= column_count;
      }
      for (std::uint64_t c = 0; c < column_count; ++c) {
        State to;
        if (len < hist) {
          to = State(offset[std::size_t(len) + 1] + h + c * ipow(column_count, len));
        } else {
          bool bad = false;
          for (int b = 0; b < bottoms && !bad; ++b) {
            for (int i = 0; i < hist; ++i) window[std::size_t(i)] = subs[cols[std::size_t(i)] * std::uint64_t(bottoms) + std::uint64_t(b)];
            window[std::size_t(hist)] = subs[c * std::uint64_t(bottoms) + std::uint64_t(b)];
            bad = w.forbidden(window);
          }
          if (bad) continue;
          to = State(offset[std::size_t(hist)] + (hist == 0 ? 0 : h / column_count + c * top_weight));
        }
        a.add_transition(from, letter_of[c], to);
      }
    }
  }
  a.normalize();
  return a;
}

Dfa minimal_of(const Nfa& a, const Limits& limits) { return automata::minimize(automata::determinize(a, limits)); }

}  // namespace

// ---------------------------------------------------------------- StripeAlphabet

StripeAlphabet::StripeAlphabet(int alphabet_size, int height) : alphabet_size_(alphabet_size), height_(height) {
  if (alphabet_size < 1 || height < 0) throw std::invalid_argument("bad stripe alphabet shape");
  size_ = std::uint32_t(checked_pow(std::uint64_t(alphabet_size), height, "stripe"));
  powers_.resize(std::size_t(height) + 1, 1);
  for (int i = 1; i <= height; ++i) powers_[std::size_t(i)] = powers_[std::size_t(i) - 1] * std::uint32_t(alphabet_size);
}

Letter StripeAlphabet::encode(std::span<const Symbol> cells) const {
  if (int(cells.size()) != height_) throw std::invalid_argument("column height mismatch");
  Letter code = 0;
  for (int i = height_ - 1; i >= 0; --i) code = code * Letter(alphabet_size_) + cells[std::size_t(i)];
  return code;
}

std::vector<Symbol> StripeAlphabet::decode(Letter letter) const {
  std::vector<Symbol> cells(static_cast<std::size_t>(height_));
  for (int i = 0; i < height_; ++i) cells[std::size_t(i)] = cell(letter, i);
  return cells;
}

Symbol StripeAlphabet::cell(Letter letter, int row) const {
  return Symbol((letter / powers_[std::size_t(row)]) % Letter(alphabet_size_));
}

Word StripeAlphabet::word_of(const Pattern& stripe) const {
  if (stripe.height() != height_) throw std::invalid_argument("stripe height mismatch");
  Word w(std::size_t(stripe.width()));
  std::vector<Symbol> col(static_cast<std::size_t>(height_));
  for (int i = 0; i < stripe.width(); ++i) {
    for (int j = 0; j < height_; ++j) col[std::size_t(j)] = stripe.local(i, j);
    w[std::size_t(i)] = encode(col);
  }
  return w;
}

Pattern StripeAlphabet::pattern_of(const Word& word) const {
  Pattern p(Coordinate{0, 0}, int(word.size()), height_);
  for (std::size_t i = 0; i < word.size(); ++i)
    for (int j = 0; j < height_; ++j) p.set_local(int(i), j, cell(word[i], j));
  return p;
}

// ---------------------------------------------------------------- WindowTable

WindowTable::WindowTable(const ForbiddenSet& f) : radius_(f.radius()), alphabet_size_(f.alphabet_size()) {
  const int s = side();
  column_count_ = std::uint32_t(checked_pow(std::uint64_t(alphabet_size_), s, "window column"));
  const std::uint64_t total = ipow(column_count_, s);
  table_.assign(total, 0);
  const std::uint64_t a = std::uint64_t(alphabet_size_);
  std::vector<std::uint64_t> weight(static_cast<std::size_t>(s * s));
  weight[0] = 1;
  for (std::size_t i = 1; i < weight.size(); ++i) weight[i] = weight[i - 1] * a;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t v = idx, code = 0;
    for (int col = 0; col < s; ++col) {
      std::uint64_t c = v % column_count_;
      v /= column_count_;
      for (int row = 0; row < s; ++row) {
        code += (c % a) * weight[std::size_t(row * s + col)];
        c /= a;
      }
    }
    table_[idx] = f.contains_code(code) ? 1 : 0;
  }
}

// ---------------------------------------------------------------- constructions

Dfa stripe_rectangles(const ForbiddenSet& f, int n, const Limits& limits) {
  require_stripe_height(f, n);
  const int side = f.side();
  const std::uint64_t alphabet = checked_pow(std::uint64_t(f.alphabet_size()), n, "stripe");
  if (n < side) return Dfa::universal(alphabet);
  WindowTable w(f);
  const int bottoms = n - side + 1;
  auto subs = subcolumns(f.alphabet_size(), n, side, bottoms, [](int i) { return i; });
  std::vector<Letter> letter_of(alphabet);
  for (std::uint64_t c = 0; c < alphabet; ++c) letter_of[c] = Letter(c);
  return minimal_of(history_nfa(w, alphabet, alphabet, bottoms, subs, letter_of, true, false, limits), limits);
}

namespace {

struct SubsetHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull ^ v.size();
    for (std::uint64_t x : v) h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return std::size_t(h);
  }
};

constexpr std::size_t kMaxInclusionStates = 16384;

// Subsets of the one-layer product automaton: (history length, history of
// low column parts, state of k). Successor subsets are pruned to the states
// with maximal right language inside each history.
class PreImageSubsets {
 public:
  using Subset = std::vector<std::uint64_t>;

  PreImageSubsets(const Dfa& k, const ForbiddenSet& f, int n)
      : k_(k), w_(f), A_(std::uint64_t(f.alphabet_size())), hist_(w_.side() - 1) {
    require_stripe_height(f, n);
    letters_ = ipow(A_, n);
    if (k.alphabet_size() != letters_) throw automata::AlphabetMismatch("pre-image layer: automaton alphabet is not A^n");
    if (!k.canonical_minimal()) throw std::invalid_argument("pre-image layer needs a minimal automaton");
    M_ = w_.column_count();
    histories_ = ipow(M_, hist_);
    top_weight_ = ipow(M_, hist_ - 1);
    N_ = k.num_states();
    dead_ = k.dead_states();
    if (N_ <= kMaxInclusionStates) incl_ = automata::state_inclusion(k);
    low_weight_.assign(std::size_t(hist_) + 1, 1);
    for (int i = 1; i <= hist_; ++i) low_weight_[std::size_t(i)] = low_weight_[std::size_t(i) - 1] * M_;
  }

  std::uint64_t letters() const { return letters_; }
  bool initial_dead() const { return dead_[k_.initial()]; }
  Subset initial() const { return {pack(0, 0, k_.initial())}; }

  bool accepting(const Subset& set) const {
    for (std::uint64_t e : set)
      if (k_.is_final(State(e % N_))) return true;
    return false;
  }

  void successor(const Subset& from, std::uint64_t a, Subset& out) {
    next_.clear();
    const std::uint64_t full = letters_ * A_;
    for (std::uint64_t e : from) {
      const std::uint64_t q = e % N_, rest = e / N_, h = rest % histories_, len = rest / histories_;
      for (std::uint64_t c = a; c < full; c += letters_) {
        const State q2 = k_.next(State(q), Letter(c / A_));
        if (dead_[q2]) continue;
        const std::uint64_t low = c % M_;
        if (len < std::uint64_t(hist_)) {
          next_.push_back(pack(len + 1, h + low * low_weight_[len], q2));
        } else {
          if (w_.forbidden_index(h + low * histories_)) continue;
          next_.push_back(pack(len, h / M_ + low * top_weight_, q2));
        }
      }
    }
    std::sort(next_.begin(), next_.end());
    next_.erase(std::unique(next_.begin(), next_.end()), next_.end());
    out.clear();
    if (incl_.empty()) {
      out = next_;
      return;
    }
    for (std::size_t i = 0; i < next_.size();) {
      std::size_t j = i;
      const std::uint64_t group = next_[i] / N_;
      while (j < next_.size() && next_[j] / N_ == group) ++j;
      for (std::size_t x = i; x < j; ++x) {
        const std::uint64_t qx = next_[x] % N_;
        bool dominated = false;
        for (std::size_t y = i; y < j && !dominated; ++y)
          if (y != x) dominated = incl_[qx * N_ + next_[y] % N_];
        if (!dominated) out.push_back(next_[x]);
      }
      i = j;
    }
  }

 private:
  std::uint64_t pack(std::uint64_t len, std::uint64_t h, std::uint64_t q) const { return (len * histories_ + h) * N_ + q; }

  const Dfa& k_;
  WindowTable w_;
  std::uint64_t A_;
  int hist_;
  std::uint64_t letters_ = 0, M_ = 0, histories_ = 0, top_weight_ = 0, N_ = 0;
  std::vector<bool> dead_, incl_;
  std::vector<std::uint64_t> low_weight_, next_;
};

}  // namespace

Dfa pre_image_finite(const Dfa& k, const ForbiddenSet& f, int n, const Limits& limits) {
  if (!k.canonical_minimal()) return pre_image_finite(automata::minimize(k), f, n, limits);
  PreImageSubsets layer(k, f, n);
  const std::uint64_t letters = layer.letters();
  if (layer.initial_dead()) return Dfa::empty_language(letters);

  std::unordered_map<PreImageSubsets::Subset, State, SubsetHash> ids;
  std::vector<const PreImageSubsets::Subset*> order;
  std::vector<State> delta;
  auto intern = [&](const PreImageSubsets::Subset& set) -> State {
    auto it = ids.find(set);
    if (it != ids.end()) return it->second;
    if (order.size() >= limits.max_states)
      throw CapacityError("pre_image_finite exceeded " + std::to_string(limits.max_states) + " states");
    const State id = State(order.size());
    order.push_back(&ids.emplace(set, id).first->first);
    return id;
  };
  intern(layer.initial());
  PreImageSubsets::Subset next;
  for (std::size_t head = 0; head < order.size(); ++head)
    for (std::uint64_t a = 0; a < letters; ++a) {
      layer.successor(*order[head], a, next);
      delta.push_back(intern(next));
    }
  Dfa d(letters, order.size());
  for (std::size_t s = 0; s < order.size(); ++s) {
    for (Letter a = 0; a < letters; ++a) d.set_next(State(s), a, delta[s * letters + a]);
    d.set_final(State(s), layer.accepting(*order[s]));
  }
  return automata::minimize(d);
}

automata::InclusionResult includes_in_pre_image(const Dfa& s, const Dfa& k, const ForbiddenSet& f, int n,
                                                const Limits& limits) {
  if (!k.canonical_minimal()) return includes_in_pre_image(s, automata::minimize(k), f, n, limits);
  PreImageSubsets layer(k, f, n);
  const std::uint64_t letters = layer.letters();
  if (s.alphabet_size() != letters) throw automata::AlphabetMismatch("includes_in_pre_image: alphabet mismatch");

  std::unordered_map<PreImageSubsets::Subset, std::uint32_t, SubsetHash> ids;
  std::vector<const PreImageSubsets::Subset*> subsets;
  auto intern = [&](const PreImageSubsets::Subset& set) {
    auto [it, fresh] = ids.emplace(set, std::uint32_t(subsets.size()));
    if (fresh) subsets.push_back(&it->first);
    return it->second;
  };
  // Breadth-first over (state of s, subset). A pair is skipped when the same
  // state was already reached with a smaller subset: anything rejected from
  // the larger subset is rejected from the smaller one at the same depth.
  struct Node {
    State state;
    std::uint32_t subset;
    std::size_t parent;
    Letter letter;
  };
  std::vector<Node> nodes;
  std::vector<std::vector<std::uint32_t>> reached(s.num_states());
  std::unordered_map<std::uint64_t, bool> seen;
  const std::uint32_t first = intern(layer.initial_dead() ? PreImageSubsets::Subset{} : layer.initial());
  nodes.push_back({s.initial(), first, 0, 0});
  reached[s.initial()].push_back(first);
  PreImageSubsets::Subset next;
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const Node node = nodes[head];
    if (!s.is_final(node.state)) continue;
    if (!layer.accepting(*subsets[node.subset])) {
      Word w;
      for (std::size_t i = head; i != 0; i = nodes[i].parent) w.push_back(nodes[i].letter);
      std::reverse(w.begin(), w.end());
      return {false, std::move(w)};
    }
    for (std::uint64_t a = 0; a < letters; ++a) {
      const State t = s.next(node.state, Letter(a));
      if (!s.is_final(t)) continue;
      layer.successor(*subsets[node.subset], a, next);
      bool subsumed = false;
      for (std::uint32_t id : reached[t]) {
        const auto& smaller = *subsets[id];
        if (std::includes(next.begin(), next.end(), smaller.begin(), smaller.end())) {
          subsumed = true;
          break;
        }
      }
      if (subsumed) continue;
      if (nodes.size() >= limits.max_states)
        throw CapacityError("inclusion search exceeded " + std::to_string(limits.max_states) + " nodes");
      const std::uint32_t id = intern(next);
      reached[t].push_back(id);
      nodes.push_back({t, id, head, Letter(a)});
    }
  }
  return {true, std::nullopt};
}

Dfa periodic_rectangles(const ForbiddenSet& f, int n, int p, const Limits& limits) {
  require_stripe_height(f, n);
  if (p < 1) throw std::invalid_argument("period must be positive");
  const WindowTable w(f);
  const int A = f.alphabet_size();
  const std::uint64_t columns = checked_pow(std::uint64_t(A), p, "periodic column");
  const std::uint64_t letters = ipow(std::uint64_t(A), n);
  auto subs = subcolumns(A, p, w.side(), p, [p](int i) { return i % p; });
  std::vector<Letter> letter_of(columns);
  for (std::uint64_t c = 0; c < columns; ++c) {
    Letter l = 0;
    for (int i = n - 1; i >= 0; --i) l = l * Letter(A) + Letter((c / ipow(std::uint64_t(A), i % p)) % std::uint64_t(A));
    letter_of[c] = l;
  }
  return minimal_of(history_nfa(w, columns, letters, p, subs, letter_of, true, false, limits), limits);
}

Nfa direct_extension_nfa(const ForbiddenSet& f, int n, int ell, const Limits& limits) {
  require_stripe_height(f, n);
  if (ell < 0) throw std::invalid_argument("extension depth must be non-negative");
  const WindowTable w(f);
  const int A = f.alphabet_size();
  const int height = n + ell;
  const std::uint64_t columns = checked_pow(std::uint64_t(A), height, "extension column");
  const std::uint64_t letters = ipow(std::uint64_t(A), n);
  const int bottoms = std::max(0, height - w.side() + 1);
  auto subs = subcolumns(A, height, w.side(), bottoms, [](int i) { return i; });
  std::vector<Letter> letter_of(columns);
  for (std::uint64_t c = 0; c < columns; ++c) letter_of[c] = Letter(c % letters);
  return history_nfa(w, columns, letters, bottoms, subs, letter_of, true, true, limits);
}

Nfa direct_periodic_nfa(const ForbiddenSet& f, int n, int k, int p, const Limits& limits) {
  require_stripe_height(f, n);
  if (p < 1 || k < 0) throw std::invalid_argument("need k >= 0 and p >= 1");
  const WindowTable w(f);
  const int A = f.alphabet_size();
  const int height = n + k + p;
  const std::uint64_t columns = checked_pow(std::uint64_t(A), height, "periodic column");
  const std::uint64_t letters = ipow(std::uint64_t(A), n);
  const int band = n + k;
  auto subs = subcolumns(A, height, w.side(), height,
                         [=](int i) { return i < height ? i : band + (i - band) % p; });
  std::vector<Letter> letter_of(columns);
  for (std::uint64_t c = 0; c < columns; ++c) letter_of[c] = Letter(c % letters);
  return history_nfa(w, columns, letters, height, subs, letter_of, false, true, limits);
}

}  // namespace lifetrace
