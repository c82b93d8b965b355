#include "lifetrace/automata.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <limits>
#include <numeric>
#include <unordered_map>

namespace lifetrace::automata {

namespace {

struct StateSetHash {
  std::size_t operator()(const std::vector<State>& v) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull ^ v.size();
    for (State s : v) {
      h ^= s + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return std::size_t(h);
  }
};

void require_same_alphabet(const Dfa& a, const Dfa& b) {
  if (a.alphabet_size() != b.alphabet_size())
    throw AlphabetMismatch("automata over different alphabets (" + std::to_string(a.alphabet_size()) + " vs " +
                           std::to_string(b.alphabet_size()) + ")");
}

Word rebuild_word(const std::vector<std::pair<std::size_t, Letter>>& parent, std::size_t node) {
  Word w;
  while (parent[node].first != node) {
    w.push_back(parent[node].second);
    node = parent[node].first;
  }
  std::reverse(w.begin(), w.end());
  return w;
}

// Breadth-first search over the synchronous product of two DFAs, letters in
// increasing order, stopping at the first pair satisfying `goal`. The word
// returned is the lexicographically least shortest one.
template <typename Goal>
std::optional<Word> product_search(const Dfa& a, const Dfa& b, Goal goal) {
  require_same_alphabet(a, b);
  const std::size_t k = a.alphabet_size();
  auto key = [&](State x, State y) { return std::uint64_t(x) * b.num_states() + y; };
  std::unordered_map<std::uint64_t, std::size_t> seen;
  std::vector<std::pair<State, State>> nodes;
  std::vector<std::pair<std::size_t, Letter>> parent;
  nodes.emplace_back(a.initial(), b.initial());
  parent.emplace_back(0, 0);
  seen.emplace(key(a.initial(), b.initial()), 0);
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const auto [x, y] = nodes[head];
    if (goal(a.is_final(x), b.is_final(y))) return rebuild_word(parent, head);
    for (Letter l = 0; l < k; ++l) {
      const State nx = a.next(x, l), ny = b.next(y, l);
      if (seen.emplace(key(nx, ny), nodes.size()).second) {
        nodes.emplace_back(nx, ny);
        parent.emplace_back(head, l);
      }
    }
  }
  return std::nullopt;
}

enum class BoolOp { And, Or, AndNot };

Dfa product(const Dfa& a, const Dfa& b, BoolOp op) {
  require_same_alphabet(a, b);
  const std::size_t k = a.alphabet_size();
  auto key = [&](State x, State y) { return std::uint64_t(x) * b.num_states() + y; };
  std::unordered_map<std::uint64_t, State> ids;
  std::vector<std::pair<State, State>> nodes;
  std::vector<State> delta;
  auto intern = [&](State x, State y) {
    auto [it, fresh] = ids.emplace(key(x, y), State(nodes.size()));
    if (fresh) nodes.emplace_back(x, y);
    return it->second;
  };
  intern(a.initial(), b.initial());
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const auto [x, y] = nodes[head];
    for (Letter l = 0; l < k; ++l) delta.push_back(intern(a.next(x, l), b.next(y, l)));
  }
  Dfa out(k, nodes.size());
  for (std::size_t s = 0; s < nodes.size(); ++s) {
    for (Letter l = 0; l < k; ++l) out.set_next(State(s), l, delta[s * k + l]);
    const bool fa = a.is_final(nodes[s].first), fb = b.is_final(nodes[s].second);
    out.set_final(State(s), op == BoolOp::And ? (fa && fb) : op == BoolOp::Or ? (fa || fb) : (fa && !fb));
  }
  out.set_initial(0);
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Nfa

std::size_t Nfa::num_transitions() const {
  std::size_t n = 0;
  for (const auto& e : edges_) n += e.size();
  return n;
}

State Nfa::add_state(bool initial, bool final) {
  edges_.emplace_back();
  initial_.push_back(initial);
  final_.push_back(final);
  return State(edges_.size() - 1);
}

void Nfa::add_transition(State from, Letter letter, State to) {
  if (from >= num_states() || to >= num_states()) throw std::out_of_range("transition references unknown state");
  if (letter >= alphabet_size_) throw std::out_of_range("transition letter outside alphabet");
  edges_[from].push_back({letter, to});
}

void Nfa::normalize() {
  for (auto& e : edges_) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
  }
}

std::vector<State> Nfa::initial_states() const {
  std::vector<State> out;
  for (State s = 0; s < num_states(); ++s)
    if (initial_[s]) out.push_back(s);
  return out;
}

bool Nfa::all_initial_final() const {
  for (State s = 0; s < num_states(); ++s)
    if (!initial_[s] || !final_[s]) return false;
  return true;
}

void Nfa::make_all_initial_final() {
  std::fill(initial_.begin(), initial_.end(), true);
  std::fill(final_.begin(), final_.end(), true);
}

bool Nfa::accepts(const Word& w) const {
  std::vector<char> current(num_states(), 0), next(num_states(), 0);
  bool any = false;
  for (State s = 0; s < num_states(); ++s)
    if (initial_[s]) current[s] = 1, any = true;
  for (Letter l : w) {
    if (!any) return false;
    std::fill(next.begin(), next.end(), 0);
    any = false;
    for (State s = 0; s < num_states(); ++s)
      if (current[s])
        for (const Edge& e : edges_[s])
          if (e.letter == l) next[e.target] = 1, any = true;
    current.swap(next);
  }
  for (State s = 0; s < num_states(); ++s)
    if (current[s] && final_[s]) return true;
  return false;
}

// ---------------------------------------------------------------- Dfa

Dfa::Dfa(std::size_t alphabet_size, std::size_t num_states)
    : alphabet_size_(alphabet_size), delta_(alphabet_size * num_states, 0), final_(num_states, false) {}

Dfa Dfa::universal(std::size_t alphabet_size) {
  Dfa d(alphabet_size, 1);
  d.set_final(0);
  d.mark_minimal(true);
  return d;
}

Dfa Dfa::empty_language(std::size_t alphabet_size) {
  Dfa d(alphabet_size, 1);
  d.mark_minimal(true);
  return d;
}

Dfa Dfa::singleton(std::size_t alphabet_size, const Word& w) {
  // States 0..|w| follow the word, state |w|+1 is the sink.
  Dfa d(alphabet_size, w.size() + 2);
  const State sink = State(w.size() + 1);
  for (State s = 0; s <= sink; ++s)
    for (Letter l = 0; l < alphabet_size; ++l) d.set_next(s, l, sink);
  for (std::size_t i = 0; i < w.size(); ++i) d.set_next(State(i), w[i], State(i + 1));
  d.set_final(State(w.size()));
  return d;
}

std::size_t Dfa::num_final() const { return std::size_t(std::count(final_.begin(), final_.end(), true)); }

State Dfa::run(State from, const Word& w) const {
  for (Letter l : w) from = next(from, l);
  return from;
}

bool Dfa::accepts(const Word& w) const {
  for (Letter l : w)
    if (l >= alphabet_size_) return false;
  return is_final(run(initial_, w));
}

std::vector<bool> Dfa::dead_states() const {
  const std::size_t n = num_states();
  std::vector<std::vector<State>> rev(n);
  for (State s = 0; s < n; ++s)
    for (Letter l = 0; l < alphabet_size_; ++l) rev[next(s, l)].push_back(s);
  std::vector<bool> alive(n, false);
  std::vector<State> stack;
  for (State s = 0; s < n; ++s)
    if (final_[s]) alive[s] = true, stack.push_back(s);
  while (!stack.empty()) {
    const State t = stack.back();
    stack.pop_back();
    for (State s : rev[t])
      if (!alive[s]) alive[s] = true, stack.push_back(s);
  }
  std::vector<bool> dead(n);
  for (State s = 0; s < n; ++s) dead[s] = !alive[s];
  return dead;
}

// ---------------------------------------------------------------- conversions

Nfa to_nfa(const Dfa& d) {
  Nfa a(d.alphabet_size());
  for (State s = 0; s < d.num_states(); ++s) a.add_state(s == d.initial(), d.is_final(s));
  for (State s = 0; s < d.num_states(); ++s)
    for (Letter l = 0; l < d.alphabet_size(); ++l) a.add_transition(s, l, d.next(s, l));
  return a;
}

Nfa reverse(const Nfa& a) {
  Nfa r(a.alphabet_size());
  for (State s = 0; s < a.num_states(); ++s) r.add_state(a.is_final(s), a.is_initial(s));
  for (State s = 0; s < a.num_states(); ++s)
    for (const auto& e : a.edges(s)) r.add_transition(e.target, e.letter, s);
  r.normalize();
  return r;
}

Dfa determinize(const Nfa& input, const Limits& limits) {
  Nfa a = input;
  a.normalize();
  const std::size_t k = a.alphabet_size();
  std::unordered_map<std::vector<State>, State, StateSetHash> ids;
  std::vector<const std::vector<State>*> order;
  std::vector<State> delta;
  std::vector<bool> finals;

  auto intern = [&](std::vector<State>&& set) -> State {
    auto it = ids.find(set);
    if (it != ids.end()) return it->second;
    if (order.size() >= limits.max_states)
      throw CapacityError("subset construction exceeded " + std::to_string(limits.max_states) + " states");
    const State id = State(order.size());
    auto [pos, fresh] = ids.emplace(std::move(set), id);
    (void)fresh;
    order.push_back(&pos->first);
    bool fin = false;
    for (State s : pos->first)
      if (a.is_final(s)) {
        fin = true;
        break;
      }
    finals.push_back(fin);
    return id;
  };

  intern(a.initial_states());
  std::vector<std::vector<State>> buckets(k);
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (auto& b : buckets) b.clear();
    for (State s : *order[head])
      for (const auto& e : a.edges(s)) buckets[e.letter].push_back(e.target);
    for (Letter l = 0; l < k; ++l) {
      auto& b = buckets[l];
      std::sort(b.begin(), b.end());
      b.erase(std::unique(b.begin(), b.end()), b.end());
      delta.push_back(intern(std::vector<State>(b)));
    }
  }
  Dfa d(k, order.size());
  for (std::size_t s = 0; s < order.size(); ++s) {
    for (Letter l = 0; l < k; ++l) d.set_next(State(s), l, delta[s * k + l]);
    d.set_final(State(s), finals[s]);
  }
  d.set_initial(0);
  return d;
}

Dfa minimize(const Dfa& input) {
  const std::size_t k = input.alphabet_size();

  // Reachable part, numbered in BFS order.
  std::vector<State> reach_id(input.num_states(), std::numeric_limits<State>::max());
  std::vector<State> reach;
  reach_id[input.initial()] = 0;
  reach.push_back(input.initial());
  for (std::size_t h = 0; h < reach.size(); ++h)
    for (Letter l = 0; l < k; ++l) {
      const State t = input.next(reach[h], l);
      if (reach_id[t] == std::numeric_limits<State>::max()) {
        reach_id[t] = State(reach.size());
        reach.push_back(t);
      }
    }
  const std::size_t n = reach.size();
  std::vector<State> delta(n * k);
  for (std::size_t s = 0; s < n; ++s)
    for (Letter l = 0; l < k; ++l) delta[s * k + l] = reach_id[input.next(reach[s], l)];

  // Inverse transitions in CSR form, per letter.
  std::vector<std::size_t> inv_start((n + 1) * k, 0);
  std::vector<State> inv;
  {
    std::vector<std::size_t> count(n * k, 0);
    for (std::size_t s = 0; s < n; ++s)
      for (Letter l = 0; l < k; ++l) ++count[std::size_t(delta[s * k + l]) * k + l];
    std::size_t acc = 0;
    for (std::size_t i = 0; i < n * k; ++i) {
      inv_start[i] = acc;
      acc += count[i];
    }
    inv_start[n * k] = acc;
    inv.resize(acc);
    std::vector<std::size_t> fill(inv_start.begin(), inv_start.begin() + std::ptrdiff_t(n * k));
    for (std::size_t s = 0; s < n; ++s)
      for (Letter l = 0; l < k; ++l) inv[fill[std::size_t(delta[s * k + l]) * k + l]++] = State(s);
  }

  // Partition: elems grouped by block, each block a contiguous [first, end) range.
  std::vector<State> elems(n), loc(n), block_of(n);
  std::vector<std::size_t> first, end, marked;
  {
    std::size_t pos = 0;
    for (int pass = 0; pass < 2; ++pass) {
      const bool want_final = pass == 0;
      const std::size_t start = pos;
      for (std::size_t s = 0; s < n; ++s)
        if (input.is_final(reach[s]) == want_final) {
          elems[pos] = State(s);
          loc[s] = State(pos);
          ++pos;
        }
      if (pos > start) {
        for (std::size_t i = start; i < pos; ++i) block_of[elems[i]] = State(first.size());
        first.push_back(start);
        end.push_back(pos);
        marked.push_back(0);
      }
    }
  }

  std::vector<std::pair<std::size_t, Letter>> work;
  std::vector<std::vector<bool>> in_work;  // per block, per letter
  auto push_work = [&](std::size_t b, Letter l) {
    if (in_work.size() <= b) in_work.resize(b + 1, std::vector<bool>(k, false));
    if (!in_work[b][l]) {
      in_work[b][l] = true;
      work.emplace_back(b, l);
    }
  };
  in_work.assign(first.size(), std::vector<bool>(k, false));
  if (first.size() == 2) {
    const std::size_t smaller = (end[0] - first[0]) <= (end[1] - first[1]) ? 0 : 1;
    for (Letter l = 0; l < k; ++l) push_work(smaller, l);
  }

  std::vector<State> splitter;
  std::vector<std::size_t> touched;
  while (!work.empty()) {
    const auto [b, l] = work.back();
    work.pop_back();
    in_work[b][l] = false;
    splitter.clear();
    for (std::size_t i = first[b]; i < end[b]; ++i) {
      const State t = elems[i];
      for (std::size_t j = inv_start[std::size_t(t) * k + l]; j < inv_start[std::size_t(t) * k + l + 1]; ++j)
        splitter.push_back(inv[j]);
    }
    touched.clear();
    for (State s : splitter) {
      const std::size_t c = block_of[s];
      const std::size_t boundary = first[c] + marked[c];
      if (loc[s] < boundary) continue;  // already marked
      if (marked[c] == 0) touched.push_back(c);
      // Swap s to the marked prefix of its block.
      const State other = elems[boundary];
      std::swap(elems[loc[s]], elems[boundary]);
      loc[other] = loc[s];
      loc[s] = State(boundary);
      ++marked[c];
    }
    for (std::size_t c : touched) {
      const std::size_t m = marked[c];
      marked[c] = 0;
      if (m == end[c] - first[c]) continue;
      // Split: marked prefix becomes a new block.
      const std::size_t nb = first.size();
      first.push_back(first[c]);
      end.push_back(first[c] + m);
      marked.push_back(0);
      first[c] += m;
      for (std::size_t i = first[nb]; i < end[nb]; ++i) block_of[elems[i]] = State(nb);
      in_work.resize(first.size(), std::vector<bool>(k, false));
      const std::size_t size_new = end[nb] - first[nb], size_old = end[c] - first[c];
      for (Letter a = 0; a < k; ++a) {
        if (in_work[c][a]) push_work(nb, a);
        else push_work(size_new <= size_old ? nb : c, a);
      }
    }
  }

  // Quotient, then canonical BFS renumbering from the initial block.
  const std::size_t blocks = first.size();
  std::vector<State> canon(blocks, std::numeric_limits<State>::max());
  std::vector<std::size_t> queue;
  canon[block_of[0]] = 0;
  queue.push_back(block_of[0]);
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const State rep = elems[first[queue[h]]];
    for (Letter l = 0; l < k; ++l) {
      const std::size_t tb = block_of[delta[std::size_t(rep) * k + l]];
      if (canon[tb] == std::numeric_limits<State>::max()) {
        canon[tb] = State(queue.size());
        queue.push_back(tb);
      }
    }
  }
  Dfa out(k, queue.size());
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const State rep = elems[first[queue[h]]];
    for (Letter l = 0; l < k; ++l) out.set_next(State(h), l, canon[block_of[delta[std::size_t(rep) * k + l]]]);
    out.set_final(State(h), input.is_final(reach[rep]));
  }
  out.set_initial(0);
  out.mark_minimal(true);
  return out;
}

Dfa complement(const Dfa& d) {
  Dfa out = d;
  for (State s = 0; s < d.num_states(); ++s) out.set_final(s, !d.is_final(s));
  return out;
}

Dfa intersect(const Dfa& a, const Dfa& b) { return product(a, b, BoolOp::And); }
Dfa unite(const Dfa& a, const Dfa& b) { return product(a, b, BoolOp::Or); }
Dfa difference(const Dfa& a, const Dfa& b) { return product(a, b, BoolOp::AndNot); }

std::optional<Word> shortest_accepted(const Dfa& d) {
  if (d.num_states() == 0) return std::nullopt;
  std::vector<std::pair<std::size_t, Letter>> parent(d.num_states());
  std::vector<bool> seen(d.num_states(), false);
  std::vector<State> queue{d.initial()};
  std::vector<std::size_t> node_of(d.num_states());
  seen[d.initial()] = true;
  parent[0] = {0, 0};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const State s = queue[h];
    if (d.is_final(s)) return rebuild_word(parent, h);
    for (Letter l = 0; l < d.alphabet_size(); ++l) {
      const State t = d.next(s, l);
      if (!seen[t]) {
        seen[t] = true;
        parent[queue.size()] = {h, l};
        queue.push_back(t);
      }
    }
  }
  return std::nullopt;
}

EmptinessResult is_empty(const Dfa& d) {
  auto w = shortest_accepted(d);
  return {!w.has_value(), std::move(w)};
}

InclusionResult includes(const Dfa& a, const Dfa& b) {
  auto w = product_search(a, b, [](bool fa, bool fb) { return fb && !fa; });
  return {!w.has_value(), std::move(w)};
}

EquivalenceResult equivalent(const Dfa& a, const Dfa& b) {
  auto w = product_search(a, b, [](bool fa, bool fb) { return fa != fb; });
  return {!w.has_value(), std::move(w)};
}

Nfa trim_biextendable(const Nfa& input) {
  Nfa a = input;
  a.normalize();
  const std::size_t n = a.num_states();
  std::vector<std::vector<State>> preds(n);
  std::vector<std::size_t> indeg(n, 0), outdeg(n, 0);
  for (State s = 0; s < n; ++s)
    for (const auto& e : a.edges(s)) {
      ++outdeg[s];
      ++indeg[e.target];
      preds[e.target].push_back(s);
    }
  std::vector<bool> removed(n, false);
  std::vector<State> stack;
  for (State s = 0; s < n; ++s)
    if (indeg[s] == 0 || outdeg[s] == 0) removed[s] = true, stack.push_back(s);
  while (!stack.empty()) {
    const State s = stack.back();
    stack.pop_back();
    for (const auto& e : a.edges(s))
      if (!removed[e.target] && --indeg[e.target] == 0) removed[e.target] = true, stack.push_back(e.target);
    for (State p : preds[s])
      if (!removed[p] && --outdeg[p] == 0) removed[p] = true, stack.push_back(p);
  }
  std::vector<State> id(n, std::numeric_limits<State>::max());
  Nfa out(a.alphabet_size());
  for (State s = 0; s < n; ++s)
    if (!removed[s]) id[s] = out.add_state(true, true);
  for (State s = 0; s < n; ++s)
    if (!removed[s])
      for (const auto& e : a.edges(s))
        if (!removed[e.target]) out.add_transition(id[s], e.letter, id[e.target]);
  return out;
}

Dfa one_step_extension(const Dfa& d, const Limits& limits) {
  const std::size_t n = d.num_states(), k = d.alphabet_size();
  Nfa a(k);
  for (State s = 0; s < n; ++s) {
    bool into_final = false;
    for (Letter l = 0; l < k && !into_final; ++l) into_final = d.is_final(d.next(s, l));
    a.add_state(false, into_final);
  }
  for (Letter l = 0; l < k; ++l) a.set_initial(d.next(d.initial(), l));
  for (State s = 0; s < n; ++s)
    for (Letter l = 0; l < k; ++l) a.add_transition(s, l, d.next(s, l));
  return minimize(determinize(a, limits));
}

Dfa ext_language(const Dfa& d, std::size_t C, const Limits& limits) {
  Dfa out = d.canonical_minimal() ? d : minimize(d);
  for (std::size_t i = 0; i < C; ++i) out = one_step_extension(out, limits);
  return out;
}

CoreResult extendable_core(const Dfa& d, const Limits& limits) {
  CoreResult r{d.canonical_minimal() ? d : minimize(d), 0};
  for (;;) {
    Dfa next = one_step_extension(r.core, limits);
    if (next == r.core) return r;
    r.core = std::move(next);
    ++r.rounds;
  }
}

std::vector<bool> state_inclusion(const Dfa& d) {
  const std::size_t n = d.num_states(), k = d.alphabet_size();
  std::vector<std::vector<State>> pred(n * k);
  for (State s = 0; s < n; ++s)
    for (Letter l = 0; l < k; ++l) pred[std::size_t(d.next(s, l)) * k + l].push_back(s);
  // bad[x * n + y]: some word is accepted from x but not from y.
  std::vector<bool> bad(n * n, false);
  std::vector<std::pair<State, State>> stack;
  for (State x = 0; x < n; ++x)
    if (d.is_final(x))
      for (State y = 0; y < n; ++y)
        if (!d.is_final(y)) {
          bad[std::size_t(x) * n + y] = true;
          stack.emplace_back(x, y);
        }
  while (!stack.empty()) {
    const auto [x, y] = stack.back();
    stack.pop_back();
    for (Letter l = 0; l < k; ++l)
      for (State px : pred[std::size_t(x) * k + l])
        for (State py : pred[std::size_t(y) * k + l]) {
          const std::size_t i = std::size_t(px) * n + py;
          if (!bad[i]) {
            bad[i] = true;
            stack.emplace_back(px, py);
          }
        }
  }
  bad.flip();
  return bad;
}

UniversalityResult universal_up_to_length(const Dfa& d, std::size_t m) {
  std::vector<std::pair<std::size_t, Letter>> parent;
  std::vector<std::size_t> depth;
  std::vector<State> queue{d.initial()};
  std::vector<bool> seen(d.num_states(), false);
  seen[d.initial()] = true;
  parent.emplace_back(0, 0);
  depth.push_back(0);
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const State s = queue[h];
    if (!d.is_final(s)) return {false, rebuild_word(parent, h)};
    if (depth[h] == m) continue;
    for (Letter l = 0; l < d.alphabet_size(); ++l) {
      const State t = d.next(s, l);
      if (!seen[t]) {
        seen[t] = true;
        parent.emplace_back(h, l);
        depth.push_back(depth[h] + 1);
        queue.push_back(t);
      }
    }
  }
  return {true, std::nullopt};
}

std::vector<std::uint64_t> count_words(const Dfa& d, std::size_t max_length) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> ways(d.num_states(), 0), next(d.num_states(), 0), out;
  ways[d.initial()] = 1;
  for (std::size_t len = 0; len <= max_length; ++len) {
    std::uint64_t total = 0;
    for (State s = 0; s < d.num_states(); ++s)
      if (d.is_final(s)) total = (kMax - total < ways[s]) ? kMax : total + ways[s];
    out.push_back(total);
    std::fill(next.begin(), next.end(), 0);
    for (State s = 0; s < d.num_states(); ++s)
      if (ways[s])
        for (Letter l = 0; l < d.alphabet_size(); ++l) {
          auto& t = next[d.next(s, l)];
          t = (kMax - t < ways[s]) ? kMax : t + ways[s];
        }
    ways.swap(next);
  }
  return out;
}

std::string language_hash(const Dfa& d, std::size_t max_length) {
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint64_t c : count_words(d, max_length))
    for (int i = 0; i < 8; ++i) {
      h ^= (c >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace lifetrace::automata
