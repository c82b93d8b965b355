#include <stdexcept>

#include "lifetrace/pattern_io.hpp"
#include "lifetrace/serialize.hpp"

namespace lifetrace {

using automata::Dfa;
using automata::Letter;
using automata::Nfa;
using automata::State;
using automata::Word;

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing JSON field '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad JSON field '") + key + "': " + e.what());
  }
}

std::string outcome_name(SweepOutcome o) {
  switch (o) {
    case SweepOutcome::Holds: return "holds";
    case SweepOutcome::Fails: return "fails";
    case SweepOutcome::ImpliedFails: return "implied-fails";
    case SweepOutcome::ImpliedHolds: return "implied-holds";
  }
  return "?";
}

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }
Json optional_size(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json rect_json(const Rect& r) { return Json{{"x", r.x}, {"y", r.y}, {"width", r.width}, {"height", r.height}}; }

}  // namespace

Json to_json(const Nfa& a) {
  Json j;
  j["alphabet"] = a.alphabet_size();
  j["states"] = a.num_states();
  Json init = Json::array(), fin = Json::array(), tr = Json::array();
  for (State s = 0; s < a.num_states(); ++s) {
    if (a.is_initial(s)) init.push_back(s);
    if (a.is_final(s)) fin.push_back(s);
    for (const auto& e : a.edges(s)) tr.push_back(Json::array({s, e.letter, e.target}));
  }
  j["initial"] = init;
  j["final"] = fin;
  j["transitions"] = tr;
  return j;
}

Json to_json(const Dfa& d) {
  Json j;
  j["alphabet"] = d.alphabet_size();
  j["states"] = d.num_states();
  j["initial"] = Json::array({d.initial()});
  Json fin = Json::array(), tr = Json::array();
  for (State s = 0; s < d.num_states(); ++s) {
    if (d.is_final(s)) fin.push_back(s);
    for (Letter a = 0; a < d.alphabet_size(); ++a) tr.push_back(Json::array({s, a, d.next(s, a)}));
  }
  j["final"] = fin;
  j["transitions"] = tr;
  return j;
}

Nfa nfa_from_json(const Json& j) {
  const auto alphabet = get<std::size_t>(j, "alphabet");
  const auto states = get<std::size_t>(j, "states");
  Nfa a(alphabet);
  for (std::size_t i = 0; i < states; ++i) a.add_state();
  auto state = [&](const Json& v) {
    const auto s = v.get<std::size_t>();
    if (s >= states) throw std::invalid_argument("state index out of range");
    return State(s);
  };
  for (const auto& v : field(j, "initial")) a.set_initial(state(v));
  for (const auto& v : field(j, "final")) a.set_final(state(v));
  for (const auto& t : field(j, "transitions")) {
    if (!t.is_array() || t.size() != 3) throw std::invalid_argument("transition must be [from, letter, to]");
    const auto letter = t[1].get<std::size_t>();
    if (letter >= alphabet) throw std::invalid_argument("letter out of range");
    a.add_transition(state(t[0]), Letter(letter), state(t[2]));
  }
  a.normalize();
  return a;
}

Dfa dfa_from_json(const Json& j) {
  const auto alphabet = get<std::size_t>(j, "alphabet");
  const auto states = get<std::size_t>(j, "states");
  if (states == 0) throw std::invalid_argument("a DFA needs at least one state");
  Dfa d(alphabet, states);
  const auto& init = field(j, "initial");
  if (!init.is_array() || init.size() != 1) throw std::invalid_argument("a DFA has exactly one initial state");
  auto state = [&](const Json& v) {
    const auto s = v.get<std::size_t>();
    if (s >= states) throw std::invalid_argument("state index out of range");
    return State(s);
  };
  d.set_initial(state(init[0]));
  for (const auto& v : field(j, "final")) d.set_final(state(v));
  std::vector<bool> seen(states * alphabet, false);
  for (const auto& t : field(j, "transitions")) {
    if (!t.is_array() || t.size() != 3) throw std::invalid_argument("transition must be [from, letter, to]");
    const State s = state(t[0]);
    const auto letter = t[1].get<std::size_t>();
    if (letter >= alphabet) throw std::invalid_argument("letter out of range");
    if (seen[s * alphabet + letter]) throw std::invalid_argument("DFA transition defined twice");
    seen[s * alphabet + letter] = true;
    d.set_next(s, Letter(letter), state(t[2]));
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw std::invalid_argument("DFA transition function is not total");
  return d;
}

Json fingerprint_json(const Dfa& d) {
  return Json{{"states", d.num_states()}, {"language_hash", automata::language_hash(d, 8)}};
}

Json to_json(const Word& w) {
  Json j = Json::array();
  for (Letter a : w) j.push_back(a);
  return j;
}

Json to_json(const std::optional<Word>& w) { return w ? to_json(*w) : Json(nullptr); }

Json to_json(const Pattern& p) {
  Json rows = Json::array();
  for (int y = p.domain().y_end() - 1; y >= p.domain().y; --y) {
    std::string row;
    for (int x = p.domain().x; x < p.domain().x_end(); ++x) {
      const Symbol v = p.at(x, y);
      row.push_back(v == 0 ? '.' : v == 1 ? 'O' : char('0' + v));
    }
    rows.push_back(row);
  }
  return Json{{"x", p.domain().x}, {"y", p.domain().y}, {"width", p.width()}, {"height", p.height()}, {"rows", rows}};
}

Pattern pattern_from_json(const Json& j) {
  const int x = get<int>(j, "x"), y = get<int>(j, "y");
  const auto& rows = field(j, "rows");
  if (!rows.is_array()) throw std::invalid_argument("pattern rows must be an array");
  const int height = int(rows.size());
  int width = j.contains("width") ? get<int>(j, "width") : 0;
  for (const auto& r : rows) width = std::max(width, int(r.get<std::string>().size()));
  Pattern p(Rect{x, y, width, height});
  for (int i = 0; i < height; ++i) {
    const auto row = rows[std::size_t(i)].get<std::string>();
    for (int c = 0; c < int(row.size()); ++c) {
      const char ch = row[std::size_t(c)];
      Symbol v;
      if (ch == '.' || ch == '0') v = 0;
      else if (ch == 'O' || ch == '1') v = 1;
      else if (ch >= '2' && ch <= '9') v = Symbol(ch - '0');
      else throw std::invalid_argument(std::string("bad pattern character '") + ch + "'");
      p.set(x + c, y + height - 1 - i, v);
    }
  }
  return p;
}

Json to_json(const TraceConstants& t) {
  Json dirs = Json::array();
  for (const auto& d : t.directions) dirs.push_back(Json{{"ell", d.ell}, {"k", d.k}, {"p", d.p}, {"C", d.C}});
  return Json{{"alphabet_size", t.alphabet_size},
              {"radius", t.radius},
              {"n", t.n},
              {"ell", t.ell},
              {"k", t.k},
              {"p", t.p},
              {"C", t.C},
              {"c", t.c},
              {"q", t.q},
              {"q_refined", t.q_refined},
              {"directions", dirs},
              {"provenance",
               Json{{"verified", t.provenance.verified},
                    {"rule_fingerprint", t.provenance.rule_fingerprint},
                    {"method", t.provenance.method}}}};
}

TraceConstants constants_from_json(const Json& j) {
  TraceConstants t;
  t.alphabet_size = get<int>(j, "alphabet_size");
  t.radius = get<int>(j, "radius");
  t.n = get<int>(j, "n");
  t.ell = get<int>(j, "ell");
  t.k = get<int>(j, "k");
  t.p = get<int>(j, "p");
  t.C = get<std::size_t>(j, "C");
  if (t.alphabet_size < 2 || t.radius < 1 || t.n < 1 || t.ell < 0 || t.k < 0 || t.p < 1)
    throw std::invalid_argument("constants out of range");
  const auto& dirs = field(j, "directions");
  if (!dirs.is_array() || dirs.size() != 4) throw std::invalid_argument("constants need four directions");
  for (std::size_t i = 0; i < 4; ++i) {
    auto& d = t.directions[i];
    d.ell = get<int>(dirs[i], "ell");
    d.k = get<int>(dirs[i], "k");
    d.p = get<int>(dirs[i], "p");
    d.C = get<std::size_t>(dirs[i], "C");
    if (d.k < 0 || d.p < 1 || d.ell < 0) throw std::invalid_argument("direction constants out of range");
  }
  if (j.contains("provenance")) {
    const auto& p = j.at("provenance");
    t.provenance.verified = get<bool>(p, "verified");
    t.provenance.rule_fingerprint = get<std::string>(p, "rule_fingerprint");
    t.provenance.method = get<std::string>(p, "method");
  }
  finalize_constants(t);
  return t;
}

Json to_json(const StabilityResult& s) {
  Json dirs = Json::array();
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& d = s.directions[i];
    Json levels = Json::array();
    for (const auto& l : d.levels)
      levels.push_back(Json{{"ell", l.ell},
                            {"L_states", l.L_states},
                            {"S_states", l.S_states},
                            {"S_hash", l.S_hash},
                            {"equals_next", l.equals_next},
                            {"separating", to_json(l.separating)}});
    Json dj{{"rotation", d.rotation}, {"same_as", d.same_as}, {"stable_at", optional_int(d.stable_at)}, {"levels", levels}};
    if (s.stable_at) dj["trace"] = fingerprint_json(s.traces[i]);
    dirs.push_back(dj);
  }
  return Json{{"n", s.n}, {"ell_max", s.ell_max}, {"stable_at", optional_int(s.stable_at)}, {"directions", dirs}};
}

Json to_json(const PeriodizabilityResult& r) {
  Json dirs = Json::array();
  for (const auto& d : r.directions)
    dirs.push_back(Json{{"rotation", d.rotation},
                        {"same_as", d.same_as},
                        {"holds", d.holds},
                        {"witness", to_json(d.witness)},
                        {"base_states", d.base_states}});
  return Json{{"n", r.n}, {"ell", r.ell}, {"k", r.k}, {"p", r.p}, {"holds", r.holds}, {"directions", dirs}};
}

Json to_json(const ExtensionConstantResult& r) {
  Json per = Json::array();
  for (const auto& c : r.per_direction) per.push_back(optional_size(c));
  return Json{{"C", optional_size(r.C)}, {"per_direction", per}, {"C_max", r.C_max}};
}

Json to_json(const ConstantsReport& r) {
  Json sweep = Json::array();
  for (const auto& e : r.sweep) {
    Json ej{{"direction", e.direction}, {"k", e.k}, {"p", e.p}, {"outcome", outcome_name(e.outcome)}};
    if (e.witness) ej["witness"] = to_json(*e.witness);
    if (e.implied_by) ej["implied_by"] = Json::array({e.implied_by->first, e.implied_by->second});
    sweep.push_back(ej);
  }
  Json j{{"complete", r.complete},
         {"failure", r.failure},
         {"stability", to_json(r.stability)},
         {"extension", to_json(r.extension)},
         {"sweep", sweep}};
  if (r.complete) j["constants"] = to_json(r.constants);
  return j;
}

Json to_json(const SearchOutcome& o) {
  Json j{{"verdict", to_string(o.verdict)}, {"nodes", o.stats.nodes}};
  j["witness"] = o.witness ? to_json(*o.witness) : Json(nullptr);
  return j;
}

Json to_json(const SemilinearConfig& x) {
  const auto& b = x.core();
  const auto& p = x.periods();
  Json regions = Json::array();
  for (const auto& r : x.regions()) {
    Json periods = Json::array();
    for (const auto& v : r.periods) periods.push_back(Json::array({v.x, v.y}));
    regions.push_back(Json{{"kind", to_string(r.kind)},
                           {"x_min", optional_int(r.x_min)},
                           {"x_max", optional_int(r.x_max)},
                           {"y_min", optional_int(r.y_min)},
                           {"y_max", optional_int(r.y_max)},
                           {"anchor", rect_json(r.anchor)},
                           {"periods", periods}});
  }
  return Json{{"alphabet_size", x.alphabet_size()},
              {"core", Json{{"x0", b.x0}, {"x1", b.x1}, {"y0", b.y0}, {"y1", b.y1}}},
              {"periods", Json{{"north", p.north}, {"south", p.south}, {"east", p.east}, {"west", p.west}}},
              {"generator", to_json(x.generator())},
              {"regions", regions}};
}

SemilinearConfig semilinear_from_json(const Json& j) {
  const auto& c = field(j, "core");
  const auto& p = field(j, "periods");
  const CoreBox box{get<int>(c, "x0"), get<int>(c, "x1"), get<int>(c, "y0"), get<int>(c, "y1")};
  const Periods per{get<int>(p, "north"), get<int>(p, "south"), get<int>(p, "east"), get<int>(p, "west")};
  return SemilinearConfig::from_parts(get<int>(j, "alphabet_size"), box, per,
                                      pattern_from_json(field(j, "generator")));
}

Json to_json(const PeriodizationCertificate& c) {
  Json stages = Json::array();
  for (const auto& s : c.stages) {
    const auto& b = s.config.core();
    const auto& p = s.config.periods();
    stages.push_back(Json{{"name", s.name},
                          {"core", Json{{"x0", b.x0}, {"x1", b.x1}, {"y0", b.y0}, {"y1", b.y1}}},
                          {"periods", Json{{"north", p.north}, {"south", p.south}, {"east", p.east}, {"west", p.west}}},
                          {"display", to_json(s.config.window(c.display))}});
  }
  return Json{{"y", to_json(c.y)},
              {"x_window", to_json(c.x_window)},
              {"constants", to_json(c.constants)},
              {"N", c.N},
              {"threshold", c.threshold},
              {"display", rect_json(c.display)},
              {"stages", stages},
              {"protected_agrees", c.protected_agrees},
              {"verified", c.verified}};
}

}  // namespace lifetrace
