#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "lifetrace/automata.hpp"
#include "lifetrace/ca.hpp"
#include "lifetrace/constants.hpp"
#include "lifetrace/encoding.hpp"
#include "lifetrace/pattern_io.hpp"
#include "lifetrace/preimage.hpp"
#include "lifetrace/semilinear.hpp"
#include "lifetrace/serialize.hpp"
#include "lifetrace/stripe.hpp"
#include "lifetrace/traces.hpp"

namespace lifetrace::cli {

namespace {

namespace fs = std::filesystem;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string rule = "life";
  std::uint64_t budget_nodes = kDefaultNodeBudget;
  std::size_t max_states = automata::kDefaultMaxStates;
  int threads = 1;
  std::string format = "text";
  std::string output;
  std::string constants_file;

  std::string input;
  std::string window_file;
  int pad = 0;
  std::string order = "row";
  std::string stage = "x5";
  int view = -1;

  std::optional<int> ell, k, p;
  bool skip_probes = false;
  int ell_max = 8, k_max = 6, p_max = 6;
  std::vector<std::string> rules;
  int probe_width = 0, probe_height = 0;
};

LocalRule load_rule(const std::string& spec) {
  if (spec == "life" || spec == "gol") return game_of_life();
  if (spec == "zero") return constant_zero_rule();
  if (spec == "identity") return identity_rule();
  if (!spec.empty() && (spec[0] == 'B' || spec[0] == 'b') && spec.find('/') != std::string::npos)
    return outer_totalistic(spec);
  if (fs::exists(spec)) return read_rule_file(spec);
  throw UsageError("unknown rule '" + spec + "' (use life, zero, identity, B../S.. or a rule file)");
}

std::string rule_label(const std::string& spec) { return spec; }

// Moves the pattern so that it sits in [-M, M] x [-N, N] for the least M, N.
Pattern centered(const Pattern& p) { return p.moved_to(Coordinate{-(p.width() / 2), -(p.height() / 2)}); }

Pattern read_input_pattern(const std::string& path) {
  if (path.empty()) throw UsageError("missing pattern file");
  if (!fs::exists(path)) throw UsageError("no such file: " + path);
  return read_pattern_file(path);
}

PayloadOrder payload_order(const std::string& s) {
  if (s == "row") return PayloadOrder::RowMajor;
  if (s == "column") return PayloadOrder::ColumnMajor;
  throw UsageError("unknown payload order '" + s + "' (row or column)");
}

std::string format_any(const Pattern& p, const std::string& format, PayloadOrder order = PayloadOrder::RowMajor) {
  if (format == "text") return format_pattern(p, PatternFormat::Text);
  if (format == "rle") return format_pattern(p, PatternFormat::Rle);
  if (format == "binary-encoding") return word_to_string(encode_config(FiniteConfig(centered(p)), order).word) + "\n";
  throw UsageError("unknown format '" + format + "' (text, rle or binary-encoding)");
}

void emit(std::ostream& out, const Options& o, const Json& j) {
  const std::string text = j.dump(2) + "\n";
  out << text;
  if (!o.output.empty()) write_text_file(o.output, text);
}

TraceConstants load_constants(const Options& o, const LocalRule& rule) {
  if (!o.constants_file.empty()) return constants_from_json(Json::parse(read_text_file(o.constants_file)));
  if (rule.fingerprint() == game_of_life().fingerprint()) return life_constants();
  throw UsageError("no verified constants for this rule; compute them with trace-report and pass --constants");
}

automata::Limits limits_of(const Options& o) { return automata::Limits{o.max_states}; }

Json search_json(const std::string& command, const SearchOutcome& outcome, int pad, const std::string& format) {
  Json j{{"command", command}, {"pad", pad}, {"verdict", to_string(outcome.verdict)}, {"nodes", outcome.stats.nodes}};
  if (outcome.witness) {
    j["witness"] = to_json(*outcome.witness);
    j["witness_text"] = format_any(*outcome.witness, format);
  }
  return j;
}

int verdict_exit(Verdict v, bool sat_is_holds) {
  if (v == Verdict::Indeterminate) return kExitError;
  return (v == Verdict::Sat) == sat_is_holds ? kExitHolds : kExitFails;
}

// ------------------------------------------------------------------- commands

int cmd_is_goe(const Options& o, std::ostream& out) {
  const LocalRule rule = load_rule(o.rule);
  const TraceConstants constants = load_constants(o, rule);
  require_verified(constants, rule);
  const Pattern p = read_input_pattern(o.input);
  const SearchOutcome r = find_preimage(rule, pad0(p, constants.c), SearchBudget{o.budget_nodes});
  Json j = search_json("is-goe", r, constants.c, o.format);
  if (r.verdict != Verdict::Indeterminate) j["answer"] = r.verdict == Verdict::Unsat ? "GoE" : "not GoE";
  emit(out, o, j);
  return verdict_exit(r.verdict, true);
}

int cmd_is_orphan(const Options& o, std::ostream& out) {
  const LocalRule rule = load_rule(o.rule);
  const Pattern p = read_input_pattern(o.input);
  if (o.pad < 0) throw UsageError("--pad must be non-negative");
  const SearchOutcome r = find_preimage(rule, pad0(p, o.pad), SearchBudget{o.budget_nodes});
  Json j = search_json("is-orphan", r, o.pad, o.format);
  if (r.verdict != Verdict::Indeterminate) j["answer"] = r.verdict == Verdict::Unsat ? "orphan" : "not orphan";
  emit(out, o, j);
  return verdict_exit(r.verdict, true);
}

int cmd_find_preimage(const Options& o, std::ostream& out) {
  const LocalRule rule = load_rule(o.rule);
  if (o.pad < 0) throw UsageError("--pad must be non-negative");
  const Pattern p = read_input_pattern(o.input);
  const SearchOutcome r = find_preimage(rule, pad0(p, o.pad), SearchBudget{o.budget_nodes});
  emit(out, o, search_json("find-preimage", r, o.pad, o.format));
  return verdict_exit(r.verdict, true);
}

int cmd_to_dimacs(const Options& o, std::ostream& out) {
  const LocalRule rule = load_rule(o.rule);
  if (o.pad < 0) throw UsageError("--pad must be non-negative");
  const Pattern p = read_input_pattern(o.input);
  const std::string cnf = to_dimacs(PreimageProblem{rule, pad0(p, o.pad)});
  if (o.output.empty()) {
    out << cnf;
  } else {
    write_text_file(o.output, cnf);
    std::istringstream in(cnf);
    std::string line;
    while (std::getline(in, line))
      if (line.rfind("p cnf", 0) == 0) out << line << "\n";
  }
  return kExitHolds;
}

int cmd_periodize(const Options& o, std::ostream& out) {
  const LocalRule rule = load_rule(o.rule);
  const TraceConstants constants = load_constants(o, rule);
  require_verified(constants, rule);
  const Pattern yp = centered(read_input_pattern(o.input));
  const FiniteConfig y(yp);
  const Rect s = y.support_box();
  int N = 0;
  if (!s.empty()) N = std::max({std::abs(s.x), std::abs(s.x_end() - 1), std::abs(s.y), std::abs(s.y_end() - 1)});
  int reach = 0;
  for (const auto& d : constants.directions) reach = std::max(reach, d.k + d.p);
  const int r = rule.radius();
  const int need = N + r + reach;

  Pattern window;
  std::uint64_t nodes = 0;
  if (!o.window_file.empty()) {
    window = centered(read_input_pattern(o.window_file));
  } else {
    const Rect target{-need + r, -need + r, 2 * (need - r) + 1, 2 * (need - r) + 1};
    const SearchOutcome found = find_preimage(rule, yp.embedded(target), SearchBudget{o.budget_nodes});
    nodes = found.stats.nodes;
    if (found.verdict == Verdict::Indeterminate) throw BudgetExceeded("preimage search for the padded window ran out of budget");
    if (found.verdict == Verdict::Unsat) {
      emit(out, o, Json{{"command", "periodize"}, {"answer", "no preimage"}, {"nodes", nodes}});
      return kExitFails;
    }
    window = *found.witness;
  }
  const PeriodizationResult res = periodize(rule, y, window, constants);
  Json j{{"command", "periodize"},
         {"verified", res.certificate.verified},
         {"protected_agrees", res.certificate.protected_agrees},
         {"nodes", nodes},
         {"config", to_json(res.config)},
         {"certificate", to_json(res.certificate)}};
  emit(out, o, j);
  return res.certificate.verified && res.certificate.protected_agrees ? kExitHolds : kExitFails;
}

int cmd_encode(const Options& o, std::ostream& out) {
  const Pattern p = centered(read_input_pattern(o.input));
  const EncodedConfig e = encode_config(FiniteConfig(p), payload_order(o.order));
  emit(out, o, Json{{"command", "encode"}, {"order", o.order}, {"M", e.M}, {"N", e.N}, {"word", word_to_string(e.word)}});
  return kExitHolds;
}

int cmd_decode(const Options& o, std::ostream& out) {
  std::string text = o.input;
  if (fs::exists(text)) text = read_text_file(text);
  const std::vector<Symbol> word = word_from_string(text);
  const FiniteConfig y = decode_config(word, 2, payload_order(o.order));
  out << format_any(y.pattern(), o.format, payload_order(o.order));
  if (!o.output.empty()) write_text_file(o.output, format_any(y.pattern(), o.format, payload_order(o.order)));
  return kExitHolds;
}

int cmd_render(const Options& o, std::ostream& out) {
  if (o.input.empty()) throw UsageError("missing input file");
  if (fs::path(o.input).extension() == ".json") {
    const Json j = Json::parse(read_text_file(o.input));
    std::optional<SemilinearConfig> x;
    if (j.contains("core")) {
      x = semilinear_from_json(j);
    } else if (j.contains("config")) {
      x = semilinear_from_json(j.at("config"));
    } else {
      throw UsageError("JSON input is neither a semilinear configuration nor a periodize report");
    }
    int R = o.view;
    if (R < 0) {
      const auto& b = x->core();
      R = std::max({std::abs(b.x0), std::abs(b.x1), std::abs(b.y0), std::abs(b.y1)}) + x->periods().max() + 1;
    }
    out << render(*x, Rect{-R, -R, 2 * R + 1, 2 * R + 1});
    return kExitHolds;
  }
  out << format_any(read_input_pattern(o.input), o.format, payload_order(o.order));
  return kExitHolds;
}

int cmd_trace_report(const Options& o, std::ostream& out) {
  const LocalRule rule = load_rule(o.rule);
  ConstantsOptions co;
  co.ell_max = o.ell_max;
  co.k_max = o.k_max;
  co.p_max = o.p_max;
  co.limits = limits_of(o);
  const ConstantsReport rep = compute_trace_constants(rule, co);
  Json j{{"command", "trace-report"}, {"rule", rule_label(o.rule)}, {"fingerprint", rule.fingerprint()}};
  j["report"] = to_json(rep);
  out << j.dump(2) << "\n";
  if (!o.output.empty()) {
    // The constants alone, in the form --constants expects.
    if (rep.complete) write_text_file(o.output, to_json(rep.constants).dump(2) + "\n");
    else write_text_file(o.output, j.dump(2) + "\n");
  }
  return rep.complete ? kExitHolds : kExitFails;
}

int cmd_sweep_rules(const Options& o, std::ostream& out) {
  Json rows = Json::array();
  if (o.probe_width > 0) {
    // Smallest orphan padding of every pattern of the given size.
    const LocalRule rule = load_rule(o.rule);
    const int w = o.probe_width, h = o.probe_height > 0 ? o.probe_height : o.probe_width;
    if (w * h > 20) throw UsageError("probe patterns are limited to 20 cells");
    std::map<std::string, int> histogram;
    Json flagged = Json::array();
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (w * h)); ++code) {
      Pattern p(Rect{0, 0, w, h});
      for (int i = 0; i < w * h; ++i) p.set(i % w, i / w, Symbol((code >> i) & 1));
      std::optional<int> least;
      for (int c = 0; c <= 4 && !least; ++c)
        if (is_orphan(rule, pad0(p, c), SearchBudget{o.budget_nodes})) least = c;
      histogram[least ? std::to_string(*least) : "none"]++;
      if (least && *least == 4) flagged.push_back(format_pattern(p));
    }
    Json hist;
    for (const auto& [k, v] : histogram) hist[k] = v;
    emit(out, o, Json{{"command", "sweep-rules"}, {"probe", "least orphan padding"}, {"width", w}, {"height", h},
                      {"histogram", hist}, {"orphan_only_at_4", flagged}});
    return kExitHolds;
  }
  if (o.rules.empty()) throw UsageError("sweep-rules needs at least one rule (e.g. B3/S23 B36/S23)");
  for (const auto& spec : o.rules) {
    Json row{{"rule", spec}};
    try {
      const LocalRule rule = load_rule(spec);
      ConstantsOptions co;
      co.ell_max = o.ell_max;
      co.k_max = o.k_max;
      co.p_max = o.p_max;
      co.limits = limits_of(o);
      const ConstantsReport rep = compute_trace_constants(rule, co);
      row["complete"] = rep.complete;
      row["stable_at"] = rep.stability.stable_at ? Json(*rep.stability.stable_at) : Json(nullptr);
      if (rep.complete) {
        row["k"] = rep.constants.k;
        row["p"] = rep.constants.p;
        row["C"] = rep.constants.C;
        row["c"] = rep.constants.c;
      } else {
        row["failure"] = rep.failure;
      }
    } catch (const automata::CapacityError& e) {
      row["complete"] = false;
      row["failure"] = std::string("capacity: ") + e.what();
    }
    rows.push_back(row);
  }
  emit(out, o, Json{{"command", "sweep-rules"}, {"rules", rows}});
  return kExitHolds;
}

// ------------------------------------------------------------- verify-paper

struct Check {
  std::string name;
  bool pass = false;
  Json detail;
};

Json check_json(const Check& c) { return Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}}; }

std::vector<Symbol> digits(const std::string& s) {
  std::vector<Symbol> v;
  for (char ch : s) v.push_back(Symbol(ch - '0'));
  return v;
}

std::string row_string(const std::vector<Symbol>& row) {
  std::string s;
  for (Symbol v : row) s.push_back(char('0' + v));
  return s;
}

int cmd_verify_paper(const Options& o, std::ostream& out) {
  const LocalRule rule = load_rule(o.rule);
  const ForbiddenSet f = derive_forbidden(rule);
  const int n = f.stripe_height();
  const automata::Limits limits = limits_of(o);
  const bool life = rule.fingerprint() == game_of_life().fingerprint();
  std::vector<Check> checks;

  if (!life && !o.ell && !o.k && !o.p) {
    ConstantsOptions co;
    co.limits = limits;
    const ConstantsReport rep = compute_trace_constants(rule, co);
    Check c{"trace constants established", rep.complete, to_json(rep)};
    checks.push_back(c);
  } else {
    const TraceConstants expected = life_constants();
    const int ell = o.ell.value_or(expected.ell), k = o.k.value_or(expected.k), p = o.p.value_or(expected.p);

    const StabilityResult st = check_stable(f, n, ell, limits);
    {
      Check c{"traces stable at l = " + std::to_string(ell), st.stable_at == ell, to_json(st)};
      checks.push_back(c);
    }
    if (life) {
      TraceLadder ladder(f, n, limits);
      const StripeAlphabet alphabet(2, n);
      const auto w = alphabet.word_of(life_separating_word());
      const bool in3 = ladder.S(3).accepts(w), in4 = ladder.S(4).accepts(w);
      checks.push_back({"separating word in S(2,3) but not in S(2,4)", in3 && !in4,
                        Json{{"in_S3", in3}, {"in_S4", in4}, {"word", to_json(w)}}});
      const auto u6 = automata::universal_up_to_length(ladder.S(1), 6);
      checks.push_back({"S(2,1) contains every word of length 6", u6.holds,
                        Json{{"first_missing", to_json(u6.first_missing)}}});

      Pattern win(Coordinate{0, 0}, 7, 2);
      const std::string top = "0100010", bottom = "0101010";
      for (int i = 0; i < 7; ++i) {
        win.set_local(i, 1, Symbol(top[std::size_t(i)] - '0'));
        win.set_local(i, 0, Symbol(bottom[std::size_t(i)] - '0'));
      }
      const auto fr = forced_rows(f, win, 1);
      const bool forced = !fr.empty() && fr[0].unique() && fr[0].rows[0] == digits("0001000");
      Json first = Json::array();
      if (!fr.empty())
        for (const auto& r : fr[0].rows) first.push_back(row_string(r));
      checks.push_back({"window 0100010/0101010 forces the row 0001000", forced, Json{{"rows", first}}});
      const auto p0 = forced_rows(f, make_Pn_pattern(0), 9);
      bool periodic = p0.size() >= 6;
      for (std::size_t i = 0; i < p0.size() && periodic; ++i) {
        if (!p0[i].unique()) periodic = i >= 6;
        if (i >= 3 && p0[i].unique() && p0[i].rows[0] != p0[i - 3].rows[0]) periodic = false;
      }
      Json rows = Json::array();
      for (const auto& s : p0) rows.push_back(s.unique() ? Json(row_string(s.rows[0])) : Json(s.rows.size()));
      checks.push_back({"P_0 is forced with vertical period 3", periodic, Json{{"rows", rows}}});
    }

    if (st.stable_at && *st.stable_at == ell) {
      const auto ext = min_extension_constant(f, n, ell, std::nullopt, limits);
      const bool ok = ext.C && (!life || *ext.C == expected.C);
      checks.push_back({"extension constant", ok, to_json(ext)});
      const auto per = check_periodizable(f, st, k, p, limits);
      checks.push_back({"S is contained in P(n, " + std::to_string(k) + ", " + std::to_string(p) + ")", per.holds,
                        to_json(per)});
      if (!o.skip_probes) {
        std::vector<std::pair<int, int>> probes;
        if (k > 0) probes.push_back({k - 1, p});
        if (p > 1) probes.push_back({k, p - 1});
        if (p > 2) probes.push_back({k, 1});
        for (const auto& [pk, pp] : probes) {
          const auto r = check_periodizable(f, st, pk, pp, limits);
          checks.push_back({"S is not contained in P(n, " + std::to_string(pk) + ", " + std::to_string(pp) + ")",
                            !r.holds, to_json(r)});
        }
      }
    }
  }

  Json list = Json::array();
  bool all = true;
  std::vector<std::string> failed;
  for (const auto& c : checks) {
    list.push_back(check_json(c));
    if (!c.pass) {
      all = false;
      failed.push_back(c.name);
    }
  }
  emit(out, o, Json{{"command", "verify-paper"}, {"rule", rule_label(o.rule)}, {"fingerprint", rule.fingerprint()},
                    {"pass", all}, {"failed", failed}, {"checks", list}});
  return all ? kExitHolds : kExitFails;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Garden-of-Eden and trace tools for two-dimensional cellular automata", "lifetrace"};
  app.require_subcommand(1);
  app.add_option("--rule", o.rule, "life, zero, identity, B../S.. notation or a rule file")->capture_default_str();
  app.add_option("--budget-nodes", o.budget_nodes, "search node budget")->capture_default_str();
  app.add_option("--max-states", o.max_states, "automaton state budget")->capture_default_str();
  app.add_option("--threads", o.threads, "worker threads (results do not depend on it)")->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "pattern output format")
      ->check(CLI::IsMember({"text", "rle", "binary-encoding"}))
      ->capture_default_str();
  app.add_option("--output", o.output, "also write the result to this file");
  app.add_option("--constants", o.constants_file, "trace constants JSON (from trace-report --output)");

  std::string selected;
  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    s->callback([&selected, name] { selected = name; });
    return s;
  };

  auto* verify = sub("verify-paper", "re-run the machine-checked claims about Life's traces");
  verify->add_option("--ell", o.ell, "force the stability level");
  verify->add_option("--k", o.k, "force the preperiod");
  verify->add_option("--p", o.p, "force the period");
  verify->add_flag("--skip-probes", o.skip_probes, "skip the optimality probes for k and p");

  auto* goe = sub("is-goe", "is conf_0(pattern) a Garden of Eden?");
  goe->add_option("pattern", o.input, "pattern file")->required();
  auto* orphan = sub("is-orphan", "is the zero-padded pattern an orphan?");
  orphan->add_option("pattern", o.input, "pattern file")->required();
  orphan->add_option("--pad", o.pad, "zero padding thickness")->capture_default_str();
  auto* pre = sub("find-preimage", "search a preimage of the zero-padded pattern");
  pre->add_option("pattern", o.input, "pattern file")->required();
  pre->add_option("--pad", o.pad, "zero padding thickness")->capture_default_str();
  auto* per = sub("periodize", "build a verified semilinear preimage of conf_0(pattern)");
  per->add_option("pattern", o.input, "pattern file (centred at the origin)")->required();
  per->add_option("--window", o.window_file, "preimage window to start from (centred); searched when absent");
  auto* dimacs = sub("to-dimacs", "CNF whose models are preimages of the zero-padded pattern");
  dimacs->add_option("pattern", o.input, "pattern file")->required();
  dimacs->add_option("--pad", o.pad, "zero padding thickness")->capture_default_str();
  auto* enc = sub("encode", "word encoding 0^M 1^N 0 u of conf_0(pattern)");
  enc->add_option("pattern", o.input, "pattern file (centred at the origin)")->required();
  enc->add_option("--order", o.order, "payload order: row or column")->capture_default_str();
  auto* dec = sub("decode", "pattern of an encoded word");
  dec->add_option("word", o.input, "word or file holding it")->required();
  dec->add_option("--order", o.order, "payload order: row or column")->capture_default_str();
  auto* ren = sub("render", "print a pattern, a semilinear configuration or a periodize report");
  ren->add_option("input", o.input, "pattern or JSON file")->required();
  ren->add_option("--view", o.view, "half-width of the displayed window for configurations");
  ren->add_option("--order", o.order, "payload order for binary-encoding")->capture_default_str();
  auto* trace = sub("trace-report", "stability, extension constant and (k, p) sweep for a rule");
  trace->add_option("--ell-max", o.ell_max)->capture_default_str();
  trace->add_option("--k-max", o.k_max)->capture_default_str();
  trace->add_option("--p-max", o.p_max)->capture_default_str();
  auto* sweep = sub("sweep-rules", "trace constants for several rules, or a padding probe");
  sweep->add_option("rules", o.rules, "rules in B../S.. notation");
  sweep->add_option("--ell-max", o.ell_max)->capture_default_str();
  sweep->add_option("--k-max", o.k_max)->capture_default_str();
  sweep->add_option("--p-max", o.p_max)->capture_default_str();
  sweep->add_option("--probe-width", o.probe_width, "probe every pattern of this width for its least orphan padding");
  sweep->add_option("--probe-height", o.probe_height, "height of probed patterns (defaults to the width)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitHolds;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitHolds;
  } catch (const CLI::ParseError& e) {
    err << "lifetrace: " << e.what() << "\n";
    return kExitError;
  }

  try {
    if (selected == "verify-paper") return cmd_verify_paper(o, out);
    if (selected == "is-goe") return cmd_is_goe(o, out);
    if (selected == "is-orphan") return cmd_is_orphan(o, out);
    if (selected == "find-preimage") return cmd_find_preimage(o, out);
    if (selected == "periodize") return cmd_periodize(o, out);
    if (selected == "to-dimacs") return cmd_to_dimacs(o, out);
    if (selected == "encode") return cmd_encode(o, out);
    if (selected == "decode") return cmd_decode(o, out);
    if (selected == "render") return cmd_render(o, out);
    if (selected == "trace-report") return cmd_trace_report(o, out);
    if (selected == "sweep-rules") return cmd_sweep_rules(o, out);
    err << "lifetrace: no command\n";
    return kExitError;
  } catch (const BudgetExceeded& e) {
    err << "lifetrace: budget exceeded: " << e.what() << "\n";
  } catch (const automata::CapacityError& e) {
    err << "lifetrace: state budget exceeded: " << e.what() << "\n";
  } catch (const NotPeriodizable& e) {
    err << "lifetrace: " << e.what() << "\n";
  } catch (const nlohmann::json::exception& e) {
    err << "lifetrace: bad JSON: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "lifetrace: " << e.what() << "\n";
  } catch (const std::runtime_error& e) {
    err << "lifetrace: " << e.what() << "\n";
  }
  return kExitError;
}

}  // namespace lifetrace::cli
