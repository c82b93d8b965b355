#pragma once

// JSON forms of the library's values. Readers throw std::invalid_argument on
// malformed input (missing keys, wrong types, inconsistent sizes).
//
// Automata are written as {"alphabet": A, "states": Q, "initial": [...],
// "final": [...], "transitions": [[from, letter, to], ...]}; a DFA has a
// single initial state and one transition per (state, letter).
//
// Patterns are {"x": x0, "y": y0, "rows": [...]}, rows given north to south in
// the plain grid format.

#include <string>

#include "json.hpp"
#include "lifetrace/automata.hpp"
#include "lifetrace/ca.hpp"
#include "lifetrace/constants.hpp"
#include "lifetrace/preimage.hpp"
#include "lifetrace/semilinear.hpp"
#include "lifetrace/traces.hpp"

namespace lifetrace {

using Json = nlohmann::ordered_json;

Json to_json(const automata::Nfa& a);
Json to_json(const automata::Dfa& d);
automata::Nfa nfa_from_json(const Json& j);
automata::Dfa dfa_from_json(const Json& j);

// State count plus the language hash over words up to length 8.
Json fingerprint_json(const automata::Dfa& d);

Json to_json(const automata::Word& w);
Json to_json(const std::optional<automata::Word>& w);

Json to_json(const Pattern& p);
Pattern pattern_from_json(const Json& j);

Json to_json(const TraceConstants& t);
TraceConstants constants_from_json(const Json& j);

Json to_json(const StabilityResult& s);
Json to_json(const PeriodizabilityResult& r);
Json to_json(const ExtensionConstantResult& r);
Json to_json(const ConstantsReport& r);

Json to_json(const SearchOutcome& o);

Json to_json(const SemilinearConfig& x);
SemilinearConfig semilinear_from_json(const Json& j);
Json to_json(const PeriodizationCertificate& c);

}  // namespace lifetrace
