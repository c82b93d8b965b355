#include "lifetrace/constants.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace lifetrace {

namespace {

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (v > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    v *= base;
  }
  return v;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

struct Candidate {
  int k, p;
};

bool implied_fail(const Candidate& c, const Candidate& failed) {
  return c.k <= failed.k && failed.p % c.p == 0;
}

bool implied_hold(const Candidate& c, const Candidate& held) {
  return c.k >= held.k && c.p % held.p == 0;
}

}  // namespace

int TraceConstants::padding(int direction) const {
  const auto& d = directions.at(std::size_t(direction));
  return int(d.C) + d.ell;
}

void finalize_constants(TraceConstants& t) {
  t.c = int(t.C) + t.ell;
  const auto A = std::uint64_t(t.alphabet_size);
  const auto kp = std::uint64_t(t.k + t.p);
  t.q = saturating_mul(std::uint64_t(t.p), saturating_pow(A, 2 * std::uint64_t(t.n) * kp));
  t.q_refined = saturating_mul(std::uint64_t(t.p), saturating_pow(A, std::uint64_t(t.n) * kp));
}

TraceConstants life_constants() {
  TraceConstants t;
  t.alphabet_size = 2;
  t.radius = 1;
  t.n = 2;
  t.ell = 4;
  t.k = 3;
  t.p = 3;
  t.C = 0;
  for (auto& d : t.directions) d = DirectionConstants{4, 3, 3, 0};
  finalize_constants(t);
  t.provenance.verified = true;
  t.provenance.rule_fingerprint = game_of_life().fingerprint();
  t.provenance.method = "builtin Life constants, rechecked by the acceptance suite";
  return t;
}

void require_verified(const TraceConstants& t, const LocalRule& rule) {
  if (!t.provenance.verified) throw std::invalid_argument("trace constants are not verified");
  if (t.provenance.rule_fingerprint != rule.fingerprint())
    throw std::invalid_argument("trace constants were established for a different rule");
}

ConstantsReport compute_trace_constants(const LocalRule& rule, const ConstantsOptions& options) {
  ConstantsReport report;
  const ForbiddenSet f = derive_forbidden(rule);
  const int n = f.stripe_height();
  TraceConstants& t = report.constants;
  t.alphabet_size = rule.alphabet_size();
  t.radius = rule.radius();
  t.n = n;
  t.provenance.rule_fingerprint = rule.fingerprint();
  t.provenance.method = "compute_trace_constants";

  report.stability = check_stable(f, n, options.ell_max, options.limits);
  if (!report.stability.stable_at) {
    report.failure = "traces not stable up to l = " + std::to_string(options.ell_max);
    return report;
  }
  const int ell = *report.stability.stable_at;
  t.ell = ell;

  report.extension = min_extension_constant(f, n, ell, options.C_max, options.limits);
  if (!report.extension.C) {
    report.failure = "no extension constant up to " + std::to_string(report.extension.C_max);
    return report;
  }
  t.C = *report.extension.C;

  std::vector<std::vector<Candidate>> levels;
  for (int m = 1; m <= std::max(options.k_max, options.p_max); ++m) {
    std::vector<Candidate> level;
    for (int k = 0; k <= std::min(m, options.k_max); ++k)
      for (int p = 1; p <= std::min(m, options.p_max); ++p)
        if (std::max(k, p) == m) level.push_back({k, p});
    std::sort(level.begin(), level.end(), [](const Candidate& a, const Candidate& b) {
      if (a.k + a.p != b.k + b.p) return a.k + a.p > b.k + b.p;
      return a.p > b.p;
    });
    if (!level.empty()) levels.push_back(std::move(level));
  }

  const RotationClasses rc = rotation_classes(f);
  bool all_found = true;
  for (int i = 0; i < 4; ++i) {
    const auto ui = std::size_t(i);
    if (rc.same_as[ui] != i) {
      t.directions[ui] = t.directions[std::size_t(rc.same_as[ui])];
      continue;
    }
    TraceLadder ladder(rc.rotated[ui], n, options.limits);
    const automata::Dfa& trace = report.stability.traces[ui];
    std::vector<Candidate> failed, held;
    std::optional<Candidate> chosen;
    for (const auto& level : levels) {
      for (const Candidate& c : level) {
        SweepEntry e{i, c.k, c.p, SweepOutcome::Fails, std::nullopt, std::nullopt};
        auto fail_it = std::find_if(failed.begin(), failed.end(), [&](const Candidate& x) { return implied_fail(c, x); });
        auto hold_it = std::find_if(held.begin(), held.end(), [&](const Candidate& x) { return implied_hold(c, x); });
        if (fail_it != failed.end()) {
          e.outcome = SweepOutcome::ImpliedFails;
          e.implied_by = std::make_pair(fail_it->k, fail_it->p);
        } else if (hold_it != held.end()) {
          e.outcome = SweepOutcome::ImpliedHolds;
          e.implied_by = std::make_pair(hold_it->k, hold_it->p);
          held.push_back(c);
        } else {
          const auto inc = includes_in_pre_image(trace, ladder.P_base(c.k, c.p), rc.rotated[ui], n, options.limits);
          e.outcome = inc.holds ? SweepOutcome::Holds : SweepOutcome::Fails;
          e.witness = inc.counterexample;
          (inc.holds ? held : failed).push_back(c);
        }
        report.sweep.push_back(std::move(e));
      }
      // Smallest holding candidate of this level in the ranking order.
      for (auto it = level.rbegin(); it != level.rend(); ++it)
        if (std::any_of(held.begin(), held.end(), [&](const Candidate& x) { return x.k == it->k && x.p == it->p; })) {
          chosen = *it;
          break;
        }
      if (chosen) break;
    }
    if (!chosen) {
      all_found = false;
      continue;
    }
    t.directions[ui] = DirectionConstants{ell, chosen->k, chosen->p, *report.extension.per_direction[ui]};
  }
  if (!all_found) {
    report.failure = "no periodizable (k, p) with k <= " + std::to_string(options.k_max) +
                     " and p <= " + std::to_string(options.p_max);
    return report;
  }
  t.k = 0;
  t.p = 1;
  for (const auto& d : t.directions) {
    t.k = std::max(t.k, d.k);
    t.p = std::lcm(t.p, d.p);
  }
  finalize_constants(t);
  t.provenance.verified = true;
  report.complete = true;
  return report;
}

}  // namespace lifetrace
