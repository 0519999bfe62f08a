// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "../unit/random_rep.hpp"
#include "mackey/discrete/example.hpp"
#include "mackey/engine/mackey.hpp"
#include "mackey/group/group_spec.hpp"
#include "mackey/rep/character.hpp"
#include "mackey/report/suite.hpp"

namespace {

using mackey::engine::MackeyInstance;
using mackey::engine::MackeyReport;
using mackey::group::Subgroup;
using mackey::rep::Representation;

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Every induce() in this process (outside suite runs, which audit their own)
// is compared with the induction formula for characters.
struct InductionTally {
  std::size_t checks = 0;
  std::size_t mismatches = 0;
};
InductionTally tally;

// Shared between criteria: the instances of 1 and 2 feed 4 and 5.
std::size_t instances_verified = 0;
std::size_t round_trip_failures = 0;
std::size_t suite_induction_checks = 0;
std::size_t suite_induction_mismatches = 0;
std::size_t suite_round_trip_failures = 0;
std::size_t suite_instances = 0;

MackeyReport verify(const Subgroup& k, Representation rho, std::uint64_t seed) {
  const auto inst = MackeyInstance::make(k, std::move(rho));
  mackey::engine::VerifyOptions options;
  options.seed = seed;
  options.compute_corollary = false;
  auto r = mackey::engine::verify_mackey(inst, options);
  ++instances_verified;
  if (!r.round_trip_identity) ++round_trip_failures;
  return r;
}

// Sum over K\G/H of [K : K cap gHg^-1], straight from the double cosets.
bool dimension_identity(const Subgroup& h, const Subgroup& k) {
  const auto d = mackey::group::enumerate_double_cosets(k, h);
  std::size_t sum = 0;
  for (auto g : d.representatives) {
    sum += k.order() / mackey::group::intersect(k, mackey::group::conjugate_subgroup(g, h)).order();
  }
  return sum * h.order() == h.group().order();
}

void absorb_suite(const mackey::report::RunReport& r) {
  for (const auto& m : r.mackey) {
    suite_induction_checks += m.induction_checks;
    suite_induction_mismatches += m.induction_mismatches;
    ++suite_instances;
    if (!m.round_trip_identity) ++suite_round_trip_failures;
  }
  for (const auto& c : r.corollary) {
    suite_induction_checks += c.induction_checks;
    suite_induction_mismatches += c.induction_mismatches;
  }
}

Outcome criterion_exhaustive_sweep() {
  std::size_t count = 0;
  std::size_t failures = 0;
  std::string first;
  for (const char* name : {"S3", "D4"}) {
    const auto g = mackey::group::parse_group_spec(name);
    const auto subs = mackey::group::all_subgroups(g);
    for (const auto& h : subs) {
      for (const auto& k : subs) {
        for (int which = 0; which < 3; ++which) {
          Representation rho = which == 0   ? Representation::trivial(h)
                               : which == 1 ? Representation::sign(h)
                                            : Representation::regular(h);
          const auto r = verify(k, std::move(rho), count);
          ++count;
          const bool ok = r.dims_equal && r.map_is_equivariant && r.map_is_bijective &&
                          r.characters_equal && r.passed();
          if (!ok) {
            ++failures;
            if (first.empty()) first = r.instance + ": " + r.first_violation;
          }
        }
      }
    }
  }
  return {failures == 0 && count > 0,
          std::to_string(count) + " instances, " + std::to_string(failures) + " failures" +
              (first.empty() ? "" : " (" + first + ")")};
}

Outcome criterion_dimension_identity() {
  std::size_t count = 0;
  std::size_t failures = 0;
  for (const char* name : {"S3", "D4"}) {
    const auto g = mackey::group::parse_group_spec(name);
    const auto subs = mackey::group::all_subgroups(g);
    for (const auto& h : subs) {
      for (const auto& k : subs) {
        ++count;
        if (!dimension_identity(h, k)) ++failures;
      }
    }
  }
  std::mt19937_64 rng(20240611);
  const std::vector<std::string> zoo{"S4", "Q8", "Z12", "D5"};
  for (int draw = 0; draw < 50; ++draw) {
    const std::string name = mackey::testing::pick(rng, zoo);
    const auto g = mackey::group::parse_group_spec(name);
    const auto subs = mackey::group::all_subgroups(g);
    const Subgroup h = mackey::testing::pick(rng, subs);
    const Subgroup k = mackey::testing::pick(rng, subs);
    ++count;
    if (!dimension_identity(h, k)) ++failures;
    // the full decomposition as well, with a random representation of H
    std::vector<std::string> specs;
    for (const auto& e : mackey::testing::group_zoo()) {
      if (e.name == name) specs = e.reps;
    }
    const auto r = verify(k, mackey::testing::random_rep_on(rng, h, specs), draw);
    if (!r.dimension_identity || !r.passed()) ++failures;
  }
  return {failures == 0, std::to_string(count) + " (G,H,K) triples, " + std::to_string(failures) +
                             " failures"};
}

Outcome criterion_corollary() {
  const auto config =
      mackey::report::load_suite_config(std::string(MACKEY_CONFIG_DIR) + "/corollary_suite.json");
  const auto r = mackey::report::run_suite(config);
  absorb_suite(r);
  std::size_t equal = 0;
  for (const auto& c : r.corollary) {
    if (c.status == "pass" && c.lhs_dim == c.rhs_dim) ++equal;
  }
  return {r.corollary.size() >= 30 && equal == r.corollary.size(),
          std::to_string(equal) + "/" + std::to_string(r.corollary.size()) +
              " instances with equal Hom dimensions"};
}

Outcome criterion_character_oracle() {
  const std::size_t checks = tally.checks + suite_induction_checks;
  const std::size_t mismatches = tally.mismatches + suite_induction_mismatches;
  return {checks > 0 && mismatches == 0,
          std::to_string(checks) + " induced representations, " + std::to_string(mismatches) +
              " mismatches"};
}

Outcome criterion_round_trip() {
  const std::size_t total = instances_verified + suite_instances;
  const std::size_t failures = round_trip_failures + suite_round_trip_failures;
  return {total > 0 && failures == 0,
          std::to_string(total) + " instances, " + std::to_string(failures) + " failures"};
}

Outcome criterion_discrete() {
  mackey::report::DiscreteEntry e;
  e.lambda1 = "1";
  e.lambda2 = "2";
  e.window = 10;
  e.trials = 100;
  const auto r = mackey::report::run_discrete_entry(e, 42);
  bool all_discharged = !r.lhs_obligations.empty();
  for (const auto& o : r.lhs_obligations) all_discharged = all_discharged && o.discharged;
  const bool ok = r.status == "pass" && r.rhs_total == 1 && r.lhs_total == 0 && all_discharged &&
                  r.refuter_successes >= 100 && r.mismatch;
  return {ok, "RHS " + std::to_string(r.rhs_total) + ", LHS " + std::to_string(r.lhs_total) +
                  ", refuter " + std::to_string(r.refuter_successes) + "/" +
                  std::to_string(r.trials) + (r.error.empty() ? "" : ", " + r.error)};
}

Outcome criterion_window_partition() {
  std::size_t elements = 0;
  std::size_t bad = 0;
  for (long w = 1; w <= 10; ++w) {
    const auto r = mackey::discrete::window_partition_check(w);
    elements += r.elements_checked;
    if (!r.ok()) ++bad;
  }
  return {bad == 0, std::to_string(elements) + " elements over W = 1..10, " +
                        std::to_string(bad) + " failing windows"};
}

Outcome criterion_padic() {
  mackey::report::PadicEntry e;
  e.p = 5;
  e.precision = 40;
  e.level_min = 1;
  e.level_max = 12;
  e.trials = 100;
  e.witness_n_max = 10;
  e.witness_samples = 200;
  const auto r = mackey::report::run_padic_entry(e, 42);
  std::size_t refuted = 0;
  for (const auto& l : r.levels) refuted += l.refuted ? 1 : 0;
  const bool ok = r.status == "pass" && r.levels.size() == 12 && refuted == 12 &&
                  r.witness_total == 11 * 200 && r.witness_deviations == 0;
  return {ok, std::to_string(refuted) + "/12 levels refuted, " +
                  std::to_string(r.witness_deviations) + " deviations in " +
                  std::to_string(r.witness_total) + " witness samples" +
                  (r.error.empty() ? "" : ", " + r.error)};
}

Outcome criterion_determinism() {
  auto config =
      mackey::report::load_suite_config(std::string(MACKEY_CONFIG_DIR) + "/default_suite.json");
  config.seed = 42;
  const auto a = mackey::report::run_suite(config);
  const auto b = mackey::report::run_suite(config);
  absorb_suite(a);
  const std::string sa = mackey::report::to_structured(a);
  const std::string sb = mackey::report::to_structured(b);
  return {sa == sb && a.verdict == "pass",
          std::to_string(sa.size()) + " bytes, " + (sa == sb ? "identical" : "different") +
              ", verdict " + a.verdict};
}

}  // namespace

int main() {
  mackey::rep::InductionObserver observer(
      [](const Representation& source, const Representation& result) {
        ++tally.checks;
        const auto oracle =
            mackey::rep::induced_character_oracle(mackey::rep::character_of(source), result.group());
        if (!(mackey::rep::character_of(result) == oracle)) ++tally.mismatches;
      });

  struct Criterion {
    int number;
    const char* name;
    double budget_seconds;  // 0: no time limit
    std::function<Outcome()> run;
  };
  // 4 and 5 aggregate over everything run before them, so they go last.
  const std::vector<Criterion> criteria{
      {1, "mackey decomposition, exhaustive S3 and D4 sweep", 60, criterion_exhaustive_sweep},
      {2, "dimension identity, sweep plus 50 random draws", 30, criterion_dimension_identity},
      {3, "hom-dimension corollary on 30 configured instances", 120, criterion_corollary},
      {6, "discrete counterexample, lambda1 = 1, lambda2 = 2", 10, criterion_discrete},
      {7, "window partition for W = 1..10", 5, criterion_window_partition},
      {8, "p-adic counterexample at p = 5, levels 1..12", 30, criterion_padic},
      {9, "default suite is byte-identical across runs with seed 42", 0, criterion_determinism},
      {4, "induced characters match the induction formula", 0, criterion_character_oracle},
      {5, "mackey map round trip is the identity", 0, criterion_round_trip},
  };

  std::vector<std::string> lines(10);
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.budget_seconds == 0 || secs < c.budget_seconds;
    const bool pass = o.ok && in_time;
    all = all && pass;
    char buf[96];
    if (c.budget_seconds > 0) {
      std::snprintf(buf, sizeof buf, " [%.2fs, limit %.0fs]", secs, c.budget_seconds);
    } else {
      std::snprintf(buf, sizeof buf, " [%.2fs]", secs);
    }
    lines[c.number] = std::string(pass ? "PASS" : "FAIL") + " criterion " +
                      std::to_string(c.number) + ": " + c.name + " -- " + o.detail + buf;
  }
  for (int i = 1; i <= 9; ++i) std::printf("%s\n", lines[i].c_str());
  return all ? 0 : 1;
}
