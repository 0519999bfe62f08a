#include <algorithm>
#include <iomanip>
#include <sstream>
#include <type_traits>

#include "json.hpp"

#include "mackey/error.hpp"
#include "mackey/report/json_location.hpp"
#include "mackey/report/report.hpp"

namespace mackey::report {

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(MackeyRecord, name, group, h, k, rho, status, error,
                                   first_violation, lhs_dim, rhs_dim, index_h,
                                   coset_representatives, per_coset_dims, per_coset_indices,
                                   dimension_identity, dims_equal, map_is_equivariant,
                                   equivariance_elements_checked, map_is_bijective,
                                   round_trip_identity, support_identity, characters_equal,
                                   rotation_checked, rotation_consistent, corollary_checked,
                                   corollary_lhs_dim, corollary_rhs_dim, induction_checks,
                                   induction_mismatches, witness)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CorollaryRecord, name, group, k, h, sigma, tau, status, error,
                                   lhs_dim, rhs_dim, per_coset, induction_checks,
                                   induction_mismatches)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ObligationRecord, name, kind, discharged, detail)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(DiscreteRecord, name, lambda1, lambda2, conductor, window,
                                   trials, seed, status, error, partition_elements,
                                   partition_disagreements, rhs_gn_dims, rhs_gprime_dim, rhs_total,
                                   lhs_obligations, refuter_successes, lhs_total, lhs_established,
                                   mismatch)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(PadicLevelRecord, level, n, n_matches_formula, k_factor_in_k,
                                   u_n_in_u, element, m_n, identity_check, parity_check, trials,
                                   outside_k, valuation_minus_one, refuted)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(PadicRecord, name, p, precision, h_level, experimental, trials,
                                   seed, status, error, levels, witness_n_max,
                                   witness_samples_per_n, witness_total, witness_deviations)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(TimingRecord, section, name, milliseconds)

namespace {

template <class Records>
void tally(const Records& records, RunReport& report, bool& all_pass) {
  for (const auto& r : records) {
    ++report.records;
    bool experimental = false;
    if constexpr (std::is_same_v<typename Records::value_type, PadicRecord>) {
      experimental = r.experimental;
    }
    if (experimental) {
      ++report.experimental;
    } else if (r.status == "pass") {
      ++report.passed;
    } else {
      ++report.failed;
      all_pass = false;
    }
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

void finalize(RunReport& report) {
  report.records = report.passed = report.failed = report.experimental = 0;
  bool all_pass = true;
  tally(report.mackey, report, all_pass);
  tally(report.corollary, report, all_pass);
  tally(report.discrete, report, all_pass);
  tally(report.padic, report, all_pass);
  report.verdict = all_pass ? "pass" : "fail";
}

std::string to_structured(const RunReport& report) {
  nlohmann::json j;
  j["schema"] = report.schema;
  j["seed"] = report.seed;
  j["mackey"] = report.mackey;
  j["corollary"] = report.corollary;
  j["discrete"] = report.discrete;
  j["padic"] = report.padic;
  j["records"] = report.records;
  j["passed"] = report.passed;
  j["failed"] = report.failed;
  j["experimental"] = report.experimental;
  j["verdict"] = report.verdict;
  if (!report.timing.empty()) j["timing"] = report.timing;
  return j.dump(2) + "\n";
}

RunReport from_structured(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed report: " + std::string(e.what()), line, column);
  }
  const auto offsets = value_offsets(text);
  auto locate = [&](const std::string& pointer) {
    auto it = offsets.find(pointer);
    return line_column(text, it == offsets.end() ? 0 : it->second);
  };
  if (!j.is_object() || !j.contains("schema") || j["schema"] != kSchema) {
    auto [line, column] = locate("/schema");
    throw ParseError(std::string("report schema tag is not ") + kSchema, line, column);
  }
  try {
    RunReport r;
    r.schema = j.at("schema").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.mackey = j.at("mackey").get<std::vector<MackeyRecord>>();
    r.corollary = j.at("corollary").get<std::vector<CorollaryRecord>>();
    r.discrete = j.at("discrete").get<std::vector<DiscreteRecord>>();
    r.padic = j.at("padic").get<std::vector<PadicRecord>>();
    r.records = j.at("records").get<std::size_t>();
    r.passed = j.at("passed").get<std::size_t>();
    r.failed = j.at("failed").get<std::size_t>();
    r.experimental = j.at("experimental").get<std::size_t>();
    r.verdict = j.at("verdict").get<std::string>();
    if (j.contains("timing")) r.timing = j.at("timing").get<std::vector<TimingRecord>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("report does not match the schema: " + std::string(e.what()), 1, 1);
  }
}

std::string to_table(const RunReport& report) {
  std::size_t name_width = 6;
  auto widen = [&](const auto& records) {
    for (const auto& r : records) name_width = std::max(name_width, r.name.size() + 2);
  };
  widen(report.mackey);
  widen(report.corollary);
  widen(report.discrete);
  widen(report.padic);
  const int width = static_cast<int>(name_width);
  std::ostringstream out;
  out << std::left << std::setw(10) << "section" << std::setw(width) << "name" << std::setw(8)
      << "status" << "details\n";
  auto row = [&](const std::string& section, const std::string& name, const std::string& status,
                 const std::string& details) {
    out << std::setw(10) << section << std::setw(width) << name << std::setw(8) << status << details
        << "\n";
  };
  for (const auto& r : report.mackey) {
    std::string d = r.error.empty()
                        ? "dim " + std::to_string(r.lhs_dim) + "=" + std::to_string(r.rhs_dim) +
                              " cosets " + std::to_string(r.coset_representatives.size()) +
                              " bijective " + yes_no(r.map_is_bijective) + " round-trip " +
                              yes_no(r.round_trip_identity)
                        : r.error;
    if (!r.first_violation.empty()) d += " | " + r.first_violation;
    row("mackey", r.name, r.status, d);
  }
  for (const auto& r : report.corollary) {
    row("corollary", r.name, r.status,
        r.error.empty() ? "hom " + std::to_string(r.lhs_dim) + "=" + std::to_string(r.rhs_dim)
                        : r.error);
  }
  for (const auto& r : report.discrete) {
    row("discrete", r.name, r.status,
        r.error.empty() ? "lhs " + std::to_string(r.lhs_total) + " rhs " +
                              std::to_string(r.rhs_total) + " mismatch " + yes_no(r.mismatch)
                        : r.error);
  }
  for (const auto& r : report.padic) {
    std::size_t refuted = 0;
    for (const auto& l : r.levels) refuted += l.refuted ? 1 : 0;
    std::string d = r.error.empty()
                        ? "levels refuted " + std::to_string(refuted) + "/" +
                              std::to_string(r.levels.size()) + " witness deviations " +
                              std::to_string(r.witness_deviations) + "/" +
                              std::to_string(r.witness_total)
                        : r.error;
    if (r.experimental) d += " (experimental, h_level " + std::to_string(r.h_level) + ")";
    row("padic", r.name, r.status, d);
  }
  out << "verdict: " << report.verdict << " (" << report.passed << " passed, " << report.failed
      << " failed, " << report.experimental << " experimental)\n";
  return out.str();
}

std::string emit_report(const RunReport& report, Format format) {
  return format == Format::structured ? to_structured(report) : to_table(report);
}

}  // namespace mackey::report
