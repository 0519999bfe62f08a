#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

/// Plain data model of a suite run.  Everything is strings, integers and
/// booleans so that the structured form round-trips exactly.
namespace mackey::report {

inline constexpr const char* kSchema = "mackey-workbench/report/v1";

struct MackeyRecord {
  std::string name;
  std::string group;
  std::string h;
  std::string k;
  std::string rho;
  std::string status;  // "pass", "fail" or "error"
  std::string error;
  std::string first_violation;
  std::size_t lhs_dim = 0;
  std::size_t rhs_dim = 0;
  std::size_t index_h = 0;
  std::vector<std::string> coset_representatives;
  std::vector<std::size_t> per_coset_dims;
  std::vector<std::size_t> per_coset_indices;
  bool dimension_identity = false;
  bool dims_equal = false;
  bool map_is_equivariant = false;
  std::size_t equivariance_elements_checked = 0;
  bool map_is_bijective = false;
  bool round_trip_identity = false;
  bool support_identity = false;
  bool characters_equal = false;
  bool rotation_checked = false;
  bool rotation_consistent = false;
  bool corollary_checked = false;
  std::size_t corollary_lhs_dim = 0;
  std::size_t corollary_rhs_dim = 0;
  std::size_t induction_checks = 0;      // inductions compared with the character oracle
  std::size_t induction_mismatches = 0;
  std::vector<std::vector<std::string>> witness;  // rows of the Mackey map matrix
  friend bool operator==(const MackeyRecord&, const MackeyRecord&) = default;
};

struct CorollaryRecord {
  std::string name;
  std::string group;
  std::string k;
  std::string h;
  std::string sigma;
  std::string tau;
  std::string status;
  std::string error;
  std::size_t lhs_dim = 0;
  std::size_t rhs_dim = 0;
  std::vector<std::size_t> per_coset;
  std::size_t induction_checks = 0;
  std::size_t induction_mismatches = 0;
  friend bool operator==(const CorollaryRecord&, const CorollaryRecord&) = default;
};

struct ObligationRecord {
  std::string name;
  std::string kind;
  bool discharged = false;
  std::string detail;
  friend bool operator==(const ObligationRecord&, const ObligationRecord&) = default;
};

struct DiscreteRecord {
  std::string name;
  std::string lambda1;
  std::string lambda2;
  unsigned conductor = 1;
  long window = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::string status;
  std::string error;
  std::size_t partition_elements = 0;
  std::size_t partition_disagreements = 0;
  std::vector<std::size_t> rhs_gn_dims;  // n = -window .. window
  std::size_t rhs_gprime_dim = 0;
  std::size_t rhs_total = 0;
  std::vector<ObligationRecord> lhs_obligations;
  std::size_t refuter_successes = 0;
  std::size_t lhs_total = 0;
  bool lhs_established = false;
  bool mismatch = false;
  friend bool operator==(const DiscreteRecord&, const DiscreteRecord&) = default;
};

struct PadicLevelRecord {
  long level = 0;
  long n = 0;
  bool n_matches_formula = false;
  bool k_factor_in_k = false;
  bool u_n_in_u = false;
  std::vector<std::string> element;  // diag(1, p^(n+1)) u_n
  std::vector<std::string> m_n;      // its K-translate with top-right valuation -1
  bool identity_check = false;
  bool parity_check = false;
  std::size_t trials = 0;
  std::size_t outside_k = 0;
  std::size_t valuation_minus_one = 0;
  bool refuted = false;
  friend bool operator==(const PadicLevelRecord&, const PadicLevelRecord&) = default;
};

struct PadicRecord {
  std::string name;
  unsigned p = 5;
  long precision = 40;
  long h_level = 1;
  bool experimental = false;  // h_level != 1: reported without claims
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::string status;
  std::string error;
  std::vector<PadicLevelRecord> levels;
  long witness_n_max = 0;
  std::size_t witness_samples_per_n = 0;
  std::size_t witness_total = 0;
  std::size_t witness_deviations = 0;
  friend bool operator==(const PadicRecord&, const PadicRecord&) = default;
};

struct TimingRecord {
  std::string section;
  std::string name;
  double milliseconds = 0;
  friend bool operator==(const TimingRecord&, const TimingRecord&) = default;
};

struct RunReport {
  std::string schema = kSchema;
  std::uint64_t seed = 0;
  std::vector<MackeyRecord> mackey;
  std::vector<CorollaryRecord> corollary;
  std::vector<DiscreteRecord> discrete;
  std::vector<PadicRecord> padic;
  std::size_t records = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;    // includes errors
  std::size_t experimental = 0;
  std::string verdict = "pass";
  /// Wall-clock timings; empty unless requested, since they break byte equality.
  std::vector<TimingRecord> timing;
  friend bool operator==(const RunReport&, const RunReport&) = default;
};

/// Recomputes records/passed/failed/experimental and the verdict from the
/// record statuses.  Experimental records never affect the verdict.
void finalize(RunReport& report);

enum class Format { structured, table };

/// Structured form: pretty-printed JSON with sorted keys, trailing newline.
std::string to_structured(const RunReport& report);
/// Throws ParseError (line, column) on malformed input or a wrong schema tag.
RunReport from_structured(const std::string& text);
/// One row per record plus a verdict line.
std::string to_table(const RunReport& report);
std::string emit_report(const RunReport& report, Format format);

}  // namespace mackey::report
