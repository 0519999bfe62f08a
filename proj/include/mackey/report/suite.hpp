#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mackey/report/report.hpp"

namespace mackey::report {

struct MackeyEntry {
  std::string name;
  std::string group;  // group spec, e.g. "S4" or "perm: [(1 2),(1 2 3)]"
  std::string h;      // generator list, e.g. "[(1 2)]"; "[]" is the trivial group
  std::string k;
  std::string rho;    // representation spec on H
  bool rotation = false;
  bool corollary = true;
};

struct CorollaryEntry {
  std::string name;
  std::string group;
  std::string k;
  std::string h;
  std::string sigma;  // on K
  std::string tau;    // on H
};

struct DiscreteEntry {
  std::string name;
  std::string lambda1 = "1";
  std::string lambda2 = "2";
  unsigned conductor = 1;
  long window = 10;
  std::size_t trials = 100;
};

struct PadicEntry {
  std::string name;
  unsigned p = 5;
  long precision = 40;
  long level_min = 1;
  long level_max = 12;
  long search_bound = 19;
  std::size_t trials = 100;
  long h_level = 1;
  long witness_n_max = 10;
  std::size_t witness_samples = 200;
};

struct SuiteConfig {
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::vector<MackeyEntry> mackey;
  std::vector<CorollaryEntry> corollary;
  std::vector<DiscreteEntry> discrete;
  std::vector<PadicEntry> padic;
};

/// Parses the JSON suite configuration.  Throws ParseError with the line and
/// column of a syntax error, or of the offending entry for a schema error.
SuiteConfig parse_suite_config(const std::string& text);
SuiteConfig load_suite_config(const std::string& path);

struct RunOptions {
  unsigned jobs = 0;      // 0: use the config's value
  bool timing = false;    // include wall-clock timings in the report
};

/// Deterministic seed of the i-th task derived from the suite seed.
std::uint64_t task_seed(std::uint64_t suite_seed, std::size_t index);

/// Runs every configured check.  Failures, including invalid specs, are
/// recorded in the report and never thrown.  Records keep config order
/// regardless of the number of worker threads.
RunReport run_suite(const SuiteConfig& config, const RunOptions& options = {});

MackeyRecord run_mackey_entry(const MackeyEntry& entry, std::uint64_t seed);
CorollaryRecord run_corollary_entry(const CorollaryEntry& entry);
DiscreteRecord run_discrete_entry(const DiscreteEntry& entry, std::uint64_t seed);
PadicRecord run_padic_entry(const PadicEntry& entry, std::uint64_t seed);

}  // namespace mackey::report
