#include "mackey/report/suite.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "mackey/discrete/example.hpp"
#include "mackey/engine/mackey.hpp"
#include "mackey/error.hpp"
#include "mackey/group/group_spec.hpp"
#include "mackey/padic/ramified.hpp"
#include "mackey/rep/character.hpp"
#include "mackey/rep/rep_spec.hpp"
#include "mackey/report/json_location.hpp"

namespace mackey::report {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Configuration

class ConfigReader {
 public:
  ConfigReader(const std::string& text, json root)
      : text_(text), root_(std::move(root)), offsets_(value_offsets(text)) {}

  [[noreturn]] void fail(const std::string& pointer, const std::string& message) const {
    auto it = offsets_.find(pointer);
    auto [line, column] = line_column(text_, it == offsets_.end() ? 0 : it->second);
    throw ParseError("config " + (pointer.empty() ? std::string("root") : pointer) + ": " + message,
                     line, column);
  }

  const json& root() const { return root_; }

  void expect_keys(const json& obj, const std::string& pointer,
                   const std::set<std::string>& allowed) const {
    if (!obj.is_object()) fail(pointer, "expected an object");
    for (const auto& [key, value] : obj.items()) {
      if (!allowed.count(key)) fail(pointer + "/" + key, "unknown key '" + key + "'");
    }
  }

  std::string get_string(const json& obj, const std::string& pointer, const std::string& key,
                         const std::optional<std::string>& fallback = std::nullopt) const {
    if (!obj.contains(key)) {
      if (fallback) return *fallback;
      fail(pointer, "missing key '" + key + "'");
    }
    const json& v = obj.at(key);
    if (!v.is_string()) fail(pointer + "/" + key, "expected a string");
    return v.get<std::string>();
  }

  template <class Int>
  Int get_int(const json& obj, const std::string& pointer, const std::string& key, Int fallback,
              long long min_value) const {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number_integer()) fail(pointer + "/" + key, "expected an integer");
    const long long x = v.get<long long>();
    if (x < min_value) fail(pointer + "/" + key, "must be at least " + std::to_string(min_value));
    return static_cast<Int>(x);
  }

  bool get_bool(const json& obj, const std::string& pointer, const std::string& key,
                bool fallback) const {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_boolean()) fail(pointer + "/" + key, "expected true or false");
    return v.get<bool>();
  }

  const json* section(const std::string& key) const {
    if (!root_.contains(key)) return nullptr;
    const json& v = root_.at(key);
    if (!v.is_array()) fail("/" + key, "expected an array");
    return &v;
  }

 private:
  const std::string& text_;
  json root_;
  std::map<std::string, std::size_t> offsets_;
};

std::pair<long, long> parse_level_range(const ConfigReader& reader, const std::string& pointer,
                                        const std::string& text) {
  auto bad = [&]() { reader.fail(pointer, "levels must look like '3' or '1..12'"); };
  try {
    std::size_t used = 0;
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
      const long v = std::stol(text, &used);
      if (used != text.size()) bad();
      return {v, v};
    }
    const std::string lo = text.substr(0, dots);
    const std::string hi = text.substr(dots + 2);
    const long a = std::stol(lo, &used);
    if (used != lo.size()) bad();
    const long b = std::stol(hi, &used);
    if (used != hi.size()) bad();
    return {a, b};
  } catch (const std::logic_error&) {
  }
  reader.fail(pointer, "levels must look like '3' or '1..12'");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// ---------------------------------------------------------------------------
// Induction oracle: every induce() on this thread is compared with the
// character formula.

class InductionAudit {
 public:
  InductionAudit()
      : observer_([this](const rep::Representation& source, const rep::Representation& result) {
          ++checks_;
          const auto oracle =
              rep::induced_character_oracle(rep::character_of(source), result.group());
          if (!(rep::character_of(result) == oracle)) ++mismatches_;
        }) {}

  std::size_t checks() const { return checks_; }
  std::size_t mismatches() const { return mismatches_; }

 private:
  std::size_t checks_ = 0;
  std::size_t mismatches_ = 0;
  rep::InductionObserver observer_;
};

std::vector<std::vector<std::string>> matrix_rows(const exact::ExactMatrix& m) {
  std::vector<std::vector<std::string>> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r].push_back(m(r, c).to_string());
  }
  return rows;
}

}  // namespace

SuiteConfig parse_suite_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string what = e.what();
    // drop the library's own "[json.exception.parse_error.101] " prefix
    if (auto close = what.find("] "); close != std::string::npos) what = what.substr(close + 2);
    // and its own location, which ParseError repeats
    if (what.rfind("parse error at line", 0) == 0) {
      if (auto colon = what.find(": "); colon != std::string::npos) what = what.substr(colon + 2);
    }
    throw ParseError("config is not valid JSON: " + what, line, column);
  }
  ConfigReader reader(text, std::move(root));
  const json& r = reader.root();
  reader.expect_keys(r, "", {"seed", "jobs", "mackey", "corollary", "discrete", "padic"});

  SuiteConfig config;
  config.seed = reader.get_int<std::uint64_t>(r, "", "seed", 0, 0);
  config.jobs = reader.get_int<unsigned>(r, "", "jobs", 1, 1);

  if (const json* s = reader.section("mackey")) {
    for (std::size_t i = 0; i < s->size(); ++i) {
      const json& e = (*s)[i];
      const std::string ptr = "/mackey/" + std::to_string(i);
      reader.expect_keys(e, ptr, {"name", "group", "H", "K", "rho", "rotation", "corollary"});
      MackeyEntry m;
      m.name = reader.get_string(e, ptr, "name", "mackey-" + std::to_string(i));
      m.group = reader.get_string(e, ptr, "group");
      m.h = reader.get_string(e, ptr, "H");
      m.k = reader.get_string(e, ptr, "K");
      m.rho = reader.get_string(e, ptr, "rho", std::string("trivial"));
      m.rotation = reader.get_bool(e, ptr, "rotation", false);
      m.corollary = reader.get_bool(e, ptr, "corollary", true);
      config.mackey.push_back(std::move(m));
    }
  }
  if (const json* s = reader.section("corollary")) {
    for (std::size_t i = 0; i < s->size(); ++i) {
      const json& e = (*s)[i];
      const std::string ptr = "/corollary/" + std::to_string(i);
      reader.expect_keys(e, ptr, {"name", "group", "K", "H", "sigma", "tau"});
      CorollaryEntry c;
      c.name = reader.get_string(e, ptr, "name", "corollary-" + std::to_string(i));
      c.group = reader.get_string(e, ptr, "group");
      c.k = reader.get_string(e, ptr, "K");
      c.h = reader.get_string(e, ptr, "H");
      c.sigma = reader.get_string(e, ptr, "sigma", std::string("trivial"));
      c.tau = reader.get_string(e, ptr, "tau", std::string("trivial"));
      config.corollary.push_back(std::move(c));
    }
  }
  if (const json* s = reader.section("discrete")) {
    for (std::size_t i = 0; i < s->size(); ++i) {
      const json& e = (*s)[i];
      const std::string ptr = "/discrete/" + std::to_string(i);
      reader.expect_keys(e, ptr,
                         {"name", "lambda1", "lambda2", "conductor", "window", "trials"});
      DiscreteEntry d;
      d.name = reader.get_string(e, ptr, "name", "discrete-" + std::to_string(i));
      d.lambda1 = reader.get_string(e, ptr, "lambda1", d.lambda1);
      d.lambda2 = reader.get_string(e, ptr, "lambda2", d.lambda2);
      d.conductor = reader.get_int<unsigned>(e, ptr, "conductor", d.conductor, 1);
      d.window = reader.get_int<long>(e, ptr, "window", d.window, 1);
      d.trials = reader.get_int<std::size_t>(e, ptr, "trials", d.trials, 1);
      config.discrete.push_back(std::move(d));
    }
  }
  if (const json* s = reader.section("padic")) {
    for (std::size_t i = 0; i < s->size(); ++i) {
      const json& e = (*s)[i];
      const std::string ptr = "/padic/" + std::to_string(i);
      reader.expect_keys(e, ptr,
                         {"name", "p", "precision", "levels", "search_bound", "trials", "h_level",
                          "witness_n_max", "witness_samples"});
      PadicEntry p;
      p.name = reader.get_string(e, ptr, "name", "padic-" + std::to_string(i));
      p.p = reader.get_int<unsigned>(e, ptr, "p", p.p, 2);
      p.precision = reader.get_int<long>(e, ptr, "precision", p.precision, 4);
      if (e.contains("levels")) {
        const std::string text_levels = reader.get_string(e, ptr, "levels");
        std::tie(p.level_min, p.level_max) =
            parse_level_range(reader, ptr + "/levels", text_levels);
        if (p.level_min < 1 || p.level_max < p.level_min) {
          reader.fail(ptr + "/levels", "level range must satisfy 1 <= min <= max");
        }
      }
      p.search_bound = reader.get_int<long>(e, ptr, "search_bound", p.search_bound, 0);
      p.trials = reader.get_int<std::size_t>(e, ptr, "trials", p.trials, 1);
      p.h_level = reader.get_int<long>(e, ptr, "h_level", p.h_level, 1);
      p.witness_n_max = reader.get_int<long>(e, ptr, "witness_n_max", p.witness_n_max, 0);
      p.witness_samples = reader.get_int<std::size_t>(e, ptr, "witness_samples",
                                                      p.witness_samples, 0);
      config.padic.push_back(std::move(p));
    }
  }
  return config;
}

SuiteConfig load_suite_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_suite_config(buffer.str());
}

std::uint64_t task_seed(std::uint64_t suite_seed, std::size_t index) {
  return splitmix64(splitmix64(suite_seed) ^ (0xd1b54a32d192ed03ULL * (index + 1)));
}

MackeyRecord run_mackey_entry(const MackeyEntry& entry, std::uint64_t seed) {
  MackeyRecord rec;
  rec.name = entry.name;
  rec.group = entry.group;
  rec.h = entry.h;
  rec.k = entry.k;
  rec.rho = entry.rho;
  InductionAudit audit;
  try {
    const auto g = group::parse_group_spec(entry.group);
    const group::Subgroup h = group::parse_subgroup(g, entry.h);
    const group::Subgroup k = group::parse_subgroup(g, entry.k);
    auto inst = engine::MackeyInstance::make(k, rep::parse_rep_spec(h, entry.rho));
    engine::VerifyOptions options;
    options.seed = seed;
    options.check_rotation = entry.rotation;
    options.compute_corollary = entry.corollary;
    const auto r = engine::verify_mackey(inst, options);
    rec.first_violation = r.first_violation;
    rec.lhs_dim = r.lhs_dim;
    rec.rhs_dim = r.rhs_dim;
    rec.index_h = r.index_h;
    rec.coset_representatives = r.coset_representatives;
    rec.per_coset_dims = r.per_coset_dims;
    rec.per_coset_indices = r.per_coset_indices;
    rec.dimension_identity = r.dimension_identity;
    rec.dims_equal = r.dims_equal;
    rec.map_is_equivariant = r.map_is_equivariant;
    rec.equivariance_elements_checked = r.equivariance_elements_checked;
    rec.map_is_bijective = r.map_is_bijective;
    rec.round_trip_identity = r.round_trip_identity;
    rec.support_identity = r.support_identity;
    rec.characters_equal = r.characters_equal;
    rec.rotation_checked = r.rotation_consistent.has_value();
    rec.rotation_consistent = r.rotation_consistent.value_or(false);
    rec.corollary_checked = r.corollary_lhs_dim.has_value();
    rec.corollary_lhs_dim = r.corollary_lhs_dim.value_or(0);
    rec.corollary_rhs_dim = r.corollary_rhs_dim.value_or(0);
    rec.witness = matrix_rows(r.witness);
    rec.induction_checks = audit.checks();
    rec.induction_mismatches = audit.mismatches();
    if (rec.induction_mismatches > 0 && rec.first_violation.empty()) {
      rec.first_violation = "an induced character differs from the induction formula";
    }
    rec.status = rec.first_violation.empty() ? "pass" : "fail";
  } catch (const std::exception& e) {
    rec.status = "error";
    rec.error = e.what();
    rec.induction_checks = audit.checks();
    rec.induction_mismatches = audit.mismatches();
  }
  return rec;
}

CorollaryRecord run_corollary_entry(const CorollaryEntry& entry) {
  CorollaryRecord rec;
  rec.name = entry.name;
  rec.group = entry.group;
  rec.k = entry.k;
  rec.h = entry.h;
  rec.sigma = entry.sigma;
  rec.tau = entry.tau;
  InductionAudit audit;
  try {
    const auto g = group::parse_group_spec(entry.group);
    const group::Subgroup k = group::parse_subgroup(g, entry.k);
    const group::Subgroup h = group::parse_subgroup(g, entry.h);
    const auto sigma = rep::parse_rep_spec(k, entry.sigma);
    const auto tau = rep::parse_rep_spec(h, entry.tau);
    const auto r = engine::verify_corollary(sigma, tau);
    rec.lhs_dim = r.lhs_dim;
    rec.rhs_dim = r.rhs_dim;
    rec.per_coset = r.per_coset;
    rec.status = r.equal() && audit.mismatches() == 0 ? "pass" : "fail";
  } catch (const std::exception& e) {
    rec.status = "error";
    rec.error = e.what();
  }
  rec.induction_checks = audit.checks();
  rec.induction_mismatches = audit.mismatches();
  return rec;
}

DiscreteRecord run_discrete_entry(const DiscreteEntry& entry, std::uint64_t seed) {
  DiscreteRecord rec;
  rec.name = entry.name;
  rec.lambda1 = entry.lambda1;
  rec.lambda2 = entry.lambda2;
  rec.conductor = entry.conductor;
  rec.window = entry.window;
  rec.trials = entry.trials;
  rec.seed = seed;
  try {
    const discrete::ZCharacter chi1(exact::parse_cyclo(entry.lambda1, entry.conductor));
    const discrete::ZCharacter chi2(exact::parse_cyclo(entry.lambda2, entry.conductor));
    const auto r = discrete::lhs_hom_report(chi1, chi2, entry.window, entry.trials, seed);
    rec.partition_elements = r.partition.elements_checked;
    rec.partition_disagreements = r.partition.disagreements;
    for (const auto& [n, dim] : r.rhs.gn_dims) rec.rhs_gn_dims.push_back(dim);
    rec.rhs_gprime_dim = r.rhs.gprime_dim;
    rec.rhs_total = r.rhs.total;
    for (const auto& o : r.lhs_obligations) {
      rec.lhs_obligations.push_back({o.name, o.kind, o.discharged, o.detail});
    }
    rec.refuter_successes = r.refuter_successes;
    rec.lhs_total = r.lhs_total;
    rec.lhs_established = r.lhs_established;
    rec.mismatch = r.mismatch;
    rec.status = r.reproduces_counterexample() ? "pass" : "fail";
  } catch (const std::exception& e) {
    rec.status = "error";
    rec.error = e.what();
  }
  return rec;
}

PadicRecord run_padic_entry(const PadicEntry& entry, std::uint64_t seed) {
  PadicRecord rec;
  rec.name = entry.name;
  rec.p = entry.p;
  rec.precision = entry.precision;
  rec.h_level = entry.h_level;
  rec.experimental = entry.h_level != 1;
  rec.trials = entry.trials;
  rec.seed = seed;
  rec.witness_n_max = entry.witness_n_max;
  rec.witness_samples_per_n = entry.witness_samples;
  try {
    padic::PadicParams params;
    params.p = entry.p;
    params.precision = entry.precision;
    params.h_level = entry.h_level;
    bool all_refuted = true;
    for (long m = entry.level_min; m <= entry.level_max; ++m) {
      const auto r = padic::smoothness_refuter(m, entry.search_bound, entry.trials,
                                               splitmix64(seed + static_cast<std::uint64_t>(m)),
                                               params);
      PadicLevelRecord l;
      l.level = m;
      l.n = r.n;
      l.n_matches_formula = r.n_matches_formula;
      l.k_factor_in_k = r.k_factor_in_k;
      l.u_n_in_u = r.u_n_in_u;
      l.element = r.element.listing();
      l.m_n = r.hk.m_n.listing();
      l.identity_check = r.hk.identity_check;
      l.parity_check = r.hk.parity_check;
      l.trials = r.hk.trials;
      l.outside_k = r.hk.outside_k;
      l.valuation_minus_one = r.hk.valuation_minus_one;
      l.refuted = r.refuted();
      all_refuted = all_refuted && l.refuted;
      rec.levels.push_back(std::move(l));
    }
    std::mt19937_64 rng(splitmix64(seed ^ 0x5a5a5a5aULL));
    for (long n = 0; n <= entry.witness_n_max; ++n) {
      for (std::size_t s = 0; s < entry.witness_samples; ++s) {
        const auto a = padic::random_element(rng, entry.p, entry.h_level, entry.precision);
        const auto b = padic::random_element(rng, entry.p, entry.h_level, entry.precision);
        ++rec.witness_total;
        if (padic::witness_valuation(n, a, b, params) != -1) ++rec.witness_deviations;
      }
    }
    rec.status = all_refuted && rec.witness_deviations == 0 ? "pass" : "fail";
  } catch (const std::exception& e) {
    rec.status = "error";
    rec.error = e.what();
  }
  return rec;
}

RunReport run_suite(const SuiteConfig& config, const RunOptions& options) {
  RunReport report;
  report.seed = config.seed;
  report.mackey.resize(config.mackey.size());
  report.corollary.resize(config.corollary.size());
  report.discrete.resize(config.discrete.size());
  report.padic.resize(config.padic.size());

  // The rotated-representative check runs on the flagged instances, or on
  // the first instance when none is flagged.
  std::vector<MackeyEntry> mackey = config.mackey;
  bool any_rotation = false;
  for (const auto& m : mackey) any_rotation = any_rotation || m.rotation;
  if (!any_rotation && !mackey.empty()) mackey.front().rotation = true;

  struct Task {
    std::string section;
    std::string name;
    std::function<void()> run;
  };
  std::vector<Task> tasks;
  std::size_t index = 0;
  for (std::size_t i = 0; i < mackey.size(); ++i, ++index) {
    const auto seed = task_seed(config.seed, index);
    tasks.push_back({"mackey", mackey[i].name,
                     [&, i, seed] { report.mackey[i] = run_mackey_entry(mackey[i], seed); }});
  }
  for (std::size_t i = 0; i < config.corollary.size(); ++i, ++index) {
    tasks.push_back({"corollary", config.corollary[i].name,
                     [&, i] { report.corollary[i] = run_corollary_entry(config.corollary[i]); }});
  }
  for (std::size_t i = 0; i < config.discrete.size(); ++i, ++index) {
    const auto seed = task_seed(config.seed, index);
    tasks.push_back({"discrete", config.discrete[i].name, [&, i, seed] {
                       report.discrete[i] = run_discrete_entry(config.discrete[i], seed);
                     }});
  }
  for (std::size_t i = 0; i < config.padic.size(); ++i, ++index) {
    const auto seed = task_seed(config.seed, index);
    tasks.push_back({"padic", config.padic[i].name,
                     [&, i, seed] { report.padic[i] = run_padic_entry(config.padic[i], seed); }});
  }

  std::vector<double> millis(tasks.size(), 0.0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      const auto start = std::chrono::steady_clock::now();
      tasks[t].run();
      millis[t] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                            start)
                      .count();
    }
  };
  unsigned jobs = options.jobs != 0 ? options.jobs : config.jobs;
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  if (options.timing) {
    for (std::size_t t = 0; t < tasks.size(); ++t) {
      report.timing.push_back({tasks[t].section, tasks[t].name, millis[t]});
    }
  }
  finalize(report);
  return report;
}

}  // namespace mackey::report
