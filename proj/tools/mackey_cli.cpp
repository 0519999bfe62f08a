#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mackey/error.hpp"
#include "mackey/group/group_spec.hpp"
#include "mackey/rep/intertwiner.hpp"
#include "mackey/rep/rep_spec.hpp"
#include "mackey/report/suite.hpp"

namespace {

using mackey::report::Format;
using mackey::report::RunReport;

struct GlobalOptions {
  std::optional<std::uint64_t> seed;
  unsigned jobs = 0;
  std::string format = "structured";
  std::string out;
  std::string config;
  bool timing = false;

  Format fmt() const { return format == "table" ? Format::table : Format::structured; }
};

void write_output(const GlobalOptions& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw mackey::Error("cannot write '" + g.out + "'");
  f << text;
}

int emit_run(const GlobalOptions& g, RunReport report) {
  mackey::report::finalize(report);
  write_output(g, mackey::report::emit_report(report, g.fmt()));
  return report.verdict == "pass" ? 0 : 1;
}

int run_doublecosets(const GlobalOptions& g, const std::string& group_spec,
                     const std::string& h_text, const std::string& k_text) {
  const auto grp = mackey::group::parse_group_spec(group_spec);
  const auto h = mackey::group::parse_subgroup(grp, h_text);
  const auto k = mackey::group::parse_subgroup(grp, k_text);
  const auto d = mackey::group::enumerate_double_cosets(k, h);
  nlohmann::json j;
  j["schema"] = "mackey-workbench/doublecosets/v1";
  j["group"] = group_spec;
  j["group_order"] = grp->order();
  j["H"] = h.describe();
  j["K"] = k.describe();
  j["double_cosets"] = nlohmann::json::array();
  std::size_t index_sum = 0;
  for (std::size_t c = 0; c < d.representatives.size(); ++c) {
    const auto x = d.representatives[c];
    const auto inter = mackey::group::intersect(k, mackey::group::conjugate_subgroup(x, h));
    index_sum += k.order() / inter.order();
    j["double_cosets"].push_back({{"representative", grp->label(x)},
                                  {"size", d.sizes[c]},
                                  {"intersection_order", inter.order()},
                                  {"index_in_K", k.order() / inter.order()}});
  }
  j["index_H"] = grp->order() / h.order();
  j["index_sum"] = index_sum;
  if (g.fmt() == Format::structured) {
    write_output(g, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "K\\G/H for G = " << group_spec << ", H = " << h.describe() << ", K = " << k.describe()
        << "\n";
    for (const auto& row : j["double_cosets"]) {
      out << "  " << row["representative"].get<std::string>() << "  size " << row["size"]
          << "  [K : K cap gH] = " << row["index_in_K"] << "\n";
    }
    out << "sum of indices " << index_sum << ", [G : H] = " << j["index_H"] << "\n";
    write_output(g, out.str());
  }
  return 0;
}

int run_intertwine(const GlobalOptions& g, const std::string& group_spec,
                   const std::string& sub_text, const std::string& sigma_text,
                   const std::string& tau_text) {
  const auto grp = mackey::group::parse_group_spec(group_spec);
  const auto s = sub_text.empty() ? mackey::group::Subgroup::whole(grp)
                                  : mackey::group::parse_subgroup(grp, sub_text);
  const auto sigma = mackey::rep::parse_rep_spec(s, sigma_text);
  const auto tau = mackey::rep::parse_rep_spec(s, tau_text);
  const auto basis = mackey::rep::hom_space(sigma, tau);
  const auto iso = mackey::rep::is_isomorphic(sigma, tau, g.seed.value_or(0));
  const char* method = iso.method == mackey::rep::IsomorphismMethod::witness ? "witness"
                       : iso.method == mackey::rep::IsomorphismMethod::character_fallback
                           ? "character-fallback"
                           : "not-isomorphic";
  auto rows = [](const mackey::exact::ExactMatrix& m) {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
      out.push_back(row);
    }
    return out;
  };
  nlohmann::json j;
  j["schema"] = "mackey-workbench/intertwine/v1";
  j["group"] = s.describe();
  j["sigma"] = sigma_text;
  j["tau"] = tau_text;
  j["dimension"] = basis.dimension();
  j["isomorphic"] = iso.isomorphic;
  j["method"] = method;
  j["basis"] = nlohmann::json::array();
  for (const auto& b : basis.basis) j["basis"].push_back(rows(b));
  if (iso.witness) j["witness"] = rows(*iso.witness);
  if (g.fmt() == Format::structured) {
    write_output(g, j.dump(2) + "\n");
  } else {
    write_output(g, "dim Hom = " + std::to_string(basis.dimension()) + ", isomorphic: " +
                        (iso.isomorphic ? "yes" : "no") + " (" + method + ")\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mackey decomposition workbench"};
  app.require_subcommand(1);
  GlobalOptions g;
  std::uint64_t seed_value = 0;
  auto* seed_opt = app.add_option("--seed", seed_value, "random seed");
  app.add_option("--jobs", g.jobs, "worker threads for suite runs")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"structured", "table"}));
  app.add_option("--out", g.out, "write the report to this file instead of stdout");
  app.add_option("--config", g.config, "suite configuration (JSON)");
  app.add_flag("--timing", g.timing, "include wall-clock timings (breaks byte equality)");

  std::string group_spec = "S3", h_text = "[]", k_text = "[]", rho = "trivial";
  std::string sub_text, sigma = "trivial", tau = "trivial";
  bool rotation = false, no_corollary = false;

  auto* dc = app.add_subcommand("doublecosets", "enumerate K\\G/H");
  dc->fallthrough();
  dc->add_option("--group", group_spec, "group spec, e.g. S4")->required();
  dc->add_option("--H", h_text, "generators of H, e.g. \"[(1 2)]\"");
  dc->add_option("--K", k_text, "generators of K");

  auto* mv = app.add_subcommand("mackey-verify", "verify one Mackey decomposition");
  mv->fallthrough();
  mv->add_option("--group", group_spec)->required();
  mv->add_option("--H", h_text);
  mv->add_option("--K", k_text);
  mv->add_option("--rho", rho, "representation of H");
  mv->add_flag("--rotation", rotation, "also check rotated double coset representatives");
  mv->add_flag("--no-corollary", no_corollary, "skip the Hom-dimension identity");

  auto* it = app.add_subcommand("intertwine", "Hom space between two representations");
  it->fallthrough();
  it->add_option("--group", group_spec)->required();
  it->add_option("--subgroup", sub_text, "generators of the subgroup (default: whole group)");
  it->add_option("--sigma", sigma);
  it->add_option("--tau", tau);

  auto* ce = app.add_subcommand("counterexample", "the two failing instances");
  ce->require_subcommand(1);
  ce->fallthrough();
  mackey::report::DiscreteEntry de;
  de.name = "discrete";
  auto* ced = ce->add_subcommand("discrete", "Z^2 semidirect Z/2");
  ced->fallthrough();
  ced->add_option("--lambda1", de.lambda1, "chi1(1) as a polynomial in z");
  ced->add_option("--lambda2", de.lambda2, "chi2(1)");
  ced->add_option("--conductor", de.conductor)->check(CLI::PositiveNumber);
  ced->add_option("--window", de.window)->check(CLI::PositiveNumber);
  ced->add_option("--trials", de.trials)->check(CLI::PositiveNumber);

  mackey::report::PadicEntry pe;
  pe.name = "padic";
  std::string levels = "1..12";
  auto* cep = ce->add_subcommand("padic", "GL2 over a ramified quadratic extension");
  cep->fallthrough();
  cep->add_option("--p", pe.p)->check(CLI::Range(2u, 1000000u));
  cep->add_option("--precision", pe.precision)->check(CLI::Range(4L, 100000L));
  cep->add_option("--levels", levels, "level m or range a..b");
  cep->add_option("--trials", pe.trials)->check(CLI::PositiveNumber);
  cep->add_option("--h-level", pe.h_level, "level of H (1 is the standard choice)")
      ->check(CLI::PositiveNumber);
  cep->add_option("--search-bound", pe.search_bound);
  cep->add_option("--witness-samples", pe.witness_samples);
  cep->add_option("--witness-n-max", pe.witness_n_max);

  auto* suite = app.add_subcommand("suite", "configured batch runs");
  suite->require_subcommand(1);
  suite->fallthrough();
  auto* suite_run = suite->add_subcommand("run", "run every configured check");
  suite_run->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (*seed_opt) g.seed = seed_value;

  try {
    if (*dc) return run_doublecosets(g, group_spec, h_text, k_text);
    if (*it) return run_intertwine(g, group_spec, sub_text, sigma, tau);
    if (*mv) {
      mackey::report::MackeyEntry e{"mackey-verify", group_spec, h_text, k_text, rho, rotation,
                                    !no_corollary};
      RunReport r;
      r.seed = g.seed.value_or(0);
      r.mackey.push_back(mackey::report::run_mackey_entry(e, r.seed));
      return emit_run(g, std::move(r));
    }
    if (*ced) {
      RunReport r;
      r.seed = g.seed.value_or(0);
      r.discrete.push_back(mackey::report::run_discrete_entry(de, r.seed));
      return emit_run(g, std::move(r));
    }
    if (*cep) {
      // reuse the config grammar for the level range
      const auto parsed = mackey::report::parse_suite_config(
          nlohmann::json{{"padic", {{{"levels", levels}}}}}.dump());
      pe.level_min = parsed.padic.front().level_min;
      pe.level_max = parsed.padic.front().level_max;
      RunReport r;
      r.seed = g.seed.value_or(0);
      r.padic.push_back(mackey::report::run_padic_entry(pe, r.seed));
      return emit_run(g, std::move(r));
    }
    if (*suite_run) {
      if (g.config.empty()) throw mackey::Error("suite run needs --config PATH");
      auto config = mackey::report::load_suite_config(g.config);
      if (g.seed) config.seed = *g.seed;
      mackey::report::RunOptions options;
      options.jobs = g.jobs;
      options.timing = g.timing;
      return emit_run(g, mackey::report::run_suite(config, options));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
