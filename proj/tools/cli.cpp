#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "erate/counterexample.hpp"
#include "erate/io.hpp"
#include "erate/profile.hpp"

namespace erate::cli {

namespace {

using json = nlohmann::ordered_json;

std::string sig6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

json state_json(const GasState& s) {
  return json{{"rho", s.rho}, {"v1", s.v1}, {"v2", s.v2}, {"p", s.p}};
}

json data_json(const RiemannData& d) {
  return json{{"left", state_json(d.left)}, {"right", state_json(d.right)}};
}

json admissibility_json(const AdmissibilityReport& adm) {
  json checks = json::array();
  for (const AdmissibilityCheck& c : adm.checks)
    checks.push_back(json{{"name", c.name}, {"margin", c.margin}, {"pass", c.pass}});
  return json{{"all_pass", adm.all_pass}, {"checks", checks}};
}

json fan_json(const PiecewiseFan& fan) {
  json regions = json::array();
  for (const FanRegion& r : fan.region_states)
    regions.push_back(json{{"rho", r.rho}, {"p", r.p}, {"v2", r.v2}});
  return json{{"front_speeds", fan.front_speeds}, {"regions", regions}};
}

RiemannData resolve_data(const RunConfig& config) {
  if (config.preset_paper) return paper_riemann_data();
  if (config.data_path.empty())
    throw InputError("MissingData", "no input data: pass --preset paper or --data FILE");
  return parse_riemann_file(config.data_path);
}

void validate_parameters(const RunConfig& config) {
  if (!(config.c_v > 0.0)) throw InputError("InvalidParameter", "c_v must be positive");
  if (!(config.rho1 > 0.0)) throw InputError("InvalidParameter", "rho1 must be positive");
  if (!(config.L > 0.0)) throw InputError("InvalidParameter", "L must be positive");
  for (double c : config.cv_grid)
    if (!(c > 0.0)) throw InputError("InvalidParameter", "cv grid values must be positive");
}

json run_riemann(const RunConfig& config, const RiemannData& data, const GasConstants& g) {
  (void)config;
  const SelfSimilarSolution sol = solve_riemann(data, g);

  json waves = json::array();
  double max_residual = 0.0;
  for (const Wave& w : sol.waves) {
    json wj{{"kind", to_string(w.kind)}, {"speed_lo", w.speed_lo}, {"speed_hi", w.speed_hi}};
    if (w.kind != WaveKind::Rarefaction) {
      const JumpResiduals r = jump_residuals(w.pre_state, w.post_state, w.speed_lo, g);
      wj["jump_residual"] = r.max();
      wj["entropy_production"] =
          front_entropy_production(w.pre_state, w.post_state, w.speed_lo, g);
      max_residual = std::max(max_residual, r.max());
    }
    waves.push_back(wj);
  }
  json states = json::array();
  for (const GasState& s : sol.states) states.push_back(state_json(s));

  std::string pattern;
  for (const Wave& w : sol.waves) {
    if (!pattern.empty()) pattern += ",";
    pattern += to_string(w.kind);
  }

  return json{{"command", "riemann"},
              {"inputs", {{"data", data_json(data)}, {"c_v", g.c_v}}},
              {"outputs",
               {{"p_M", sol.p_M},
                {"v_M2", sol.v_M2},
                {"waves", waves},
                {"states", states}}},
              {"residuals", {{"max_jump_residual", max_residual}}},
              {"verdicts", {{"pattern", pattern.empty() ? "constant" : pattern}}}};
}

json run_rate(const RunConfig& config, const RiemannData& data, const GasConstants& g) {
  const SelfSimilarSolution sol = solve_riemann(data, g);
  const PiecewiseFan fan = to_piecewise_fan(sol);
  const EntropyRateReport report = entropy_rate(fan, g);

  json oracle = nullptr;
  json oracle_rel = nullptr;
  if (!fan.front_speeds.empty()) {
    const double horizon = report.validity_time(config.L);
    const double rate =
        entropy_rate_oracle(fan, g, config.L, 0.25 * horizon, 0.75 * horizon);
    oracle = rate;
    oracle_rel = std::abs(rate - report.rate_per_width) /
                 std::max(1.0, std::abs(report.rate_per_width));
  }

  return json{{"command", "rate"},
              {"inputs", {{"data", data_json(data)}, {"c_v", g.c_v}, {"L", config.L}}},
              {"outputs",
               {{"rate_per_width", report.rate_per_width},
                {"per_front_contributions", report.per_front_contributions},
                {"max_front_speed", report.max_front_speed},
                {"oracle_rate_per_width", oracle},
                {"fan", fan_json(fan)}}},
              {"residuals", {{"closed_form_vs_oracle_rel", oracle_rel}}},
              {"verdicts", json::object()}};
}

json run_subsolution(const RunConfig& config, const RiemannData& data,
                     const GasConstants& g) {
  const FanSubsolution sub = solve_fan_subsolution(data, config.rho1, g);
  const AdmissibilityReport adm = check_admissibility(sub, data, g);
  const SubsolutionEntropies ent = subsolution_entropy_states(sub, data, g);
  const EntropyRateReport rate = entropy_rate(to_piecewise_fan(sub, data), g);

  return json{
      {"command", "subsolution"},
      {"inputs", {{"data", data_json(data)}, {"c_v", g.c_v}, {"rho1", config.rho1}}},
      {"outputs",
       {{"mu_minus", sub.mu_minus},
        {"mu_plus", sub.mu_plus},
        {"beta", sub.beta},
        {"p1", sub.p1},
        {"C1", sub.C1},
        {"gamma", sub.gamma},
        {"alpha", sub.alpha},
        {"entropies", {{"s_minus", ent.s_minus}, {"s_1", ent.s_1}, {"s_plus", ent.s_plus}}},
        {"rate_per_width", rate.rate_per_width}}},
      {"residuals", {{"jump_conditions", sub.residuals}, {"max", sub.max_residual}}},
      {"verdicts", {{"admissibility", admissibility_json(adm)}}}};
}

json counterexample_json(const CounterexampleReport& r) {
  json out{{"command", "counterexample"},
           {"inputs", {{"data", data_json(r.data)}, {"c_v", r.c_v}, {"rho1", r.rho1}}}};
  json outputs{{"solved", r.solved}};
  json verdicts{{"verdict", to_string(r.verdict)}};
  if (!r.failure_cause.empty()) verdicts["cause"] = r.failure_cause;
  json residuals = json::object();
  if (r.solved) {
    outputs["self_similar_rate"] = r.self_similar_rate;
    outputs["fan_rate"] = r.fan_rate;
    outputs["rate_gap"] = r.fan_rate - r.self_similar_rate;
    outputs["p_M"] = r.self_similar.p_M;
    outputs["self_similar_fan"] = fan_json(r.self_similar_fan);
    outputs["subsolution_fan"] = fan_json(r.subsolution_fan);
    residuals["max_shock_residual"] = r.max_shock_residual;
    residuals["max_subsolution_residual"] = r.max_subsolution_residual;
    verdicts["self_similar_bracket"] = r.self_similar_bracket;
    verdicts["fan_bracket"] = r.fan_bracket;
    verdicts["fan_rate_exceeds_self_similar"] = r.fan_rate > r.self_similar_rate;
    verdicts["diperna"] = diperna_verdict(r);
    verdicts["admissibility"] = admissibility_json(r.admissibility);
  }
  out["outputs"] = outputs;
  out["residuals"] = residuals;
  out["verdicts"] = verdicts;
  return out;
}

json run_counterexample(const RunConfig& config, const RiemannData& data,
                        const GasConstants& g) {
  return counterexample_json(reproduce_theorem(data, config.rho1, g));
}

json run_sweep(const RunConfig& config, const RiemannData& data) {
  const std::vector<CounterexampleReport> reports =
      sweep_cv(data, config.rho1, config.cv_grid);
  json rows = json::array();
  for (const CounterexampleReport& r : reports) {
    json row{{"cv", r.c_v},
             {"rho1", r.rho1},
             {"solved", r.solved},
             {"rate_self_similar", r.solved ? json(r.self_similar_rate) : json(nullptr)},
             {"rate_fan", r.solved ? json(r.fan_rate) : json(nullptr)},
             {"verdict", to_string(r.verdict)},
             {"max_residual",
              r.solved ? json(std::max(r.max_shock_residual, r.max_subsolution_residual))
                       : json(nullptr)}};
    if (!r.failure_cause.empty()) row["cause"] = r.failure_cause;
    rows.push_back(row);
  }
  return json{{"command", "sweep"},
              {"inputs",
               {{"data", data_json(data)}, {"rho1", config.rho1}, {"cv_grid", config.cv_grid}}},
              {"outputs", {{"points", rows}}},
              {"residuals", json::object()},
              {"verdicts", json::object()}};
}

json run_profile(const RunConfig& config, const GasConstants& g) {
  if (config.partition_path.empty() || config.profile_path.empty())
    throw InputError("MissingData", "profile command needs --partition FILE and --profile FILE");
  const PartitionSpec partition = parse_partition_file(config.partition_path);
  const EntropyProfile profile = parse_profile_file(config.profile_path);

  const ProfileDiagnostics pd = validate_profile(profile);
  if (!pd.valid) {
    json violations = json::array();
    for (const std::string& v : pd.violations) violations.push_back(v);
    return json{{"command", "profile"},
                {"inputs",
                 {{"partition", config.partition_path}, {"profile", config.profile_path}}},
                {"outputs", json::object()},
                {"residuals", json::object()},
                {"verdicts", {{"profile_valid", false}, {"violations", violations}}}};
  }

  const double epsilon = config.epsilon > 0.0 ? config.epsilon : 0.5 * profile.delta;

  // Sample at midpoints between profile knots so one-sided evaluation at the
  // steps stays unambiguous.
  std::vector<double> knots{0.0};
  for (double b : profile.breakpoints) knots.push_back(b);
  knots.push_back(profile.T);
  std::vector<double> samples;
  for (std::size_t i = 1; i < knots.size(); ++i)
    if (knots[i] > knots[i - 1]) samples.push_back(0.5 * (knots[i - 1] + knots[i]));

  const double Lambda = minimal_lambda(partition, profile, g, config.margin);
  const EntropyBalanceDiagnostics balance =
      verify_entropy_balance(partition, profile, g, epsilon, samples);
  const TotalEnergyDiagnostics energy =
      total_energy_check(partition, profile, g, Lambda, samples);

  json sample_rows = json::array();
  for (const EntropyBalanceSample& s : balance.samples)
    sample_rows.push_back(json{{"t", s.t},
                               {"total_entropy", s.total},
                               {"expected", s.expected},
                               {"expected_shifted", s.expected_shifted},
                               {"residual_rel", s.residual_rel}});
  json increments = json::array();
  for (const EntropyBalanceIncrement& inc : balance.increments)
    increments.push_back(json{{"t_from", inc.t_from},
                              {"t_to", inc.t_to},
                              {"actual", inc.actual},
                              {"expected", inc.expected}});

  return json{
      {"command", "profile"},
      {"inputs",
       {{"partition", config.partition_path},
        {"profile", config.profile_path},
        {"c_v", g.c_v},
        {"margin", config.margin},
        {"epsilon", epsilon}}},
      {"outputs",
       {{"M0", balance.M0},
        {"S0", balance.S0},
        {"Lambda", Lambda},
        {"min_kinetic_energy", energy.min_kinetic_energy},
        {"samples", sample_rows},
        {"increments", increments}}},
      {"residuals",
       {{"entropy_balance_max_rel", balance.max_residual_rel},
        {"energy_identity_max_rel", energy.max_identity_residual_rel}}},
      {"verdicts",
       {{"profile_valid", true},
        {"entropy_balance", balance.pass},
        {"total_energy", energy.pass}}}};
}

void render_text(const json& report, std::ostream& out) {
  // Flat key: value listing, numbers to 6 significant digits.
  std::function<void(const json&, const std::string&)> walk =
      [&](const json& node, const std::string& prefix) {
        if (node.is_object()) {
          for (const auto& [key, value] : node.items())
            walk(value, prefix.empty() ? key : prefix + "." + key);
        } else if (node.is_array()) {
          std::size_t i = 0;
          for (const json& value : node) walk(value, prefix + "[" + std::to_string(i++) + "]");
        } else if (node.is_number_float()) {
          out << prefix << ": " << sig6(node.get<double>()) << "\n";
        } else {
          out << prefix << ": " << node.dump() << "\n";
        }
      };
  walk(report, "");
}

void render_csv(const json& report, std::ostream& out) {
  if (report["command"] == "sweep") {
    out << "cv,rho1,rate_self_similar,rate_fan,verdict,max_residual\n";
    for (const json& row : report["outputs"]["points"]) {
      auto cell = [&](const json& v) -> std::string {
        if (v.is_null()) return "";
        if (v.is_number_float()) {
          std::ostringstream s;
          s.precision(17);
          s << v.get<double>();
          return s.str();
        }
        return v.is_string() ? v.get<std::string>() : v.dump();
      };
      out << cell(row["cv"]) << "," << cell(row["rho1"]) << ","
          << cell(row["rate_self_similar"]) << "," << cell(row["rate_fan"]) << ","
          << cell(row["verdict"]) << "," << cell(row["max_residual"]) << "\n";
    }
    return;
  }
  // Generic fallback: flattened key,value rows.
  out << "key,value\n";
  const json flat = report.flatten();
  for (const auto& [key, value] : flat.items()) {
    std::ostringstream s;
    if (value.is_number_float()) {
      s.precision(17);
      s << value.get<double>();
    } else {
      s << value.dump();
    }
    out << "\"" << key << "\"," << s.str() << "\n";
  }
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate_parameters(config);
    const GasConstants g{config.c_v};

    json report;
    switch (config.command) {
    case Command::Riemann:
      report = run_riemann(config, resolve_data(config), g);
      break;
    case Command::Rate:
      report = run_rate(config, resolve_data(config), g);
      break;
    case Command::Subsolution:
      report = run_subsolution(config, resolve_data(config), g);
      break;
    case Command::Counterexample:
      report = run_counterexample(config, resolve_data(config), g);
      break;
    case Command::Sweep:
      report = run_sweep(config, resolve_data(config));
      break;
    case Command::Profile:
      report = run_profile(config, g);
      break;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!config.out_path.empty()) {
      file.open(config.out_path);
      if (!file) throw InputError("OutputError", "cannot open output file " + config.out_path);
      sink = &file;
    }

    switch (config.format) {
    case Format::Json:
      *sink << report.dump(2) << "\n";
      break;
    case Format::Text:
      render_text(report, *sink);
      break;
    case Format::Csv:
      render_csv(report, *sink);
      break;
    }
    return 0;
  } catch (const InputError& e) {
    err << "error: " << e.name() << ": " << e.what() << "\n";
    return 1;
  } catch (const SolverError& e) {
    err << "error: " << e.name() << ": " << e.what() << "\n";
    return 2;
  }
}

int main_entry(int argc, char** argv) {
  RunConfig config;

  CLI::App app{"entropy-rate laboratory for the 2-D Euler system"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string preset;
  auto add_common = [&](CLI::App* cmd, bool wants_data) {
    cmd->add_option("--cv", config.c_v, "specific heat at constant volume");
    cmd->add_option("--format", format, "output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", config.out_path, "write the report to a file");
    if (wants_data) {
      cmd->add_option("--data", config.data_path, "Riemann data file: two lines 'rho v1 v2 p'");
      cmd->add_option("--preset", preset, "named built-in datum (available: paper)")
          ->check(CLI::IsMember({"paper"}));
    }
  };

  CLI::App* riemann = app.add_subcommand("riemann", "solve the 1-D Riemann problem exactly");
  add_common(riemann, true);

  CLI::App* rate = app.add_subcommand("rate", "entropy production rate of the solution fan");
  add_common(rate, true);
  rate->add_option("--L", config.L, "half-width of the comparison box");

  CLI::App* subsolution =
      app.add_subcommand("subsolution", "solve the 1-fan subsolution algebra");
  add_common(subsolution, true);
  subsolution->add_option("--rho1", config.rho1, "intermediate wedge density");

  CLI::App* counterexample =
      app.add_subcommand("counterexample", "compare self-similar and fan entropy rates");
  add_common(counterexample, true);
  counterexample->add_option("--rho1", config.rho1, "intermediate wedge density");
  counterexample->add_option("--L", config.L, "half-width of the comparison box");

  CLI::App* sweep = app.add_subcommand("sweep", "counterexample over a grid of c_v values");
  add_common(sweep, true);
  sweep->add_option("--rho1", config.rho1, "intermediate wedge density");
  sweep->add_option("--cv-grid", config.cv_grid, "c_v grid values");

  CLI::App* profile =
      app.add_subcommand("profile", "verify the entropy-profile construction scaffold");
  add_common(profile, false);
  profile->add_option("--partition", config.partition_path,
                      "partition file: one 'volume rho0 theta0' per line");
  profile->add_option("--profile", config.profile_path,
                      "profile file: 'delta T' line then 'time value' lines");
  profile->add_option("--margin", config.margin, "feasibility margin for Lambda");
  profile->add_option("--epsilon", config.epsilon, "time shift, 0 < epsilon < delta");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (riemann->parsed()) config.command = Command::Riemann;
  if (rate->parsed()) config.command = Command::Rate;
  if (subsolution->parsed()) config.command = Command::Subsolution;
  if (counterexample->parsed()) config.command = Command::Counterexample;
  if (sweep->parsed()) config.command = Command::Sweep;
  if (profile->parsed()) config.command = Command::Profile;

  if (preset == "paper") config.preset_paper = true;
  if (format == "csv") config.format = Format::Csv;
  else if (format == "text") config.format = Format::Text;
  else config.format = Format::Json;

  return run(config, std::cout, std::cerr);
}

} // namespace erate::cli
