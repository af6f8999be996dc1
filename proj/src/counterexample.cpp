#include "erate/counterexample.hpp"

#include <algorithm>
#include <cmath>
#include <future>

namespace erate {

const char* to_string(Verdict v) {
  switch (v) {
  case Verdict::SelfSimilarNotEntropyRateAdmissible:
    return "SelfSimilarNotEntropyRateAdmissible";
  case Verdict::Inconclusive:
    return "Inconclusive";
  }
  return "?";
}

CounterexampleReport reproduce_theorem(const RiemannData& data, double rho1,
                                       const GasConstants& g) {
  validate(data.left);
  validate(data.right);
  validate(g);
  if (!(rho1 > 0.0) || !std::isfinite(rho1))
    throw InputError("InvalidRho1", "rho1 must be positive");

  CounterexampleReport report;
  report.data = data;
  report.c_v = g.c_v;
  report.rho1 = rho1;

  try {
    report.self_similar = solve_riemann(data, g);

    bool two_shocks = report.self_similar.waves.size() >= 2;
    for (const Wave& w : report.self_similar.waves)
      if (w.kind == WaveKind::Rarefaction) two_shocks = false;
    if (!two_shocks) {
      report.failure_cause = "self-similar solution is not a two-shock fan";
      return report;
    }

    for (const Wave& w : report.self_similar.waves) {
      if (w.kind != WaveKind::Shock) continue;
      report.max_shock_residual =
          std::max(report.max_shock_residual,
                   jump_residuals(w.pre_state, w.post_state, w.speed_lo, g).max());
    }

    report.self_similar_fan = to_piecewise_fan(report.self_similar);
    const EntropyRateReport rate_s = entropy_rate(report.self_similar_fan, g);

    report.subsolution = solve_fan_subsolution(data, rho1, g);
    report.max_subsolution_residual = report.subsolution.max_residual;
    report.admissibility = check_admissibility(report.subsolution, data, g);
    report.subsolution_fan = to_piecewise_fan(report.subsolution, data);
    const EntropyRateReport rate_c = entropy_rate(report.subsolution_fan, g);

    report.solved = true;
    report.self_similar_rate = rate_s.rate_per_width;
    report.fan_rate = rate_c.rate_per_width;
    report.self_similar_bracket =
        -1662.0 < report.self_similar_rate && report.self_similar_rate < -1661.0;
    report.fan_bracket = 867.0 < report.fan_rate && report.fan_rate < 868.0;

    const bool residuals_ok =
        report.max_shock_residual <= 1e-9 && report.max_subsolution_residual <= 1e-8;
    if (!residuals_ok) {
      report.failure_cause = "jump-condition residuals above tolerance";
    } else if (!report.admissibility.all_pass) {
      report.failure_cause = "subsolution admissibility inequalities not satisfied";
    } else if (!(report.fan_rate > report.self_similar_rate)) {
      report.failure_cause = "competitor does not produce entropy at a higher rate";
    } else {
      report.verdict = Verdict::SelfSimilarNotEntropyRateAdmissible;
    }
  } catch (const SolverError& e) {
    report.failure_cause = e.name() + std::string(": ") + e.what();
  }
  return report;
}

std::vector<CounterexampleReport> sweep_cv(const RiemannData& data, double rho1,
                                           const std::vector<double>& cv_grid) {
  auto run_point = [&data, rho1](double c_v) {
    try {
      return reproduce_theorem(data, rho1, GasConstants{c_v});
    } catch (const Error& e) {
      CounterexampleReport failed;
      failed.data = data;
      failed.c_v = c_v;
      failed.rho1 = rho1;
      failed.failure_cause = e.name() + std::string(": ") + e.what();
      return failed;
    }
  };

  // Grid points are independent and pure; results are collected in grid
  // order, so the output stays deterministic.
  std::vector<std::future<CounterexampleReport>> jobs;
  jobs.reserve(cv_grid.size());
  for (double c_v : cv_grid)
    jobs.push_back(std::async(std::launch::async, run_point, c_v));

  std::vector<CounterexampleReport> reports;
  reports.reserve(cv_grid.size());
  for (auto& job : jobs) reports.push_back(job.get());
  return reports;
}

bool diperna_verdict(const CounterexampleReport& report, double L, int samples) {
  if (report.verdict != Verdict::SelfSimilarNotEntropyRateAdmissible) return false;
  const GasConstants g{report.c_v};

  double max_speed = 0.0;
  for (double s : report.self_similar_fan.front_speeds)
    max_speed = std::max(max_speed, std::abs(s));
  for (double s : report.subsolution_fan.front_speeds)
    max_speed = std::max(max_speed, std::abs(s));
  const double horizon = max_speed > 0.0 ? 0.9 * L / max_speed : 1.0;

  for (int i = 1; i <= samples; ++i) {
    const double t = horizon * static_cast<double>(i) / samples;
    const auto [S_s, S_c] =
        diperna_totals(report.self_similar_fan, report.subsolution_fan, g, L, t);
    if (!(S_c > S_s)) return false;
  }
  return true;
}

} // namespace erate
