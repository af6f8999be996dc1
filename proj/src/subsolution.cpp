#include "erate/subsolution.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace erate {

namespace {

using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;

constexpr double kConvergenceTol = 1e-10;
constexpr double kAcceptTol = 1e-8;
constexpr int kMaxIterations = 100;
constexpr int kMaxHalvings = 30;

struct System {
  // ordering of unknowns: mu-, mu+, beta, p1, C1, gamma
  const RiemannData& data;
  double rho1;
  double c_v;

  Vec6 raw_residual(const Vec6& x) const {
    const GasState& L = data.left;
    const GasState& R = data.right;
    const double mu_m = x[0], mu_p = x[1], beta = x[2], p1 = x[3], C1 = x[4], gam = x[5];

    const double E_m = 0.5 * L.rho * L.v2 * L.v2 + c_v * L.p;
    const double E_p = 0.5 * R.rho * R.v2 * R.v2 + c_v * R.p;
    const double E_1 = 0.5 * rho1 * C1 + c_v * p1;
    // normal-normal entry of the relaxed momentum flux plus pressure
    const double W = rho1 * (0.5 * C1 - gam) + p1;

    Vec6 f;
    f[0] = mu_m * (L.rho - rho1) - (L.rho * L.v2 - rho1 * beta);
    f[1] = mu_m * (L.rho * L.v2 - rho1 * beta) - ((L.rho * L.v2 * L.v2 + L.p) - W);
    f[2] = mu_m * (E_m - E_1) - ((E_m + L.p) * L.v2 - (E_1 + p1) * beta);
    f[3] = mu_p * (rho1 - R.rho) - (rho1 * beta - R.rho * R.v2);
    f[4] = mu_p * (rho1 * beta - R.rho * R.v2) - (W - (R.rho * R.v2 * R.v2 + R.p));
    f[5] = mu_p * (E_1 - E_p) - ((E_1 + p1) * beta - (E_p + R.p) * R.v2);
    return f;
  }

  // Equation scales: the largest flux magnitude entering each condition.
  Vec6 scales(const Vec6& x) const {
    const GasState& L = data.left;
    const GasState& R = data.right;
    const double mu_m = x[0], mu_p = x[1], beta = x[2], p1 = x[3], C1 = x[4], gam = x[5];
    const double E_m = 0.5 * L.rho * L.v2 * L.v2 + c_v * L.p;
    const double E_p = 0.5 * R.rho * R.v2 * R.v2 + c_v * R.p;
    const double E_1 = 0.5 * rho1 * C1 + c_v * p1;
    const double W = rho1 * (0.5 * C1 - gam) + p1;

    Vec6 s;
    s[0] = std::max({1.0, std::abs(mu_m * (L.rho - rho1)), std::abs(L.rho * L.v2),
                     std::abs(rho1 * beta)});
    s[1] = std::max({1.0, std::abs(L.rho * L.v2 * L.v2 + L.p), std::abs(W),
                     std::abs(mu_m * (L.rho * L.v2 - rho1 * beta))});
    s[2] = std::max({1.0, std::abs(mu_m * (E_m - E_1)), std::abs((E_m + L.p) * L.v2),
                     std::abs((E_1 + p1) * beta)});
    s[3] = std::max({1.0, std::abs(mu_p * (rho1 - R.rho)), std::abs(rho1 * beta),
                     std::abs(R.rho * R.v2)});
    s[4] = std::max({1.0, std::abs(R.rho * R.v2 * R.v2 + R.p), std::abs(W),
                     std::abs(mu_p * (rho1 * beta - R.rho * R.v2))});
    s[5] = std::max({1.0, std::abs(mu_p * (E_1 - E_p)), std::abs((E_1 + p1) * beta),
                     std::abs((E_p + R.p) * R.v2)});
    return s;
  }

  Vec6 scaled_residual(const Vec6& x) const {
    return raw_residual(x).cwiseQuotient(scales(x));
  }
};

// Damped Newton with forward-difference Jacobian on the scaled residual.
bool newton_solve(const System& sys, Vec6& x) {
  const double fd_eps = std::sqrt(std::numeric_limits<double>::epsilon());
  for (int it = 0; it < kMaxIterations; ++it) {
    const Vec6 f = sys.scaled_residual(x);
    const double norm = f.cwiseAbs().maxCoeff();
    if (!std::isfinite(norm)) return false;
    if (norm <= kConvergenceTol) return true;

    Mat6 J;
    for (int j = 0; j < 6; ++j) {
      Vec6 xp = x;
      const double h = fd_eps * std::max(std::abs(x[j]), 1.0);
      xp[j] += h;
      J.col(j) = (sys.scaled_residual(xp) - f) / h;
    }

    Eigen::PartialPivLU<Mat6> lu(J);
    const Vec6 step = lu.solve(-f);
    if (!step.allFinite()) return false;

    double lambda = 1.0;
    bool accepted = false;
    for (int halvings = 0; halvings <= kMaxHalvings; ++halvings) {
      const Vec6 trial = x + lambda * step;
      const double trial_norm = sys.scaled_residual(trial).cwiseAbs().maxCoeff();
      if (std::isfinite(trial_norm) && trial_norm < norm) {
        x = trial;
        accepted = true;
        break;
      }
      lambda *= 0.5;
    }
    if (!accepted) return false;
  }
  return sys.scaled_residual(x).cwiseAbs().maxCoeff() <= kConvergenceTol;
}

bool plausible(const Vec6& x) {
  return x[0] < x[1] && x[3] > 0.0 && x[4] > 0.0;
}

} // namespace

namespace detail {

std::array<double, 6> subsolution_residuals(const FanSubsolution& sub,
                                            const RiemannData& data,
                                            const GasConstants& g) {
  System sys{data, sub.rho1, g.c_v};
  Vec6 x;
  x << sub.mu_minus, sub.mu_plus, sub.beta, sub.p1, sub.C1, sub.gamma;
  const Vec6 r = sys.scaled_residual(x);
  std::array<double, 6> out;
  for (int i = 0; i < 6; ++i) out[i] = r[i];
  return out;
}

} // namespace detail

FanSubsolution solve_fan_subsolution(const RiemannData& data, double rho1,
                                     const GasConstants& g) {
  validate(data.left);
  validate(data.right);
  validate(g);
  if (!(rho1 > 0.0) || !std::isfinite(rho1))
    throw InputError("InvalidRho1", "rho1 must be positive");
  if (data.left.v1 != 0.0 || data.right.v1 != 0.0)
    throw InputError("TangentialData",
                     "fan subsolution requires zero tangential velocity on both sides");

  const GasState& L = data.left;
  const GasState& R = data.right;

  // Zero-jump degenerate case: the wedge carries the common state, both
  // fronts are jump-free and placed at the acoustic speeds.  The relaxation
  // gaps close (C1 = beta^2), so this is a boundary, not a strict subsolution.
  auto close = [](double a, double b) {
    return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
  };
  if (close(L.rho, R.rho) && close(L.p, R.p) && close(L.v2, R.v2) && close(rho1, L.rho)) {
    FanSubsolution sub;
    sub.rho1 = rho1;
    sub.beta = L.v2;
    sub.p1 = L.p;
    sub.C1 = L.v2 * L.v2;
    sub.gamma = -0.5 * L.v2 * L.v2;
    const double c = sound_speed(L, g);
    sub.mu_minus = L.v2 - c;
    sub.mu_plus = L.v2 + c;
    sub.residuals = detail::subsolution_residuals(sub, data, g);
    for (double r : sub.residuals) sub.max_residual = std::max(sub.max_residual, std::abs(r));
    return sub;
  }

  System sys{data, rho1, g.c_v};

  // Primary seed: the two-shock self-similar quantities.  The wedge sits
  // between the two shocks, so the self-similar intermediate values are in
  // the right basin.
  double beta0 = 0.5 * (L.v2 + R.v2);
  double mu_m0 = beta0 - sound_speed(L, g);
  double mu_p0 = beta0 + sound_speed(R, g);
  double p10 = 2.0 * std::max(L.p, R.p);
  try {
    const double p_M = solve_intermediate_pressure(data, g);
    const IntermediateStates mid = intermediate_states(data, p_M, g);
    const ShockSpeeds ss = shock_speeds(data, p_M, mid, g);
    beta0 = mid.v_M2;
    mu_m0 = ss.sigma_minus;
    mu_p0 = ss.sigma_plus;
    p10 = (2.0 / 3.0) * p_M;
  } catch (const SolverError&) {
    // keep the acoustic fallback seed
  }

  std::vector<Vec6> seeds;
  auto push_seed = [&](double beta_f, double p_f) {
    Vec6 x;
    const double beta = beta0 * beta_f;
    const double C1 = 1.05 * beta * beta + 1.0;
    x << mu_m0, mu_p0, beta, p10 * p_f, C1, 0.5 * C1 - beta * beta;
    seeds.push_back(x);
  };
  push_seed(1.0, 1.0);
  for (double beta_f : {0.75, 1.25, 0.5, 1.5})
    for (double p_f : {1.0, 0.6, 1.5, 0.3})
      push_seed(beta_f, p_f);

  for (Vec6& x : seeds) {
    if (!newton_solve(sys, x)) continue;
    if (!plausible(x)) continue;  // wrong branch (e.g. crossed fronts)

    FanSubsolution sub;
    sub.rho1 = rho1;
    sub.mu_minus = x[0];
    sub.mu_plus = x[1];
    sub.beta = x[2];
    sub.p1 = x[3];
    sub.C1 = x[4];
    sub.gamma = x[5];
    sub.residuals = detail::subsolution_residuals(sub, data, g);
    sub.max_residual = 0.0;
    for (double r : sub.residuals) sub.max_residual = std::max(sub.max_residual, std::abs(r));
    if (sub.max_residual > kAcceptTol)
      throw NewtonDivergence("converged point fails the residual acceptance threshold");
    return sub;
  }

  // Newton may still have converged onto a branch with nonpositive wedge
  // pressure or kinetic bound; distinguish that from plain divergence.
  for (Vec6& x : seeds) {
    if (newton_solve(sys, x) && x[0] < x[1] && (x[3] <= 0.0 || x[4] <= 0.0))
      throw InvalidIntermediate("wedge pressure or kinetic-energy bound is nonpositive");
  }
  throw NewtonDivergence("no seed converged for the fan-subsolution system");
}

AdmissibilityReport check_admissibility(const FanSubsolution& sub, const RiemannData& data,
                                        const GasConstants& g) {
  AdmissibilityReport report;
  auto add = [&](const std::string& name, double margin) {
    report.checks.push_back({name, margin, margin > 0.0});
  };

  add("front_order", sub.mu_plus - sub.mu_minus);
  add("pressure_positive", sub.p1);
  add("kinetic_bound_positive", sub.C1);
  // strict order condition, eigenvalue gaps of (C1/2) Id - (v (x) v - u)
  add("tangential_gap", 0.5 * sub.C1 + sub.gamma - sub.alpha * sub.alpha);
  add("normal_gap", 0.5 * sub.C1 - sub.gamma - sub.beta * sub.beta);
  add("trace_gap", sub.C1 - (sub.alpha * sub.alpha + sub.beta * sub.beta));

  const GasState wedge{sub.rho1, sub.alpha, sub.beta, sub.p1 > 0.0 ? sub.p1 : 1.0};
  if (sub.p1 > 0.0) {
    add("entropy_production_left",
        front_entropy_production(data.left, wedge, sub.mu_minus, g));
    add("entropy_production_right",
        front_entropy_production(wedge, data.right, sub.mu_plus, g));
  } else {
    add("entropy_production_left", -std::numeric_limits<double>::infinity());
    add("entropy_production_right", -std::numeric_limits<double>::infinity());
  }

  report.all_pass = std::all_of(report.checks.begin(), report.checks.end(),
                                [](const AdmissibilityCheck& c) { return c.pass; });
  return report;
}

SubsolutionEntropies subsolution_entropy_states(const FanSubsolution& sub,
                                                const RiemannData& data,
                                                const GasConstants& g) {
  SubsolutionEntropies e;
  e.s_minus = specific_entropy(data.left, g);
  e.s_1 = specific_entropy(GasState{sub.rho1, 0.0, sub.beta, sub.p1}, g);
  e.s_plus = specific_entropy(data.right, g);
  return e;
}

PiecewiseFan to_piecewise_fan(const FanSubsolution& sub, const RiemannData& data) {
  PiecewiseFan fan;
  fan.front_speeds = {sub.mu_minus, sub.mu_plus};
  fan.region_states = {FanRegion{data.left.rho, data.left.p, data.left.v2},
                       FanRegion{sub.rho1, sub.p1, sub.beta},
                       FanRegion{data.right.rho, data.right.p, data.right.v2}};
  validate(fan);
  return fan;
}

} // namespace erate
