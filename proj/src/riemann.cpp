#include "erate/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace erate {

namespace {

constexpr double kJumpTieBreak = 1e-12;   // relative size below which a jump is no wave
constexpr double kVacuumPressure = 1e-14; // solved pressure at or below this is vacuum

bool negligible_jump(double a, double b) {
  return std::abs(a - b) <= kJumpTieBreak * std::max({1.0, std::abs(a), std::abs(b)});
}

// Left-hand side of the two-shock pressure equation minus the velocity jump.
// Monotone decreasing in p; its root is the intermediate pressure.
double two_shock_residual(double p, const RiemannData& d, const GasConstants& g) {
  const double k = 2.0 * g.c_v + 1.0;
  const double fm = (p - d.left.p) / std::sqrt(d.left.rho * (d.left.p + k * p));
  const double fp = (p - d.right.p) / std::sqrt(d.right.rho * (d.right.p + k * p));
  return -std::sqrt(2.0 * g.c_v) * (fm + fp) - (d.right.v2 - d.left.v2);
}

double two_shock_residual_derivative(double p, const RiemannData& d, const GasConstants& g) {
  const double k = 2.0 * g.c_v + 1.0;
  auto branch = [&](const GasState& s) {
    const double q = s.p + k * p;
    return (q - 0.5 * k * (p - s.p)) / (std::sqrt(s.rho) * q * std::sqrt(q));
  };
  return -std::sqrt(2.0 * g.c_v) * (branch(d.left) + branch(d.right));
}

// Density behind a shock taking the side state to pressure p.
double shock_density(const GasState& side, double p, const GasConstants& g) {
  const double k = 2.0 * g.c_v + 1.0;
  return side.rho * (side.p + k * p) / (p + k * side.p);
}

} // namespace

const char* to_string(WaveKind k) {
  switch (k) {
  case WaveKind::Shock: return "Shock";
  case WaveKind::Rarefaction: return "Rarefaction";
  case WaveKind::Contact: return "Contact";
  }
  return "?";
}

double solve_intermediate_pressure(const RiemannData& data, const GasConstants& g) {
  validate(data.left);
  validate(data.right);
  validate(g);

  const double scale = std::max(1.0, std::abs(data.right.v2 - data.left.v2));
  double lo = std::max(data.left.p, data.right.p);
  const double f_lo = two_shock_residual(lo, data, g);

  // The residual decreases in p, so a root above lo needs f(lo) > 0.  A
  // residual at lo that already vanishes is the degenerate zero-jump case.
  if (std::abs(f_lo) <= 1e-12 * scale) return lo;
  if (f_lo < 0.0)
    throw NoTwoShockRoot("intermediate pressure does not exceed both end pressures");

  double hi = 2.0 * lo;
  while (two_shock_residual(hi, data, g) > 0.0) {
    hi *= 2.0;
    if (hi > 1e300)
      throw BracketingFailure("no sign change found for the two-shock pressure equation");
  }

  for (int i = 0; i < 200 && (hi - lo) > 1e-12 * std::max(1.0, hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    (two_shock_residual(mid, data, g) > 0.0 ? lo : hi) = mid;
  }

  // Newton polish from the bisection estimate.
  double p = 0.5 * (lo + hi);
  for (int i = 0; i < 4; ++i) {
    const double f = two_shock_residual(p, data, g);
    const double df = two_shock_residual_derivative(p, data, g);
    if (df == 0.0) break;
    const double next = p - f / df;
    if (!(next > 0.0)) break;
    p = next;
  }

  if (std::abs(two_shock_residual(p, data, g)) > 1e-10 * scale)
    throw BracketingFailure("two-shock pressure residual failed to converge");
  return p;
}

IntermediateStates intermediate_states(const RiemannData& data, double p_M,
                                       const GasConstants& g) {
  const double k = 2.0 * g.c_v + 1.0;
  IntermediateStates mid;
  mid.v_M2 = data.left.v2 - std::sqrt(2.0 * g.c_v) * (p_M - data.left.p) /
                                std::sqrt(data.left.rho * (data.left.p + k * p_M));
  mid.rho_Mminus = shock_density(data.left, p_M, g);
  mid.rho_Mplus = shock_density(data.right, p_M, g);
  return mid;
}

ShockSpeeds shock_speeds(const RiemannData& data, double p_M, const IntermediateStates& mid,
                         const GasConstants& g) {
  (void)p_M;
  (void)g;
  if (negligible_jump(data.left.rho, mid.rho_Mminus) ||
      negligible_jump(data.right.rho, mid.rho_Mplus))
    throw DegenerateShock("vanishing density jump across a shock front");
  ShockSpeeds s;
  s.sigma_minus = (data.left.rho * data.left.v2 - mid.rho_Mminus * mid.v_M2) /
                  (data.left.rho - mid.rho_Mminus);
  s.sigma_plus = (data.right.rho * data.right.v2 - mid.rho_Mplus * mid.v_M2) /
                 (data.right.rho - mid.rho_Mplus);
  s.sigma_M = mid.v_M2;
  return s;
}

namespace detail {

double pressure_function(double p, const GasState& side, const GasConstants& g) {
  const double gam = adiabatic_exponent(g);
  if (p > side.p) {
    const double A = 2.0 / ((gam + 1.0) * side.rho);
    const double B = (gam - 1.0) / (gam + 1.0) * side.p;
    return (p - side.p) * std::sqrt(A / (p + B));
  }
  const double c = sound_speed(side, g);
  return 2.0 * c / (gam - 1.0) * (std::pow(p / side.p, (gam - 1.0) / (2.0 * gam)) - 1.0);
}

double pressure_function_derivative(double p, const GasState& side, const GasConstants& g) {
  const double gam = adiabatic_exponent(g);
  if (p > side.p) {
    const double A = 2.0 / ((gam + 1.0) * side.rho);
    const double B = (gam - 1.0) / (gam + 1.0) * side.p;
    return std::sqrt(A / (p + B)) * (1.0 - 0.5 * (p - side.p) / (p + B));
  }
  const double c = sound_speed(side, g);
  return c / (gam * side.p) * std::pow(p / side.p, -(gam + 1.0) / (2.0 * gam));
}

double solve_pressure_general(const RiemannData& data, const GasConstants& g) {
  const double dv = data.right.v2 - data.left.v2;
  const double gam = adiabatic_exponent(g);

  // Two-rarefaction positivity: a positive-pressure solution needs the
  // expansion to stay below the escape velocity 2(c_L + c_R)/(gam - 1).
  const double escape =
      2.0 * (sound_speed(data.left, g) + sound_speed(data.right, g)) / (gam - 1.0);
  if (dv >= escape)
    throw VacuumFormation("data too expansive for a positive-pressure solution");

  auto f = [&](double p) {
    return pressure_function(p, data.left, g) + pressure_function(p, data.right, g) + dv;
  };

  // f increases from dv - escape < 0 at p -> 0+, so bracket upward.
  double lo = std::min(data.left.p, data.right.p);
  while (f(lo) > 0.0) {
    lo *= 0.5;
    if (lo < 1e-300)
      throw BracketingFailure("no lower bracket for the pressure equation");
  }
  double hi = std::max(data.left.p, data.right.p);
  while (f(hi) < 0.0) {
    hi *= 2.0;
    if (hi > 1e300)
      throw BracketingFailure("no upper bracket for the pressure equation");
  }

  for (int i = 0; i < 200 && (hi - lo) > 1e-12 * std::max(1.0, hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }

  double p = 0.5 * (lo + hi);
  for (int i = 0; i < 4; ++i) {
    const double df = pressure_function_derivative(p, data.left, g) +
                      pressure_function_derivative(p, data.right, g);
    if (df == 0.0) break;
    const double next = p - f(p) / df;
    if (!(next > 0.0)) break;
    p = next;
  }

  if (p <= kVacuumPressure)
    throw VacuumFormation("intermediate pressure collapses to vacuum");
  return p;
}

} // namespace detail

SelfSimilarSolution solve_riemann(const RiemannData& data, const GasConstants& g) {
  validate(data.left);
  validate(data.right);
  validate(g);

  SelfSimilarSolution sol;
  sol.c_v = g.c_v;

  const GasState& L = data.left;
  const GasState& R = data.right;
  const double gam = adiabatic_exponent(g);

  const bool same_state = negligible_jump(L.rho, R.rho) && negligible_jump(L.p, R.p) &&
                          negligible_jump(L.v2, R.v2) && negligible_jump(L.v1, R.v1);
  if (same_state) {
    sol.states = {L};
    sol.p_M = L.p;
    sol.v_M2 = L.v2;
    return sol;
  }

  // Two-shock data take the closed-form path; anything else goes through the
  // general pressure-function decomposition.  Both solve the same equation in
  // the overlap.
  double p_M = 0.0;
  bool closed_form = false;
  if (two_shock_residual(std::max(L.p, R.p), data, g) > 0.0) {
    p_M = solve_intermediate_pressure(data, g);
    closed_form = true;
  } else {
    p_M = detail::solve_pressure_general(data, g);
  }

  double v_M2, rho_ML, rho_MR;
  if (closed_form) {
    const IntermediateStates mid = intermediate_states(data, p_M, g);
    v_M2 = mid.v_M2;
    rho_ML = mid.rho_Mminus;
    rho_MR = mid.rho_Mplus;
  } else {
    v_M2 = 0.5 * (L.v2 + R.v2) + 0.5 * (detail::pressure_function(p_M, R, g) -
                                        detail::pressure_function(p_M, L, g));
    rho_ML = p_M > L.p ? shock_density(L, p_M, g) : L.rho * std::pow(p_M / L.p, 1.0 / gam);
    rho_MR = p_M > R.p ? shock_density(R, p_M, g) : R.rho * std::pow(p_M / R.p, 1.0 / gam);
  }
  sol.p_M = p_M;
  sol.v_M2 = v_M2;

  const GasState mid_L{rho_ML, L.v1, v_M2, p_M};
  const GasState mid_R{rho_MR, R.v1, v_M2, p_M};

  sol.states.push_back(L);

  // Left wave.
  if (!negligible_jump(p_M, L.p)) {
    Wave w;
    w.pre_state = L;
    w.post_state = mid_L;
    if (p_M > L.p) {
      w.kind = WaveKind::Shock;
      w.speed_lo = w.speed_hi = (L.rho * L.v2 - rho_ML * v_M2) / (L.rho - rho_ML);
    } else {
      w.kind = WaveKind::Rarefaction;
      w.speed_lo = L.v2 - sound_speed(L, g);
      w.speed_hi = v_M2 - sound_speed(mid_L, g);
    }
    sol.waves.push_back(w);
    sol.states.push_back(mid_L);
  }

  // Contact: carries the density jump and any tangential jump.
  const bool rho_jump = !negligible_jump(rho_ML, rho_MR);
  const bool v1_jump = !negligible_jump(L.v1, R.v1);
  if (rho_jump || v1_jump) {
    Wave w;
    w.kind = WaveKind::Contact;
    w.speed_lo = w.speed_hi = v_M2;
    w.pre_state = sol.states.back();
    w.post_state = mid_R;
    sol.waves.push_back(w);
    sol.states.push_back(mid_R);
  }

  // Right wave.
  if (!negligible_jump(p_M, R.p)) {
    Wave w;
    w.pre_state = sol.states.back();
    w.post_state = R;
    if (p_M > R.p) {
      w.kind = WaveKind::Shock;
      w.speed_lo = w.speed_hi = (R.rho * R.v2 - rho_MR * v_M2) / (R.rho - rho_MR);
    } else {
      w.kind = WaveKind::Rarefaction;
      w.speed_lo = v_M2 + sound_speed(mid_R, g);
      w.speed_hi = R.v2 + sound_speed(R, g);
    }
    sol.waves.push_back(w);
  }
  sol.states.push_back(R);

  // Degenerate middle without any front: collapse the duplicated state.
  if (sol.waves.empty()) sol.states = {L};

  for (std::size_t i = 1; i < sol.waves.size(); ++i) {
    if (sol.waves[i].speed_lo < sol.waves[i - 1].speed_hi - 1e-9)
      throw SolverError("WaveOrdering", "wave speeds came out non-monotone");
  }
  return sol;
}

std::vector<WaveKind> classify_wave_pattern(const RiemannData& data, const GasConstants& g) {
  const SelfSimilarSolution sol = solve_riemann(data, g);
  std::vector<WaveKind> pattern;
  pattern.reserve(sol.waves.size());
  for (const Wave& w : sol.waves) pattern.push_back(w.kind);
  return pattern;
}

GasState SelfSimilarSolution::sample(double xi) const {
  if (waves.empty()) return states.front();
  const GasConstants g{c_v};
  const double gam = adiabatic_exponent(g);

  for (std::size_t i = 0; i < waves.size(); ++i) {
    const Wave& w = waves[i];
    if (xi < w.speed_lo) return states[i];
    if (xi <= w.speed_hi) {
      if (w.kind != WaveKind::Rarefaction) return states[i + 1];
      // Inside the fan: similarity solution along the characteristic.  A left
      // fan ends at v_M2 - c, a right fan starts at v_M2 + c.
      const bool left_fan = w.speed_hi <= v_M2;
      GasState s;
      if (left_fan) {
        const GasState& a = w.pre_state;
        const double ca = sound_speed(a, g);
        const double v = 2.0 / (gam + 1.0) * (ca + 0.5 * (gam - 1.0) * a.v2 + xi);
        const double c = ca - 0.5 * (gam - 1.0) * (v - a.v2);
        s.rho = a.rho * std::pow(c / ca, 2.0 / (gam - 1.0));
        s.p = a.p * std::pow(c / ca, 2.0 * gam / (gam - 1.0));
        s.v1 = a.v1;
        s.v2 = v;
      } else {
        const GasState& b = w.post_state;
        const double cb = sound_speed(b, g);
        const double v = 2.0 / (gam + 1.0) * (-cb + 0.5 * (gam - 1.0) * b.v2 + xi);
        const double c = cb + 0.5 * (gam - 1.0) * (v - b.v2);
        s.rho = b.rho * std::pow(c / cb, 2.0 / (gam - 1.0));
        s.p = b.p * std::pow(c / cb, 2.0 * gam / (gam - 1.0));
        s.v1 = b.v1;
        s.v2 = v;
      }
      return s;
    }
  }
  return states.back();
}

double JumpResiduals::max() const {
  return std::max({std::abs(mass), std::abs(momentum_normal), std::abs(momentum_tangential),
                   std::abs(energy)});
}

JumpResiduals jump_residuals(const GasState& lo, const GasState& hi, double speed,
                             const GasConstants& g) {
  auto scaled = [](double r, double a, double b, double c) {
    return r / std::max({1.0, std::abs(a), std::abs(b), std::abs(c)});
  };
  const double m_lo = lo.rho * lo.v2, m_hi = hi.rho * hi.v2;
  const double fn_lo = lo.rho * lo.v2 * lo.v2 + lo.p, fn_hi = hi.rho * hi.v2 * hi.v2 + hi.p;
  const double ft_lo = lo.rho * lo.v1 * lo.v2, ft_hi = hi.rho * hi.v1 * hi.v2;
  const double E_lo = total_energy_density(lo, g), E_hi = total_energy_density(hi, g);
  const double fe_lo = (E_lo + lo.p) * lo.v2, fe_hi = (E_hi + hi.p) * hi.v2;

  JumpResiduals r;
  r.mass = scaled(speed * (hi.rho - lo.rho) - (m_hi - m_lo), m_lo, m_hi,
                  speed * std::max(lo.rho, hi.rho));
  r.momentum_normal =
      scaled(speed * (m_hi - m_lo) - (fn_hi - fn_lo), fn_lo, fn_hi, speed * std::max(std::abs(m_lo), std::abs(m_hi)));
  r.momentum_tangential =
      scaled(speed * (hi.rho * hi.v1 - lo.rho * lo.v1) - (ft_hi - ft_lo), ft_lo, ft_hi, 1.0);
  r.energy = scaled(speed * (E_hi - E_lo) - (fe_hi - fe_lo), fe_lo, fe_hi,
                    speed * std::max(E_lo, E_hi));
  return r;
}

double front_entropy_production(const GasState& lo, const GasState& hi, double speed,
                                const GasConstants& g) {
  const double rs_lo = entropy_density(lo, g);
  const double rs_hi = entropy_density(hi, g);
  return (rs_hi * hi.v2 - rs_lo * lo.v2) - speed * (rs_hi - rs_lo);
}

} // namespace erate
