// Piecewise-constant 1-fan subsolution: between two fronts x2 = mu-+ t the
// classical fields are relaxed.  The wedge carries a density rho1 (given), a
// velocity (alpha, beta) with alpha = 0 in the symmetric setting, a pressure
// p1, a kinetic-energy bound C1 relaxing |v|^2, and a traceless symmetric
// 2x2 tensor u with u_11 = gamma, u_12 = 0 relaxing v (x) v, so that in the
// wedge
//
//   v (x) v        ->  u + (C1 / 2) Id,
//   momentum flux  ->  rho1 (u + (C1 / 2) Id) + p1 Id,
//   energy density ->  rho1 C1 / 2 + c_v p1,
//
// with the strict order condition  v (x) v - u < (C1 / 2) Id  required for a
// subsolution.  The six unknowns (mu-, mu+, beta, p1, C1, gamma) solve the
// mass, normal-momentum and energy jump conditions across both fronts.

#ifndef ERATE_SUBSOLUTION_HPP
#define ERATE_SUBSOLUTION_HPP

#include <array>
#include <string>
#include <vector>

#include "erate/gas.hpp"
#include "erate/rate.hpp"
#include "erate/riemann.hpp"

namespace erate {

struct FanSubsolution {
  double rho1 = 0.0;      // intermediate density, an input of the solve
  double mu_minus = 0.0;  // left front speed
  double mu_plus = 0.0;   // right front speed, > mu_minus
  double beta = 0.0;      // intermediate normal velocity
  double p1 = 0.0;        // intermediate pressure
  double C1 = 0.0;        // kinetic-energy bound, relaxes |v|^2
  double gamma = 0.0;     // tangential-tangential entry of the traceless relaxation
  double alpha = 0.0;     // intermediate tangential velocity (0 here)

  std::array<double, 6> residuals{};  // scaled jump-condition residuals
  double max_residual = 0.0;
};

// Solves the six jump conditions for the wedge unknowns by damped Newton
// iteration with a finite-difference Jacobian, seeded from the two-shock
// self-similar quantities with a multi-start fallback.
//
// Requires rho1 > 0 and zero tangential velocities on both sides.  Throws
// NewtonDivergence when every seed fails, InvalidIntermediate when the
// converged wedge has p1 <= 0 or C1 <= 0.
FanSubsolution solve_fan_subsolution(const RiemannData& data, double rho1,
                                     const GasConstants& g);

// One admissibility inequality with its margin (positive = satisfied).
struct AdmissibilityCheck {
  std::string name;
  double margin;
  bool pass;
};

struct AdmissibilityReport {
  std::vector<AdmissibilityCheck> checks;
  bool all_pass = false;
};

// The inequality set is reconstructed from the fan-subsolution framework:
// front ordering, positivity of pressure and of the kinetic-energy bound,
// the strict order conditions (both eigenvalue gaps of
// (C1/2) Id - (v (x) v - u) and their trace), and nonnegative entropy
// production across both fronts.  Diagnostics are always returned.
AdmissibilityReport check_admissibility(const FanSubsolution& sub, const RiemannData& data,
                                        const GasConstants& g);

struct SubsolutionEntropies {
  double s_minus;
  double s_1;
  double s_plus;
};

// The three specific entropies feeding the subsolution's entropy rate.
SubsolutionEntropies subsolution_entropy_states(const FanSubsolution& sub,
                                                const RiemannData& data,
                                                const GasConstants& g);

// Three-region fan (left state | wedge | right state) carrying the density
// and pressure shared by every solution built on the subsolution.
PiecewiseFan to_piecewise_fan(const FanSubsolution& sub, const RiemannData& data);

namespace detail {

// Residuals of the six jump conditions, scaled per equation by the magnitude
// of the terms entering it.
std::array<double, 6> subsolution_residuals(const FanSubsolution& sub,
                                            const RiemannData& data,
                                            const GasConstants& g);

} // namespace detail

} // namespace erate

#endif
