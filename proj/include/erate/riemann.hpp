// Exact solver for the 1-D Riemann problem of the full Euler system with the
// ideal-gas closure.  Data are constant in x1 and jump across x2 = 0; the
// solution is a self-similar fan of shocks, rarefaction waves and a contact
// discontinuity, a function of x2 / t alone.

#ifndef ERATE_RIEMANN_HPP
#define ERATE_RIEMANN_HPP

#include <vector>

#include "erate/gas.hpp"

namespace erate {

struct RiemannData {
  GasState left;   // region x2 < 0
  GasState right;  // region x2 > 0
};

enum class WaveKind { Shock, Rarefaction, Contact };

const char* to_string(WaveKind k);

struct Wave {
  WaveKind kind;
  double speed_lo;  // head speed; equals speed_hi for Shock and Contact
  double speed_hi;  // tail speed
  GasState pre_state;   // constant state on the lower-x2 side
  GasState post_state;  // constant state on the upper-x2 side
};

struct SelfSimilarSolution {
  std::vector<Wave> waves;        // speeds nondecreasing
  std::vector<GasState> states;   // waves.size() + 1 constant regions
  double p_M = 0.0;               // intermediate pressure (= left p when no waves)
  double v_M2 = 0.0;              // intermediate normal velocity
  double c_v = 1.5;

  // State at similarity coordinate xi = x2 / t, resolving rarefaction fans.
  GasState sample(double xi) const;
  // State at (t, x2), t > 0.  Self-similar: at(t,x) == at(l*t, l*x).
  GasState at(double t, double x2) const { return sample(x2 / t); }
};

// Unique root p_M of the two-shock pressure equation
//
//   -sqrt(2 c_v) [ (p_M - p-) / sqrt(rho- (p- + (2 c_v + 1) p_M))
//                + (p_M - p+) / sqrt(rho+ (p+ + (2 c_v + 1) p_M)) ] = v+2 - v-2.
//
// Bracketing + bisection + Newton polish.  Throws NoTwoShockRoot when the
// root does not lie at or above max(p-, p+), BracketingFailure when no sign
// change can be located.
double solve_intermediate_pressure(const RiemannData& data, const GasConstants& g);

struct IntermediateStates {
  double v_M2;        // common normal velocity of the intermediate states
  double rho_Mminus;  // density behind the left shock
  double rho_Mplus;   // density behind the right shock
};

IntermediateStates intermediate_states(const RiemannData& data, double p_M,
                                       const GasConstants& g);

struct ShockSpeeds {
  double sigma_minus;
  double sigma_plus;
  double sigma_M;  // contact speed, equal to v_M2
};

// Shock speeds from the mass jump conditions
// sigma_pm (rho_pm - rho_Mpm) = rho_pm v_pm2 - rho_Mpm v_M2.
// Throws DegenerateShock on a vanishing density jump.
ShockSpeeds shock_speeds(const RiemannData& data, double p_M,
                         const IntermediateStates& mid, const GasConstants& g);

// Full wave pattern for arbitrary (non-vacuum) data.  In the two-shock regime
// the closed forms above are the code path actually taken.
SelfSimilarSolution solve_riemann(const RiemannData& data, const GasConstants& g);

// Wave kinds left to right; empty for constant data.
std::vector<WaveKind> classify_wave_pattern(const RiemannData& data, const GasConstants& g);

// Scaled Rankine-Hugoniot residuals (mass, normal momentum, tangential
// momentum, energy) of a discontinuity moving at `speed`.
struct JumpResiduals {
  double mass;
  double momentum_normal;
  double momentum_tangential;
  double energy;
  double max() const;
};

JumpResiduals jump_residuals(const GasState& lo, const GasState& hi, double speed,
                             const GasConstants& g);

// Entropy production of a front per unit front length,
// [[rho s v2]] - speed [[rho s]] with [[f]] = f_hi - f_lo; >= 0 when admissible.
double front_entropy_production(const GasState& lo, const GasState& hi, double speed,
                                const GasConstants& g);

namespace detail {

// Standard pressure-function decomposition f_L(p) + f_R(p) + (v+2 - v-2) = 0
// of the gamma-law gas, valid across shock and rarefaction branches.  Used by
// the general solver; exposed so tests can cross-check the two-shock closed
// forms against it.
double pressure_function(double p, const GasState& side, const GasConstants& g);
double pressure_function_derivative(double p, const GasState& side, const GasConstants& g);
double solve_pressure_general(const RiemannData& data, const GasConstants& g);

} // namespace detail

} // namespace erate

#endif
