// Thermodynamics of the ideal gas with p = rho * theta and e = c_v * theta.
//
// All quantities are nondimensional.  Pressure is the stored variable;
// temperature is always derived as p / rho.

#ifndef ERATE_GAS_HPP
#define ERATE_GAS_HPP

#include <cmath>

#include "erate/errors.hpp"

namespace erate {

struct GasConstants {
  double c_v = 1.5;  // specific heat at constant volume, > 0
};

// One constant fluid state.  v1 is the tangential velocity (x1 direction),
// v2 the normal velocity (x2, the direction of the 1-D wave fans).
struct GasState {
  double rho = 1.0;
  double v1 = 0.0;
  double v2 = 0.0;
  double p = 1.0;
};

inline void validate(const GasConstants& g) {
  if (!(g.c_v > 0.0) || !std::isfinite(g.c_v))
    throw InputError("InvalidGasConstants", "c_v must be positive and finite");
}

inline void validate(const GasState& s) {
  if (!(s.rho > 0.0) || !(s.p > 0.0) || !std::isfinite(s.rho) ||
      !std::isfinite(s.p) || !std::isfinite(s.v1) || !std::isfinite(s.v2))
    throw InputError("InvalidGasState",
                     "gas state requires rho > 0, p > 0 and finite velocities");
}

// Adiabatic exponent of the equivalent gamma-law gas.
inline double adiabatic_exponent(const GasConstants& g) { return 1.0 + 1.0 / g.c_v; }

inline double temperature(const GasState& s) { return s.p / s.rho; }

// Physical specific entropy s = c_v log(theta) - log(rho)
//                             = log(p^c_v / rho^(c_v + 1)).
inline double specific_entropy(const GasState& s, const GasConstants& g) {
  return g.c_v * std::log(s.p / s.rho) - std::log(s.rho);
}

// Entropy per unit volume, rho * s; the integrand of the total entropy.
inline double entropy_density(const GasState& s, const GasConstants& g) {
  return s.rho * specific_entropy(s, g);
}

inline double sound_speed(const GasState& s, const GasConstants& g) {
  return std::sqrt(adiabatic_exponent(g) * s.p / s.rho);
}

// Total energy per unit volume, rho |v|^2 / 2 + c_v p.
inline double total_energy_density(const GasState& s, const GasConstants& g) {
  return 0.5 * s.rho * (s.v1 * s.v1 + s.v2 * s.v2) + g.c_v * s.p;
}

} // namespace erate

#endif
