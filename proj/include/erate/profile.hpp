// Algebraic scaffold of the arbitrary-entropy-profile construction: given
// piecewise-constant initial data over abstract cells and a nondecreasing
// step profile for the total entropy, the construction prescribes per-cell
// temperature, entropy and kinetic energy.  This module computes those fields
// and checks every balance the construction asserts.

#ifndef ERATE_PROFILE_HPP
#define ERATE_PROFILE_HPP

#include <span>
#include <string>
#include <vector>

#include "erate/gas.hpp"

namespace erate {

// Right-continuous step function S(t) on [0, T]: 0 before the first
// breakpoint, values[j] on [breakpoints[j], breakpoints[j+1]).  Membership in
// the admissible profile class additionally requires S = 0 on [0, delta) and
// nondecreasing values.
struct EntropyProfile {
  double delta = 0.0;  // onset time, > 0
  double T = 0.0;      // horizon
  std::vector<double> breakpoints;  // strictly increasing times in [0, T]
  std::vector<double> values;       // one value per breakpoint

  double value(double t) const;
  double final_value() const;  // S(T-)
};

struct ProfileDiagnostics {
  bool valid = false;
  std::vector<std::string> violations;
};

ProfileDiagnostics validate_profile(const EntropyProfile& profile);

// One cell of the spatial partition, known by volume only; the construction
// uses no geometric information beyond integrals of cellwise-constant fields.
struct Cell {
  double volume;
  double rho0;
  double theta0;
};

struct PartitionSpec {
  std::vector<Cell> cells;

  double total_mass() const;  // M0 = sum |Q_i| rho0_i
  double initial_entropy(const GasConstants& g) const;  // S0
};

void validate(const PartitionSpec& partition);

// theta_i(t) = exp(S(t)) theta0_i.
std::vector<double> temperature_field(const PartitionSpec& partition,
                                      const EntropyProfile& profile, double t);

// Per-cell entropy density rho0_i (c_v S(t) + c_v log theta0_i - log rho0_i).
std::vector<double> entropy_field(const PartitionSpec& partition,
                                  const EntropyProfile& profile, const GasConstants& g,
                                  double t);

// Smallest admissible constant total-energy density, inflated by `margin`:
// Lambda = (1 + margin) c_v exp(S(T-)) max_i(rho0_i theta0_i).  Guarantees
// strictly positive prescribed kinetic energy on [0, T).
double minimal_lambda(const PartitionSpec& partition, const EntropyProfile& profile,
                      const GasConstants& g, double margin);

struct EntropyBalanceSample {
  double t;
  double total;              // sum_i |Q_i| rho0_i s_i(t)
  double expected;           // S0 + c_v S(t) M0
  double residual_rel;
  double expected_shifted;   // S0 + c_v S(t + epsilon) M0
};

struct EntropyBalanceIncrement {
  double t_from, t_to;
  double actual;    // total(t_to) - total(t_from)
  double expected;  // c_v M0 (S(t_to) - S(t_from))
};

struct EntropyBalanceDiagnostics {
  double S0 = 0.0;
  double M0 = 0.0;
  std::vector<EntropyBalanceSample> samples;
  std::vector<EntropyBalanceIncrement> increments;
  double max_residual_rel = 0.0;
  bool pass = false;  // every residual <= 1e-12 relative
};

// Checks the total-entropy identity at each sample time and the increment
// identity between consecutive samples.  Requires 0 < epsilon < delta, else
// EpsilonOutOfRange.
EntropyBalanceDiagnostics verify_entropy_balance(const PartitionSpec& partition,
                                                 const EntropyProfile& profile,
                                                 const GasConstants& g, double epsilon,
                                                 std::span<const double> sample_times);

struct CellEnergySample {
  std::size_t cell;
  double t;
  double e_kin;              // Lambda - c_v exp(S(t)) rho0 theta0
  double e_internal;
  double total;              // e_kin + e_internal, identically Lambda
  double momentum_magnitude; // sqrt(2 rho0 e_kin)
};

struct TotalEnergyDiagnostics {
  double Lambda = 0.0;
  std::vector<CellEnergySample> samples;
  double min_kinetic_energy = 0.0;
  double max_identity_residual_rel = 0.0;
  bool pass = false;
};

// Verifies that kinetic plus internal energy equals Lambda in every cell at
// every sample time and that the kinetic part stays strictly positive over
// the whole horizon.  Throws InfeasibleLambda when some e_kin <= 0.
TotalEnergyDiagnostics total_energy_check(const PartitionSpec& partition,
                                          const EntropyProfile& profile,
                                          const GasConstants& g, double Lambda,
                                          std::span<const double> sample_times);

} // namespace erate

#endif
