#include "erate/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace erate {

double EntropyProfile::value(double t) const {
  // right-continuous: value at t is the last breakpoint <= t
  double v = 0.0;
  for (std::size_t i = 0; i < breakpoints.size() && breakpoints[i] <= t; ++i) v = values[i];
  return v;
}

double EntropyProfile::final_value() const {
  return values.empty() ? 0.0 : values.back();
}

ProfileDiagnostics validate_profile(const EntropyProfile& profile) {
  ProfileDiagnostics diag;
  auto violate = [&](const std::string& msg) { diag.violations.push_back(msg); };

  if (!(profile.delta > 0.0) || !std::isfinite(profile.delta))
    violate("onset: delta must be positive and finite");
  if (!(profile.T > 0.0) || !std::isfinite(profile.T))
    violate("horizon: T must be positive and finite");
  if (profile.delta > profile.T) violate("onset: delta must not exceed the horizon T");
  if (profile.breakpoints.size() != profile.values.size())
    violate("shape: one value per breakpoint required");

  const std::size_t n = std::min(profile.breakpoints.size(), profile.values.size());
  for (std::size_t i = 0; i < n; ++i) {
    const double t = profile.breakpoints[i];
    const double v = profile.values[i];
    if (!std::isfinite(t) || t < 0.0 || t > profile.T) {
      violate("breakpoints: times must lie in [0, T]");
      break;
    }
    if (i > 0 && !(t > profile.breakpoints[i - 1])) {
      violate("breakpoints: times must be strictly increasing");
      break;
    }
    if (!std::isfinite(v)) {
      violate("bounded: profile values must be finite");
      break;
    }
  }
  for (std::size_t i = 1; i < n; ++i)
    if (profile.values[i] < profile.values[i - 1]) {
      violate("nondecreasing: profile values must not decrease");
      break;
    }
  if (n > 0 && profile.values.front() < 0.0)
    violate("nondecreasing: profile starts at 0, values must not drop below it");
  for (std::size_t i = 0; i < n; ++i)
    if (profile.breakpoints[i] < profile.delta && profile.values[i] != 0.0) {
      violate("onset: profile must vanish on [0, delta)");
      break;
    }

  diag.valid = diag.violations.empty();
  return diag;
}

double PartitionSpec::total_mass() const {
  double m = 0.0;
  for (const Cell& c : cells) m += c.volume * c.rho0;
  return m;
}

double PartitionSpec::initial_entropy(const GasConstants& g) const {
  double s = 0.0;
  for (const Cell& c : cells)
    s += c.volume * c.rho0 * (g.c_v * std::log(c.theta0) - std::log(c.rho0));
  return s;
}

void validate(const PartitionSpec& partition) {
  if (partition.cells.empty())
    throw InputError("InvalidPartition", "partition needs at least one cell");
  for (const Cell& c : partition.cells)
    if (!(c.volume > 0.0) || !(c.rho0 > 0.0) || !(c.theta0 > 0.0) ||
        !std::isfinite(c.volume) || !std::isfinite(c.rho0) || !std::isfinite(c.theta0))
      throw InputError("InvalidPartition",
                       "every cell needs positive finite volume, rho0 and theta0");
}

namespace {

void require_valid(const PartitionSpec& partition, const EntropyProfile& profile) {
  validate(partition);
  const ProfileDiagnostics diag = validate_profile(profile);
  if (!diag.valid)
    throw InputError("InvalidProfile", "entropy profile not admissible: " + diag.violations.front());
}

} // namespace

std::vector<double> temperature_field(const PartitionSpec& partition,
                                      const EntropyProfile& profile, double t) {
  require_valid(partition, profile);
  const double factor = std::exp(profile.value(t));
  std::vector<double> theta;
  theta.reserve(partition.cells.size());
  for (const Cell& c : partition.cells) theta.push_back(factor * c.theta0);
  return theta;
}

std::vector<double> entropy_field(const PartitionSpec& partition,
                                  const EntropyProfile& profile, const GasConstants& g,
                                  double t) {
  require_valid(partition, profile);
  validate(g);
  const double S = profile.value(t);
  std::vector<double> rho_s;
  rho_s.reserve(partition.cells.size());
  for (const Cell& c : partition.cells)
    rho_s.push_back(c.rho0 * (g.c_v * S + g.c_v * std::log(c.theta0) - std::log(c.rho0)));
  return rho_s;
}

double minimal_lambda(const PartitionSpec& partition, const EntropyProfile& profile,
                      const GasConstants& g, double margin) {
  require_valid(partition, profile);
  validate(g);
  if (!(margin > 0.0)) throw InputError("InvalidMargin", "margin must be positive");
  double max_rho_theta = 0.0;
  for (const Cell& c : partition.cells)
    max_rho_theta = std::max(max_rho_theta, c.rho0 * c.theta0);
  return (1.0 + margin) * g.c_v * std::exp(profile.final_value()) * max_rho_theta;
}

EntropyBalanceDiagnostics verify_entropy_balance(const PartitionSpec& partition,
                                                 const EntropyProfile& profile,
                                                 const GasConstants& g, double epsilon,
                                                 std::span<const double> sample_times) {
  require_valid(partition, profile);
  validate(g);
  if (!(epsilon > 0.0) || !(epsilon < profile.delta))
    throw EpsilonOutOfRange("epsilon must satisfy 0 < epsilon < delta");

  EntropyBalanceDiagnostics diag;
  diag.M0 = partition.total_mass();
  diag.S0 = partition.initial_entropy(g);

  for (double t : sample_times) {
    const std::vector<double> rho_s = entropy_field(partition, profile, g, t);
    double total = 0.0;
    for (std::size_t i = 0; i < partition.cells.size(); ++i)
      total += partition.cells[i].volume * rho_s[i];

    EntropyBalanceSample sample;
    sample.t = t;
    sample.total = total;
    sample.expected = diag.S0 + g.c_v * profile.value(t) * diag.M0;
    sample.expected_shifted = diag.S0 + g.c_v * profile.value(t + epsilon) * diag.M0;
    sample.residual_rel = std::abs(sample.total - sample.expected) /
                          std::max(1.0, std::abs(sample.expected));
    diag.max_residual_rel = std::max(diag.max_residual_rel, sample.residual_rel);
    diag.samples.push_back(sample);
  }

  for (std::size_t i = 1; i < diag.samples.size(); ++i) {
    EntropyBalanceIncrement inc;
    inc.t_from = diag.samples[i - 1].t;
    inc.t_to = diag.samples[i].t;
    inc.actual = diag.samples[i].total - diag.samples[i - 1].total;
    inc.expected = g.c_v * diag.M0 * (profile.value(inc.t_to) - profile.value(inc.t_from));
    diag.increments.push_back(inc);
  }

  diag.pass = diag.max_residual_rel <= 1e-12;
  return diag;
}

TotalEnergyDiagnostics total_energy_check(const PartitionSpec& partition,
                                          const EntropyProfile& profile,
                                          const GasConstants& g, double Lambda,
                                          std::span<const double> sample_times) {
  require_valid(partition, profile);
  validate(g);

  TotalEnergyDiagnostics diag;
  diag.Lambda = Lambda;
  diag.min_kinetic_energy = std::numeric_limits<double>::infinity();

  // The profile is nondecreasing, so feasibility over the whole horizon is
  // decided at S(T-) and the densest cell.
  double max_rho_theta = 0.0;
  for (const Cell& c : partition.cells)
    max_rho_theta = std::max(max_rho_theta, c.rho0 * c.theta0);
  if (Lambda - g.c_v * std::exp(profile.final_value()) * max_rho_theta <= 0.0)
    throw InfeasibleLambda("prescribed kinetic energy reaches zero before the horizon");

  for (double t : sample_times) {
    const double factor = std::exp(profile.value(t));
    for (std::size_t i = 0; i < partition.cells.size(); ++i) {
      const Cell& c = partition.cells[i];
      CellEnergySample s;
      s.cell = i;
      s.t = t;
      s.e_internal = g.c_v * factor * c.rho0 * c.theta0;
      s.e_kin = Lambda - s.e_internal;
      s.total = s.e_kin + s.e_internal;
      if (s.e_kin <= 0.0)
        throw InfeasibleLambda("prescribed kinetic energy is nonpositive in a cell");
      s.momentum_magnitude = std::sqrt(2.0 * c.rho0 * s.e_kin);
      diag.min_kinetic_energy = std::min(diag.min_kinetic_energy, s.e_kin);
      diag.max_identity_residual_rel =
          std::max(diag.max_identity_residual_rel,
                   std::abs(s.total - Lambda) / std::max(1.0, std::abs(Lambda)));
      diag.samples.push_back(s);
    }
  }

  diag.pass = diag.max_identity_residual_rel <= 1e-12 && diag.min_kinetic_energy > 0.0;
  return diag;
}

} // namespace erate
