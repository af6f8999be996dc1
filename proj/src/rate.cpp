#include "erate/rate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace erate {

namespace {

double region_entropy_density(const FanRegion& r, const GasConstants& g) {
  return entropy_density(GasState{r.rho, 0.0, r.v2, r.p}, g);
}

} // namespace

void validate(const PiecewiseFan& fan) {
  if (fan.region_states.size() != fan.front_speeds.size() + 1)
    throw InputError("InvalidFan", "fan needs one more region than fronts");
  for (std::size_t i = 1; i < fan.front_speeds.size(); ++i)
    if (!(fan.front_speeds[i] > fan.front_speeds[i - 1]))
      throw InputError("InvalidFan", "front speeds must be strictly increasing");
  for (const FanRegion& r : fan.region_states)
    validate(GasState{r.rho, 0.0, r.v2, r.p});
}

double EntropyRateReport::validity_time(double L) const {
  if (max_front_speed == 0.0) return std::numeric_limits<double>::infinity();
  return L / max_front_speed;
}

EntropyRateReport entropy_rate(const PiecewiseFan& fan, const GasConstants& g) {
  validate(fan);
  validate(g);

  EntropyRateReport report;
  report.per_front_contributions.reserve(fan.front_speeds.size());
  for (std::size_t k = 0; k < fan.front_speeds.size(); ++k) {
    const double below = region_entropy_density(fan.region_states[k], g);
    const double above = region_entropy_density(fan.region_states[k + 1], g);
    const double contribution = fan.front_speeds[k] * (below - above);
    report.per_front_contributions.push_back(contribution);
    report.rate_per_width += contribution;
    report.max_front_speed = std::max(report.max_front_speed, std::abs(fan.front_speeds[k]));
  }
  return report;
}

double box_entropy_integral(const PiecewiseFan& fan, const GasConstants& g, double L,
                            double t) {
  validate(fan);
  if (!(L > 0.0) || !(t >= 0.0)) throw InputError("InvalidBox", "need L > 0 and t >= 0");
  for (double s : fan.front_speeds)
    if (std::abs(s) * t >= L)
      throw WavesLeftBox("a front left the box [-L, L] before the requested time");

  double integral = 0.0;
  double lower = -L;
  for (std::size_t k = 0; k < fan.front_speeds.size(); ++k) {
    const double upper = fan.front_speeds[k] * t;
    integral += (upper - lower) * region_entropy_density(fan.region_states[k], g);
    lower = upper;
  }
  integral += (L - lower) * region_entropy_density(fan.region_states.back(), g);
  return integral;
}

double entropy_rate_oracle(const PiecewiseFan& fan, const GasConstants& g, double L,
                           double t1, double t2) {
  if (!(0.0 < t1 && t1 < t2))
    throw InputError("InvalidWindow", "oracle needs 0 < t1 < t2");
  const double I1 = box_entropy_integral(fan, g, L, t1);
  const double I2 = box_entropy_integral(fan, g, L, t2);
  return (I2 - I1) / (t2 - t1);
}

RateOrdering compare_rates(const EntropyRateReport& a, const EntropyRateReport& b) {
  if (a.rate_per_width > b.rate_per_width) return RateOrdering::FirstDominates;
  if (b.rate_per_width > a.rate_per_width) return RateOrdering::SecondDominates;
  return RateOrdering::Incomparable;
}

std::pair<double, double> diperna_totals(const PiecewiseFan& a, const PiecewiseFan& b,
                                         const GasConstants& g, double L, double t) {
  validate(a);
  validate(b);
  auto matches = [](const FanRegion& x, const FanRegion& y) {
    auto close = [](double u, double v) {
      return std::abs(u - v) <= 1e-12 * std::max({1.0, std::abs(u), std::abs(v)});
    };
    return close(x.rho, y.rho) && close(x.p, y.p) && close(x.v2, y.v2);
  };
  if (!matches(a.region_states.front(), b.region_states.front()) ||
      !matches(a.region_states.back(), b.region_states.back()))
    throw InputError("MismatchedData", "fans do not share the same initial data");

  const double width = 2.0 * L;
  return {width * box_entropy_integral(a, g, L, t),
          width * box_entropy_integral(b, g, L, t)};
}

PiecewiseFan to_piecewise_fan(const SelfSimilarSolution& sol) {
  PiecewiseFan fan;
  for (const Wave& w : sol.waves) {
    if (w.kind == WaveKind::Rarefaction)
      throw InputError("NotPiecewiseConstant",
                       "solution contains a rarefaction wave; not a piecewise-constant fan");
    fan.front_speeds.push_back(w.speed_lo);
  }
  for (const GasState& s : sol.states)
    fan.region_states.push_back(FanRegion{s.rho, s.p, s.v2});
  validate(fan);
  return fan;
}

} // namespace erate
