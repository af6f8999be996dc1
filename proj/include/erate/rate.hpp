// Entropy production rate of piecewise-constant wave fans over the square
// [-L, L]^2, in closed form and through an independent integral oracle, plus
// the partial orders built on it.

#ifndef ERATE_RATE_HPP
#define ERATE_RATE_HPP

#include <utility>
#include <vector>

#include "erate/gas.hpp"
#include "erate/riemann.hpp"

namespace erate {

// One constant region of a fan; tangential velocity plays no role in rates.
struct FanRegion {
  double rho;
  double p;
  double v2;
};

// Piecewise-constant function of x2 / t: fronts at strictly increasing
// speeds, one more region than fronts.
struct PiecewiseFan {
  std::vector<double> front_speeds;
  std::vector<FanRegion> region_states;
};

void validate(const PiecewiseFan& fan);

struct EntropyRateReport {
  // D_L / (2L); the box rate is this constant times the width 2L.
  double rate_per_width = 0.0;
  // speed_k * ((rho s)_below - (rho s)_above) per front; sums to the rate.
  std::vector<double> per_front_contributions;
  // sup_k |speed_k|; fronts stay inside [-L, L] for t < L / max_front_speed.
  double max_front_speed = 0.0;

  double validity_time(double L) const;
};

// Closed-form rate, independent of time while every front is in the box.
EntropyRateReport entropy_rate(const PiecewiseFan& fan, const GasConstants& g);

// Finite difference (I(t2) - I(t1)) / (t2 - t1) of the exactly integrated
// box entropy I(t) = int_{-L}^{L} rho s dx2.  Requires 0 < t1 < t2 and all
// fronts inside the box up to t2, else WavesLeftBox.
double entropy_rate_oracle(const PiecewiseFan& fan, const GasConstants& g, double L,
                           double t1, double t2);

enum class RateOrdering {
  FirstDominates,
  SecondDominates,
  Incomparable,  // equal rates: neither strictly dominates
};

// Strict floating-point comparison of per-width rates; no tolerance band.
RateOrdering compare_rates(const EntropyRateReport& a, const EntropyRateReport& b);

// Total entropies over [-L, L]^2 of two fans with identical initial data at
// time t; input for the pointwise-in-time (DiPerna) comparison.
std::pair<double, double> diperna_totals(const PiecewiseFan& a, const PiecewiseFan& b,
                                         const GasConstants& g, double L, double t);

// Box entropy integral of one fan at time t, per unit x1 width.
double box_entropy_integral(const PiecewiseFan& fan, const GasConstants& g, double L,
                            double t);

// A self-similar solution as a piecewise-constant fan.  Throws InputError if
// the solution contains a rarefaction wave (not piecewise constant).
PiecewiseFan to_piecewise_fan(const SelfSimilarSolution& sol);

} // namespace erate

#endif
