// End-to-end comparison of the 1-D self-similar solution against the 1-fan
// subsolution competitor: both entropy production rates, the admissibility
// diagnostics, and the resulting verdict on entropy-rate admissibility.
//
// Everything here is per unit width of the comparison box.  Extending both
// competitors by constants in additional tangential directions leaves the
// per-width rates unchanged, so no code path depends on the dimension.

#ifndef ERATE_COUNTEREXAMPLE_HPP
#define ERATE_COUNTEREXAMPLE_HPP

#include <string>
#include <vector>

#include "erate/rate.hpp"
#include "erate/riemann.hpp"
#include "erate/subsolution.hpp"

namespace erate {

enum class Verdict {
  SelfSimilarNotEntropyRateAdmissible,
  Inconclusive,
};

const char* to_string(Verdict v);

struct CounterexampleReport {
  RiemannData data;
  double c_v = 1.5;
  double rho1 = 0.0;

  bool solved = false;               // both pipelines completed
  double self_similar_rate = 0.0;    // D_L / (2L) of the self-similar fan
  double fan_rate = 0.0;             // D_L / (2L) of the subsolution fan
  bool self_similar_bracket = false; // -1662 < rate < -1661
  bool fan_bracket = false;          // 867 < rate < 868

  SelfSimilarSolution self_similar;
  FanSubsolution subsolution;
  AdmissibilityReport admissibility;
  PiecewiseFan self_similar_fan;
  PiecewiseFan subsolution_fan;
  double max_shock_residual = 0.0;
  double max_subsolution_residual = 0.0;

  Verdict verdict = Verdict::Inconclusive;
  std::string failure_cause;  // empty unless Inconclusive
};

// Runs the full pipeline on one datum.  Solver failures are captured in the
// report (verdict Inconclusive with cause), not thrown; invalid inputs throw.
CounterexampleReport reproduce_theorem(const RiemannData& data, double rho1,
                                       const GasConstants& g);

// One report per grid point; per-point failures are recorded, never fatal.
std::vector<CounterexampleReport> sweep_cv(const RiemannData& data, double rho1,
                                           const std::vector<double>& cv_grid);

// True when the subsolution fan's total entropy strictly exceeds the
// self-similar one at every sampled t > 0 inside the box-validity window.
// Requires a positive verdict; returns false otherwise.
bool diperna_verdict(const CounterexampleReport& report, double L = 1.0e4,
                     int samples = 16);

} // namespace erate

#endif
