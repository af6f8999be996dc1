#include "doctest.h"

#include <cmath>
#include <random>

#include "erate/io.hpp"
#include "erate/rate.hpp"
#include "oracles.hpp"

using namespace erate;

namespace {

const GasConstants kG{1.5};

PiecewiseFan paper_self_similar_fan() {
  return to_piecewise_fan(solve_riemann(paper_riemann_data(), kG));
}

// Frozen from the closed-form quantities of the colliding datum.
PiecewiseFan paper_subsolution_fan() {
  PiecewiseFan fan;
  fan.front_speeds = {-91.620055866001850, -47.765181564506013};
  fan.region_states = {FanRegion{1.0, 2.0, 0.0},
                       FanRegion{14.0, 4578.6546772841619, -85.075766161287432},
                       FanRegion{10.0, 1.0, -100.0}};
  return fan;
}

} // namespace

TEST_CASE("closed-form rate of the self-similar fan") {
  const EntropyRateReport report = entropy_rate(paper_self_similar_fan(), kG);
  CHECK(report.rate_per_width == doctest::Approx(-1661.456).epsilon(1e-6));
  CHECK(report.rate_per_width == doctest::Approx(-1661.4556261176472).epsilon(1e-12));
  REQUIRE(report.per_front_contributions.size() == 3);
  double sum = 0.0;
  for (double c : report.per_front_contributions) sum += c;
  CHECK(report.rate_per_width == doctest::Approx(sum).epsilon(1e-14));
  CHECK(report.max_front_speed == doctest::Approx(101.32892992113940).epsilon(1e-12));
}

TEST_CASE("constant state has zero rate and infinite validity") {
  PiecewiseFan fan;
  fan.region_states = {FanRegion{1.0, 1.0, 0.0}};
  const EntropyRateReport report = entropy_rate(fan, kG);
  CHECK(report.rate_per_width == 0.0);
  CHECK(report.per_front_contributions.empty());
  CHECK(std::isinf(report.validity_time(10.0)));
}

TEST_CASE("closed-form rate of the subsolution fan") {
  const EntropyRateReport report = entropy_rate(paper_subsolution_fan(), kG);
  CHECK(report.rate_per_width == doctest::Approx(867.268).epsilon(1e-6));
  CHECK(report.rate_per_width == doctest::Approx(867.26764158813460).epsilon(1e-10));
}

TEST_CASE("oracle reproduces the rate on the narrow window") {
  const PiecewiseFan fan = paper_self_similar_fan();
  const double rate = entropy_rate_oracle(fan, kG, 1e4, 1e-3, 2e-3);
  CHECK(rate == doctest::Approx(-1661.456).epsilon(1e-6));
}

TEST_CASE("oracle equals the closed form on wide windows") {
  for (const PiecewiseFan& fan : {paper_self_similar_fan(), paper_subsolution_fan()}) {
    const EntropyRateReport report = entropy_rate(fan, kG);
    const double horizon = report.validity_time(1e4);
    const double rate = entropy_rate_oracle(fan, kG, 1e4, 0.25 * horizon, 0.75 * horizon);
    CHECK(std::abs(rate - report.rate_per_width) <=
          1e-9 * std::max(1.0, std::abs(report.rate_per_width)));
  }
}

TEST_CASE("oracle on a single contact is pure transport") {
  // equal pressure and velocity, density jump only
  PiecewiseFan fan;
  fan.front_speeds = {-2.0};
  fan.region_states = {FanRegion{1.0, 3.0, -2.0}, FanRegion{5.0, 3.0, -2.0}};
  const double ds = entropy_density(GasState{1.0, 0.0, -2.0, 3.0}, kG) -
                    entropy_density(GasState{5.0, 0.0, -2.0, 3.0}, kG);
  const double rate = entropy_rate_oracle(fan, kG, 100.0, 1.0, 2.0);
  CHECK(rate == doctest::Approx(-2.0 * ds).epsilon(1e-12));
  CHECK(entropy_rate(fan, kG).rate_per_width == doctest::Approx(-2.0 * ds).epsilon(1e-14));
}

TEST_CASE("oracle rejects windows where fronts leave the box") {
  const PiecewiseFan fan = paper_self_similar_fan();
  CHECK_THROWS_AS(entropy_rate_oracle(fan, kG, 100.0, 0.5, 2.0), WavesLeftBox);
}

TEST_CASE("rate comparison is a strict order") {
  EntropyRateReport a, b;
  a.rate_per_width = -1661.456;
  b.rate_per_width = 867.268;
  CHECK(compare_rates(a, b) == RateOrdering::SecondDominates);
  b.rate_per_width = a.rate_per_width;
  CHECK(compare_rates(a, b) == RateOrdering::Incomparable);
  b.rate_per_width = a.rate_per_width + 1e-9;
  CHECK(compare_rates(a, b) == RateOrdering::SecondDominates);
  CHECK(compare_rates(b, a) == RateOrdering::FirstDominates);
}

TEST_CASE("total entropies order pointwise in time") {
  const PiecewiseFan fan_s = paper_self_similar_fan();
  const PiecewiseFan fan_c = paper_subsolution_fan();
  const double L = 1e4;

  const auto [S_s0, S_c0] = diperna_totals(fan_s, fan_c, kG, L, 0.0);
  CHECK(S_s0 == doctest::Approx(S_c0).epsilon(1e-12));

  const double gap = 867.26764158813460 - (-1661.4556261176472);
  for (double t : {1.0, 10.0, 40.0}) {
    const auto [S_s, S_c] = diperna_totals(fan_s, fan_c, kG, L, t);
    CHECK(S_c > S_s);
    CHECK(S_c - S_s == doctest::Approx(2.0 * L * t * gap).epsilon(1e-9));
  }
}

TEST_CASE("totals of mismatched data are rejected") {
  PiecewiseFan other = paper_subsolution_fan();
  other.region_states.back().rho *= 2.0;
  CHECK_THROWS_AS(diperna_totals(paper_self_similar_fan(), other, kG, 1e4, 1.0),
                  InputError);
}

TEST_CASE("closed form matches the oracle on random fans") {
  std::mt19937 rng(31);
  for (int i = 0; i < 100; ++i) {
    const PiecewiseFan fan = oracles::random_fan(rng);
    const EntropyRateReport report = entropy_rate(fan, kG);
    const double L = 50.0;
    const double horizon = report.validity_time(L);
    const double rate = entropy_rate_oracle(fan, kG, L, 0.25 * horizon, 0.75 * horizon);
    CHECK(std::abs(rate - report.rate_per_width) <=
          1e-9 * std::max(1.0, std::abs(report.rate_per_width)));
  }
}

TEST_CASE("oracle rate is time independent") {
  const PiecewiseFan fan = paper_self_similar_fan();
  const double L = 1e4;
  const double r1 = entropy_rate_oracle(fan, kG, L, 5.0, 25.0);
  const double r2 = entropy_rate_oracle(fan, kG, L, 50.0, 80.0);
  CHECK(std::abs(r1 - r2) <= 1e-12 * std::abs(r1));
}

TEST_CASE("rate per width does not depend on the box size") {
  const PiecewiseFan fan = paper_self_similar_fan();
  const double r1 = entropy_rate_oracle(fan, kG, 1e4, 10.0, 30.0);
  const double r2 = entropy_rate_oracle(fan, kG, 2e4, 10.0, 30.0);
  CHECK(r1 == doctest::Approx(r2).epsilon(1e-12));
}

TEST_CASE("a front with zero entropy-density jump contributes nothing") {
  std::mt19937 rng(37);
  const PiecewiseFan fan = oracles::random_fan(rng);
  PiecewiseFan padded = fan;
  // duplicate the last region behind an extra front
  padded.front_speeds.push_back(fan.front_speeds.back() + 1.0);
  padded.region_states.push_back(fan.region_states.back());
  CHECK(entropy_rate(padded, kG).rate_per_width ==
        doctest::Approx(entropy_rate(fan, kG).rate_per_width).epsilon(1e-14));
}

TEST_CASE("exact box integral agrees with brute-force quadrature") {
  PiecewiseFan fan;
  fan.front_speeds = {-1.5, 0.25, 2.0};
  fan.region_states = {FanRegion{1.0, 2.0, 0.0}, FanRegion{3.0, 5.0, -1.0},
                       FanRegion{0.5, 0.25, 1.0}, FanRegion{2.0, 2.0, 0.5}};
  const double exact = box_entropy_integral(fan, kG, 10.0, 2.0);
  const double quad = oracles::box_integral_quadrature(fan, kG, 10.0, 2.0);
  CHECK(exact == doctest::Approx(quad).epsilon(1e-4));
}

TEST_CASE("fan validation rejects malformed fans") {
  PiecewiseFan fan;
  fan.front_speeds = {1.0, 1.0};
  fan.region_states = {FanRegion{1, 1, 0}, FanRegion{1, 1, 0}, FanRegion{1, 1, 0}};
  CHECK_THROWS_AS(validate(fan), InputError);
  fan.front_speeds = {1.0};
  CHECK_THROWS_AS(validate(fan), InputError);
}

TEST_CASE("rarefaction solutions do not convert to piecewise fans") {
  const RiemannData data{GasState{1.0, 0.0, 0.0, 1.0}, GasState{1.0, 0.0, 3.0, 1.0}};
  CHECK_THROWS_AS(to_piecewise_fan(solve_riemann(data, kG)), InputError);
}
