#include "doctest.h"

#include <cmath>
#include <random>

#include "erate/gas.hpp"
#include "oracles.hpp"

using namespace erate;

TEST_CASE("temperature is p over rho") {
  CHECK(temperature(GasState{1.0, 0.0, 0.0, 2.0}) == doctest::Approx(2.0));
  CHECK(temperature(GasState{10.0, 0.0, -100.0, 1.0}) == doctest::Approx(0.1));

  std::mt19937 rng(7);
  std::uniform_real_distribution<double> c(0.01, 100.0);
  for (int i = 0; i < 50; ++i) {
    const double v = c(rng);
    CHECK(temperature(GasState{v, 0.0, 0.0, v}) == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("specific entropy closed forms") {
  const GasConstants g{1.5};
  CHECK(specific_entropy(GasState{1.0, 0.0, 0.0, 1.0}, g) == doctest::Approx(0.0));
  CHECK(specific_entropy(GasState{1.0, 0.0, 0.0, 1.0}, GasConstants{0.37}) ==
        doctest::Approx(0.0));
  // 1.5 ln 2 and -2.5 ln 10, evaluated independently to high precision
  CHECK(specific_entropy(GasState{1.0, 0.0, 0.0, 2.0}, g) ==
        doctest::Approx(1.0397207708399180).epsilon(1e-13));
  CHECK(specific_entropy(GasState{10.0, 0.0, 0.0, 1.0}, g) ==
        doctest::Approx(-5.7564627324851142).epsilon(1e-13));
}

TEST_CASE("entropy density is rho times specific entropy") {
  const GasConstants g{1.5};
  CHECK(entropy_density(GasState{1.0, 0.0, 0.0, 1.0}, g) == doctest::Approx(0.0));
  CHECK(entropy_density(GasState{1.0, 0.0, 0.0, 2.0}, g) ==
        doctest::Approx(1.0397207708399180).epsilon(1e-13));
  CHECK(entropy_density(GasState{10.0, 0.0, 0.0, 1.0}, g) ==
        doctest::Approx(-57.564627324851142).epsilon(1e-13));
}

TEST_CASE("the two entropy expressions agree on random states") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> cv(0.3, 3.0);
  for (int i = 0; i < 500; ++i) {
    const GasState s = oracles::random_state(rng);
    const GasConstants g{cv(rng)};
    const double a = specific_entropy(s, g);
    const double b = std::log(std::pow(s.p, g.c_v) / std::pow(s.rho, g.c_v + 1.0));
    CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)));
  }
}

TEST_CASE("entropy increases in p and decreases in rho") {
  std::mt19937 rng(13);
  const GasConstants g{1.5};
  for (int i = 0; i < 200; ++i) {
    GasState s = oracles::random_state(rng);
    GasState sp = s;
    sp.p += 1e-6 * s.p;
    CHECK(specific_entropy(sp, g) > specific_entropy(s, g));
    GasState sr = s;
    sr.rho += 1e-6 * s.rho;
    CHECK(specific_entropy(sr, g) < specific_entropy(s, g));
  }
}

TEST_CASE("state and constants validation") {
  CHECK_THROWS_AS(validate(GasState{-1.0, 0.0, 0.0, 1.0}), InputError);
  CHECK_THROWS_AS(validate(GasState{1.0, 0.0, 0.0, 0.0}), InputError);
  CHECK_THROWS_AS(validate(GasState{1.0, 0.0, std::nan(""), 1.0}), InputError);
  CHECK_THROWS_AS(validate(GasConstants{-0.5}), InputError);
  CHECK_NOTHROW(validate(GasState{}));
  CHECK_NOTHROW(validate(GasConstants{}));
}

TEST_CASE("adiabatic exponent of the equivalent gamma-law gas") {
  CHECK(adiabatic_exponent(GasConstants{1.5}) == doctest::Approx(5.0 / 3.0));
  CHECK(adiabatic_exponent(GasConstants{1.0}) == doctest::Approx(2.0));
}
