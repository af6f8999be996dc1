#include "doctest.h"

#include <cmath>
#include <random>

#include "erate/io.hpp"
#include "erate/riemann.hpp"
#include "oracles.hpp"

using namespace erate;

namespace {

const GasConstants kG{1.5};

RiemannData mirrored(const RiemannData& d) {
  RiemannData m;
  m.left = d.right;
  m.right = d.left;
  m.left.v2 = -m.left.v2;
  m.right.v2 = -m.right.v2;
  return m;
}

} // namespace

TEST_CASE("intermediate pressure for the colliding two-shock datum") {
  const RiemannData data = paper_riemann_data();
  const double p_M = solve_intermediate_pressure(data, kG);
  CHECK(p_M == doctest::Approx(7700.164).epsilon(1e-5));
  // frozen high-precision value, computed by independent bisection
  CHECK(p_M == doctest::Approx(7700.1640292223843).epsilon(1e-11));
  // residual of the defining equation, scaled by the velocity jump
  CHECK(std::abs(oracles::two_shock_equation(p_M, data, kG)) <= 1e-10 * 100.0);
}

TEST_CASE("identical states give p_M = p_left") {
  const RiemannData data{GasState{2.0, 0.5, -1.0, 3.0}, GasState{2.0, 0.5, -1.0, 3.0}};
  CHECK(solve_intermediate_pressure(data, kG) == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("two-shock pressure agrees with the bisection oracle") {
  const RiemannData data{GasState{1.0, 0.0, 0.0, 1.0}, GasState{1.0, 0.0, -10.0, 1.0}};
  const double p_M = solve_intermediate_pressure(data, kG);
  const double p_oracle = oracles::bisect_two_shock_pressure(data, kG, 1.0, 1e6);
  CHECK(p_M == doctest::Approx(p_oracle).epsilon(1e-10));
  CHECK(p_M == doctest::Approx(35.539675491272681).epsilon(1e-11));
}

TEST_CASE("expansive data have no two-shock root") {
  const RiemannData data{GasState{1.0, 0.0, 0.0, 1.0}, GasState{1.0, 0.0, 3.0, 1.0}};
  CHECK_THROWS_AS(solve_intermediate_pressure(data, kG), NoTwoShockRoot);
}

TEST_CASE("intermediate states of the colliding datum") {
  const RiemannData data = paper_riemann_data();
  const double p_M = solve_intermediate_pressure(data, kG);
  const IntermediateStates mid = intermediate_states(data, p_M, kG);
  CHECK(mid.v_M2 == doctest::Approx(-75.972).epsilon(1e-5));
  CHECK(mid.rho_Mminus == doctest::Approx(3.996).epsilon(1e-3));
  CHECK(mid.rho_Mplus == doctest::Approx(39.981).epsilon(1e-4));
  CHECK(mid.v_M2 == doctest::Approx(-75.972025316102558).epsilon(1e-12));
  CHECK(mid.rho_Mminus == doctest::Approx(3.9961080226255867).epsilon(1e-12));
  CHECK(mid.rho_Mplus == doctest::Approx(39.980530009559630).epsilon(1e-12));
}

TEST_CASE("zero jump leaves the intermediate state alone") {
  const RiemannData data{GasState{2.0, 0.0, -1.0, 3.0}, GasState{2.0, 0.0, -1.0, 3.0}};
  const IntermediateStates mid = intermediate_states(data, 3.0, kG);
  CHECK(mid.v_M2 == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(mid.rho_Mminus == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(mid.rho_Mplus == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("shock and contact speeds of the colliding datum") {
  const RiemannData data = paper_riemann_data();
  const double p_M = solve_intermediate_pressure(data, kG);
  const IntermediateStates mid = intermediate_states(data, p_M, kG);
  const ShockSpeeds s = shock_speeds(data, p_M, mid, kG);
  CHECK(s.sigma_minus == doctest::Approx(-101.329).epsilon(1e-5));
  CHECK(s.sigma_plus == doctest::Approx(-67.957).epsilon(1e-5));
  CHECK(s.sigma_M == doctest::Approx(mid.v_M2).epsilon(1e-15));
  CHECK(s.sigma_minus == doctest::Approx(-101.32892992113940).epsilon(1e-12));
  CHECK(s.sigma_plus == doctest::Approx(-67.957498996442482).epsilon(1e-12));
  CHECK(s.sigma_minus < s.sigma_M);
  CHECK(s.sigma_M < s.sigma_plus);
}

TEST_CASE("mirrored data negate and swap the shock speeds") {
  const RiemannData data = paper_riemann_data();
  const RiemannData mir = mirrored(data);
  const double p_M = solve_intermediate_pressure(data, kG);
  const double p_M_mir = solve_intermediate_pressure(mir, kG);
  CHECK(p_M_mir == doctest::Approx(p_M).epsilon(1e-12));

  const ShockSpeeds s = shock_speeds(data, p_M, intermediate_states(data, p_M, kG), kG);
  const ShockSpeeds m =
      shock_speeds(mir, p_M_mir, intermediate_states(mir, p_M_mir, kG), kG);
  CHECK(m.sigma_minus == doctest::Approx(-s.sigma_plus).epsilon(1e-10));
  CHECK(m.sigma_plus == doctest::Approx(-s.sigma_minus).epsilon(1e-10));
  CHECK(m.sigma_M == doctest::Approx(-s.sigma_M).epsilon(1e-10));
}

TEST_CASE("degenerate shock is reported") {
  const RiemannData data{GasState{2.0, 0.0, -1.0, 3.0}, GasState{2.0, 0.0, -1.0, 3.0}};
  const IntermediateStates mid = intermediate_states(data, 3.0, kG);
  CHECK_THROWS_AS(shock_speeds(data, 3.0, mid, kG), DegenerateShock);
}

TEST_CASE("full solution of the colliding datum is shock-contact-shock") {
  const RiemannData data = paper_riemann_data();
  const SelfSimilarSolution sol = solve_riemann(data, kG);
  REQUIRE(sol.waves.size() == 3);
  CHECK(sol.waves[0].kind == WaveKind::Shock);
  CHECK(sol.waves[1].kind == WaveKind::Contact);
  CHECK(sol.waves[2].kind == WaveKind::Shock);
  REQUIRE(sol.states.size() == 4);
  CHECK(sol.p_M == doctest::Approx(solve_intermediate_pressure(data, kG)).epsilon(1e-15));
  CHECK(sol.waves[1].speed_lo == doctest::Approx(sol.v_M2).epsilon(1e-15));

  const auto pattern = classify_wave_pattern(data, kG);
  REQUIRE(pattern.size() == 3);
  CHECK(pattern[0] == WaveKind::Shock);
  CHECK(pattern[1] == WaveKind::Contact);
  CHECK(pattern[2] == WaveKind::Shock);
}

TEST_CASE("contacts keep pressure and normal velocity continuous") {
  std::mt19937 rng(53);
  for (int i = 0; i < 30; ++i) {
    const RiemannData d = oracles::random_two_shock_data(rng, kG);
    const SelfSimilarSolution sol = solve_riemann(d, kG);
    for (const Wave& w : sol.waves) {
      if (w.kind != WaveKind::Contact) continue;
      CHECK(w.pre_state.p == doctest::Approx(w.post_state.p).epsilon(1e-12));
      CHECK(w.pre_state.v2 == doctest::Approx(w.post_state.v2).epsilon(1e-12));
      CHECK(w.speed_lo == doctest::Approx(w.pre_state.v2).epsilon(1e-12));
    }
  }
}

TEST_CASE("identical states solve to a constant pattern") {
  const RiemannData data{GasState{2.0, 0.5, -1.0, 3.0}, GasState{2.0, 0.5, -1.0, 3.0}};
  const SelfSimilarSolution sol = solve_riemann(data, kG);
  CHECK(sol.waves.empty());
  CHECK(sol.states.size() == 1);
  CHECK(classify_wave_pattern(data, kG).empty());
}

TEST_CASE("expansive data produce two rarefactions") {
  const RiemannData data{GasState{1.0, 0.0, 0.0, 1.0}, GasState{1.0, 0.0, 3.0, 1.0}};
  const auto pattern = classify_wave_pattern(data, kG);
  REQUIRE(pattern.size() == 2);
  CHECK(pattern[0] == WaveKind::Rarefaction);
  CHECK(pattern[1] == WaveKind::Rarefaction);

  const SelfSimilarSolution sol = solve_riemann(data, kG);
  // oracle: bisection on the pressure-function decomposition plus an ODE
  // integration of the isentropic relation for the middle density
  const double p_oracle = oracles::bisect_general_pressure(data, kG, 1e-12, 1.0);
  CHECK(sol.p_M == doctest::Approx(p_oracle).epsilon(1e-10));
  CHECK(sol.p_M == doctest::Approx(0.086346612436212337).epsilon(1e-10));
  CHECK(sol.v_M2 == doctest::Approx(1.5).epsilon(1e-12));
  const double rho_ode = oracles::rarefaction_density_ode(data.left, sol.p_M, kG);
  CHECK(sol.states[1].rho == doctest::Approx(rho_ode).epsilon(1e-9));
  CHECK(sol.states[1].rho == doctest::Approx(0.23001024594466368).epsilon(1e-10));
}

TEST_CASE("vacuum formation is detected") {
  const RiemannData data{GasState{1.0, 0.0, -50.0, 1.0}, GasState{1.0, 0.0, 50.0, 1.0}};
  CHECK_THROWS_AS(solve_riemann(data, kG), VacuumFormation);
}

TEST_CASE("general pressure solve matches the closed form on two-shock data") {
  std::mt19937 rng(17);
  const RiemannData paper = paper_riemann_data();
  CHECK(detail::solve_pressure_general(paper, kG) ==
        doctest::Approx(solve_intermediate_pressure(paper, kG)).epsilon(1e-9));
  for (int i = 0; i < 40; ++i) {
    const RiemannData d = oracles::random_two_shock_data(rng, kG);
    const double closed = solve_intermediate_pressure(d, kG);
    const double general = detail::solve_pressure_general(d, kG);
    CHECK(std::abs(closed - general) <= 1e-9 * std::max(1.0, closed));
  }
}

TEST_CASE("self-similarity under parabolic rescaling") {
  const SelfSimilarSolution sol = solve_riemann(paper_riemann_data(), kG);
  std::mt19937 rng(19);
  std::uniform_real_distribution<double> xs(-150.0, 50.0);
  std::uniform_real_distribution<double> ls(0.1, 10.0);
  for (int i = 0; i < 100; ++i) {
    const double t = 1.0, x = xs(rng), l = ls(rng);
    const GasState a = sol.at(t, x);
    const GasState b = sol.at(l * t, l * x);
    CHECK(a.rho == doctest::Approx(b.rho).epsilon(1e-14));
    CHECK(a.p == doctest::Approx(b.p).epsilon(1e-14));
    CHECK(a.v2 == doctest::Approx(b.v2).epsilon(1e-14));
  }
}

TEST_CASE("shock fronts satisfy the jump conditions and produce entropy") {
  std::mt19937 rng(23);
  for (int i = 0; i < 60; ++i) {
    const RiemannData d = oracles::random_two_shock_data(rng, kG);
    const SelfSimilarSolution sol = solve_riemann(d, kG);
    for (const Wave& w : sol.waves) {
      if (w.kind == WaveKind::Rarefaction) continue;
      const JumpResiduals r = jump_residuals(w.pre_state, w.post_state, w.speed_lo, kG);
      CHECK(r.max() <= 1e-9);
      CHECK(front_entropy_production(w.pre_state, w.post_state, w.speed_lo, kG) >= -1e-10);
    }
  }
}

TEST_CASE("closed-form two-shock quantities satisfy mass and momentum jumps") {
  const RiemannData data = paper_riemann_data();
  const double p_M = solve_intermediate_pressure(data, kG);
  const IntermediateStates mid = intermediate_states(data, p_M, kG);
  const ShockSpeeds s = shock_speeds(data, p_M, mid, kG);

  const GasState left_mid{mid.rho_Mminus, data.left.v1, mid.v_M2, p_M};
  const GasState right_mid{mid.rho_Mplus, data.right.v1, mid.v_M2, p_M};
  CHECK(std::abs(jump_residuals(data.left, left_mid, s.sigma_minus, kG).mass) <= 1e-9);
  CHECK(std::abs(jump_residuals(data.left, left_mid, s.sigma_minus, kG).momentum_normal) <=
        1e-9);
  CHECK(std::abs(jump_residuals(right_mid, data.right, s.sigma_plus, kG).mass) <= 1e-9);
  CHECK(std::abs(jump_residuals(right_mid, data.right, s.sigma_plus, kG).momentum_normal) <=
        1e-9);
}

TEST_CASE("tangential velocity only rides on the contact") {
  const RiemannData base = paper_riemann_data();
  RiemannData skewed = base;
  skewed.left.v1 = 2.5;
  skewed.right.v1 = -1.25;

  const SelfSimilarSolution a = solve_riemann(base, kG);
  const SelfSimilarSolution b = solve_riemann(skewed, kG);
  CHECK(a.p_M == doctest::Approx(b.p_M).epsilon(1e-14));
  CHECK(a.v_M2 == doctest::Approx(b.v_M2).epsilon(1e-14));
  REQUIRE(a.waves.size() == b.waves.size());
  for (std::size_t i = 0; i < a.waves.size(); ++i)
    CHECK(a.waves[i].speed_lo == doctest::Approx(b.waves[i].speed_lo).epsilon(1e-14));

  // the tangential jump sits exactly at the contact
  CHECK(b.sample(b.v_M2 - 1e-6).v1 == doctest::Approx(2.5));
  CHECK(b.sample(b.v_M2 + 1e-6).v1 == doctest::Approx(-1.25));
}

TEST_CASE("mirror symmetry of the full solution") {
  std::mt19937 rng(29);
  for (int i = 0; i < 30; ++i) {
    const RiemannData d = oracles::random_two_shock_data(rng, kG);
    const SelfSimilarSolution sol = solve_riemann(d, kG);
    const SelfSimilarSolution mir = solve_riemann(mirrored(d), kG);
    REQUIRE(sol.waves.size() == mir.waves.size());
    const std::size_t n = sol.waves.size();
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(mir.waves[k].speed_lo ==
            doctest::Approx(-sol.waves[n - 1 - k].speed_hi).epsilon(1e-9));
    }
    CHECK(mir.p_M == doctest::Approx(sol.p_M).epsilon(1e-9));
    CHECK(mir.v_M2 == doctest::Approx(-sol.v_M2).epsilon(1e-9));
  }
}

TEST_CASE("sampling is continuous across rarefaction fans") {
  const RiemannData data{GasState{1.0, 0.0, 0.0, 1.0}, GasState{1.0, 0.0, 3.0, 1.0}};
  const SelfSimilarSolution sol = solve_riemann(data, kG);
  REQUIRE(sol.waves.size() == 2);
  for (const Wave& w : sol.waves) {
    const GasState head = sol.sample(w.speed_lo + 1e-12);
    const GasState tail = sol.sample(w.speed_hi - 1e-12);
    CHECK(head.rho == doctest::Approx(w.pre_state.rho).epsilon(1e-6));
    CHECK(tail.rho == doctest::Approx(w.post_state.rho).epsilon(1e-6));
    CHECK(head.p == doctest::Approx(w.pre_state.p).epsilon(1e-6));
    CHECK(tail.p == doctest::Approx(w.post_state.p).epsilon(1e-6));
  }
}
