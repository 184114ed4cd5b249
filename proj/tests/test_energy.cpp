#include <doctest.h>

#include <cmath>

#include "padnet/energy.hpp"
#include "padnet/error.hpp"

using namespace padnet;

namespace {

RotorParams sample_rotor() {
  RotorParams r;
  r.p_0 = 79.86;
  r.p_i = 88.63;
  r.u_tip = 120.0;
  r.v_0 = 4.03;
  r.d_0 = 0.6;
  r.rho_air = 1.225;
  r.s_rotor = 0.05;
  r.a_1 = 0.503;
  return r;
}

}  // namespace

TEST_CASE("propulsion power limits") {
  const auto r = sample_rotor();
  CHECK(propulsion_power(1e-6, r) > 1e7);
  CHECK_THROWS_AS(propulsion_power(0.0, r), InvalidArgument);
  const double ratio = propulsion_power(200.0, r) / propulsion_power(100.0, r);
  CHECK(std::abs(ratio - 8.0) < 0.4);

  RotorParams other{1.0, 2.0, 50.0, 3.0, 0.1, 1.0, 0.1, 1.0};
  CHECK(std::abs(propulsion_power(200.0, other) / propulsion_power(100.0, other) - 8.0) < 0.4);
}

TEST_CASE("propulsion minimizer is stationary") {
  const auto r = sample_rotor();
  const double v = optimal_speed(r);
  CHECK(v > 0.1);
  CHECK(v < 200.0);
  const double h = 1e-4;
  const double slope = (propulsion_power(v + h, r) - propulsion_power(v - h, r)) / (2.0 * h);
  CHECK(std::abs(slope) < 1e-3);
  CHECK(propulsion_power(v, r) <= propulsion_power(0.9 * v, r));
  CHECK(propulsion_power(v, r) <= propulsion_power(1.1 * v, r));
}

TEST_CASE("spectral efficiency") {
  SystemParams p;
  CHECK(spectral_efficiency(1e-5, 0.5, 1e-6, 0.1, p) == doctest::Approx(51.0).epsilon(1e-12));
  CHECK(spectral_efficiency(1e-5, 0.0, 1e-6, 0.0, p) == 0.0);
  p.gamma_thr = 3.0;
  CHECK(spectral_efficiency(1e-5, 0.5, 1e-6, 0.1, p) == doctest::Approx(102.0).epsilon(1e-12));
}

TEST_CASE("total power") {
  const SystemParams p;
  const double s1 = total_power_s1(1e-5, 200.0, 200.0, p.v, p.p_m, p.p_s, p.lambda_t, p.p_tbs);
  CHECK(s1 == doctest::Approx(4.941e-4).epsilon(1e-3));
  CHECK(travel_fraction(200.0, 200.0, p.v) == doctest::Approx(0.05014).epsilon(1e-3));
  CHECK(total_power_s1(1e-5, 0.0, 200.0, p.v, p.p_m, p.p_s, p.lambda_t, p.p_tbs) ==
        doctest::Approx(1e-5 * p.p_s + p.lambda_t * p.p_tbs).epsilon(1e-14));
  CHECK(total_power_s2(2e-5, p.p_s, p.lambda_t, p.p_tbs) == doctest::Approx(5.18e-4).epsilon(1e-12));
  CHECK(total_power_s1(1e-5, 200.0, 0.0, p.v, p.p_m, p.p_s, p.lambda_t, p.p_tbs) ==
        doctest::Approx(total_power_s2(1e-5, p.p_s, p.lambda_t, p.p_tbs)).epsilon(1e-14));
  CHECK(total_power_s1(1e-5, 300.0, 200.0, p.v, p.p_m, p.p_s, p.lambda_t, p.p_tbs) > s1);
  CHECK(total_power_s2(3e-5, p.p_s, p.lambda_t, p.p_tbs) >
        total_power_s2(2e-5, p.p_s, p.lambda_t, p.p_tbs));
  CHECK_THROWS_AS(travel_fraction(1e6, 1000.0, p.v), ConfigError);
}

TEST_CASE("energy report consistency") {
  SystemParams p;
  p.n_t = 0.0;
  const auto e1 = make_energy_report(Scenario::kOne, p, 2e-5, 0.3, 0.05, 150.0);
  const auto e2 = make_energy_report(Scenario::kTwo, p, 2e-5, 0.3, 0.05, 0.0);
  CHECK(e1.ee == doctest::Approx(e2.ee).epsilon(1e-14));
  CHECK(e1.ee == doctest::Approx(e1.se / e1.p_tot).epsilon(1e-15));

  SystemParams wide = p;
  wide.b_w *= 2.0;
  CHECK(make_energy_report(Scenario::kTwo, wide, 2e-5, 0.3, 0.05, 0.0).ee ==
        doctest::Approx(2.0 * e2.ee).epsilon(1e-14));

  double prev = 1e300;
  for (double n_t : {0.0, 50.0, 100.0, 200.0, 400.0}) {
    SystemParams q = p;
    q.n_t = n_t;
    const double ee = make_energy_report(Scenario::kOne, q, 2e-5, 0.3, 0.05, 150.0).ee;
    CHECK(ee < prev);
    prev = ee;
  }
}

TEST_CASE("energy efficiency wiring") {
  const auto vp = validate(SystemParams{});
  const NumericsConfig n;
  const auto cov = coverage(Scenario::kTwo, vp, n);
  const auto r = energy_efficiency(cov, vp, n);
  CHECK(r.lambda_u == cov.lambda_u);
  CHECK(r.p_cov_uav == doctest::Approx(cov.p_uav_los + cov.p_uav_nlos));
  CHECK(r.se > 0.0);
  CHECK(r.ee == doctest::Approx(r.se / r.p_tot));
  CHECK(r.p_tot == doctest::Approx(cov.lambda_u * vp->p_s + vp->lambda_t * vp->p_tbs));
}
