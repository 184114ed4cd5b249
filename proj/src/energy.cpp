#include "padnet/energy.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>

#include <boost/math/tools/minima.hpp>

#include "padnet/error.hpp"
#include "padnet/travel.hpp"

namespace padnet {

namespace {
constexpr double kSecondsPerDay = 24.0 * 3600.0;
}

double propulsion_power(double v, const RotorParams& r) {
  if (!(v > 0.0)) throw InvalidArgument("propulsion power needs v > 0");
  return r.p_0 * (1.0 + 3.0 * v * v / (r.u_tip * r.u_tip)) + r.p_i * r.v_0 / v +
         0.5 * r.d_0 * r.rho_air * r.s_rotor * r.a_1 * v * v * v;
}

double optimal_speed(const RotorParams& rotor, double lo, double hi) {
  if (!(lo > 0.0) || !(hi > lo)) throw InvalidArgument("optimal_speed needs 0 < lo < hi");
  std::uintmax_t iters = 200;
  const auto res = boost::math::tools::brent_find_minima(
      [&](double v) { return propulsion_power(v, rotor); }, lo, hi, 52, iters);
  return res.first;
}

double spectral_efficiency(double lambda_u, double p_cov_u, double lambda_t, double p_cov_t,
                           const SystemParams& p) {
  return p.b_w * std::log2(1.0 + p.gamma_thr) * (lambda_u * p_cov_u + lambda_t * p_cov_t);
}

double travel_fraction(double n_t, double mean_l, double v) {
  if (!(v > 0.0)) throw ConfigError("travel speed must be positive");
  const double f = n_t * 2.0 * mean_l / (kSecondsPerDay * v);
  if (!(f >= 0.0) || f > 1.0) {
    throw ConfigError("travel schedule infeasible: traveling fraction " + std::to_string(f) +
                      " exceeds one day");
  }
  return f;
}

double total_power_s1(double lambda_u1, double n_t, double mean_l, double v, double p_m,
                      double p_s, double lambda_t, double p_tbs) {
  const double f = travel_fraction(n_t, mean_l, v);
  return lambda_u1 * (f * p_m + (1.0 - f) * p_s) + lambda_t * p_tbs;
}

double total_power_s2(double lambda_u2, double p_s, double lambda_t, double p_tbs) {
  return lambda_u2 * p_s + lambda_t * p_tbs;
}

EnergyReport make_energy_report(Scenario s, const SystemParams& p, double lambda_u,
                                double p_cov_uav, double p_cov_tbs, double mean_l) {
  EnergyReport r;
  r.scenario = s;
  r.lambda_u = lambda_u;
  r.v = p.v;
  r.p_cov_uav = p_cov_uav;
  r.p_cov_tbs = p_cov_tbs;
  r.se = spectral_efficiency(lambda_u, p_cov_uav, p.lambda_t, p_cov_tbs, p);
  if (s == Scenario::kOne) {
    r.n_t = p.n_t;
    r.mean_l = mean_l;
    r.travel_fraction = travel_fraction(p.n_t, mean_l, p.v);
    r.p_tot = total_power_s1(lambda_u, p.n_t, mean_l, p.v, p.p_m, p.p_s, p.lambda_t, p.p_tbs);
  } else {
    r.p_tot = total_power_s2(lambda_u, p.p_s, p.lambda_t, p.p_tbs);
  }
  if (!(r.p_tot > 0.0)) throw NumericError("total power must be positive");
  r.ee = r.se / r.p_tot;
  return r;
}

EnergyReport energy_efficiency(const CoverageBreakdown& cov, const ValidatedParams& vp,
                               const NumericsConfig& n) {
  const SystemParams& p = vp.get();
  const double l = cov.scenario == Scenario::kOne ? mean_l(p.lambda_c, p.d_nm, n) : 0.0;
  return make_energy_report(cov.scenario, p, cov.lambda_u, cov.p_uav_los + cov.p_uav_nlos,
                            cov.p_tbs, l);
}

EnergyReport energy_efficiency(Scenario s, const ValidatedParams& p, const NumericsConfig& n,
                               CoverageMode mode) {
  if (s == Scenario::kOne) {
    // Fail fast on an infeasible schedule before the coverage integrals.
    travel_fraction(p.get().n_t, mean_l(p.get().lambda_c, p.get().d_nm, n), p.get().v);
  }
  return energy_efficiency(coverage(s, p, n, mode), p, n);
}

std::string energy_csv_header() {
  return "scenario,lambda_u,n_t,mean_l,v,travel_fraction,p_cov_uav,p_cov_tbs,se,p_tot,ee";
}

std::string to_csv_row(const EnergyReport& r) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "%s,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g",
                to_string(r.scenario), r.lambda_u, r.n_t, r.mean_l, r.v, r.travel_fraction,
                r.p_cov_uav, r.p_cov_tbs, r.se, r.p_tot, r.ee);
  return buf;
}

}  // namespace padnet
