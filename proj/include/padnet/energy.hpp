#pragma once

#include <string>

#include "padnet/analysis.hpp"
#include "padnet/params.hpp"

namespace padnet {

struct EnergyReport {
  Scenario scenario = Scenario::kOne;
  double se = 0.0;     // bit/s/m^2
  double p_tot = 0.0;  // W/m^2
  double ee = 0.0;     // bit/J
  double lambda_u = 0.0;
  double n_t = 0.0;
  double mean_l = 0.0;
  double v = 0.0;
  double travel_fraction = 0.0;
  double p_cov_uav = 0.0;
  double p_cov_tbs = 0.0;
};

/// Rotary-wing propulsion power at forward speed v > 0.
double propulsion_power(double v, const RotorParams& rotor);

/// Speed minimizing propulsion_power on [lo, hi].
double optimal_speed(const RotorParams& rotor, double lo = 0.1, double hi = 200.0);

double spectral_efficiency(double lambda_u, double p_cov_u, double lambda_t, double p_cov_t,
                           const SystemParams& p);

/// Share of the day spent traveling, n_t 2 E[L] / (86400 v). Throws
/// ConfigError when it exceeds 1.
double travel_fraction(double n_t, double mean_l, double v);

double total_power_s1(double lambda_u1, double n_t, double mean_l, double v, double p_m,
                      double p_s, double lambda_t, double p_tbs);
double total_power_s2(double lambda_u2, double p_s, double lambda_t, double p_tbs);

/// Assembles the report from coverage components. mean_l is ignored for
/// scenario 2.
EnergyReport make_energy_report(Scenario s, const SystemParams& p, double lambda_u,
                                double p_cov_uav, double p_cov_tbs, double mean_l);

EnergyReport energy_efficiency(Scenario s, const ValidatedParams& p, const NumericsConfig& n,
                               CoverageMode mode = CoverageMode::kExact);

/// Same, reusing a coverage breakdown already computed for this point.
EnergyReport energy_efficiency(const CoverageBreakdown& cov, const ValidatedParams& p,
                               const NumericsConfig& n);

/// Column order: scenario,lambda_u,n_t,mean_l,v,travel_fraction,p_cov_uav,
/// p_cov_tbs,se,p_tot,ee
std::string energy_csv_header();
std::string to_csv_row(const EnergyReport& r);

}  // namespace padnet
