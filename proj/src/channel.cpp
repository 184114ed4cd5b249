#include "padnet/channel.hpp"

#include <cmath>
#include <numbers>

#include "padnet/error.hpp"

namespace padnet {

namespace {
constexpr double kPi = std::numbers::pi;
}

LinkGeometry make_link(double horizontal_dist, double altitude) {
  if (!(horizontal_dist >= 0.0) || !(altitude > 0.0)) {
    throw InvalidArgument("link geometry needs horizontal >= 0 and altitude > 0");
  }
  return {horizontal_dist, altitude, std::hypot(horizontal_dist, altitude)};
}

double prob_los(double r, const SystemParams& p) {
  const double elevation_deg =
      r <= 0.0 ? 90.0 : (180.0 / kPi) * std::atan(p.h / r);
  return 1.0 / (1.0 + p.a_env * std::exp(-p.b_env * (elevation_deg - p.a_env)));
}

double mean_power_uav(double d, bool los, const SystemParams& p) {
  return los ? p.eta_l * p.rho_u * std::pow(d, -p.alpha_l)
             : p.eta_n * p.rho_u * std::pow(d, -p.alpha_n);
}

double mean_power_uav(const LinkGeometry& link, bool los, const SystemParams& p) {
  return mean_power_uav(link.euclidean_dist, los, p);
}

double mean_power_tbs(double r, const SystemParams& p) { return p.rho_t * std::pow(r, -p.alpha_t); }

double sample_fading(int m, Rng& rng) {
  if (m < 1) throw InvalidArgument("fading order must be >= 1");
  return std::gamma_distribution<double>(m, 1.0 / m)(rng);
}

double uav_win_radius(double d, bool los, const SystemParams& p) {
  const double eta = los ? p.eta_l : p.eta_n;
  const double alpha = los ? p.alpha_l : p.alpha_n;
  return std::pow(p.rho_t / p.rho_u, 1.0 / p.alpha_t) * std::pow(eta, -1.0 / p.alpha_t) *
         std::pow(d, alpha / p.alpha_t);
}

double assoc_prob_uav(double d, bool los, const SystemParams& p) {
  const double w = uav_win_radius(d, los, p);
  return std::exp(-kPi * p.lambda_t * w * w);
}

double tbs_threshold(double r, bool los, const SystemParams& p) {
  const double eta = los ? p.eta_l : p.eta_n;
  const double alpha = los ? p.alpha_l : p.alpha_n;
  const double d = std::pow(p.rho_u / p.rho_t, 1.0 / alpha) * std::pow(eta, 1.0 / alpha) *
                   std::pow(r, p.alpha_t / alpha);
  return std::max(d, p.h);
}

}  // namespace padnet
