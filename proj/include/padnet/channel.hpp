#pragma once

#include "padnet/params.hpp"
#include "padnet/random.hpp"

namespace padnet {

struct LinkGeometry {
  double horizontal_dist = 0.0;  // m
  double altitude = 0.0;         // m
  double euclidean_dist = 0.0;   // m
};

LinkGeometry make_link(double horizontal_dist, double altitude);

/// LoS probability of an air-to-ground link at horizontal distance r.
double prob_los(double horizontal_dist, const SystemParams& p);
inline double prob_nlos(double horizontal_dist, const SystemParams& p) {
  return 1.0 - prob_los(horizontal_dist, p);
}

/// Mean received UAV power (fading excluded) at Euclidean distance D.
double mean_power_uav(double euclidean_dist, bool los, const SystemParams& p);
double mean_power_uav(const LinkGeometry& link, bool los, const SystemParams& p);

/// Mean received TBS power at distance r.
double mean_power_tbs(double r, const SystemParams& p);

/// Gamma(m, 1/m) power gain; m = 1 is the exponential TBS fading.
double sample_fading(int m, Rng& rng);

/// Nearest-TBS distance beyond which a UAV at Euclidean distance r wins
/// the mean-power comparison.
double uav_win_radius(double euclidean_dist, bool los, const SystemParams& p);

/// Probability that the cluster UAV at Euclidean distance r beats the
/// nearest TBS.
double assoc_prob_uav(double euclidean_dist, bool los, const SystemParams& p);

/// Euclidean UAV distance beyond which a TBS at distance r wins, clamped
/// below at the altitude. The TBS is chosen iff the UAV's horizontal
/// distance exceeds sqrt(d^2 - h^2).
double tbs_threshold(double tbs_dist, bool los, const SystemParams& p);

}  // namespace padnet
