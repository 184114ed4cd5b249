#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "padnet/empirical.hpp"
#include "padnet/geometry.hpp"
#include "padnet/params.hpp"
#include "padnet/quadrature.hpp"
#include "padnet/random.hpp"

namespace padnet {

/// The three angular configurations that split the piecewise CDF of L.
enum class TravelRegime {
  kAcute,     // theta_1 + theta_3 < pi/2
  kObtuse,    // cos(pi - theta_1 - theta_3) > sin(theta_1)
  kCrossing,  // everything else
};

TravelRegime travel_regime(const ClusterPairGeometry& geom);

/// Area of the region in which a pad would be nearer to x_n than C_m while
/// not being nearer to x_m than C_m.
double exclusion_area_a0(const ClusterPairGeometry& geom);

/// P(L = 0 | r_mm, theta_1).
double prob_l_zero(const ClusterPairGeometry& geom, double lambda_c);

/// F_L(l | r_mm, theta_1). Integrates, over the distance r from x_n to the
/// competing nearest pad, the angular measure of the admissible arc of
/// B(x_n, r) that lies within l of C_m.
double cdf_l(double l, const ClusterPairGeometry& geom, double lambda_c,
             const quad::Tolerance& tol = {});

/// E[L | r_mm, theta_1] as the integral of the survival function.
double mean_l_given(const ClusterPairGeometry& geom, double lambda_c,
                    const quad::Tolerance& tol = {});

struct TravelDistribution {
  ClusterPairGeometry geom;
  double lambda_c = 0.0;
  double p_zero = 0.0;
  std::vector<std::pair<double, double>> cdf_grid;  // (l, F), l spans [0, 2 r_mn]

  /// Linear interpolation on the grid; 1 beyond its end.
  double cdf(double l) const;
};

TravelDistribution make_travel_distribution(const ClusterPairGeometry& geom, double lambda_c,
                                            const quad::Tolerance& tol = {},
                                            std::size_t points = 512);

/// Conditional oracle: C_m pinned at (r_mm, theta_1), the remaining pads a
/// PPP outside B(x_m, r_mm). Records |C_n - C_m| for n independent fields.
EmpiricalDistribution sample_l_oracle(const ClusterPairGeometry& geom, double lambda_c,
                                      std::size_t n, Rng& rng);

/// Unconditioned oracle: a full PPP around the pair, fields where the pad
/// nearest to x_m lies beyond d_nm are redrawn.
EmpiricalDistribution sample_l_unconditioned(double lambda_c, double d_nm, std::size_t n,
                                             Rng& rng);

/// E[L] with r_mm fixed at E[R_mm] and theta_1 averaged over [0, pi].
double mean_l(double lambda_c, double d_nm, const NumericsConfig& numerics);

/// E[P(L = 0)] over R_mm and theta_1.
double expected_prob_l_zero(double lambda_c, double d_nm, const NumericsConfig& numerics);

/// UAV density when every cluster gets its own nearest-pad UAV.
double uav_density_s2(double lambda_user, double lambda_c, double d_nm,
                      const NumericsConfig& numerics);

}  // namespace padnet
