#pragma once

#include <utility>
#include <vector>

#include "padnet/quadrature.hpp"
#include "padnet/random.hpp"

namespace padnet {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline double distance(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

/// Position of the pad nearest to x_m relative to the cluster pair.
/// x_m sits at the origin and x_n at (d_nm, 0); C_m is at distance r_mm
/// from x_m, at angle theta_1 from the x_n direction.
struct ClusterPairGeometry {
  double r_mm = 0.0;
  double theta_1 = 0.0;
  double d_nm = 0.0;
  double r_mn = 0.0;     // |C_m - x_n|
  double theta_3 = 0.0;  // angle at x_n between x_m and C_m
};

/// Throws InvalidArgument unless 0 <= r_mm <= d_nm and theta_1 in [0, pi].
ClusterPairGeometry make_geometry(double r_mm, double theta_1, double d_nm);

std::vector<Point> sample_ppp(double density, double window_radius, Rng& rng);

/// Distances to the origin of a PPP in a disk, ascending. Cheaper than
/// sample_ppp when only radii matter (isotropic fields).
std::vector<double> sample_ppp_radii(double density, double window_radius, Rng& rng);

std::vector<std::pair<Point, Point>> sample_bipolar_pairs(double lambda_user, double d_nm,
                                                          double window_radius, Rng& rng);

Point sample_mcp_user(const Point& center, double r_c, Rng& rng);

/// Area of the intersection of two disks with radii a, b and centers d apart.
double lens_area(double a, double b, double d);

/// Density of the nearest-pad distance to x_m, conditioned below d_nm.
double pdf_rmm(double r, double lambda_c, double d_nm);
double cdf_rmm(double r, double lambda_c, double d_nm);
double mean_rmm(double lambda_c, double d_nm, const quad::Tolerance& tol = {});

/// Half-angle, seen from x_n, of the arc of the circle B(x_n, r) that lies
/// inside B(x_m, r_mm). Zero when the circle misses the disk.
double theta_d(double r, const ClusterPairGeometry& geom);

/// Density of the distance from x_n to the nearest pad other than C_m,
/// restricted to r < r_mn. Its mass is 1 - P(L = 0).
double pdf_rnn_given(double r, const ClusterPairGeometry& geom, double lambda_c);

/// Density of the horizontal distance between a UAV at horizontal offset
/// `center_offset` from a cluster center and a user uniform in the cluster
/// disk of radius r_c.
double pdf_user_distance_given(double r, double center_offset, double r_c);

}  // namespace padnet
