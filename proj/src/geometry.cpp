#include "padnet/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "padnet/error.hpp"

namespace padnet {

namespace {

constexpr double kPi = std::numbers::pi;

double clamped_acos(double x) { return std::acos(std::clamp(x, -1.0, 1.0)); }

}  // namespace

ClusterPairGeometry make_geometry(double r_mm, double theta_1, double d_nm) {
  if (!(d_nm > 0.0) || !std::isfinite(d_nm)) {
    throw InvalidArgument("geometry: d_nm must be positive, got " + std::to_string(d_nm));
  }
  if (!(r_mm >= 0.0 && r_mm <= d_nm)) {
    throw InvalidArgument("geometry: r_mm must lie in [0, d_nm], got " + std::to_string(r_mm));
  }
  if (!(theta_1 >= 0.0 && theta_1 <= kPi)) {
    throw InvalidArgument("geometry: theta_1 must lie in [0, pi], got " +
                          std::to_string(theta_1));
  }
  ClusterPairGeometry g;
  g.r_mm = r_mm;
  g.theta_1 = theta_1;
  g.d_nm = d_nm;
  if (theta_1 == 0.0) {
    g.r_mn = d_nm - r_mm;
  } else if (theta_1 == kPi) {
    g.r_mn = d_nm + r_mm;
  } else {
    g.r_mn = std::sqrt(std::max(0.0, r_mm * r_mm + d_nm * d_nm -
                                         2.0 * d_nm * r_mm * std::cos(theta_1)));
  }
  g.theta_3 = g.r_mn > 0.0 ? clamped_acos((d_nm * d_nm + g.r_mn * g.r_mn - r_mm * r_mm) /
                                          (2.0 * d_nm * g.r_mn))
                           : 0.0;
  return g;
}

std::vector<Point> sample_ppp(double density, double window_radius, Rng& rng) {
  std::vector<Point> pts;
  if (!(density > 0.0)) return pts;
  std::poisson_distribution<long long> count(density * kPi * window_radius * window_radius);
  const long long n = count(rng);
  pts.reserve(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) {
    const double r = window_radius * std::sqrt(uniform01(rng));
    const double phi = 2.0 * kPi * uniform01(rng);
    pts.push_back({r * std::cos(phi), r * std::sin(phi)});
  }
  return pts;
}

std::vector<double> sample_ppp_radii(double density, double window_radius, Rng& rng) {
  std::vector<double> radii;
  if (!(density > 0.0)) return radii;
  std::poisson_distribution<long long> count(density * kPi * window_radius * window_radius);
  const long long n = count(rng);
  radii.reserve(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) radii.push_back(window_radius * std::sqrt(uniform01(rng)));
  std::sort(radii.begin(), radii.end());
  return radii;
}

std::vector<std::pair<Point, Point>> sample_bipolar_pairs(double lambda_user, double d_nm,
                                                          double window_radius, Rng& rng) {
  std::vector<std::pair<Point, Point>> pairs;
  for (const Point& p : sample_ppp(lambda_user, window_radius, rng)) {
    const double phi = 2.0 * kPi * uniform01(rng);
    pairs.emplace_back(p, Point{p.x + d_nm * std::cos(phi), p.y + d_nm * std::sin(phi)});
  }
  return pairs;
}

Point sample_mcp_user(const Point& center, double r_c, Rng& rng) {
  const double r = r_c * std::sqrt(uniform01(rng));
  const double phi = 2.0 * kPi * uniform01(rng);
  return {center.x + r * std::cos(phi), center.y + r * std::sin(phi)};
}

double lens_area(double a, double b, double d) {
  if (a <= 0.0 || b <= 0.0) return 0.0;
  if (d >= a + b) return 0.0;
  if (d <= std::abs(a - b)) {
    const double m = std::min(a, b);
    return kPi * m * m;
  }
  const double alpha = clamped_acos((d * d + a * a - b * b) / (2.0 * d * a));
  const double beta = clamped_acos((d * d + b * b - a * a) / (2.0 * d * b));
  const double k = (-d + a + b) * (d + a - b) * (d - a + b) * (d + a + b);
  return a * a * alpha + b * b * beta - 0.5 * std::sqrt(std::max(0.0, k));
}

double pdf_rmm(double r, double lambda_c, double d_nm) {
  if (r < 0.0 || r > d_nm) return 0.0;
  const double norm = -std::expm1(-kPi * lambda_c * d_nm * d_nm);
  return 2.0 * kPi * lambda_c * r * std::exp(-kPi * lambda_c * r * r) / norm;
}

double cdf_rmm(double r, double lambda_c, double d_nm) {
  if (r <= 0.0) return 0.0;
  if (r >= d_nm) return 1.0;
  return std::expm1(-kPi * lambda_c * r * r) / std::expm1(-kPi * lambda_c * d_nm * d_nm);
}

double mean_rmm(double lambda_c, double d_nm, const quad::Tolerance& tol) {
  // Split at multiples of the Rayleigh scale so dense fields resolve the peak.
  const double scale = 1.0 / std::sqrt(2.0 * kPi * lambda_c);
  std::vector<double> pts{0.0, d_nm};
  for (double k : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    if (k * scale < d_nm) pts.push_back(k * scale);
  }
  return quad::integrate_checked([&](double r) { return r * pdf_rmm(r, lambda_c, d_nm); }, pts,
                                 tol, "mean_rmm");
}

double theta_d(double r, const ClusterPairGeometry& g) {
  if (r <= g.d_nm - g.r_mm || r <= 0.0) return 0.0;
  if (r >= g.d_nm + g.r_mm) return kPi;
  return clamped_acos((g.d_nm * g.d_nm + r * r - g.r_mm * g.r_mm) / (2.0 * g.d_nm * r));
}

double pdf_rnn_given(double r, const ClusterPairGeometry& g, double lambda_c) {
  if (r < 0.0 || r >= g.r_mn) return 0.0;
  const double excluded = lens_area(r, g.r_mm, g.d_nm);
  return 2.0 * lambda_c * r * (kPi - theta_d(r, g)) *
         std::exp(-lambda_c * (kPi * r * r - excluded));
}

double pdf_user_distance_given(double r, double offset, double r_c) {
  if (r < 0.0) return 0.0;
  if (offset <= 0.0) return r < r_c ? 2.0 * r / (r_c * r_c) : 0.0;
  if (offset < r_c && r <= r_c - offset) return 2.0 * r / (r_c * r_c);
  if (r <= std::abs(offset - r_c) || r >= offset + r_c) return 0.0;
  // Half-angle forms stay accurate where the arc is nearly empty or full.
  const double lo = (r_c - r + offset) * (r_c + r - offset) / (4.0 * r * offset);
  const double hi = (r + offset - r_c) * (r + offset + r_c) / (4.0 * r * offset);
  const double phi = lo < hi ? 2.0 * std::asin(std::sqrt(std::clamp(lo, 0.0, 1.0)))
                             : kPi - 2.0 * std::asin(std::sqrt(std::clamp(hi, 0.0, 1.0)));
  return 2.0 * r * phi / (kPi * r_c * r_c);
}

}  // namespace padnet
