#include "padnet/travel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "padnet/error.hpp"

namespace padnet {

namespace {

constexpr double kPi = std::numbers::pi;

double clamped_acos(double x) { return std::acos(std::clamp(x, -1.0, 1.0)); }

double overlap(double a0, double a1, double b0, double b1) {
  return std::max(0.0, std::min(a1, b1) - std::max(a0, b0));
}

// Measure of the arc [theta_3 - t, theta_3 + t] (angles seen from x_n, zero
// pointing at x_m) that avoids the excluded arc [-t_d, t_d] and its 2*pi copy.
double admissible_arc(double theta_3, double t, double t_d) {
  const double lo = theta_3 - t;
  const double hi = theta_3 + t;
  return 2.0 * t - overlap(lo, hi, -t_d, t_d) - overlap(lo, hi, 2.0 * kPi - t_d, 2.0 * kPi + t_d);
}

// Multiples of the nearest-neighbour scale, so dense fields resolve the peak.
void add_scale_breaks(std::vector<double>& pts, double lambda_c, double upper) {
  const double scale = 1.0 / std::sqrt(2.0 * kPi * lambda_c);
  for (double k : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    if (k * scale < upper) pts.push_back(k * scale);
  }
}

double free_area(double r, const ClusterPairGeometry& g) {
  return kPi * r * r - lens_area(r, g.r_mm, g.d_nm);
}

quad::Tolerance outer_tolerance(const NumericsConfig& n) {
  return {std::max(n.quad_rel_tol, 1e-7), n.quad_abs_tol, 2000};
}

}  // namespace

TravelRegime travel_regime(const ClusterPairGeometry& g) {
  const double s = g.theta_1 + g.theta_3;
  if (s < kPi / 2.0) return TravelRegime::kAcute;
  if (std::cos(kPi - s) > std::sin(g.theta_1)) return TravelRegime::kObtuse;
  return TravelRegime::kCrossing;
}

double exclusion_area_a0(const ClusterPairGeometry& g) {
  const double a = g.r_mm * g.r_mm * (kPi - g.theta_1) +
                   g.r_mn * g.r_mn * (kPi - g.theta_3) +
                   g.r_mm * g.d_nm * std::sin(g.theta_1) - kPi * g.r_mm * g.r_mm;
  return std::max(0.0, a);
}

double prob_l_zero(const ClusterPairGeometry& g, double lambda_c) {
  return std::exp(-lambda_c * exclusion_area_a0(g));
}

double cdf_l(double l, const ClusterPairGeometry& g, double lambda_c, const quad::Tolerance& tol) {
  if (l < 0.0) return 0.0;
  const double p0 = prob_l_zero(g, lambda_c);
  if (l == 0.0 || g.r_mn <= 0.0) return p0;
  if (l >= 2.0 * g.r_mn) return 1.0;

  auto integrand = [&](double r) {
    if (r <= 0.0) return 0.0;
    const double t = clamped_acos((g.r_mn * g.r_mn + r * r - l * l) / (2.0 * g.r_mn * r));
    const double arc = admissible_arc(g.theta_3, t, theta_d(r, g));
    if (arc <= 0.0) return 0.0;
    return lambda_c * r * arc * std::exp(-lambda_c * free_area(r, g));
  };
  std::vector<double> pts{0.0, g.r_mn, std::abs(g.r_mn - l)};
  const double seam = g.d_nm - g.r_mm;
  if (seam > 0.0 && seam < g.r_mn) pts.push_back(seam);
  add_scale_breaks(pts, lambda_c, g.r_mn);
  pts.erase(std::remove_if(pts.begin(), pts.end(), [&](double p) { return p > g.r_mn; }),
            pts.end());
  const double mass = quad::integrate_checked(integrand, pts, tol, "cdf_l");
  return std::clamp(p0 + mass, 0.0, 1.0);
}

double mean_l_given(const ClusterPairGeometry& g, double lambda_c, const quad::Tolerance& tol) {
  if (g.r_mn <= 0.0) return 0.0;
  const quad::Tolerance outer{std::max(tol.rel, 1e-7), tol.abs, 2000};
  std::vector<double> pts{0.0, g.r_mn, 2.0 * g.r_mn};
  const double seam = g.d_nm - g.r_mm;
  if (seam > 0.0) {
    for (double p : {seam, g.r_mn - seam, g.r_mn + seam}) {
      if (p > 0.0 && p < 2.0 * g.r_mn) pts.push_back(p);
    }
  }
  return quad::integrate_checked([&](double l) { return 1.0 - cdf_l(l, g, lambda_c, tol); }, pts,
                                 outer, "mean_l");
}

double TravelDistribution::cdf(double l) const {
  if (cdf_grid.empty()) return 0.0;
  if (l < 0.0) return 0.0;
  if (l >= cdf_grid.back().first) return 1.0;
  const auto it = std::upper_bound(cdf_grid.begin(), cdf_grid.end(), l,
                                   [](double v, const auto& p) { return v < p.first; });
  const auto& hi = *it;
  const auto& lo = *(it - 1);
  const double w = (l - lo.first) / (hi.first - lo.first);
  return lo.second + w * (hi.second - lo.second);
}

TravelDistribution make_travel_distribution(const ClusterPairGeometry& geom, double lambda_c,
                                            const quad::Tolerance& tol, std::size_t points) {
  if (points < 3) throw InvalidArgument("travel distribution needs at least 3 grid points");
  TravelDistribution d;
  d.geom = geom;
  d.lambda_c = lambda_c;
  d.p_zero = prob_l_zero(geom, lambda_c);
  const double span = 2.0 * geom.r_mn;
  const double g = 1.01;
  const double denom = std::pow(g, static_cast<double>(points - 1)) - 1.0;
  double prev = d.p_zero;
  d.cdf_grid.reserve(points);
  d.cdf_grid.emplace_back(0.0, d.p_zero);
  for (std::size_t i = 1; i < points; ++i) {
    const double l = span * (std::pow(g, static_cast<double>(i)) - 1.0) / denom;
    double f = i + 1 == points ? 1.0 : cdf_l(l, geom, lambda_c, tol);
    f = std::max(f, prev);  // absorb quadrature noise
    d.cdf_grid.emplace_back(l, f);
    prev = f;
  }
  return d;
}

EmpiricalDistribution sample_l_oracle(const ClusterPairGeometry& g, double lambda_c,
                                      std::size_t n, Rng& rng) {
  const Point cm{g.r_mm * std::cos(g.theta_1), g.r_mm * std::sin(g.theta_1)};
  const Point xn{g.d_nm, 0.0};
  const double r2mm = g.r_mm * g.r_mm;
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    double best = g.r_mn;
    Point cn = cm;
    for (const Point& p : sample_ppp(lambda_c, g.r_mn, rng)) {
      const Point q{p.x + xn.x, p.y + xn.y};
      if (q.x * q.x + q.y * q.y < r2mm) continue;
      const double dist = std::hypot(p.x, p.y);
      if (dist < best) {
        best = dist;
        cn = q;
      }
    }
    out.push_back(distance(cn, cm));
  }
  return EmpiricalDistribution(std::move(out));
}

EmpiricalDistribution sample_l_unconditioned(double lambda_c, double d_nm, std::size_t n,
                                             Rng& rng) {
  const Point xm{-0.5 * d_nm, 0.0};
  const Point xn{0.5 * d_nm, 0.0};
  const double window = 2.5 * d_nm;
  std::vector<double> out;
  out.reserve(n);
  while (out.size() < n) {
    const auto pads = sample_ppp(lambda_c, window, rng);
    std::size_t im = pads.size();
    std::size_t in = pads.size();
    double bm = std::numeric_limits<double>::infinity();
    double bn = bm;
    for (std::size_t k = 0; k < pads.size(); ++k) {
      const double dm = distance(pads[k], xm);
      const double dn = distance(pads[k], xn);
      if (dm < bm) {
        bm = dm;
        im = k;
      }
      if (dn < bn) {
        bn = dn;
        in = k;
      }
    }
    if (im == pads.size() || bm > d_nm) continue;
    out.push_back(im == in ? 0.0 : distance(pads[im], pads[in]));
  }
  return EmpiricalDistribution(std::move(out));
}

double mean_l(double lambda_c, double d_nm, const NumericsConfig& numerics) {
  const quad::Tolerance inner{numerics.quad_rel_tol, numerics.quad_abs_tol};
  const double r_mm = mean_rmm(lambda_c, d_nm, inner);
  auto f = [&](double theta) {
    return mean_l_given(make_geometry(r_mm, theta, d_nm), lambda_c, inner);
  };
  return quad::integrate_checked(f, 0.0, kPi, outer_tolerance(numerics), "mean_l") / kPi;
}

double expected_prob_l_zero(double lambda_c, double d_nm, const NumericsConfig& numerics) {
  const quad::Tolerance tol = outer_tolerance(numerics);
  auto over_theta = [&](double r) {
    if (r <= 0.0) return 1.0;
    auto p0 = [&](double theta) { return prob_l_zero(make_geometry(r, theta, d_nm), lambda_c); };
    return quad::integrate_checked(p0, 0.0, kPi, tol, "expected_prob_l_zero") / kPi;
  };
  std::vector<double> pts{0.0, d_nm};
  add_scale_breaks(pts, lambda_c, d_nm);
  return quad::integrate_checked(
      [&](double r) { return pdf_rmm(r, lambda_c, d_nm) * over_theta(r); }, pts, tol,
      "expected_prob_l_zero");
}

double uav_density_s2(double lambda_user, double lambda_c, double d_nm,
                      const NumericsConfig& numerics) {
  const double e = std::clamp(expected_prob_l_zero(lambda_c, d_nm, numerics), 0.0, 1.0);
  return (2.0 - e) * lambda_user;
}

}  // namespace padnet
