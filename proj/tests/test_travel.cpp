#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "padnet/geometry.hpp"
#include "padnet/params.hpp"
#include "padnet/travel.hpp"

using namespace padnet;
using std::numbers::pi;

namespace {

double clamped_acos(double x) { return std::acos(std::clamp(x, -1.0, 1.0)); }

// Independent conditional sampler: returns true when the pad nearest to x_n
// is C_m itself, given C_m pinned and B(x_m, r_mm) otherwise empty.
bool shares_pad(const ClusterPairGeometry& g, double lc, Rng& rng) {
  const double window = g.d_nm + 2.0 * g.r_mn;
  const Point cm{g.r_mm * std::cos(g.theta_1), g.r_mm * std::sin(g.theta_1)};
  const Point xn{g.d_nm, 0.0};
  const double to_cm = distance(cm, xn);
  for (const auto& p : sample_ppp(lc, window, rng)) {
    if (std::hypot(p.x, p.y) < g.r_mm) continue;
    if (distance(p, xn) < to_cm) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("exclusion area matches the disk-minus-lens form") {
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const double d = 200.0 + 500.0 * uniform01(rng);
    const auto g = make_geometry(d * uniform01(rng), pi * uniform01(rng), d);
    const double alt = pi * g.r_mn * g.r_mn - lens_area(g.r_mn, g.r_mm, g.d_nm);
    CHECK(exclusion_area_a0(g) == doctest::Approx(alt).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("prob_l_zero reference point and limits") {
  const auto g = make_geometry(100.0, pi / 2.0, 300.0);
  CHECK(g.r_mn == doctest::Approx(316.23).epsilon(1e-4));
  CHECK(exclusion_area_a0(g) == doctest::Approx(296276.0).epsilon(1e-5));
  CHECK(prob_l_zero(g, 1e-5) == doctest::Approx(0.0517).epsilon(0.002));
  CHECK(prob_l_zero(g, 1e-15) == doctest::Approx(1.0));
  double prev = 1.0;
  for (double lc : {1e-7, 1e-6, 1e-5, 1e-4}) {
    const double p = prob_l_zero(g, lc);
    CHECK(p < prev);
    prev = p;
  }
}

TEST_CASE("prob_l_zero agrees with the conditional sampler") {
  Rng rng(12);
  const auto g = make_geometry(100.0, pi / 2.0, 300.0);
  const int n = 200000;
  int shared = 0;
  for (int i = 0; i < n; ++i) shared += shares_pad(g, 1e-5, rng);
  const double p = prob_l_zero(g, 1e-5);
  const double sigma = std::sqrt(p * (1.0 - p) / n);
  CHECK(std::abs(static_cast<double>(shared) / n - p) < 4.0 * sigma);
}

TEST_CASE("regime selector") {
  CHECK(travel_regime(make_geometry(150.0, pi / 4.0, 300.0)) == TravelRegime::kAcute);
  CHECK(travel_regime(make_geometry(250.0, 2.8, 300.0)) == TravelRegime::kObtuse);
  CHECK(travel_regime(make_geometry(150.0, pi / 2.0, 300.0)) == TravelRegime::kCrossing);
}

TEST_CASE("cdf endpoints") {
  const auto g = make_geometry(120.0, 1.3, 300.0);
  CHECK(cdf_l(0.0, g, 1e-5) == prob_l_zero(g, 1e-5));
  CHECK(cdf_l(2.0 * g.r_mn, g, 1e-5) == 1.0);
  CHECK(cdf_l(2.0 * g.r_mn * (1.0 - 1e-9), g, 1e-5) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("cdf agrees with the closed-form acute sub-case") {
  // theta_1 + theta_3 < pi/2 and 2 r sin(theta_1/2) <= l <= min(2 r sin theta_1, r_mn).
  const double lc = 1e-5;
  const auto g = make_geometry(150.0, pi / 4.0, 300.0);
  REQUIRE(travel_regime(g) == TravelRegime::kAcute);
  const double lo = 2.0 * g.r_mm * std::sin(g.theta_1 / 2.0);
  const double hi = std::min(2.0 * g.r_mm * std::sin(g.theta_1), g.r_mn);
  REQUIRE(lo < hi);
  for (double l : {lo + 1.0, 0.5 * (lo + hi), hi - 1.0}) {
    auto theta = [&](double r) {
      return clamped_acos((g.r_mn * g.r_mn + r * r - l * l) / (2.0 * g.r_mn * r));
    };
    auto f2 = [&](double r) { return pdf_rnn_given(r, g, lc) * (pi - theta(r)) / pi; };
    auto f4 = [&](double r) {
      return pdf_rnn_given(r, g, lc) * (pi - theta(r)) / (pi - theta_d(r, g));
    };
    auto f9 = [&](double r) {
      return pdf_rnn_given(r, g, lc) * (2.0 * pi - theta(r) - g.theta_3 - theta_d(r, g)) /
             (2.0 * pi - 2.0 * theta_d(r, g));
    };
    const double t4 = pi - g.theta_3 - g.theta_1 - std::acos(l / (2.0 * g.r_mm));
    const double r2d = std::hypot(l * std::cos(t4) - g.r_mn, l * std::sin(t4));
    const double seam = g.d_nm - g.r_mm;
    REQUIRE(g.r_mn - l < seam);
    REQUIRE(r2d > seam);
    REQUIRE(r2d < g.r_mn);
    const quad::Tolerance tol{1e-11, 1e-14};
    const double closed = std::exp(-lc * pi * (g.r_mn - l) * (g.r_mn - l)) -
                          quad::integrate_checked(f2, g.r_mn - l, seam, tol, "f2") -
                          quad::integrate_checked(f4, seam, r2d, tol, "f4") -
                          quad::integrate_checked(f9, r2d, g.r_mn, tol, "f9");
    CAPTURE(l);
    CHECK(cdf_l(l, g, lc) == doctest::Approx(closed).epsilon(1e-7));
  }
}

TEST_CASE("cdf is nondecreasing on random geometries") {
  Rng rng(13);
  for (int k = 0; k < 20; ++k) {
    const double d = uniform01(rng) < 0.5 ? 300.0 : 600.0;
    const double lc = uniform01(rng) < 0.5 ? 1e-5 : 1e-4;
    const auto g = make_geometry(d * uniform01(rng), pi * uniform01(rng), d);
    double prev = cdf_l(0.0, g, lc);
    for (int i = 1; i <= 200; ++i) {
      const double f = cdf_l(2.0 * g.r_mn * i / 200.0, g, lc);
      CHECK(f >= prev - 1e-9);
      prev = f;
    }
    CHECK(prev == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("cdf is continuous at the piecewise boundaries") {
  const double lc = 1e-5;
  for (const auto& g : {make_geometry(150.0, pi / 4.0, 300.0), make_geometry(250.0, 2.8, 300.0),
                        make_geometry(150.0, pi / 2.0, 300.0), make_geometry(200.0, 2.0, 300.0)}) {
    const double s = g.theta_1 + g.theta_3;
    const std::vector<double> edges{2.0 * g.r_mm * std::sin(g.theta_1 / 2.0),
                                    2.0 * g.r_mm * std::sin(g.theta_1),
                                    2.0 * g.r_mm * std::cos(pi - s),
                                    2.0 * g.r_mm,
                                    g.r_mn,
                                    g.r_mn + g.d_nm - g.r_mm};
    for (double e : edges) {
      if (!(e > 0.0 && e < 2.0 * g.r_mn)) continue;
      const double below = cdf_l(e * (1.0 - 1e-7), g, lc);
      const double above = cdf_l(e * (1.0 + 1e-7), g, lc);
      CAPTURE(e);
      CHECK(std::abs(above - below) < 5e-3);
    }
  }
}

TEST_CASE("oracle samples are bounded and reproducible") {
  const auto g = make_geometry(80.0, 2.0, 300.0);
  Rng a(21);
  Rng b(21);
  const auto x = sample_l_oracle(g, 1e-5, 2000, a);
  const auto y = sample_l_oracle(g, 1e-5, 2000, b);
  CHECK(x.samples() == y.samples());
  CHECK(x.samples().back() <= 2.0 * g.r_mn);
}

TEST_CASE("oracle atom at zero matches prob_l_zero for dense pads") {
  const auto g = make_geometry(5.0, 1.0, 30.0);
  const double lc = 1e-2;
  Rng rng(22);
  const auto e = sample_l_oracle(g, lc, 100000, rng);
  const double p = prob_l_zero(g, lc);
  const double sigma = std::sqrt(p * (1.0 - p) / 1e5);
  CHECK(std::abs(e.cdf(0.0) - p) < 3.0 * sigma + 1e-12);
}

TEST_CASE("cdf matches the conditional oracle") {
  Rng rng(23);
  for (double d : {300.0, 600.0}) {
    for (double lc : {1e-5, 1e-4}) {
      const double r = mean_rmm(lc, d);
      for (double theta : {pi / 6.0, pi / 2.0, 5.0 * pi / 6.0}) {
        const auto g = make_geometry(r, theta, d);
        const auto dist = make_travel_distribution(g, lc);
        const auto e = sample_l_oracle(g, lc, 100000, rng);
        CAPTURE(d);
        CAPTURE(lc);
        CAPTURE(theta);
        CHECK(e.ks_distance([&](double l) { return dist.cdf(l); }) < 0.02);
      }
    }
  }
}

TEST_CASE("mean travel distance") {
  NumericsConfig num;
  const double m300 = mean_l(1e-5, 300.0, num);
  const double m600 = mean_l(1e-5, 600.0, num);
  CHECK(m600 > m300);
  CHECK(m300 > 0.0);
  CHECK(m300 < 2.0 * (300.0 + mean_rmm(1e-5, 300.0)));

  // Dense pads: both nearest pads hug their centers, so L concentrates near d_nm.
  Rng rng(24);
  const auto e = sample_l_unconditioned(1e-3, 300.0, 100000, rng);
  CHECK(mean_l(1e-3, 300.0, num) == doctest::Approx(e.mean()).epsilon(1.0 / e.mean()));
}

TEST_CASE("scenario-2 UAV density") {
  NumericsConfig num;
  const double lu = 1e-5;
  CHECK(uav_density_s2(lu, 1e-12, 300.0, num) == doctest::Approx(lu).epsilon(1e-5));
  CHECK(uav_density_s2(lu, 1e-2, 300.0, num) == doctest::Approx(2.0 * lu).epsilon(1e-9));
  for (double lc : {1e-6, 1e-5, 1e-4}) {
    const double v = uav_density_s2(lu, lc, 300.0, num);
    CHECK(v >= lu);
    CHECK(v <= 2.0 * lu);
  }
  Rng rng(25);
  const auto e = sample_l_unconditioned(1e-4, 300.0, 100000, rng);
  const double distinct = 1.0 - e.cdf(0.0);
  CHECK(uav_density_s2(lu, 1e-4, 300.0, num) == doctest::Approx(lu * (1.0 + distinct)).epsilon(0.01));
}
