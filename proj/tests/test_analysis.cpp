#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "padnet/analysis.hpp"
#include "padnet/channel.hpp"
#include "padnet/empirical.hpp"
#include "padnet/error.hpp"
#include "padnet/geometry.hpp"

using namespace padnet;
using std::numbers::pi;

namespace {

// Composite Simpson rule on a uniform grid; deliberately independent of the
// library's adaptive quadrature.
template <class F>
double simpson(F f, double a, double b, int cells) {
  const double h = (b - a) / cells;
  double s = f(a) + f(b);
  for (int i = 1; i < cells; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

double brute_uav_exponent(double s, double lambda_u, const SystemParams& p, double top) {
  auto kernel = [&](double x, bool los) {
    const int m = los ? p.fading_los() : p.fading_nlos();
    const double q = s * mean_power_uav(std::hypot(x, p.h), los, p);
    return 1.0 - std::pow(m / (m + q), m);
  };
  auto f = [&](double x) {
    const double pl = prob_los(x, p);
    return x * (pl * kernel(x, true) + (1.0 - pl) * kernel(x, false));
  };
  return 2.0 * pi * lambda_u *
         (simpson(f, 0.0, 1000.0, 200000) + simpson(f, 1000.0, top, 200000));
}

ValidatedParams with(void (*edit)(SystemParams&)) {
  SystemParams p;
  edit(p);
  return validate(p);
}

}  // namespace

TEST_CASE("mixing weights") {
  SystemParams p;
  p.lambda_mh = p.lambda_nl = 3e-4;
  p.lambda_nh = 1e-3;
  p.lambda_ml = 2e-4;
  auto w = mixing_weights(p);
  CHECK(w.q_mh == doctest::Approx(0.5));
  CHECK(w.q_nl == doctest::Approx(0.5));
  p.lambda_mh = 4.0 * p.lambda_nl;
  w = mixing_weights(p);
  CHECK(w.q_mh == doctest::Approx(0.8));
  CHECK(std::abs(w.q_mh + w.q_nl - 1.0) < 1e-15);
  CHECK(std::abs(w.q_ml + w.q_nh - 1.0) < 1e-15);
}

TEST_CASE("gamma tail identity") {
  for (int m : {1, 2, 3, 5}) {
    for (double g : {0.01, 0.1, 1.0, 10.0}) {
      // P(G > g) for G ~ Gamma(m, 1/m) is Q(m, m g).
      const double ref = boost::math::gamma_q(static_cast<double>(m), m * g);
      CHECK(gamma_ccdf(m, g) == doctest::Approx(ref).epsilon(1e-12));
    }
  }
}

TEST_CASE("uav-field transform basics") {
  const SystemParams p;
  const NumericsConfig n;
  CHECK(laplace_uav_field(0.0, 100.0, 1e-5, p, n).value == 1.0);
  double prev = 1.0;
  for (int i = 0; i < 20; ++i) {
    const double s = std::pow(10.0, 2.0 + 0.5 * i);
    const double v = laplace_uav_field(s, 100.0, 1e-5, p, n, true).value;
    CHECK(v <= prev);
    CHECK(v >= 0.0);
    prev = v;
  }
  CHECK_THROWS_AS(laplace_uav_field(-1.0, 0.0, 1e-5, p, n), InvalidArgument);
}

TEST_CASE("tbs part matches the closed form for path-loss exponent 4") {
  const SystemParams p;
  const NumericsConfig n;
  const double top = n.integral_truncation_radius;
  for (double s : {1e4, 1e7, 1e9}) {
    for (double t : {10.0, 300.0}) {
      const double k = std::sqrt(s * p.rho_t);
      const double j = 0.5 * k * (std::atan(top * top / k) - std::atan(t * t / k));
      const double ref = std::exp(-2.0 * pi * p.lambda_t * j);
      CHECK(laplace_uav_field(s, t, 0.0, p, n).value == doctest::Approx(ref).epsilon(1e-9));
    }
  }
}

TEST_CASE("uav part matches brute-force Simpson integration") {
  const SystemParams p;
  const NumericsConfig n;
  SystemParams no_tbs = p;
  no_tbs.lambda_t = 1e-30;
  for (double s : {1e5, 1e7, 1e9}) {
    const double ref = std::exp(-brute_uav_exponent(s, 1e-5, p, n.integral_truncation_radius));
    CHECK(laplace_uav_field(s, 0.0, 1e-5, no_tbs, n).value == doctest::Approx(ref).epsilon(1e-7));
  }
}

TEST_CASE("tbs-serving transform") {
  const SystemParams p;
  const NumericsConfig n;
  CHECK(laplace_given_tbs_serving(0.0, 300.0, 150.0, true, 1e-5, p, n).value == 1.0);
  const double s = 1e8;
  const double open = laplace_uav_field(s, 300.0, 1e-5, p, n).value;
  CHECK(laplace_given_tbs_serving(s, 300.0, 1e9, true, 1e-5, p, n).value ==
        doctest::Approx(open).epsilon(1e-9));
  const double q = s * mean_power_uav(std::hypot(150.0, p.h), true, p);
  CHECK(laplace_given_tbs_serving(s, 300.0, 150.0, true, 1e-5, p, n).value ==
        doctest::Approx(open * std::pow(3.0 / (3.0 + q), 3)).epsilon(1e-12));
}

TEST_CASE("finite differences on a closed-form transform") {
  const double c = 2.5e-3;
  const double s = 700.0;
  auto f = [&](double x) { return std::exp(-c * x); };
  for (int k = 1; k <= 2; ++k) {
    const auto d = fd_derivative(f, s, k, 1e-4);
    const double exact = std::pow(-c * s, k) * std::exp(-c * s);
    CHECK(d.value == doctest::Approx(exact).epsilon(1e-6));
  }
  CHECK_THROWS_AS(fd_derivative(f, s, 5, 1e-4), InvalidArgument);
}

TEST_CASE("closed-form derivatives agree with finite differences of the transform") {
  const SystemParams p;
  NumericsConfig tight;
  tight.quad_rel_tol = 1e-13;
  tight.quad_abs_tol = 1e-300;
  for (double s : {1e5, 3e6}) {
    const auto d = laplace_uav_field_derivatives(s, 50.0, 1e-5, p, tight, 2);
    CHECK(d[0] == doctest::Approx(laplace_uav_field(s, 50.0, 1e-5, p, tight, true).value).epsilon(1e-12));
    auto f = [&](double x) { return laplace_uav_field(x, 50.0, 1e-5, p, tight, true).value; };
    for (int k = 1; k <= 2; ++k) {
      const auto fd = fd_derivative(f, s, k, 1e-2);
      CAPTURE(s);
      CAPTURE(k);
      CHECK(d[static_cast<std::size_t>(k)] == doctest::Approx(std::pow(-1.0, k) * fd.value).epsilon(1e-5));
    }
  }
}

TEST_CASE("uav coverage limits") {
  const NumericsConfig n;
  {
    SystemParams p;
    p.gamma_thr = 1e12;
    const auto u = cov_uav_term(50.0, 1e-5, p, n);
    CHECK(u.los + u.nlos < 1e-6);
  }
  {
    const SystemParams p;
    const auto exact = cov_uav_term(50.0, 1e-5, p, n, CoverageMode::kExact);
    const auto bound = cov_uav_term(50.0, 1e-5, p, n, CoverageMode::kUpperBound);
    CHECK(std::abs(exact.nlos - bound.nlos) < 1e-10);
    CHECK(std::abs(exact.los - bound.los) < 0.05);
    SystemParams p1 = p;
    p1.m_l = 1.0;
    const auto e1 = cov_uav_term(50.0, 1e-5, p1, n, CoverageMode::kExact);
    const auto b1 = cov_uav_term(50.0, 1e-5, p1, n, CoverageMode::kUpperBound);
    CHECK(std::abs(e1.los - b1.los) < 1e-10);
  }
}

TEST_CASE("tbs coverage limits") {
  const NumericsConfig n;
  SystemParams p;
  p.lambda_t = 1e-14;
  CHECK(cov_tbs_term(50.0, 1e-5, p, n) < 1e-6);
  p = SystemParams{};
  p.rho_u = 1e24;
  CHECK(cov_tbs_term(50.0, 1e-5, p, n) < 1e-9);
  p = SystemParams{};
  const double v = cov_tbs_term(50.0, 1e-5, p, n);
  CHECK(v > 0.0);
  CHECK(v < 1.0);
}

TEST_CASE("cross-cluster user distance law") {
  const double r_mm = 120.0;
  const double d = 300.0;
  const double r_c = 120.0;
  const auto law = UserDistanceLaw::cross_cluster(r_mm, d, r_c);
  const double mass = quad::integrate_checked([&](double z) { return law.pdf(z); }, law.breaks(),
                                              {1e-7, 1e-10}, "mass");
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));

  Rng rng(41);
  std::vector<double> z;
  for (int i = 0; i < 100000; ++i) {
    const double theta = pi * uniform01(rng);
    const Point uav{r_mm * std::cos(theta), r_mm * std::sin(theta)};
    z.push_back(distance(uav, sample_mcp_user({d, 0.0}, r_c, rng)));
  }
  const EmpiricalDistribution e(z);
  double acc = 0.0;
  double last = law.support_min();
  std::vector<std::pair<double, double>> grid{{last, 0.0}};
  for (int i = 1; i <= 400; ++i) {
    const double x = law.support_min() + (law.support_max() - law.support_min()) * i / 400.0;
    acc += quad::gauss_legendre16([&](double t) { return law.pdf(t); }, last, x);
    grid.emplace_back(x, acc);
    last = x;
  }
  auto cdf = [&](double x) {
    if (x <= grid.front().first) return 0.0;
    if (x >= grid.back().first) return 1.0;
    const auto it = std::lower_bound(grid.begin(), grid.end(), x,
                                     [](const auto& g, double v) { return g.first < v; });
    const auto lo = *(it - 1);
    return lo.second + (x - lo.first) / (it->first - lo.first) * (it->second - lo.second);
  };
  CHECK(e.ks_distance(cdf) < 0.01);
}

TEST_CASE("scenario breakdowns") {
  const NumericsConfig n;
  const auto sym = with([](SystemParams& p) {
    p.lambda_mh = p.lambda_nh = 1e-3;
    p.lambda_ml = p.lambda_nl = 2.5e-4;
    p.alpha_time = 0.5;
  });
  const auto b = coverage_scenario1(sym, n);
  CHECK(b.p_given_cm == doctest::Approx(b.p_given_cn).epsilon(1e-12));
  CHECK(b.p_total == doctest::Approx(b.p_given_cm).epsilon(1e-12));
  for (double v : {b.own.uav_los, b.own.uav_nlos, b.own.tbs, b.cross.uav_los, b.cross.uav_nlos,
                   b.cross.tbs, b.p_total}) {
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
  CHECK(b.p_total == doctest::Approx(b.p_uav_los + b.p_uav_nlos + b.p_tbs));

  const auto def = validate(SystemParams{});
  const auto s2 = coverage_scenario2(def, n);
  const auto s2_light = coverage_scenario2(def, n, def->lambda_user);
  CHECK(s2.lambda_u > def->lambda_user);
  CHECK(s2.p_total < s2_light.p_total);
  CHECK(s2.p_total >= 0.0);
  CHECK(s2.p_total <= 1.0);

  std::stringstream row(to_csv_row(b));
  std::stringstream head(coverage_csv_header());
  auto count = [](std::stringstream& s) {
    std::string cell;
    int c = 0;
    while (std::getline(s, cell, ',')) ++c;
    return c;
  };
  CHECK(count(row) == count(head));
}

TEST_CASE("truncation tail predicts the far-field loss") {
  const auto p = validate(SystemParams{});
  NumericsConfig near;
  NumericsConfig far;
  far.integral_truncation_radius = 10.0 * near.integral_truncation_radius;
  const auto a = coverage_scenario2(p, near, 2e-5);
  const auto b = coverage_scenario2(p, far, 2e-5);
  const double lost = a.p_total - b.p_total;
  CHECK(lost > 0.0);
  CHECK(a.truncation_tail > b.truncation_tail);
  CHECK(a.truncation_tail - b.truncation_tail == doctest::Approx(lost).epsilon(0.1));
}
