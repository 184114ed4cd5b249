#include "padnet/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "padnet/channel.hpp"
#include "padnet/error.hpp"
#include "padnet/geometry.hpp"
#include "padnet/quadrature.hpp"
#include "padnet/travel.hpp"

namespace padnet {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double rising(int m, int j) {
  double v = 1.0;
  for (int i = 0; i < j; ++i) v *= m + i;
  return v;
}

double factorial(int k) {
  double v = 1.0;
  for (int i = 2; i <= k; ++i) v *= i;
  return v;
}

double binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

// Complete Bell polynomials B_0..B_n of x[1..n].
std::vector<double> bell(const std::vector<double>& x, int n) {
  std::vector<double> b(static_cast<std::size_t>(n) + 1, 0.0);
  b[0] = 1.0;
  for (int k = 0; k < n; ++k) {
    double acc = 0.0;
    for (int i = 0; i <= k; ++i) acc += binomial(k, i) * b[static_cast<std::size_t>(k - i)] * x[static_cast<std::size_t>(i + 1)];
    b[static_cast<std::size_t>(k) + 1] = acc;
  }
  return b;
}

// Magnitude of s^j d^j/ds^j [1 - (m / (m + s c))^m], with q = s c.
double gamma_kernel(int m, int j, double q) {
  if (q <= 0.0) return 0.0;
  if (j == 0) return -std::expm1(-m * std::log1p(q / m));
  return rising(m, j) * std::pow(q / (m + q), j) * std::pow(m / (m + q), m);
}

double closing_factor(double s, double r_u, bool los, const SystemParams& p) {
  const int m = los ? p.fading_los() : p.fading_nlos();
  const double q = s * mean_power_uav(std::hypot(r_u, p.h), los, p);
  return std::pow(m / (m + q), m);
}

quad::Tolerance inner_tol(const NumericsConfig& n) { return {n.quad_rel_tol, n.quad_abs_tol, 4000}; }
constexpr quad::Tolerance kLossTol{1e-3, 1e-9, 400};

quad::Tolerance outer_tol(const NumericsConfig& n) {
  return {std::max(n.quad_rel_tol, 1e-7), n.quad_abs_tol, 4000};
}

std::vector<double> clip(std::vector<double> pts, double lo, double hi) {
  pts.push_back(lo);
  pts.push_back(hi);
  pts.erase(std::remove_if(pts.begin(), pts.end(),
                           [&](double v) { return !(v >= lo && v <= hi); }),
            pts.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// Interference exponents of the UAV field and the TBS field. Every order is
// returned as the nonnegative quantity (-1)^{j+1} s^j d^j/ds^j of the
// exponent, without the 2 pi lambda prefactor.
class Field {
 public:
  Field(const SystemParams& p, const NumericsConfig& n) : p_(p), n_(n) {}

  double uav(double s, int j) const {
    if (s <= 0.0) return 0.0;
    const int ml = p_.fading_los();
    const int mn = p_.fading_nlos();
    auto f = [&](double x) {
      const double d = std::hypot(x, p_.h);
      const double pl = prob_los(x, p_);
      return x * (pl * gamma_kernel(ml, j, s * mean_power_uav(d, true, p_)) +
                  (1.0 - pl) * gamma_kernel(mn, j, s * mean_power_uav(d, false, p_)));
    };
    const double top = n_.integral_truncation_radius;
    std::vector<double> pts{0.0, p_.h, 2.0 * p_.h, p_.h / std::tan(p_.a_env * kPi / 180.0)};
    for (bool los : {true, false}) {
      const double eta = los ? p_.eta_l : p_.eta_n;
      const double alpha = los ? p_.alpha_l : p_.alpha_n;
      const double m = los ? ml : mn;
      const double d2 = std::pow(s * eta * p_.rho_u / m, 2.0 / alpha) - p_.h * p_.h;
      if (d2 > 0.0) {
        const double knee = std::sqrt(d2);
        for (double k : {0.25, 0.5, 1.0, 2.0, 4.0}) pts.push_back(k * knee);
      }
    }
    for (double v = 500.0; v < top; v *= 3.0) pts.push_back(v);
    return quad::integrate_checked(f, clip(pts, 0.0, top), inner_tol(n_), "uav interference");
  }

  double tbs(double s, double t, int j) const {
    const double top = n_.integral_truncation_radius;
    if (s <= 0.0 || t >= top) return 0.0;
    auto f = [&](double x) { return x * gamma_kernel(1, j, s * mean_power_tbs(x, p_)); };
    const double knee = std::pow(s * p_.rho_t, 1.0 / p_.alpha_t);
    std::vector<double> pts{t, top};
    for (double k : {0.25, 0.5, 1.0, 2.0, 4.0}) pts.push_back(k * knee);
    for (double v = 500.0; v < top; v *= 3.0) pts.push_back(v);
    return quad::integrate_checked(f, clip(pts, std::max(t, 0.0), top), inner_tol(n_),
                                   "tbs interference");
  }

  // Exponent mass beyond the truncation radius with the far-field LoS
  // probability and distances taken as horizontal.
  double tail(double s, double t, double lambda_u) const {
    const double top = n_.integral_truncation_radius;
    const double pl = prob_los(kInf, p_);
    const double u = pl * far_part(s * p_.eta_l * p_.rho_u, p_.alpha_l, p_.fading_los(), top) +
                     (1.0 - pl) * far_part(s * p_.eta_n * p_.rho_u, p_.alpha_n, p_.fading_nlos(), top);
    const double tb = far_part(s * p_.rho_t, p_.alpha_t, 1, std::max(t, top));
    return 2.0 * kPi * (lambda_u * u + p_.lambda_t * tb);
  }

 private:
  // int_from^inf x [1 - (m / (m + k x^-alpha))^m] dx, written in y = k x^-alpha
  // with the linear part of the kernel integrated in closed form.
  static double far_part(double k, double alpha, int m, double from) {
    if (k <= 0.0) return 0.0;
    if (alpha <= 2.0) return kInf;
    const double a = 2.0 / alpha;
    const double y_top = k * std::pow(from, -alpha);
    auto rest = [&](double y) {
      if (y <= 0.0) return 0.0;
      const double r = y < 1e-4 ? (m + 1.0) / (2.0 * m) * y * y -
                                      (m + 1.0) * (m + 2.0) / (6.0 * m * m) * y * y * y
                                : y - gamma_kernel(m, 0, y);
      return std::pow(y, -a - 1.0) * r;
    };
    std::vector<double> pts{0.0, y_top};
    for (double f : {1e-8, 1e-5, 1e-3, 1e-1}) pts.push_back(f * y_top);
    const double remainder = quad::integrate(rest, pts, {1e-6, 0.0, 400}).value;
    return std::pow(k, a) / alpha * (std::pow(y_top, 1.0 - a) / (1.0 - a) - remainder);
  }

  const SystemParams& p_;
  const NumericsConfig& n_;
};

// Scaled exponent derivatives x_0..x_order for the UAV-served transform,
// noise included: x_0 = Psi(s), x_j = (-1)^{j+1} s^j Psi^{(j)}(s).
std::vector<double> exponent_terms(const Field& field, double s, double t, int order,
                                   double lambda_u, const SystemParams& p) {
  std::vector<double> x(static_cast<std::size_t>(order) + 1, 0.0);
  for (int j = 0; j <= order; ++j) {
    double v = 2.0 * kPi * (lambda_u * field.uav(s, j) + p.lambda_t * field.tbs(s, t, j));
    if (j <= 1) v += s * p.sigma2;
    x[static_cast<std::size_t>(j)] = v;
  }
  return x;
}

// E[P(G > s(sigma^2 + I)) ...] structure: conditional coverage of a Gamma(m)
// serving link with threshold parameter s = m g.
double conditional_success(const Field& field, int m, double mg, double t, double lambda_u,
                           const SystemParams& p, CoverageMode mode) {
  if (mode == CoverageMode::kExact || m == 1) {
    const auto x = exponent_terms(field, mg, t, m - 1, lambda_u, p);
    const auto b = bell(x, m - 1);
    double sum = 0.0;
    for (int k = 0; k < m; ++k) sum += b[static_cast<std::size_t>(k)] / factorial(k);
    return std::exp(-x[0]) * sum;
  }
  const double beta = std::pow(factorial(m), -1.0 / m);
  double sum = 0.0;
  for (int k = 1; k <= m; ++k) {
    const double s = k * beta * mg;
    const double psi = exponent_terms(field, s, t, 0, lambda_u, p)[0];
    sum += binomial(m, k) * ((k % 2 == 1) ? 1.0 : -1.0) * std::exp(-psi);
  }
  return std::clamp(sum, 0.0, 1.0);
}

}  // namespace

const char* to_string(Scenario s) { return s == Scenario::kOne ? "s1" : "s2"; }
const char* to_string(CoverageMode m) { return m == CoverageMode::kExact ? "exact" : "upper_bound"; }

MixingWeights mixing_weights(const SystemParams& p) {
  if (!(p.lambda_mh > 0.0 && p.lambda_nl > 0.0 && p.lambda_ml > 0.0 && p.lambda_nh > 0.0)) {
    throw InvalidArgument("user cluster densities must be positive");
  }
  MixingWeights w;
  w.q_mh = p.lambda_mh / (p.lambda_mh + p.lambda_nl);
  w.q_nl = p.lambda_nl / (p.lambda_mh + p.lambda_nl);
  w.q_nh = p.lambda_nh / (p.lambda_nh + p.lambda_ml);
  w.q_ml = p.lambda_ml / (p.lambda_nh + p.lambda_ml);
  return w;
}

LaplaceValue laplace_uav_field(double s, double tbs_exclusion, double lambda_u,
                               const SystemParams& p, const NumericsConfig& n, bool with_noise) {
  if (!(s >= 0.0) || !(tbs_exclusion >= 0.0)) throw InvalidArgument("laplace: need s >= 0, t >= 0");
  if (s == 0.0) return {1.0, 0.0};
  const Field field(p, n);
  double psi = 2.0 * kPi * (lambda_u * field.uav(s, 0) + p.lambda_t * field.tbs(s, tbs_exclusion, 0));
  if (with_noise) psi += s * p.sigma2;
  return {std::exp(-psi), field.tail(s, tbs_exclusion, lambda_u)};
}

std::vector<double> laplace_uav_field_derivatives(double s, double tbs_exclusion, double lambda_u,
                                                  const SystemParams& p, const NumericsConfig& n,
                                                  int order) {
  if (!(s > 0.0) || order < 0) throw InvalidArgument("laplace derivatives: need s > 0, order >= 0");
  const Field field(p, n);
  const auto x = exponent_terms(field, s, tbs_exclusion, order, lambda_u, p);
  auto b = bell(x, order);
  for (auto& v : b) v *= std::exp(-x[0]);
  return b;
}

LaplaceValue laplace_given_tbs_serving(double s, double r, double r_u, bool los, double lambda_u,
                                       const SystemParams& p, const NumericsConfig& n,
                                       bool with_noise) {
  if (!(r > 0.0) || !(r_u >= 0.0)) throw InvalidArgument("laplace: need r > 0, r_u >= 0");
  auto v = laplace_uav_field(s, r, lambda_u, p, n, with_noise);
  v.value *= closing_factor(s, r_u, los, p);
  return v;
}

FdDerivative fd_derivative(const std::function<double(double)>& f, double s, int order,
                           double rel_step) {
  if (order < 0 || order > 4) throw InvalidArgument("finite differences support orders 0..4");
  if (!(s > 0.0)) throw InvalidArgument("finite differences need s > 0");
  if (order == 0) return {f(s), 0.0};
  auto stencil = [&](double h) {
    switch (order) {
      case 1:
        return (f(s + h) - f(s - h)) / (2.0 * h);
      case 2:
        return (f(s + h) - 2.0 * f(s) + f(s - h)) / (h * h);
      case 3:
        return (f(s + 2.0 * h) - 2.0 * f(s + h) + 2.0 * f(s - h) - f(s - 2.0 * h)) / (2.0 * h * h * h);
      default:
        return (f(s + 2.0 * h) - 4.0 * f(s + h) + 6.0 * f(s) - 4.0 * f(s - h) + f(s - 2.0 * h)) /
               (h * h * h * h);
    }
  };
  const double h = rel_step * s;
  const double coarse = stencil(h);
  const double fine = stencil(0.5 * h);
  const double value = (4.0 * fine - coarse) / 3.0;
  const double scale = std::pow(s, order);
  const double gap = std::abs(fine - coarse) / std::max(std::abs(value), 1e-300);
  return {value * scale, gap};
}

double gamma_ccdf(int m, double x) {
  if (m < 1) throw InvalidArgument("gamma order must be >= 1");
  if (x <= 0.0) return 1.0;
  const double g = m * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < m; ++k) {
    term *= g / k;
    sum += term;
  }
  return std::exp(-g) * sum;
}

UserDistanceLaw UserDistanceLaw::own_cluster(double offset, double r_c) {
  if (!(offset >= 0.0) || !(r_c > 0.0)) throw InvalidArgument("user distance: bad offset or r_c");
  UserDistanceLaw law;
  law.offset_ = offset;
  law.r_c_ = r_c;
  law.lo_ = std::max(0.0, offset - r_c);
  law.hi_ = offset + r_c;
  law.breaks_ = clip({std::abs(offset - r_c), r_c - offset}, law.lo_, law.hi_);
  return law;
}

UserDistanceLaw UserDistanceLaw::cross_cluster(double r_mm, double d_nm, double r_c) {
  if (!(r_mm >= 0.0 && r_mm <= d_nm) || !(r_c > 0.0)) {
    throw InvalidArgument("user distance: need 0 <= r_mm <= d_nm and r_c > 0");
  }
  UserDistanceLaw law;
  law.mixture_ = true;
  law.r_mm_ = r_mm;
  law.d_nm_ = d_nm;
  law.r_c_ = r_c;
  const double near = d_nm - r_mm;
  const double far = d_nm + r_mm;
  law.lo_ = std::max(0.0, near - r_c);
  law.hi_ = far + r_c;
  law.breaks_ = clip({std::abs(near - r_c), std::abs(far - r_c), r_c - near, near + r_c, r_c},
                     law.lo_, law.hi_);
  return law;
}

double UserDistanceLaw::pdf(double z) const {
  if (!mixture_) return pdf_user_distance_given(z, offset_, r_c_);
  if (z <= lo_ || z >= hi_) return 0.0;
  auto offset_at = [&](double theta) {
    return std::sqrt(std::max(0.0, r_mm_ * r_mm_ + d_nm_ * d_nm_ - 2.0 * r_mm_ * d_nm_ * std::cos(theta)));
  };
  std::vector<double> pts{0.0, kPi};
  if (r_mm_ > 0.0) {
    // Bearings where the offset crosses a support edge of the inner density.
    for (double rho : {z + r_c_, std::abs(z - r_c_), r_c_ - z}) {
      const double c = (r_mm_ * r_mm_ + d_nm_ * d_nm_ - rho * rho) / (2.0 * r_mm_ * d_nm_);
      if (c > -1.0 && c < 1.0) pts.push_back(std::acos(c));
    }
  } else {
    return pdf_user_distance_given(z, d_nm_, r_c_);
  }
  const quad::Tolerance tol{1e-8, 1e-12, 2000};
  return quad::integrate_checked(
             [&](double t) { return pdf_user_distance_given(z, offset_at(t), r_c_); },
             clip(pts, 0.0, kPi), tol, "cross-cluster user distance") /
         kPi;
}

UavTerm cov_uav_term(const UserDistanceLaw& law, double lambda_u, const SystemParams& p,
                     const NumericsConfig& n, CoverageMode mode) {
  const Field field(p, n);
  UavTerm out;
  for (bool los : {true, false}) {
    const int m = los ? p.fading_los() : p.fading_nlos();
    const double eta = los ? p.eta_l : p.eta_n;
    const double alpha = los ? p.alpha_l : p.alpha_n;
    auto integrand = [&](double z, bool loss) {
      const double f = law.pdf(z);
      if (f <= 0.0) return 0.0;
      const double r = std::hypot(z, p.h);
      const double state = los ? prob_los(z, p) : prob_nlos(z, p);
      const double assoc = assoc_prob_uav(r, los, p);
      if (state * assoc <= 0.0) return 0.0;
      const double g = p.gamma_thr / (p.rho_u * eta) * std::pow(r, alpha);
      const double t = uav_win_radius(r, los, p);
      double v = f * state * assoc * conditional_success(field, m, m * g, t, lambda_u, p, mode);
      if (loss && v > 0.0) v *= -std::expm1(-field.tail(m * g, t, lambda_u));
      return v;
    };
    const auto pts = clip(law.breaks(), law.support_min(), law.support_max());
    const double v = quad::integrate_checked([&](double z) { return integrand(z, false); }, pts,
                                             outer_tol(n), los ? "uav coverage (LoS)" : "uav coverage (NLoS)");
    (los ? out.los : out.nlos) = std::clamp(v, 0.0, 1.0);
    out.truncation_tail +=
        quad::integrate([&](double z) { return integrand(z, true); }, pts, kLossTol).value;
  }
  return out;
}

UavTerm cov_uav_term(double center_offset, double lambda_u, const SystemParams& p,
                     const NumericsConfig& n, CoverageMode mode) {
  return cov_uav_term(UserDistanceLaw::own_cluster(center_offset, p.r_c), lambda_u, p, n, mode);
}

double cov_tbs_term(const UserDistanceLaw& law, double lambda_u, const SystemParams& p,
                    const NumericsConfig& n, double* truncation_tail) {
  const Field field(p, n);
  const double z_top = law.support_max();
  const double d_top = std::hypot(z_top, p.h);
  // Beyond this TBS distance the UAV wins for every admissible user position.
  double r_cut = 0.0;
  for (bool los : {true, false}) r_cut = std::max(r_cut, uav_win_radius(d_top, los, p));
  const double r_tail = std::sqrt(-std::log(n.quad_abs_tol) / (kPi * p.lambda_t));
  const double r_max = std::min(r_cut, r_tail);
  if (truncation_tail) *truncation_tail = 0.0;
  if (!(r_max > 0.0)) return 0.0;

  auto outer = [&](double r, bool loss) {
    if (r <= 0.0) return 0.0;
    const double s = p.gamma_thr * std::pow(r, p.alpha_t) / p.rho_t;
    double sum = 0.0;
    double base = -1.0;
    for (bool los : {true, false}) {
      const double d = tbs_threshold(r, los, p);
      const double z_min = std::sqrt(std::max(0.0, d * d - p.h * p.h));
      const double lo = std::max(z_min, law.support_min());
      if (lo >= z_top) continue;
      if (base < 0.0) {
        const double psi = s * p.sigma2 + 2.0 * kPi * (lambda_u * field.uav(s, 0) +
                                                       p.lambda_t * field.tbs(s, r, 0));
        base = std::exp(-psi);
        if (base <= 0.0) return 0.0;
        if (loss) base *= -std::expm1(-field.tail(s, r, lambda_u));
      }
      auto g = [&](double z) {
        const double state = los ? prob_los(z, p) : prob_nlos(z, p);
        return law.pdf(z) * state * closing_factor(s, z, los, p);
      };
      sum += quad::integrate_checked(g, clip(law.breaks(), lo, z_top),
                                     loss ? kLossTol : outer_tol(n), "tbs coverage (inner)");
    }
    if (base < 0.0) return 0.0;
    return 2.0 * kPi * p.lambda_t * r * std::exp(-kPi * p.lambda_t * r * r) * base * sum;
  };

  std::vector<double> pts{0.0, r_max};
  const double scale = 1.0 / std::sqrt(2.0 * kPi * p.lambda_t);
  for (double k : {0.25, 0.5, 1.0, 2.0, 4.0}) pts.push_back(k * scale);
  for (bool los : {true, false}) {
    pts.push_back(uav_win_radius(p.h, los, p));
    for (double z : law.breaks()) pts.push_back(uav_win_radius(std::hypot(z, p.h), los, p));
  }
  pts = clip(pts, 0.0, r_max);
  const double v = quad::integrate_checked([&](double r) { return outer(r, false); }, pts,
                                           outer_tol(n), "tbs coverage");
  if (truncation_tail) {
    *truncation_tail = quad::integrate([&](double r) { return outer(r, true); }, pts, kLossTol).value;
  }
  return std::clamp(v, 0.0, 1.0);
}

double cov_tbs_term(double center_offset, double lambda_u, const SystemParams& p,
                    const NumericsConfig& n, double* truncation_tail) {
  return cov_tbs_term(UserDistanceLaw::own_cluster(center_offset, p.r_c), lambda_u, p, n,
                      truncation_tail);
}

namespace {

CoverageBlock block(const UserDistanceLaw& law, double lambda_u, const SystemParams& p,
                    const NumericsConfig& n, CoverageMode mode) {
  const auto u = cov_uav_term(law, lambda_u, p, n, mode);
  double t_tail = 0.0;
  const double t = cov_tbs_term(law, lambda_u, p, n, &t_tail);
  return {u.los, u.nlos, t, u.truncation_tail + t_tail};
}

void finish(CoverageBreakdown& b) {
  b.p_total = std::clamp(b.p_uav_los + b.p_uav_nlos + b.p_tbs, 0.0, 1.0);
}

}  // namespace

CoverageBreakdown coverage_scenario1(const ValidatedParams& vp, const NumericsConfig& n,
                                     CoverageMode mode) {
  const SystemParams& p = vp.get();
  CoverageBreakdown b;
  b.scenario = Scenario::kOne;
  b.mode = mode;
  b.lambda_u = p.lambda_user;
  b.r_mm = mean_rmm(p.lambda_c, p.d_nm, inner_tol(n));
  b.q = mixing_weights(p);
  b.alpha = p.alpha_time;
  b.own = block(UserDistanceLaw::own_cluster(b.r_mm, p.r_c), b.lambda_u, p, n, mode);
  b.cross = block(UserDistanceLaw::cross_cluster(b.r_mm, p.d_nm, p.r_c), b.lambda_u, p, n, mode);
  const double w_own = b.alpha * b.q.q_mh + (1.0 - b.alpha) * b.q.q_nh;
  const double w_cross = b.alpha * b.q.q_nl + (1.0 - b.alpha) * b.q.q_ml;
  b.p_given_cm = b.q.q_mh * b.own.total() + b.q.q_nl * b.cross.total();
  b.p_given_cn = b.q.q_nh * b.own.total() + b.q.q_ml * b.cross.total();
  b.p_uav_los = w_own * b.own.uav_los + w_cross * b.cross.uav_los;
  b.p_uav_nlos = w_own * b.own.uav_nlos + w_cross * b.cross.uav_nlos;
  b.p_tbs = w_own * b.own.tbs + w_cross * b.cross.tbs;
  b.truncation_tail = w_own * b.own.truncation_tail + w_cross * b.cross.truncation_tail;
  finish(b);
  return b;
}

CoverageBreakdown coverage_scenario2(const ValidatedParams& vp, const NumericsConfig& n,
                                     double lambda_u2, CoverageMode mode) {
  const SystemParams& p = vp.get();
  if (!(lambda_u2 >= 0.0)) throw InvalidArgument("scenario 2 UAV density must be >= 0");
  CoverageBreakdown b;
  b.scenario = Scenario::kTwo;
  b.mode = mode;
  b.lambda_u = lambda_u2;
  b.r_mm = mean_rmm(p.lambda_c, p.d_nm, inner_tol(n));
  b.q = mixing_weights(p);
  b.alpha = p.alpha_time;
  b.own = block(UserDistanceLaw::own_cluster(b.r_mm, p.r_c), lambda_u2, p, n, mode);
  b.p_given_cm = b.own.total();
  b.p_given_cn = b.own.total();
  b.p_uav_los = b.own.uav_los;
  b.p_uav_nlos = b.own.uav_nlos;
  b.p_tbs = b.own.tbs;
  b.truncation_tail = b.own.truncation_tail;
  finish(b);
  return b;
}

CoverageBreakdown coverage_scenario2(const ValidatedParams& vp, const NumericsConfig& n,
                                     CoverageMode mode) {
  const SystemParams& p = vp.get();
  return coverage_scenario2(vp, n, uav_density_s2(p.lambda_user, p.lambda_c, p.d_nm, n), mode);
}

CoverageBreakdown coverage(Scenario s, const ValidatedParams& p, const NumericsConfig& n,
                           CoverageMode mode) {
  return s == Scenario::kOne ? coverage_scenario1(p, n, mode) : coverage_scenario2(p, n, mode);
}

std::string coverage_csv_header() {
  return "scenario,mode,lambda_u,r_mm,own_uav_los,own_uav_nlos,own_tbs,cross_uav_los,"
         "cross_uav_nlos,cross_tbs,p_given_cm,p_given_cn,p_uav_los,p_uav_nlos,p_tbs,p_total,"
         "truncation_tail";
}

std::string to_csv_row(const CoverageBreakdown& b) {
  std::ostringstream os;
  os.precision(10);
  os << to_string(b.scenario) << ',' << to_string(b.mode) << ',' << b.lambda_u << ',' << b.r_mm
     << ',' << b.own.uav_los << ',' << b.own.uav_nlos << ',' << b.own.tbs << ','
     << b.cross.uav_los << ',' << b.cross.uav_nlos << ',' << b.cross.tbs << ',' << b.p_given_cm
     << ',' << b.p_given_cn << ',' << b.p_uav_los << ',' << b.p_uav_nlos << ',' << b.p_tbs << ','
     << b.p_total << ',' << b.truncation_tail;
  return os.str();
}

}  // namespace padnet
