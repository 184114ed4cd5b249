#pragma once

#include <algorithm>
#include <cmath>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "padnet/error.hpp"

namespace padnet::quad {

struct Tolerance {
  double rel = 1e-8;
  double abs = 1e-10;
  std::size_t max_intervals = 4000;
};

struct Result {
  double value = 0.0;
  double error = 0.0;
  bool converged = true;
};

namespace detail {

struct Interval {
  double a, b, value, error;
  bool operator<(const Interval& o) const { return error < o.error; }
};

// Mapped onto [-1, 1] by hand: Boost 1.74 returns the depth-0 error
// estimate without the (b - a) / 2 Jacobian.
template <class F>
Interval kronrod21(F& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  auto g = [&](double x) { return half * f(mid + half * x); };
  double err = 0.0;
  const double v =
      boost::math::quadrature::gauss_kronrod<double, 21>::integrate(g, -1.0, 1.0, 0, 0.0, &err);
  return {a, b, v, err};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (21-point rule), bisecting the interval
/// with the largest error estimate until the summed error is below
/// max(tol.abs, tol.rel * |I|). Breakpoints seed the initial partition and
/// should mark every known kink or support edge of the integrand.
template <class F>
Result integrate(F&& f, std::span<const double> breaks, const Tolerance& tol) {
  std::vector<double> pts(breaks.begin(), breaks.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  Result res;
  if (pts.size() < 2) return res;

  std::priority_queue<detail::Interval> heap;
  double total = 0.0;
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (!(pts[i + 1] > pts[i])) continue;
    auto iv = detail::kronrod21(f, pts[i], pts[i + 1]);
    total += iv.value;
    total_err += iv.error;
    heap.push(iv);
  }

  auto done = [&] { return total_err <= std::max(tol.abs, tol.rel * std::abs(total)); };
  std::size_t count = heap.size();
  while (!heap.empty() && !done() && count < tol.max_intervals) {
    const auto worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;  // interval exhausted
    heap.pop();
    const auto left = detail::kronrod21(f, worst.a, mid);
    const auto right = detail::kronrod21(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++count;
  }

  // Resum to shed the drift of the running updates.
  total = 0.0;
  total_err = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    total_err += heap.top().error;
    heap.pop();
  }
  res.value = total;
  res.error = total_err;
  res.converged = total_err <= std::max(tol.abs, tol.rel * std::abs(total));
  return res;
}

template <class F>
Result integrate(F&& f, double a, double b, const Tolerance& tol) {
  const double pts[2] = {a, b};
  return integrate(std::forward<F>(f), std::span<const double>(pts, 2), tol);
}

/// Throws NumericError when the adaptive scheme stalls more than a factor
/// of 100 above the requested tolerance.
inline double checked(const Result& r, const Tolerance& tol, const char* what) {
  if (!std::isfinite(r.value)) {
    throw NumericError(std::string(what) + ": quadrature produced a non-finite value");
  }
  const double target = std::max(tol.abs, tol.rel * std::abs(r.value));
  if (r.error > 100.0 * target) {
    throw NumericError(std::string(what) + ": quadrature did not converge (achieved error " +
                       std::to_string(r.error) + ", requested " + std::to_string(target) + ")");
  }
  return r.value;
}

template <class F>
double integrate_checked(F&& f, std::span<const double> breaks, const Tolerance& tol,
                         const char* what) {
  return checked(integrate(std::forward<F>(f), breaks, tol), tol, what);
}

template <class F>
double integrate_checked(F&& f, double a, double b, const Tolerance& tol, const char* what) {
  return checked(integrate(std::forward<F>(f), a, b, tol), tol, what);
}

/// Fixed 16-point Gauss-Legendre rule on [a, b].
template <class F>
double gauss_legendre16(F&& f, double a, double b) {
  return boost::math::quadrature::gauss<double, 16>::integrate(std::forward<F>(f), a, b);
}

}  // namespace padnet::quad
