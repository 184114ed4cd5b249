#include "padnet/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

#include "padnet/error.hpp"

namespace padnet {

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> samples)
    : samples_(std::move(samples)) {
  std::sort(samples_.begin(), samples_.end());
}

double EmpiricalDistribution::cdf(double x) const {
  if (samples_.empty()) return 0.0;
  const auto it = std::upper_bound(samples_.begin(), samples_.end(), x);
  return static_cast<double>(it - samples_.begin()) / static_cast<double>(samples_.size());
}

double EmpiricalDistribution::mean() const {
  if (samples_.empty()) return 0.0;
  return std::accumulate(samples_.begin(), samples_.end(), 0.0) /
         static_cast<double>(samples_.size());
}

double EmpiricalDistribution::quantile(double p) const {
  if (samples_.empty()) return 0.0;
  const double pos = std::clamp(p, 0.0, 1.0) * static_cast<double>(samples_.size() - 1);
  const auto i = static_cast<std::size_t>(pos);
  if (i + 1 >= samples_.size()) return samples_.back();
  const double frac = pos - static_cast<double>(i);
  return samples_[i] + frac * (samples_[i + 1] - samples_[i]);
}

double EmpiricalDistribution::ks_distance(const std::function<double(double)>& reference) const {
  const double n = static_cast<double>(samples_.size());
  double sup = 0.0;
  std::size_t i = 0;
  while (i < samples_.size()) {
    const double x = samples_[i];
    std::size_t j = i;
    while (j < samples_.size() && samples_[j] == x) ++j;
    const double below = static_cast<double>(i) / n;
    const double at = static_cast<double>(j) / n;
    const double eps = 1e-9 * (1.0 + std::abs(x));
    sup = std::max(sup, std::abs(at - reference(x)));
    sup = std::max(sup, std::abs(below - reference(x - eps)));
    i = j;
  }
  return sup;
}

void EmpiricalDistribution::write_csv(const std::filesystem::path& path,
                                      const std::string& value_column) const {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << value_column << ",cdf\n";
  out.precision(10);
  const double n = static_cast<double>(samples_.size());
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (i + 1 < samples_.size() && samples_[i + 1] == samples_[i]) continue;
    out << samples_[i] << ',' << static_cast<double>(i + 1) / n << '\n';
  }
  if (!out) throw IoError("write failed for " + path.string());
}

double ks_distance(const EmpiricalDistribution& a, const EmpiricalDistribution& b) {
  const auto& x = a.samples();
  const auto& y = b.samples();
  const double nx = static_cast<double>(x.size());
  const double ny = static_cast<double>(y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double sup = 0.0;
  while (i < x.size() && j < y.size()) {
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] == v) ++i;
    while (j < y.size() && y[j] == v) ++j;
    sup = std::max(sup, std::abs(static_cast<double>(i) / nx - static_cast<double>(j) / ny));
  }
  return sup;
}

double kolmogorov_survival(double x) {
  if (x <= 0.0) return 1.0;
  if (x < 0.2) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * x * x);
    sum += (k % 2 == 1 ? 2.0 : -2.0) * term;
    if (term < 1e-16) break;
  }
  return std::clamp(sum, 0.0, 1.0);
}

double ks_pvalue(double d, std::size_t n) {
  const double sn = std::sqrt(static_cast<double>(n));
  return kolmogorov_survival((sn + 0.12 + 0.11 / sn) * d);
}

}  // namespace padnet
