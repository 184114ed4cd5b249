#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace padnet {

/// Sorted-sample distribution produced by the simulation oracles.
class EmpiricalDistribution {
 public:
  EmpiricalDistribution() = default;
  explicit EmpiricalDistribution(std::vector<double> samples);

  const std::vector<double>& samples() const noexcept { return samples_; }
  std::size_t count() const noexcept { return samples_.size(); }
  bool empty() const noexcept { return samples_.empty(); }

  /// Fraction of samples <= x.
  double cdf(double x) const;
  double mean() const;
  double quantile(double p) const;

  /// sup_x |F_n(x) - F(x)| for a right-continuous reference CDF. Left limits
  /// at each sample are approximated one ulp-scaled step below.
  double ks_distance(const std::function<double(double)>& reference) const;

  /// Writes `l_m,cdf` rows, one per distinct sample value.
  void write_csv(const std::filesystem::path& path, const std::string& value_column = "l_m") const;

 private:
  std::vector<double> samples_;
};

double ks_distance(const EmpiricalDistribution& a, const EmpiricalDistribution& b);

/// Asymptotic Kolmogorov survival function P(K > x).
double kolmogorov_survival(double x);

/// One-sample KS p-value with the Stephens small-sample correction.
double ks_pvalue(double d, std::size_t n);

}  // namespace padnet
