#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "padnet/params.hpp"

namespace padnet {

enum class Scenario { kOne = 1, kTwo = 2 };

/// kExact evaluates the finite Gamma-CCDF sum with derivatives of the
/// Laplace transform; kUpperBound uses the alternating binomial sum of
/// transform values.
enum class CoverageMode { kExact, kUpperBound };

const char* to_string(Scenario s);
const char* to_string(CoverageMode m);

struct MixingWeights {
  double q_mh = 0.5;
  double q_nl = 0.5;
  double q_ml = 0.5;
  double q_nh = 0.5;
};

MixingWeights mixing_weights(const SystemParams& p);

/// A transform value together with the estimated exponent mass lost by
/// truncating the interference integrals at the truncation radius.
struct LaplaceValue {
  double value = 1.0;
  double truncation_tail = 0.0;
};

/// E[exp(-s I)] for a UAV-served user: homogeneous UAV field of density
/// lambda_u plus TBSs beyond `tbs_exclusion`. `with_noise` multiplies by
/// exp(-s sigma^2).
LaplaceValue laplace_uav_field(double s, double tbs_exclusion, double lambda_u,
                               const SystemParams& p, const NumericsConfig& n,
                               bool with_noise = false);

/// (-s)^k d^k/ds^k of the noise-inclusive transform for k = 0..order,
/// computed from closed-form derivatives of the interference exponent.
std::vector<double> laplace_uav_field_derivatives(double s, double tbs_exclusion, double lambda_u,
                                                  const SystemParams& p, const NumericsConfig& n,
                                                  int order);

/// E[exp(-s I)] for a user served by the TBS at distance r, with the cluster
/// UAV at horizontal distance r_u interfering through a LoS or NLoS link.
LaplaceValue laplace_given_tbs_serving(double s, double r, double r_u, bool los,
                                       double lambda_u, const SystemParams& p,
                                       const NumericsConfig& n, bool with_noise = false);

/// Scaled derivatives s^k d^k/ds^k of a function by central differences
/// with one Richardson step. `gap` is the relative disagreement between
/// the two step sizes.
struct FdDerivative {
  double value = 0.0;
  double gap = 0.0;
};
FdDerivative fd_derivative(const std::function<double(double)>& f, double s, int order,
                           double rel_step);

/// Gamma(m, 1/m) tail P(G > x) as the finite sum e^{-mx} sum (mx)^k / k!.
double gamma_ccdf(int m, double x);

/// Horizontal distance law between the serving UAV and the reference user.
class UserDistanceLaw {
 public:
  /// UAV at horizontal offset `offset` from the user's cluster center.
  static UserDistanceLaw own_cluster(double offset, double r_c);
  /// UAV at the pad nearest to the other cluster center, offset r_mm from
  /// it, with the pad bearing uniform on [0, pi].
  static UserDistanceLaw cross_cluster(double r_mm, double d_nm, double r_c);

  double pdf(double z) const;
  double support_min() const { return lo_; }
  double support_max() const { return hi_; }
  const std::vector<double>& breaks() const { return breaks_; }

 private:
  bool mixture_ = false;
  double offset_ = 0.0;
  double r_mm_ = 0.0;
  double d_nm_ = 0.0;
  double r_c_ = 0.0;
  double lo_ = 0.0;
  double hi_ = 0.0;
  std::vector<double> breaks_;
};

/// `truncation_tail` in the coverage types estimates the coverage the
/// truncated interference integrals overstate relative to an infinite plane.
struct UavTerm {
  double los = 0.0;
  double nlos = 0.0;
  double truncation_tail = 0.0;
};

/// Coverage jointly with association to the cluster UAV.
UavTerm cov_uav_term(const UserDistanceLaw& law, double lambda_u, const SystemParams& p,
                     const NumericsConfig& n, CoverageMode mode = CoverageMode::kExact);
UavTerm cov_uav_term(double center_offset, double lambda_u, const SystemParams& p,
                     const NumericsConfig& n, CoverageMode mode = CoverageMode::kExact);

/// Coverage jointly with association to the nearest TBS.
double cov_tbs_term(const UserDistanceLaw& law, double lambda_u, const SystemParams& p,
                    const NumericsConfig& n, double* truncation_tail = nullptr);
double cov_tbs_term(double center_offset, double lambda_u, const SystemParams& p,
                    const NumericsConfig& n, double* truncation_tail = nullptr);

struct CoverageBlock {
  double uav_los = 0.0;
  double uav_nlos = 0.0;
  double tbs = 0.0;
  double truncation_tail = 0.0;
  double total() const { return uav_los + uav_nlos + tbs; }
};

struct CoverageBreakdown {
  Scenario scenario = Scenario::kOne;
  CoverageMode mode = CoverageMode::kExact;
  double lambda_u = 0.0;  // density of the UAV interference field
  double r_mm = 0.0;      // plug-in pad offset E[R_mm]
  MixingWeights q;
  double alpha = 1.0;
  CoverageBlock own;    // user in the cluster whose nearest pad hosts the UAV
  CoverageBlock cross;  // user in the other cluster (scenario 1 only)
  double p_given_cm = 0.0;
  double p_given_cn = 0.0;
  double p_uav_los = 0.0;
  double p_uav_nlos = 0.0;
  double p_tbs = 0.0;
  double p_total = 0.0;
  double truncation_tail = 0.0;
};

CoverageBreakdown coverage_scenario1(const ValidatedParams& p, const NumericsConfig& n,
                                     CoverageMode mode = CoverageMode::kExact);
CoverageBreakdown coverage_scenario2(const ValidatedParams& p, const NumericsConfig& n,
                                     CoverageMode mode = CoverageMode::kExact);
/// Scenario 2 with an explicit UAV density instead of the derived one.
CoverageBreakdown coverage_scenario2(const ValidatedParams& p, const NumericsConfig& n,
                                     double lambda_u2, CoverageMode mode = CoverageMode::kExact);
CoverageBreakdown coverage(Scenario s, const ValidatedParams& p, const NumericsConfig& n,
                           CoverageMode mode = CoverageMode::kExact);

/// Column order: scenario,mode,lambda_u,r_mm,own_uav_los,own_uav_nlos,
/// own_tbs,cross_uav_los,cross_uav_nlos,cross_tbs,p_given_cm,p_given_cn,
/// p_uav_los,p_uav_nlos,p_tbs,p_total,truncation_tail
std::string coverage_csv_header();
std::string to_csv_row(const CoverageBreakdown& b);

}  // namespace padnet
