#include "padnet/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>

#include "padnet/channel.hpp"
#include "padnet/error.hpp"
#include "padnet/geometry.hpp"
#include "padnet/parallel.hpp"
#include "padnet/random.hpp"
#include "padnet/travel.hpp"

namespace padnet {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Partition {
  std::size_t begin = 0;
  std::size_t count = 0;
};

Partition partition(std::size_t total, std::size_t k) {
  const std::size_t base = total / kPartitions;
  const std::size_t extra = total % kPartitions;
  return {k * base + std::min(k, extra), base + (k < extra ? 1 : 0)};
}

/// Uniform bucket grid over a square for nearest-pad queries.
class PadGrid {
 public:
  PadGrid(const std::vector<Point>& pads, double extent, double cell) : pads_(pads) {
    cell_ = std::max(cell, 2.0 * extent / 2048.0);
    origin_ = -extent;
    dim_ = std::max<long>(1, static_cast<long>(std::ceil(2.0 * extent / cell_)));
    start_.assign(static_cast<std::size_t>(dim_ * dim_) + 1, 0);
    std::vector<std::size_t> cell_of(pads_.size());
    for (std::size_t i = 0; i < pads_.size(); ++i) {
      cell_of[i] = index(cx(pads_[i].x), cx(pads_[i].y));
      ++start_[cell_of[i] + 1];
    }
    for (std::size_t c = 1; c < start_.size(); ++c) start_[c] += start_[c - 1];
    items_.resize(pads_.size());
    std::vector<std::size_t> fill(start_.begin(), start_.end() - 1);
    for (std::size_t i = 0; i < pads_.size(); ++i) items_[fill[cell_of[i]]++] = i;
  }

  /// Index of the nearest pad, or npos when the grid is empty.
  std::size_t nearest(const Point& q) const {
    std::size_t best = npos;
    double best_d2 = kInf;
    const long qx = cx(q.x);
    const long qy = cx(q.y);
    for (long ring = 0; ring <= dim_; ++ring) {
      if (best != npos) {
        const double reach = static_cast<double>(ring - 1) * cell_;
        if (reach > 0.0 && reach * reach > best_d2) break;
      }
      for (long ix = qx - ring; ix <= qx + ring; ++ix) {
        if (ix < 0 || ix >= dim_) continue;
        const bool edge_x = ix == qx - ring || ix == qx + ring;
        for (long iy = qy - ring; iy <= qy + ring; iy += (edge_x ? 1 : 2 * ring)) {
          if (iy >= 0 && iy < dim_) {
            const std::size_t c = index(ix, iy);
            for (std::size_t k = start_[c]; k < start_[c + 1]; ++k) {
              const Point& p = pads_[items_[k]];
              const double dx = p.x - q.x;
              const double dy = p.y - q.y;
              const double d2 = dx * dx + dy * dy;
              if (d2 < best_d2) {
                best_d2 = d2;
                best = items_[k];
              }
            }
          }
          if (ring == 0) break;
        }
      }
    }
    return best;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  long cx(double v) const {
    return std::clamp(static_cast<long>(std::floor((v - origin_) / cell_)), 0L, dim_ - 1);
  }
  std::size_t index(long ix, long iy) const { return static_cast<std::size_t>(ix * dim_ + iy); }

  const std::vector<Point>& pads_;
  double cell_ = 1.0;
  double origin_ = 0.0;
  long dim_ = 1;
  std::vector<std::size_t> start_;
  std::vector<std::size_t> items_;
};

/// Draws interference and SINR for one drop around the reference user.
class DropKernel {
 public:
  DropKernel(const SystemParams& p, double window)
      : p_(p),
        window_(window),
        fade_los_(p.fading_los(), 1.0 / p.fading_los()),
        fade_nlos_(p.fading_nlos(), 1.0 / p.fading_nlos()) {}

  double uav_power(double z, Rng& rng) {
    const bool los = uniform01(rng) < prob_los(z, p_);
    const double mean = mean_power_uav(std::hypot(z, p_.h), los, p_);
    return mean * (los ? fade_los_(rng) : fade_nlos_(rng));
  }

  /// Sum of UAV interference for a PPP(lambda_u) in the window.
  double uav_field(double lambda_u, Rng& rng) {
    if (!(lambda_u > 0.0)) return 0.0;
    std::poisson_distribution<long long> count(lambda_u * kPi * window_ * window_);
    const long long k = count(rng);
    double sum = 0.0;
    for (long long i = 0; i < k; ++i) sum += uav_power(window_ * std::sqrt(uniform01(rng)), rng);
    return sum;
  }

  /// Serving decision and SINR. `uav_interference` excludes the cluster UAV.
  DropResult evaluate(double z_serving, double uav_interference, Rng& rng) {
    const bool los = uniform01(rng) < prob_los(z_serving, p_);
    const double pu = mean_power_uav(std::hypot(z_serving, p_.h), los, p_);
    const auto tbs = sample_ppp_radii(p_.lambda_t, window_, rng);
    const double pt = tbs.empty() ? 0.0 : mean_power_tbs(tbs.front(), p_);
    const bool uav_served = pu >= pt;

    double interference = uav_interference;
    for (std::size_t i = uav_served ? 0 : 1; i < tbs.size(); ++i) {
      interference += mean_power_tbs(tbs[i], p_) * exp_(rng);
    }
    const double uav_signal = pu * (los ? fade_los_(rng) : fade_nlos_(rng));
    double signal = 0.0;
    if (uav_served) {
      signal = uav_signal;
    } else {
      signal = pt * exp_(rng);
      interference += uav_signal;
    }
    DropResult r;
    r.served_by = uav_served ? (los ? ServedBy::kUavLos : ServedBy::kUavNlos) : ServedBy::kTbs;
    r.sinr = signal / (interference + p_.sigma2);
    r.covered = r.sinr >= p_.gamma_thr;
    return r;
  }

 private:
  const SystemParams& p_;
  double window_;
  std::gamma_distribution<double> fade_los_;
  std::gamma_distribution<double> fade_nlos_;
  std::exponential_distribution<double> exp_{1.0};
};

/// Distance to the nearest pad of PPP(lambda_c), conditioned below d.
double sample_rmm(double lambda_c, double d, Rng& rng) {
  const double mass = -std::expm1(-kPi * lambda_c * d * d);
  const double r2 = -std::log1p(-uniform01(rng) * mass) / (kPi * lambda_c);
  return std::min(std::sqrt(r2), d);
}

Point polar(double r, double phi) { return {r * std::cos(phi), r * std::sin(phi)}; }

struct DropSetup {
  Scenario scenario;
  InterfererMode mode;
  double lambda_u;
  double alpha;
  MixingWeights q;
};

struct DropOutcome {
  DropResult result;
  bool own = true;
};

// The cluster hosting the serving UAV's pad sits at the origin.
DropOutcome run_drop(const DropSetup& setup, const SystemParams& p, double window,
                     DropKernel& kernel, Rng& rng) {
  const bool m_high = uniform01(rng) < setup.alpha;
  bool own = true;
  UserCluster tag = UserCluster::kXm;
  if (setup.scenario == Scenario::kOne) {
    own = uniform01(rng) < (m_high ? setup.q.q_mh : setup.q.q_nh);
    const bool in_m = m_high ? own : !own;
    tag = in_m ? UserCluster::kXm : UserCluster::kXn;
  } else {
    tag = uniform01(rng) < (m_high ? setup.q.q_mh : setup.q.q_ml) ? UserCluster::kXm
                                                                  : UserCluster::kXn;
  }
  const Point other = polar(p.d_nm, 2.0 * kPi * uniform01(rng));
  const Point user = sample_mcp_user(own ? Point{} : other, p.r_c, rng);

  Point pad;
  double interference = 0.0;
  if (setup.mode == InterfererMode::kAnalysisMatched) {
    pad = polar(sample_rmm(p.lambda_c, p.d_nm, rng), 2.0 * kPi * uniform01(rng));
    interference = kernel.uav_field(setup.lambda_u, rng);
  } else {
    const double pair_window = window + 2.0 * p.d_nm + p.r_c;
    const double extent = pair_window + p.d_nm + 6.0 / std::sqrt(kPi * p.lambda_c);
    std::vector<Point> pads;
    std::size_t serving = PadGrid::npos;
    for (int attempt = 0;; ++attempt) {
      if (attempt == 10000) throw NumericError("no pad within d_nm of the reference cluster");
      pads = sample_ppp(p.lambda_c, extent, rng);
      PadGrid probe(pads, extent, 1.0 / std::sqrt(p.lambda_c));
      serving = probe.nearest({});
      if (serving != PadGrid::npos && distance(pads[serving], {}) <= p.d_nm) break;
    }
    const PadGrid grid(pads, extent, 1.0 / std::sqrt(p.lambda_c));
    pad = pads[serving];
    auto add = [&](std::size_t idx) {
      const double z = distance(pads[idx], user);
      if (z <= window) interference += kernel.uav_power(z, rng);
    };
    if (setup.scenario == Scenario::kTwo) {
      const std::size_t partner = grid.nearest(other);
      if (partner != serving) add(partner);
    }
    for (const auto& [a, b] : sample_bipolar_pairs(p.lambda_user, p.d_nm, pair_window, rng)) {
      if (setup.scenario == Scenario::kOne) {
        add(grid.nearest(uniform01(rng) < setup.alpha ? a : b));
      } else {
        const std::size_t ia = grid.nearest(a);
        const std::size_t ib = grid.nearest(b);
        add(ia);
        if (ib != ia) add(ib);
      }
    }
  }
  DropOutcome out;
  out.result = kernel.evaluate(distance(pad, user), interference, rng);
  out.result.user_cluster = tag;
  out.own = own;
  return out;
}

}  // namespace

const char* to_string(InterfererMode m) {
  return m == InterfererMode::kAnalysisMatched ? "analysis_matched" : "pair_consistent";
}

const char* to_string(ServedBy s) {
  switch (s) {
    case ServedBy::kUavLos:
      return "UAV_LoS";
    case ServedBy::kUavNlos:
      return "UAV_NLoS";
    case ServedBy::kTbs:
      return "TBS";
  }
  return "?";
}

const char* to_string(UserCluster c) { return c == UserCluster::kXm ? "x_m" : "x_n"; }

Proportion wilson_interval(std::size_t successes, std::size_t n, double z) {
  if (n == 0) return {0.0, 0.0, 1.0};
  const double nn = static_cast<double>(n);
  const double ph = static_cast<double>(successes) / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double center = (ph + z2 / (2.0 * nn)) / denom;
  const double half = z * std::sqrt(ph * (1.0 - ph) / nn + z2 / (4.0 * nn * nn)) / denom;
  const double lo = successes == 0 ? 0.0 : std::max(0.0, center - half);
  const double hi = successes == n ? 1.0 : std::min(1.0, center + half);
  return {ph, lo, hi};
}

std::size_t CoverageEstimate::covered_count() const {
  std::size_t c = 0;
  for (const auto& row : covered)
    for (std::size_t v : row) c += v;
  return c;
}

Proportion CoverageEstimate::p_total() const { return wilson_interval(covered_count(), drops); }

Proportion CoverageEstimate::p_component(ServedBy s) const {
  const auto i = static_cast<std::size_t>(s);
  return wilson_interval(covered[0][i] + covered[1][i], drops);
}

Proportion CoverageEstimate::p_own() const {
  std::size_t c = 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    c += covered[0][i];
    n += served[0][i];
  }
  return wilson_interval(c, n);
}

Proportion CoverageEstimate::p_cross() const {
  std::size_t c = 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    c += covered[1][i];
    n += served[1][i];
  }
  return wilson_interval(c, n);
}

CoverageEstimate simulate_coverage(Scenario s, const ValidatedParams& vp, const NumericsConfig& n,
                                   const SimulationOptions& opt) {
  if (opt.n_drops < 1) throw InvalidArgument("simulate_coverage needs at least one drop");
  const SystemParams& p = vp.get();
  DropSetup setup{s, opt.mode, 0.0, p.alpha_time, mixing_weights(p)};
  if (opt.lambda_u) {
    setup.lambda_u = *opt.lambda_u;
  } else if (s == Scenario::kOne) {
    setup.lambda_u = p.lambda_user;
  } else {
    setup.lambda_u = uav_density_s2(p.lambda_user, p.lambda_c, p.d_nm, n);
  }

  struct Tally {
    std::array<std::array<std::size_t, 3>, 2> served{};
    std::array<std::array<std::size_t, 3>, 2> covered{};
    std::vector<DropResult> log;
  };
  std::vector<Tally> tallies(kPartitions);
  const double window = n.mc_window_radius;
  parallel_for(kPartitions, [&](std::size_t k) {
    const Partition part = partition(opt.n_drops, k);
    Rng rng(derive_seed(opt.seed, k));
    DropKernel kernel(p, window);
    Tally& t = tallies[k];
    if (opt.drop_log) t.log.reserve(part.count);
    for (std::size_t i = 0; i < part.count; ++i) {
      const DropOutcome d = run_drop(setup, p, window, kernel, rng);
      const auto si = static_cast<std::size_t>(d.result.served_by);
      ++t.served[d.own ? 0 : 1][si];
      if (d.result.covered) ++t.covered[d.own ? 0 : 1][si];
      if (opt.drop_log) t.log.push_back(d.result);
    }
  });

  CoverageEstimate e;
  e.scenario = s;
  e.mode = opt.mode;
  e.drops = opt.n_drops;
  e.seed = opt.seed;
  e.workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), kPartitions));
  e.lambda_u = setup.lambda_u;
  for (const Tally& t : tallies) {
    for (std::size_t a = 0; a < 2; ++a) {
      for (std::size_t b = 0; b < 3; ++b) {
        e.served[a][b] += t.served[a][b];
        e.covered[a][b] += t.covered[a][b];
      }
    }
  }
  if (opt.drop_log) {
    std::ostream& os = *opt.drop_log;
    os << "drop_id,served_by,sinr_db,covered,user_cluster\n";
    char buf[128];
    for (std::size_t k = 0; k < kPartitions; ++k) {
      const std::size_t base = partition(opt.n_drops, k).begin;
      for (std::size_t i = 0; i < tallies[k].log.size(); ++i) {
        const DropResult& r = tallies[k].log[i];
        std::snprintf(buf, sizeof buf, "%zu,%s,%.6f,%d,%s\n", base + i, to_string(r.served_by),
                      10.0 * std::log10(r.sinr), r.covered ? 1 : 0, to_string(r.user_cluster));
        os << buf;
      }
    }
    if (!os) throw IoError("failed to write the drop log");
  }
  return e;
}

std::string mc_csv_header() {
  return "scenario,interferer_mode,drops,seed,lambda_u,p_uav_los,p_uav_nlos,p_tbs,p_total,ci_lo,"
         "ci_hi,p_own,p_cross";
}

std::string to_csv_row(const CoverageEstimate& e) {
  const Proportion total = e.p_total();
  char buf[512];
  std::snprintf(buf, sizeof buf, "%s,%s,%zu,%llu,%.10g,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f",
                to_string(e.scenario), to_string(e.mode), e.drops,
                static_cast<unsigned long long>(e.seed), e.lambda_u,
                e.p_component(ServedBy::kUavLos).estimate,
                e.p_component(ServedBy::kUavNlos).estimate, e.p_component(ServedBy::kTbs).estimate,
                total.estimate, total.lo, total.hi, e.p_own().estimate, e.p_cross().estimate);
  return buf;
}

std::vector<FunctionalEstimate> simulate_interference_functional(
    std::span<const double> s, double tbs_exclusion, double lambda_u, const SystemParams& p,
    const NumericsConfig& n, std::size_t n_fields, std::uint64_t seed) {
  if (n_fields < 1) throw InvalidArgument("simulate_interference_functional needs n_fields >= 1");
  const double window = n.mc_window_radius;
  const double t = std::max(0.0, tbs_exclusion);
  struct Sums {
    std::vector<double> sum, sum2;
  };
  std::vector<Sums> parts(kPartitions);
  parallel_for(kPartitions, [&](std::size_t k) {
    const Partition part = partition(n_fields, k);
    Rng rng(derive_seed(seed, k));
    DropKernel kernel(p, window);
    std::exponential_distribution<double> expo(1.0);
    Sums& acc = parts[k];
    acc.sum.assign(s.size(), 0.0);
    acc.sum2.assign(s.size(), 0.0);
    for (std::size_t i = 0; i < part.count; ++i) {
      double interference = kernel.uav_field(lambda_u, rng);
      if (p.lambda_t > 0.0 && t < window) {
        std::poisson_distribution<long long> count(p.lambda_t * kPi * (window * window - t * t));
        const long long m = count(rng);
        for (long long j = 0; j < m; ++j) {
          const double r = std::sqrt(t * t + uniform01(rng) * (window * window - t * t));
          interference += mean_power_tbs(r, p) * expo(rng);
        }
      }
      for (std::size_t j = 0; j < s.size(); ++j) {
        const double v = std::exp(-s[j] * interference);
        acc.sum[j] += v;
        acc.sum2[j] += v * v;
      }
    }
  });
  std::vector<FunctionalEstimate> out(s.size());
  const double nn = static_cast<double>(n_fields);
  for (std::size_t j = 0; j < s.size(); ++j) {
    double sum = 0.0;
    double sum2 = 0.0;
    for (const Sums& acc : parts) {
      sum += acc.sum[j];
      sum2 += acc.sum2[j];
    }
    const double mean = sum / nn;
    const double var = n_fields > 1 ? std::max(0.0, (sum2 - nn * mean * mean) / (nn - 1.0)) : 0.0;
    out[j] = {s[j], mean, std::sqrt(var / nn)};
  }
  return out;
}

EnergyEstimate simulate_energy(Scenario s, const ValidatedParams& vp, const NumericsConfig& n,
                               std::size_t n_drops, std::uint64_t seed,
                               std::optional<double> lambda_u, std::size_t l_samples) {
  const SystemParams& p = vp.get();
  EnergyEstimate est;
  Rng rng(derive_seed(seed, 0x4c53414d504c45ULL));
  const EmpiricalDistribution l =
      sample_l_unconditioned(p.lambda_c, p.d_nm, std::max<std::size_t>(1, l_samples), rng);
  est.l_samples = l.count();
  est.prob_shared_pad = l.cdf(0.0);

  SimulationOptions opt;
  opt.n_drops = n_drops;
  opt.seed = seed;
  if (lambda_u) {
    opt.lambda_u = lambda_u;
  } else {
    opt.lambda_u = s == Scenario::kOne ? p.lambda_user
                                       : p.lambda_user * (2.0 - est.prob_shared_pad);
  }
  est.coverage = simulate_coverage(s, vp, n, opt);
  const double p_uav = est.coverage.p_component(ServedBy::kUavLos).estimate +
                       est.coverage.p_component(ServedBy::kUavNlos).estimate;
  const double p_tbs = est.coverage.p_component(ServedBy::kTbs).estimate;
  est.report = make_energy_report(s, p, *opt.lambda_u, p_uav, p_tbs, l.mean());
  if (s == Scenario::kOne) {
    // EE_1 is an expectation over L; the effective power is the harmonic mean.
    double inv = 0.0;
    for (double li : l.samples()) {
      inv += 1.0 / total_power_s1(*opt.lambda_u, p.n_t, li, p.v, p.p_m, p.p_s, p.lambda_t,
                                  p.p_tbs);
    }
    est.report.p_tot = static_cast<double>(l.count()) / inv;
    est.report.ee = est.report.se / est.report.p_tot;
  }
  return est;
}

}  // namespace padnet
