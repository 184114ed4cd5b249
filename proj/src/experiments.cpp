#include "padnet/experiments.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/version.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "padnet/analysis.hpp"
#include "padnet/energy.hpp"
#include "padnet/error.hpp"
#include "padnet/montecarlo.hpp"
#include "padnet/parallel.hpp"
#include "padnet/random.hpp"
#include "padnet/travel.hpp"

#ifndef PADNET_VERSION
#define PADNET_VERSION "unknown"
#endif

namespace padnet {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr const char* kTravelKey = "l";

std::vector<double> log_grid(double lo, double hi, int points) {
  std::vector<double> g;
  for (int i = 0; i < points; ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", lo * std::pow(hi / lo, static_cast<double>(i) / (points - 1)));
    g.push_back(std::strtod(buf, nullptr));
  }
  return g;
}

std::vector<double> linear_grid(double lo, double hi, double step) {
  std::vector<double> g;
  for (double x = lo; x <= hi + 0.5 * step; x += step) g.push_back(x);
  return g;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string join(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  return out;
}

double half_width(const Proportion& p) { return 0.5 * (p.hi - p.lo); }

/// Delta-method 95% half-width of a simulated EE from the multinomial
/// counts behind its UAV and TBS coverage shares.
double ee_half_width(const EnergyEstimate& e, const SystemParams& p) {
  const double n = static_cast<double>(e.coverage.drops);
  const double pu = e.report.p_cov_uav;
  const double pt = e.report.p_cov_tbs;
  const double a = e.report.lambda_u;
  const double b = p.lambda_t;
  const double var = (a * a * pu * (1.0 - pu) + b * b * pt * (1.0 - pt) - 2.0 * a * b * pu * pt) / n;
  const double scale = p.b_w * std::log2(1.0 + p.gamma_thr) / e.report.p_tot;
  return 1.959963984540054 * scale * std::sqrt(std::max(0.0, var));
}

enum class Kind { kTravel, kCoverage, kEnergy, kCustom };

Kind kind_of(const std::string& name) {
  if (name == "fig3_travel_cdf") return Kind::kTravel;
  if (name == "fig4_cov_vs_lambda_c" || name == "fig5_cov_vs_lambda_u") return Kind::kCoverage;
  if (name == "fig6_ee_vs_lambda_c" || name == "fig7_ee_vs_lambda_u") return Kind::kEnergy;
  return Kind::kCustom;
}

/// theta_1-averaged travel CDF at r_mm = E[R_mm], one distribution per
/// quadrature node.
class AveragedTravelCdf {
 public:
  AveragedTravelCdf(double lambda_c, double d_nm, const NumericsConfig& n)
      : lambda_c_(lambda_c), d_nm_(d_nm) {
    const quad::Tolerance tol{n.quad_rel_tol, n.quad_abs_tol};
    r_mm_ = mean_rmm(lambda_c, d_nm, tol);
    tol_ = tol;
  }

  double operator()(double l) {
    return boost::math::quadrature::gauss<double, 16>::integrate(
               [&](double theta) { return at(theta).cdf(l); }, 0.0, kPi) /
           kPi;
  }

 private:
  const TravelDistribution& at(double theta) {
    auto it = cache_.find(theta);
    if (it == cache_.end()) {
      it = cache_
               .emplace(theta, make_travel_distribution(make_geometry(r_mm_, theta, d_nm_),
                                                        lambda_c_, tol_, 256))
               .first;
    }
    return it->second;
  }

  double lambda_c_;
  double d_nm_;
  double r_mm_ = 0.0;
  quad::Tolerance tol_;
  std::map<double, TravelDistribution> cache_;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::optional<std::string>> rows;
  std::exception_ptr error;
  std::size_t failed_at = 0;
};

Table run_travel(const ExperimentSpec& spec, const ModelConfig& cfg, std::size_t drops,
                 std::uint64_t seed) {
  const SystemParams& p = cfg.system.get();
  const double ds[2] = {p.d_nm, 2.0 * p.d_nm};
  Table t;
  t.columns = {"swept_value"};
  for (double d : ds) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", d);
    t.columns.push_back(std::string("analytic_d") + buf);
    t.columns.push_back(std::string("sim_d") + buf);
  }
  t.rows.resize(spec.grid.size());
  std::vector<std::vector<double>> analytic(2);
  std::vector<EmpiricalDistribution> sims(2);
  try {
    parallel_for(2, [&](std::size_t k) {
      AveragedTravelCdf cdf(p.lambda_c, ds[k], cfg.numerics);
      for (double l : spec.grid) analytic[k].push_back(cdf(l));
      if (drops > 0) {
        Rng rng(derive_seed(seed, k));
        sims[k] = sample_l_unconditioned(p.lambda_c, ds[k], drops, rng);
      }
    });
  } catch (...) {
    t.error = std::current_exception();
    return t;
  }
  for (std::size_t i = 0; i < spec.grid.size(); ++i) {
    std::vector<std::string> cells{num(spec.grid[i])};
    for (std::size_t k = 0; k < 2; ++k) {
      cells.push_back(num(analytic[k][i]));
      cells.push_back(drops > 0 ? num(sims[k].cdf(spec.grid[i])) : "");
    }
    t.rows[i] = join(cells);
  }
  return t;
}

std::vector<std::string> point_row(Kind kind, double x, const ModelConfig& cfg, std::size_t drops,
                                   std::uint64_t seed) {
  const ValidatedParams& vp = cfg.system;
  const NumericsConfig& n = cfg.numerics;
  const SystemParams& p = vp.get();
  std::vector<std::string> cells{num(x)};
  const auto c1 = coverage_scenario1(vp, n);
  const auto c2 = coverage_scenario2(vp, n);
  SimulationOptions opt;
  opt.n_drops = drops;

  if (kind == Kind::kCoverage || kind == Kind::kCustom) {
    cells.push_back(num(c1.p_total));
    cells.push_back(num(c2.p_total));
    for (Scenario s : {Scenario::kOne, Scenario::kTwo}) {
      if (drops == 0) {
        cells.insert(cells.end(), {"", ""});
        continue;
      }
      opt.seed = derive_seed(seed, static_cast<std::uint64_t>(s));
      const auto e = simulate_coverage(s, vp, n, opt);
      cells.push_back(num(e.p_total().estimate));
      cells.push_back(num(half_width(e.p_total())));
    }
    if (kind == Kind::kCoverage) {
      cells.push_back(num(coverage_scenario1(vp, n, CoverageMode::kUpperBound).p_total));
      cells.push_back(num(coverage_scenario2(vp, n, CoverageMode::kUpperBound).p_total));
      cells.push_back(num(c2.lambda_u));
      cells.push_back(num(c1.truncation_tail));
      cells.push_back(num(c2.truncation_tail));
    } else {
      cells.push_back(num(energy_efficiency(c1, vp, n).ee));
      cells.push_back(num(energy_efficiency(c2, vp, n).ee));
    }
    return cells;
  }

  const auto e1 = energy_efficiency(c1, vp, n);
  const auto e2 = energy_efficiency(c2, vp, n);
  cells.push_back(num(e1.ee));
  cells.push_back(num(e2.ee));
  for (Scenario s : {Scenario::kOne, Scenario::kTwo}) {
    if (drops == 0) {
      cells.insert(cells.end(), {"", ""});
      continue;
    }
    const auto e = simulate_energy(s, vp, n, drops, derive_seed(seed, static_cast<std::uint64_t>(s)),
                                   std::nullopt, std::clamp<std::size_t>(drops, 2000, 20000));
    cells.push_back(num(e.report.ee));
    cells.push_back(num(ee_half_width(e, p)));
  }
  cells.push_back(num(c1.p_total));
  cells.push_back(num(c2.p_total));
  cells.push_back(num(e1.mean_l));
  cells.push_back(num(c2.lambda_u));
  return cells;
}

Table run_points(const ExperimentSpec& spec, const ModelConfig& cfg, std::size_t drops,
                 std::uint64_t seed) {
  const Kind kind = kind_of(spec.name);
  Table t;
  t.columns = {"swept_value", "analytic_s1", "analytic_s2", "sim_s1", "sim_s1_ci", "sim_s2",
               "sim_s2_ci"};
  if (kind == Kind::kCoverage) {
    t.columns.insert(t.columns.end(),
                     {"bound_s1", "bound_s2", "lambda_u2", "truncation_tail_s1",
                      "truncation_tail_s2"});
  } else if (kind == Kind::kEnergy) {
    t.columns.insert(t.columns.end(), {"coverage_s1", "coverage_s2", "mean_l", "lambda_u2"});
  } else {
    t.columns.insert(t.columns.end(), {"ee_s1", "ee_s2"});
  }
  t.rows.resize(spec.grid.size());
  std::vector<std::exception_ptr> errors(spec.grid.size());
  parallel_for(spec.grid.size(), [&](std::size_t i) {
    try {
      const ModelConfig point = with_value(cfg, spec.swept_key, spec.grid[i]);
      t.rows[i] = join(point_row(kind, spec.grid[i], point, drops, derive_seed(seed, i)));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  });
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (errors[i]) {
      t.error = errors[i];
      t.failed_at = i;
      break;
    }
  }
  return t;
}

void write_csv(const std::filesystem::path& path, const Table& t, std::size_t rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << join(t.columns) << '\n';
  for (std::size_t i = 0; i < rows; ++i) out << *t.rows[i] << '\n';
  out.flush();
  if (!out) throw IoError("failed to write " + path.string());
}

}  // namespace

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

const std::vector<ExperimentSpec>& experiment_recipes() {
  static const std::vector<ExperimentSpec> recipes = {
      {"fig3_travel_cdf", "Fig. 3",
       "CDF of the traveling distance L for d_nm and 2 d_nm, E[R_mm] approximation vs simulation",
       kTravelKey, linear_grid(0.0, 1500.0, 50.0), {{"lambda_c", 1e-5}}, 100000},
      {"fig4_cov_vs_lambda_c", "Fig. 4", "coverage probability vs charging pad density",
       "lambda_c", log_grid(1e-6, 1e-3, 10),
       {{"lambda_t", 1e-6}, {"lambda_user", 1e-5}, {"d_nm", 300.0}}, 10000},
      {"fig5_cov_vs_lambda_u", "Fig. 5", "coverage probability vs cluster pair density",
       "lambda_user", log_grid(1e-6, 1e-4, 9),
       {{"lambda_c", 1e-4}, {"lambda_t", 1e-6}, {"d_nm", 300.0}}, 10000},
      {"fig6_ee_vs_lambda_c", "Fig. 6", "energy efficiency vs charging pad density", "lambda_c",
       log_grid(1e-6, 1e-3, 10), {{"lambda_t", 1e-6}, {"lambda_user", 1e-5}, {"d_nm", 300.0}},
       10000},
      {"fig7_ee_vs_lambda_u", "Fig. 7", "energy efficiency vs cluster pair density",
       "lambda_user", log_grid(1e-6, 1e-4, 9),
       {{"lambda_c", 1e-4}, {"lambda_t", 1e-6}, {"d_nm", 300.0}}, 10000},
      {"custom_sweep", "-", "coverage and energy efficiency over a user-chosen key and grid", "",
       {}, {}, 10000},
  };
  return recipes;
}

ExperimentSpec find_experiment(std::string_view name) {
  for (const auto& r : experiment_recipes()) {
    if (r.name == name) return r;
  }
  throw ConfigError("unknown experiment '" + std::string(name) + "' (see `padnet list`)");
}

void validate(const ExperimentSpec& spec) {
  const bool travel = kind_of(spec.name) == Kind::kTravel;
  if (travel ? spec.swept_key != kTravelKey : !is_system_key(spec.swept_key)) {
    throw ConfigError("experiment '" + spec.name + "': '" + spec.swept_key +
                      "' is not a sweepable key");
  }
  if (spec.grid.empty()) throw ConfigError("experiment '" + spec.name + "': empty grid");
  for (std::size_t i = 1; i < spec.grid.size(); ++i) {
    if (!(spec.grid[i] > spec.grid[i - 1])) {
      throw ConfigError("experiment '" + spec.name + "': grid must be strictly increasing");
    }
  }
}

std::string format_experiment_list() {
  std::ostringstream os;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-22s %-7s %-12s %-7s %s\n", "name", "figure", "swept_key",
                "points", "description");
  os << buf;
  for (const auto& r : experiment_recipes()) {
    std::snprintf(buf, sizeof buf, "%-22s %-7s %-12s %-7zu %s\n", r.name.c_str(),
                  r.figure.c_str(), r.swept_key.empty() ? "(flag)" : r.swept_key.c_str(),
                  r.grid.size(), r.description.c_str());
    os << buf;
  }
  return os.str();
}

RunSummary run_experiment(const ExperimentSpec& spec, const ModelConfig& config,
                          const RunOptions& options) {
  validate(spec);
  const auto start = std::chrono::steady_clock::now();
  ModelConfig cfg = config;
  for (const auto& [key, value] : spec.overrides) cfg = with_value(cfg, key, value);
  const std::size_t drops = options.drops.value_or(spec.n_drops);
  const std::uint64_t seed = options.seed.value_or(cfg.numerics.master_seed);

  std::error_code ec;
  std::filesystem::create_directories(options.out_dir, ec);
  if (ec) throw IoError("cannot create " + options.out_dir.string() + ": " + ec.message());

  Table table = kind_of(spec.name) == Kind::kTravel ? run_travel(spec, cfg, drops, seed)
                                                     : run_points(spec, cfg, drops, seed);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  RunSummary summary;
  const bool ok = !table.error;
  summary.rows = ok ? table.rows.size() : table.failed_at;
  summary.csv = options.out_dir / (spec.name + (ok ? ".csv" : "_partial.csv"));
  summary.manifest = options.out_dir / (spec.name + ".manifest.json");
  summary.wall_time_s = wall;
  write_csv(summary.csv, table, summary.rows);

  const std::string config_text = format_config(cfg);
  nlohmann::ordered_json m;
  m["experiment"] = spec.name;
  m["figure"] = spec.figure;
  m["status"] = ok ? "ok" : "failed";
  if (!ok) {
    try {
      std::rethrow_exception(table.error);
    } catch (const std::exception& e) {
      m["error"] = e.what();
    }
  }
  m["csv"] = summary.csv.filename().string();
  m["rows"] = summary.rows;
  m["swept_key"] = spec.swept_key;
  m["grid"] = spec.grid;
  nlohmann::ordered_json ov = nlohmann::ordered_json::object();
  for (const auto& [key, value] : spec.overrides) ov[key] = value;
  m["overrides"] = ov;
  m["n_drops"] = drops;
  m["seed"] = seed;
  m["workers"] = worker_count();
  m["mc_partitions"] = kPartitions;
  m["config"] = config_text;
  char hash[32];
  std::snprintf(hash, sizeof hash, "%016llx",
                static_cast<unsigned long long>(fnv1a64(config_text)));
  m["config_hash_fnv1a64"] = hash;
  m["versions"] = {{"padnet", PADNET_VERSION},
                   {"compiler", __VERSION__},
                   {"boost", BOOST_LIB_VERSION}};
  m["wall_time_s"] = wall;
  {
    std::ofstream out(summary.manifest, std::ios::binary);
    if (!out) throw IoError("cannot open " + summary.manifest.string() + " for writing");
    out << m.dump(2) << '\n';
    if (!out) throw IoError("failed to write " + summary.manifest.string());
  }
  if (!ok) std::rethrow_exception(table.error);
  return summary;
}

}  // namespace padnet
