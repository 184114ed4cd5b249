#include "padnet/padnet.h"

#include <exception>
#include <string>

#include "padnet/analysis.hpp"
#include "padnet/energy.hpp"
#include "padnet/error.hpp"
#include "padnet/experiments.hpp"
#include "padnet/montecarlo.hpp"
#include "padnet/params.hpp"
#include "padnet/travel.hpp"

struct padnet_config {
  padnet::ModelConfig model;
};

namespace {

thread_local std::string last_error;

padnet_status fail(padnet_status s, const char* what) {
  last_error = what;
  return s;
}

template <class F>
padnet_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return PADNET_OK;
  } catch (const padnet::Error& e) {
    return fail(static_cast<padnet_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PADNET_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PADNET_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PADNET_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw padnet::InvalidArgument(std::string(what) + " must not be null");
}

padnet::Scenario to_scenario(padnet_scenario s) {
  if (s == PADNET_SCENARIO_ONE) return padnet::Scenario::kOne;
  if (s == PADNET_SCENARIO_TWO) return padnet::Scenario::kTwo;
  throw padnet::InvalidArgument("scenario must be 1 or 2");
}

}  // namespace

extern "C" {

const char* padnet_version(void) { return PADNET_VERSION; }

const char* padnet_last_error(void) { return last_error.c_str(); }

padnet_status padnet_config_default(padnet_config** out) {
  return guarded([&] {
    require(out, "out");
    *out = new padnet_config{};
  });
}

padnet_status padnet_config_load(const char* path, padnet_config** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new padnet_config{padnet::load_config(path)};
  });
}

padnet_status padnet_config_parse(const char* text, padnet_config** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new padnet_config{padnet::parse_config(text)};
  });
}

void padnet_config_free(padnet_config* config) { delete config; }

padnet_status padnet_config_set(padnet_config* config, const char* key, double value) {
  return guarded([&] {
    require(config, "config");
    require(key, "key");
    config->model = padnet::with_value(config->model, key, value);
  });
}

padnet_status padnet_config_get(const padnet_config* config, const char* key, double* out) {
  return guarded([&] {
    require(config, "config");
    require(key, "key");
    require(out, "out");
    *out = padnet::get_value(config->model, key);
  });
}

padnet_status padnet_coverage_analytic(const padnet_config* config, padnet_scenario scenario,
                                       padnet_mode mode, padnet_coverage* out) {
  return guarded([&] {
    require(config, "config");
    require(out, "out");
    const auto m = mode == PADNET_MODE_UPPER_BOUND ? padnet::CoverageMode::kUpperBound
                                                   : padnet::CoverageMode::kExact;
    const auto c = padnet::coverage(to_scenario(scenario), config->model.system,
                                    config->model.numerics, m);
    *out = {c.p_uav_los, c.p_uav_nlos, c.p_tbs, c.p_total, c.lambda_u, c.truncation_tail};
  });
}

padnet_status padnet_energy_efficiency(const padnet_config* config, padnet_scenario scenario,
                                       padnet_energy* out) {
  return guarded([&] {
    require(config, "config");
    require(out, "out");
    const auto r = padnet::energy_efficiency(to_scenario(scenario), config->model.system,
                                             config->model.numerics);
    *out = {r.se, r.p_tot, r.ee, r.lambda_u, r.mean_l, r.travel_fraction};
  });
}

padnet_status padnet_simulate_coverage(const padnet_config* config, padnet_scenario scenario,
                                       padnet_interferers interferers, uint64_t drops,
                                       uint64_t seed, padnet_sim_coverage* out) {
  return guarded([&] {
    require(config, "config");
    require(out, "out");
    padnet::SimulationOptions opt;
    opt.n_drops = drops;
    opt.seed = seed;
    opt.mode = interferers == PADNET_INTERFERERS_PAIR_CONSISTENT
                   ? padnet::InterfererMode::kPairConsistent
                   : padnet::InterfererMode::kAnalysisMatched;
    const auto e = padnet::simulate_coverage(to_scenario(scenario), config->model.system,
                                             config->model.numerics, opt);
    const auto total = e.p_total();
    *out = {total.estimate,
            total.lo,
            total.hi,
            e.p_component(padnet::ServedBy::kUavLos).estimate,
            e.p_component(padnet::ServedBy::kUavNlos).estimate,
            e.p_component(padnet::ServedBy::kTbs).estimate,
            e.lambda_u,
            e.drops};
  });
}

padnet_status padnet_travel_cdf(const padnet_config* config, double r_mm, double theta_1,
                                double l, double* out) {
  return guarded([&] {
    require(config, "config");
    require(out, "out");
    const auto& p = config->model.system.get();
    const auto& n = config->model.numerics;
    *out = padnet::cdf_l(l, padnet::make_geometry(r_mm, theta_1, p.d_nm), p.lambda_c,
                         {n.quad_rel_tol, n.quad_abs_tol});
  });
}

padnet_status padnet_mean_travel_distance(const padnet_config* config, double* out) {
  return guarded([&] {
    require(config, "config");
    require(out, "out");
    const auto& p = config->model.system.get();
    *out = padnet::mean_l(p.lambda_c, p.d_nm, config->model.numerics);
  });
}

padnet_status padnet_uav_density_s2(const padnet_config* config, double* out) {
  return guarded([&] {
    require(config, "config");
    require(out, "out");
    const auto& p = config->model.system.get();
    *out = padnet::uav_density_s2(p.lambda_user, p.lambda_c, p.d_nm, config->model.numerics);
  });
}

const char* padnet_experiment_table(void) {
  static const std::string table = padnet::format_experiment_list();
  return table.c_str();
}

size_t padnet_experiment_count(void) { return padnet::experiment_recipes().size(); }

const char* padnet_experiment_name(size_t index) {
  const auto& r = padnet::experiment_recipes();
  return index < r.size() ? r[index].name.c_str() : nullptr;
}

padnet_status padnet_run_experiment(const padnet_config* config, const char* name,
                                    const padnet_run_options* options,
                                    padnet_run_result* result) {
  return guarded([&] {
    require(config, "config");
    require(name, "name");
    padnet::ExperimentSpec spec = padnet::find_experiment(name);
    padnet::RunOptions run;
    if (options != nullptr) {
      if (options->out_dir != nullptr) run.out_dir = options->out_dir;
      if (options->drops >= 0) run.drops = static_cast<std::size_t>(options->drops);
      if (options->has_seed) run.seed = options->seed;
      if (options->sweep_key != nullptr) {
        if (spec.name != "custom_sweep") {
          throw padnet::ConfigError("a sweep key is only accepted by custom_sweep");
        }
        spec.swept_key = options->sweep_key;
        if (options->sweep_count > 0) require(options->sweep_values, "sweep_values");
        spec.grid.assign(options->sweep_values, options->sweep_values + options->sweep_count);
      }
    }
    const auto summary = padnet::run_experiment(spec, config->model, run);
    if (result != nullptr) *result = {summary.rows, summary.wall_time_s};
  });
}

}  // extern "C"
