#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "padnet/padnet.h"

namespace {

int exit_code(padnet_status s) {
  switch (s) {
    case PADNET_OK:
      return 0;
    case PADNET_ERR_CONFIG:
    case PADNET_ERR_INVALID_ARGUMENT:
      return 1;
    case PADNET_ERR_IO:
      return 3;
    default:
      return 2;
  }
}

int report(padnet_status s) {
  std::fprintf(stderr, "padnet: error: %s\n", padnet_last_error());
  return exit_code(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Charging-pad UAV network analysis and simulation"};
  app.set_version_flag("--version", std::string(padnet_version()));
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List the experiment recipes");

  std::string config_path;
  std::string experiment;
  std::optional<std::int64_t> drops;
  std::optional<std::uint64_t> seed;
  std::string out_dir = "results";
  std::string sweep_key;
  std::vector<double> sweep_values;
  auto* run = app.add_subcommand("run", "Run an experiment and write CSV plus a manifest");
  run->add_option("--config", config_path, "Config file (key = value)")
      ->required();
  run->add_option("--experiment", experiment, "Recipe name (see `padnet list`)")->required();
  run->add_option("--drops", drops, "Simulation drops per point (0: analytic only)")
      ->check(CLI::NonNegativeNumber);
  run->add_option("--seed", seed, "Master seed (default: master_seed from the config)");
  run->add_option("--out", out_dir, "Output directory")->capture_default_str();
  run->add_option("--sweep-key", sweep_key, "Swept key for custom_sweep");
  run->add_option("--sweep-values", sweep_values, "Grid for custom_sweep")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (*list) {
    std::fputs(padnet_experiment_table(), stdout);
    return 0;
  }

  padnet_config* config = nullptr;
  if (padnet_status s = padnet_config_load(config_path.c_str(), &config); s != PADNET_OK) {
    return report(s);
  }
  padnet_run_options opt{};
  opt.out_dir = out_dir.c_str();
  opt.drops = drops.value_or(-1);
  opt.has_seed = seed.has_value();
  opt.seed = seed.value_or(0);
  if (!sweep_key.empty()) {
    opt.sweep_key = sweep_key.c_str();
    opt.sweep_values = sweep_values.data();
    opt.sweep_count = sweep_values.size();
  }
  padnet_run_result result{};
  const padnet_status s = padnet_run_experiment(config, experiment.c_str(), &opt, &result);
  padnet_config_free(config);
  if (s != PADNET_OK) return report(s);
  std::printf("%s: %zu rows in %.1f s -> %s/%s.csv\n", experiment.c_str(), result.rows,
              result.wall_time_s, out_dir.c_str(), experiment.c_str());
  return 0;
}
