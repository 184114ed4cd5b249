#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "padnet/params.hpp"

namespace padnet {

struct ExperimentSpec {
  std::string name;
  std::string figure;
  std::string description;
  std::string swept_key;
  std::vector<double> grid;
  std::vector<std::pair<std::string, double>> overrides;
  std::size_t n_drops = 10000;
};

/// The five figure recipes followed by custom_sweep (empty key and grid).
const std::vector<ExperimentSpec>& experiment_recipes();

/// Throws ConfigError for an unknown name.
ExperimentSpec find_experiment(std::string_view name);

/// Throws ConfigError unless the key is sweepable for this recipe and the
/// grid is nonempty and strictly increasing.
void validate(const ExperimentSpec& spec);

/// Fixed-width table of the recipes.
std::string format_experiment_list();

struct RunOptions {
  std::filesystem::path out_dir = ".";
  std::optional<std::size_t> drops;
  std::optional<std::uint64_t> seed;
};

struct RunSummary {
  std::filesystem::path csv;
  std::filesystem::path manifest;
  std::size_t rows = 0;
  double wall_time_s = 0.0;
};

/// Evaluates every grid point and writes `<name>.csv` and
/// `<name>.manifest.json` into out_dir. On failure the completed rows are
/// kept in `<name>_partial.csv` and the error is rethrown.
RunSummary run_experiment(const ExperimentSpec& spec, const ModelConfig& config,
                          const RunOptions& options);

std::uint64_t fnv1a64(std::string_view text);

}  // namespace padnet
