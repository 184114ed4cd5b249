#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "padnet/analysis.hpp"
#include "padnet/energy.hpp"
#include "padnet/params.hpp"

namespace padnet {

/// kAnalysisMatched draws interfering UAVs as a homogeneous PPP; kPairConsistent
/// places every other cluster pair's UAV at its actual nearest pad.
enum class InterfererMode { kAnalysisMatched, kPairConsistent };
enum class ServedBy { kUavLos = 0, kUavNlos = 1, kTbs = 2 };
enum class UserCluster { kXm, kXn };

const char* to_string(InterfererMode m);
const char* to_string(ServedBy s);
const char* to_string(UserCluster c);

struct DropResult {
  ServedBy served_by = ServedBy::kTbs;
  double sinr = 0.0;
  bool covered = false;
  UserCluster user_cluster = UserCluster::kXm;
};

struct Proportion {
  double estimate = 0.0;
  double lo = 0.0;
  double hi = 1.0;
};

/// 95% Wilson score interval by default.
Proportion wilson_interval(std::size_t successes, std::size_t n, double z = 1.959963984540054);

struct SimulationOptions {
  std::size_t n_drops = 100000;
  InterfererMode mode = InterfererMode::kAnalysisMatched;
  std::uint64_t seed = 20211209;
  /// Interfering UAV density; defaults to lambda_user (S1) or the derived
  /// scenario-2 density (S2).
  std::optional<double> lambda_u;
  /// Receives `drop_id,served_by,sinr_db,covered,user_cluster` rows.
  std::ostream* drop_log = nullptr;
};

/// Drops are split over a fixed number of partitions, each with its own
/// derived seed, so results do not depend on the worker count.
inline constexpr std::size_t kPartitions = 64;

struct CoverageEstimate {
  Scenario scenario = Scenario::kOne;
  InterfererMode mode = InterfererMode::kAnalysisMatched;
  std::size_t drops = 0;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  double lambda_u = 0.0;
  // [own|cross][ServedBy]; own means the user sits in the cluster whose
  // nearest pad hosts the serving UAV.
  std::array<std::array<std::size_t, 3>, 2> served{};
  std::array<std::array<std::size_t, 3>, 2> covered{};

  std::size_t covered_count() const;
  Proportion p_total() const;
  Proportion p_component(ServedBy s) const;
  /// Coverage conditioned on the user being in the own or the other cluster.
  Proportion p_own() const;
  Proportion p_cross() const;
};

CoverageEstimate simulate_coverage(Scenario s, const ValidatedParams& p, const NumericsConfig& n,
                                   const SimulationOptions& opt);

/// Column order: scenario,interferer_mode,drops,seed,lambda_u,p_uav_los,
/// p_uav_nlos,p_tbs,p_total,ci_lo,ci_hi,p_own,p_cross
std::string mc_csv_header();
std::string to_csv_row(const CoverageEstimate& e);

struct FunctionalEstimate {
  double s = 0.0;
  double mean = 1.0;
  double std_error = 0.0;
};

/// Averages exp(-s I) over independent draws of the analysis field: UAVs
/// PPP(lambda_u) at altitude h with per-link LoS and Gamma fading, and TBSs
/// PPP(lambda_t) between `tbs_exclusion` and the window radius. Noise-free.
std::vector<FunctionalEstimate> simulate_interference_functional(
    std::span<const double> s, double tbs_exclusion, double lambda_u, const SystemParams& p,
    const NumericsConfig& n, std::size_t n_fields, std::uint64_t seed);

struct EnergyEstimate {
  EnergyReport report;
  CoverageEstimate coverage;
  double prob_shared_pad = 0.0;  // fraction of sampled pairs whose nearest pads coincide
  std::size_t l_samples = 0;
};

/// Simulated EE. Scenario 2 uses lambda_user (2 - shared fraction) as UAV
/// density; scenario 1 averages SE / P_tot over sampled traveling distances.
/// `lambda_u` forces the UAV density of either scenario.
EnergyEstimate simulate_energy(Scenario s, const ValidatedParams& p, const NumericsConfig& n,
                               std::size_t n_drops, std::uint64_t seed,
                               std::optional<double> lambda_u = std::nullopt,
                               std::size_t l_samples = 20000);

}  // namespace padnet
