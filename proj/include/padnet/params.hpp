#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace padnet {

/// Every scalar of the network model, SI units, linear scale.
///
/// Fading orders are stored as doubles so that a non-integer value coming
/// from a config file reaches validate() and is rejected there by name.
struct SystemParams {
  double lambda_c = 1e-4;     // charging pads / m^2
  double lambda_t = 1e-6;     // TBSs / m^2
  double lambda_user = 1e-5;  // cluster pairs / m^2
  double d_nm = 300.0;        // m
  double r_c = 120.0;         // m
  double h = 60.0;            // m
  double a_env = 25.27;
  double b_env = 0.2;
  double alpha_l = 2.1;
  double alpha_n = 4.0;
  double alpha_t = 4.0;
  double eta_l = 1.0;   // 0 dB
  double eta_n = 0.01;  // -20 dB
  double m_l = 3.0;
  double m_n = 1.0;
  double rho_u = 0.4;  // W
  double rho_t = 10.0;  // W
  double sigma2 = 1e-9;  // W
  double gamma_thr = 1.0;  // 0 dB
  double b_w = 1e7;        // Hz
  double lambda_mh = 1e-3;
  double lambda_ml = 2.5e-4;
  double lambda_nh = 1e-3;
  double lambda_nl = 2.5e-4;
  double n_t = 200.0;  // switches / day
  double alpha_time = 0.5;
  double v = 18.46;     // m/s
  double p_m = 161.8;   // W
  double p_s = 10.0;    // W
  double p_tbs = 318.0;  // W

  int fading_los() const { return static_cast<int>(m_l); }
  int fading_nlos() const { return static_cast<int>(m_n); }

  bool operator==(const SystemParams&) const = default;
};

/// Rotary-wing propulsion constants. No defaults: only needed by
/// propulsion_power().
struct RotorParams {
  double p_0 = 0.0;
  double p_i = 0.0;
  double u_tip = 0.0;
  double v_0 = 0.0;
  double d_0 = 0.0;
  double rho_air = 0.0;
  double s_rotor = 0.0;
  double a_1 = 0.0;

  bool operator==(const RotorParams&) const = default;
};

struct NumericsConfig {
  double quad_rel_tol = 1e-8;
  double quad_abs_tol = 1e-10;
  double integral_truncation_radius = 6000.0;  // m
  double mc_window_radius = 6000.0;            // m
  double fd_step = 1e-4;
  std::uint64_t master_seed = 20211209;

  bool operator==(const NumericsConfig&) const = default;
};

/// A SystemParams record that has passed validate(). Only validate() can
/// produce one, so holding a ValidatedParams is proof the invariants hold.
class ValidatedParams {
 public:
  const SystemParams& get() const noexcept { return p_; }
  const SystemParams* operator->() const noexcept { return &p_; }
  const SystemParams& operator*() const noexcept { return p_; }

  bool operator==(const ValidatedParams&) const = default;

 private:
  explicit ValidatedParams(const SystemParams& p) : p_(p) {}
  friend ValidatedParams validate(const SystemParams& params);

  SystemParams p_;
};

/// Throws ConfigError naming the first violated field.
ValidatedParams validate(const SystemParams& params);
inline ValidatedParams validate(const ValidatedParams& params) { return params; }

void validate(const RotorParams& rotor);
void validate(const NumericsConfig& numerics, const SystemParams& params);

/// The complete, validated input of one run.
struct ModelConfig {
  ValidatedParams system = validate(SystemParams{});
  std::optional<RotorParams> rotor;
  NumericsConfig numerics;
};

/// Parses the flat `key = value` format. Missing keys keep their defaults.
/// Throws ConfigError (with line number) on syntax errors, unknown keys and
/// invalid values; IoError when the file cannot be read.
ModelConfig load_config(const std::filesystem::path& path);
ModelConfig parse_config(std::string_view text);

/// Writes every key in alphabetical order with round-trip exact values.
void save_config(const ModelConfig& config, const std::filesystem::path& path);
std::string format_config(const ModelConfig& config);

/// Names of every key accepted in a config file (without `_db` variants).
std::vector<std::string> config_keys();

/// Reads a numeric field by its config key. Throws ConfigError on an
/// unknown key or an unset rotor key.
double get_value(const ModelConfig& config, std::string_view key);

/// Returns a copy with one field replaced and the result revalidated.
/// `_db` suffixes are accepted where the file format accepts them.
ModelConfig with_value(const ModelConfig& config, std::string_view key, double value);

/// True when `key` names a SystemParams field (valid sweep targets).
bool is_system_key(std::string_view key);

}  // namespace padnet
