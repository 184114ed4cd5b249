#include "padnet/params.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "padnet/error.hpp"

namespace padnet {
namespace {

enum class Group { kSystem, kNumerics, kRotor };

struct KeyInfo {
  const char* name;
  Group group;
  double SystemParams::*system = nullptr;
  double NumericsConfig::*numerics = nullptr;
  double RotorParams::*rotor = nullptr;
  bool accepts_db = false;
};

constexpr const char* kSeedKey = "master_seed";

const std::vector<KeyInfo>& key_table() {
  static const std::vector<KeyInfo> table = [] {
    std::vector<KeyInfo> t;
    auto sys = [&t](const char* n, double SystemParams::*m, bool db = false) {
      t.push_back({n, Group::kSystem, m, nullptr, nullptr, db});
    };
    auto num = [&t](const char* n, double NumericsConfig::*m) {
      t.push_back({n, Group::kNumerics, nullptr, m, nullptr, false});
    };
    auto rot = [&t](const char* n, double RotorParams::*m) {
      t.push_back({n, Group::kRotor, nullptr, nullptr, m, false});
    };
    sys("lambda_c", &SystemParams::lambda_c);
    sys("lambda_t", &SystemParams::lambda_t);
    sys("lambda_user", &SystemParams::lambda_user);
    sys("d_nm", &SystemParams::d_nm);
    sys("r_c", &SystemParams::r_c);
    sys("h", &SystemParams::h);
    sys("a_env", &SystemParams::a_env);
    sys("b_env", &SystemParams::b_env);
    sys("alpha_l", &SystemParams::alpha_l);
    sys("alpha_n", &SystemParams::alpha_n);
    sys("alpha_t", &SystemParams::alpha_t);
    sys("eta_l", &SystemParams::eta_l, true);
    sys("eta_n", &SystemParams::eta_n, true);
    sys("m_l", &SystemParams::m_l);
    sys("m_n", &SystemParams::m_n);
    sys("rho_u", &SystemParams::rho_u);
    sys("rho_t", &SystemParams::rho_t);
    sys("sigma2", &SystemParams::sigma2);
    sys("gamma_thr", &SystemParams::gamma_thr, true);
    sys("b_w", &SystemParams::b_w);
    sys("lambda_mh", &SystemParams::lambda_mh);
    sys("lambda_ml", &SystemParams::lambda_ml);
    sys("lambda_nh", &SystemParams::lambda_nh);
    sys("lambda_nl", &SystemParams::lambda_nl);
    sys("n_t", &SystemParams::n_t);
    sys("alpha_time", &SystemParams::alpha_time);
    sys("v", &SystemParams::v);
    sys("p_m", &SystemParams::p_m);
    sys("p_s", &SystemParams::p_s);
    sys("p_tbs", &SystemParams::p_tbs);
    num("quad_rel_tol", &NumericsConfig::quad_rel_tol);
    num("quad_abs_tol", &NumericsConfig::quad_abs_tol);
    num("integral_truncation_radius", &NumericsConfig::integral_truncation_radius);
    num("mc_window_radius", &NumericsConfig::mc_window_radius);
    num("fd_step", &NumericsConfig::fd_step);
    rot("p_0", &RotorParams::p_0);
    rot("p_i", &RotorParams::p_i);
    rot("u_tip", &RotorParams::u_tip);
    rot("v_0", &RotorParams::v_0);
    rot("d_0", &RotorParams::d_0);
    rot("rho_air", &RotorParams::rho_air);
    rot("s_rotor", &RotorParams::s_rotor);
    rot("a_1", &RotorParams::a_1);
    return t;
  }();
  return table;
}

const KeyInfo* find_key(std::string_view name) {
  for (const auto& k : key_table()) {
    if (name == k.name) return &k;
  }
  return nullptr;
}

void require(bool ok, const char* field, const char* what) {
  if (!ok) throw ConfigError(std::string("invalid ") + field + ": " + what);
}

void require_positive(double v, const char* field) {
  require(std::isfinite(v) && v > 0.0, field, "must be finite and > 0");
}

void require_fading_order(double v, const char* field) {
  require(std::isfinite(v) && v >= 1.0 && std::floor(v) == v, field,
          "must be an integer >= 1");
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

bool rotor_complete(const RotorParams& r) {
  return r.p_0 > 0 && r.p_i > 0 && r.u_tip > 0 && r.v_0 > 0 && r.d_0 > 0 &&
         r.rho_air > 0 && r.s_rotor > 0 && r.a_1 > 0;
}

// Applies one key without validation. Returns false on an unknown key.
bool assign(SystemParams& sys, NumericsConfig& num, std::optional<RotorParams>& rotor,
            std::string_view key, double value) {
  std::string base(key);
  bool db = false;
  if (base.size() > 3 && base.ends_with("_db")) {
    const KeyInfo* k = find_key(std::string_view(base).substr(0, base.size() - 3));
    if (k != nullptr && k->accepts_db) {
      base.resize(base.size() - 3);
      db = true;
    }
  }
  const KeyInfo* k = find_key(base);
  if (k == nullptr) return false;
  const double linear = db ? std::pow(10.0, value / 10.0) : value;
  switch (k->group) {
    case Group::kSystem: sys.*(k->system) = linear; break;
    case Group::kNumerics: num.*(k->numerics) = linear; break;
    case Group::kRotor:
      if (!rotor) rotor = RotorParams{};
      (*rotor).*(k->rotor) = linear;
      break;
  }
  return true;
}

}  // namespace

ValidatedParams validate(const SystemParams& p) {
  require_positive(p.lambda_c, "lambda_c");
  require_positive(p.lambda_t, "lambda_t");
  require_positive(p.lambda_user, "lambda_user");
  require_positive(p.d_nm, "d_nm");
  require_positive(p.r_c, "r_c");
  require_positive(p.h, "h");
  require_positive(p.a_env, "a_env");
  require_positive(p.b_env, "b_env");
  require_positive(p.alpha_l, "alpha_l");
  require_positive(p.alpha_n, "alpha_n");
  require_positive(p.alpha_t, "alpha_t");
  require_positive(p.eta_l, "eta_l");
  require_positive(p.eta_n, "eta_n");
  require_fading_order(p.m_l, "m_l");
  require_fading_order(p.m_n, "m_n");
  require_positive(p.rho_u, "rho_u");
  require_positive(p.rho_t, "rho_t");
  require(std::isfinite(p.sigma2) && p.sigma2 >= 0.0, "sigma2", "must be finite and >= 0");
  require_positive(p.gamma_thr, "gamma_thr");
  require_positive(p.b_w, "b_w");
  require_positive(p.lambda_mh, "lambda_mh");
  require_positive(p.lambda_ml, "lambda_ml");
  require_positive(p.lambda_nh, "lambda_nh");
  require_positive(p.lambda_nl, "lambda_nl");
  require(p.lambda_mh > p.lambda_nl, "lambda_mh", "must exceed lambda_nl");
  require(p.lambda_nh > p.lambda_ml, "lambda_nh", "must exceed lambda_ml");
  require(std::isfinite(p.n_t) && p.n_t >= 0.0, "n_t", "must be finite and >= 0");
  require(p.alpha_time >= 0.0 && p.alpha_time <= 1.0, "alpha_time", "must lie in [0, 1]");
  require_positive(p.v, "v");
  require_positive(p.p_m, "p_m");
  require_positive(p.p_s, "p_s");
  require_positive(p.p_tbs, "p_tbs");
  return ValidatedParams(p);
}

void validate(const RotorParams& r) {
  require_positive(r.p_0, "p_0");
  require_positive(r.p_i, "p_i");
  require_positive(r.u_tip, "u_tip");
  require_positive(r.v_0, "v_0");
  require_positive(r.d_0, "d_0");
  require_positive(r.rho_air, "rho_air");
  require_positive(r.s_rotor, "s_rotor");
  require_positive(r.a_1, "a_1");
}

void validate(const NumericsConfig& n, const SystemParams& p) {
  require(n.quad_rel_tol > 0.0 && n.quad_rel_tol < 1.0, "quad_rel_tol", "must lie in (0, 1)");
  require(n.quad_abs_tol > 0.0 && n.quad_abs_tol < 1.0, "quad_abs_tol", "must lie in (0, 1)");
  require(n.fd_step > 0.0 && n.fd_step < 0.1, "fd_step", "must lie in (0, 0.1)");
  require_positive(n.mc_window_radius, "mc_window_radius");
  const double spacing = std::max(1.0 / std::sqrt(std::numbers::pi * p.lambda_c),
                                  1.0 / std::sqrt(std::numbers::pi * p.lambda_t));
  require(std::isfinite(n.integral_truncation_radius) &&
              n.integral_truncation_radius > 10.0 * spacing,
          "integral_truncation_radius",
          ("must exceed 10x the mean pad/TBS spacing (" + format_double(10.0 * spacing) +
           " m)").c_str());
}

ModelConfig parse_config(std::string_view text) {
  SystemParams sys;
  NumericsConfig num;
  std::optional<RotorParams> rotor;
  std::vector<std::string> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto where = "line " + std::to_string(line_no) + ": ";
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(where + "expected 'key = value', got '" + std::string(line) + "'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view raw = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(where + "missing key");
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
      throw ConfigError(where + "duplicate key '" + key + "'");
    }
    seen.push_back(key);

    if (key == kSeedKey) {
      std::uint64_t seed = 0;
      auto [p, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), seed);
      if (ec != std::errc() || p != raw.data() + raw.size()) {
        throw ConfigError(where + "master_seed must be an unsigned 64-bit integer");
      }
      num.master_seed = seed;
      continue;
    }

    double value = 0.0;
    auto [p, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), value);
    if (ec != std::errc() || p != raw.data() + raw.size()) {
      throw ConfigError(where + "value of '" + key + "' is not a number: '" +
                        std::string(raw) + "'");
    }
    if (!assign(sys, num, rotor, key, value)) {
      throw ConfigError(where + "unknown key '" + key + "'");
    }
  }

  ModelConfig cfg;
  cfg.system = validate(sys);
  validate(num, sys);
  cfg.numerics = num;
  if (rotor) {
    validate(*rotor);
    cfg.rotor = rotor;
  }
  return cfg;
}

ModelConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string format_config(const ModelConfig& cfg) {
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& k : key_table()) {
    switch (k.group) {
      case Group::kSystem:
        rows.emplace_back(k.name, format_double(cfg.system.get().*(k.system)));
        break;
      case Group::kNumerics:
        rows.emplace_back(k.name, format_double(cfg.numerics.*(k.numerics)));
        break;
      case Group::kRotor:
        if (cfg.rotor) rows.emplace_back(k.name, format_double((*cfg.rotor).*(k.rotor)));
        break;
    }
  }
  rows.emplace_back(kSeedKey, std::to_string(cfg.numerics.master_seed));
  std::sort(rows.begin(), rows.end());
  std::string out;
  for (const auto& [k, v] : rows) out += k + " = " + v + "\n";
  return out;
}

void save_config(const ModelConfig& cfg, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write config file '" + path.string() + "'");
  out << format_config(cfg);
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

std::vector<std::string> config_keys() {
  std::vector<std::string> keys;
  for (const auto& k : key_table()) keys.emplace_back(k.name);
  keys.emplace_back(kSeedKey);
  std::sort(keys.begin(), keys.end());
  return keys;
}

double get_value(const ModelConfig& cfg, std::string_view key) {
  if (key == kSeedKey) return static_cast<double>(cfg.numerics.master_seed);
  const KeyInfo* k = find_key(key);
  if (k == nullptr) throw ConfigError("unknown key '" + std::string(key) + "'");
  switch (k->group) {
    case Group::kSystem: return cfg.system.get().*(k->system);
    case Group::kNumerics: return cfg.numerics.*(k->numerics);
    case Group::kRotor:
      if (!cfg.rotor) throw ConfigError("rotor parameter '" + std::string(key) + "' is not set");
      return (*cfg.rotor).*(k->rotor);
  }
  return 0.0;
}

ModelConfig with_value(const ModelConfig& cfg, std::string_view key, double value) {
  SystemParams sys = cfg.system.get();
  NumericsConfig num = cfg.numerics;
  std::optional<RotorParams> rotor = cfg.rotor;
  if (key == kSeedKey) {
    if (!(value >= 0.0) || std::floor(value) != value) {
      throw ConfigError("invalid master_seed: must be a non-negative integer");
    }
    num.master_seed = static_cast<std::uint64_t>(value);
  } else if (!assign(sys, num, rotor, key, value)) {
    throw ConfigError("unknown key '" + std::string(key) + "'");
  } else if (const KeyInfo* k = find_key(key); k != nullptr && k->group == Group::kRotor) {
    require_positive(value, k->name);
  }
  ModelConfig out;
  out.system = validate(sys);
  validate(num, sys);
  out.numerics = num;
  if (rotor && rotor_complete(*rotor)) validate(*rotor);
  out.rotor = rotor;
  return out;
}

bool is_system_key(std::string_view key) {
  const KeyInfo* k = find_key(key);
  return k != nullptr && k->group == Group::kSystem;
}

}  // namespace padnet
