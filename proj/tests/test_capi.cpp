#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "padnet/padnet.h"

namespace {

struct Config {
  padnet_config* p = nullptr;
  ~Config() { padnet_config_free(p); }
};

}  // namespace

TEST_CASE("config handle round trip") {
  Config c;
  REQUIRE(padnet_config_default(&c.p) == PADNET_OK);
  double v = 0.0;
  CHECK(padnet_config_get(c.p, "lambda_c", &v) == PADNET_OK);
  CHECK(v == doctest::Approx(1e-4));
  CHECK(padnet_config_set(c.p, "d_nm", 450.0) == PADNET_OK);
  CHECK(padnet_config_get(c.p, "d_nm", &v) == PADNET_OK);
  CHECK(v == 450.0);
  CHECK(padnet_config_get(c.p, "no_such_key", &v) == PADNET_ERR_CONFIG);
  CHECK(std::strlen(padnet_last_error()) > 0);
  CHECK(padnet_config_get(nullptr, "d_nm", &v) == PADNET_ERR_INVALID_ARGUMENT);
}

TEST_CASE("load and parse errors carry their codes") {
  padnet_config* c = nullptr;
  CHECK(padnet_config_load("/nonexistent/padnet.cfg", &c) == PADNET_ERR_IO);
  CHECK(c == nullptr);
  CHECK(padnet_config_parse("lambda_c = -1\n", &c) == PADNET_ERR_CONFIG);
  CHECK(padnet_config_parse("garbage line\n", &c) == PADNET_ERR_CONFIG);
  REQUIRE(padnet_config_parse("# comment\nlambda_c = 3e-5\n", &c) == PADNET_OK);
  double v = 0.0;
  CHECK(padnet_config_get(c, "lambda_c", &v) == PADNET_OK);
  CHECK(v == doctest::Approx(3e-5));
  padnet_config_free(c);
}

TEST_CASE("analysis through the C interface") {
  Config c;
  REQUIRE(padnet_config_default(&c.p) == PADNET_OK);
  padnet_coverage cov{};
  REQUIRE(padnet_coverage_analytic(c.p, PADNET_SCENARIO_TWO, PADNET_MODE_EXACT, &cov) ==
          PADNET_OK);
  CHECK(cov.total == doctest::Approx(cov.uav_los + cov.uav_nlos + cov.tbs));
  CHECK(cov.total == doctest::Approx(0.3563).epsilon(0.005));
  double lu2 = 0.0;
  CHECK(padnet_uav_density_s2(c.p, &lu2) == PADNET_OK);
  CHECK(lu2 == doctest::Approx(cov.lambda_u));

  padnet_energy e{};
  REQUIRE(padnet_energy_efficiency(c.p, PADNET_SCENARIO_TWO, &e) == PADNET_OK);
  CHECK(e.ee == doctest::Approx(e.se / e.p_tot));

  double f0 = 0.0;
  double f1 = 0.0;
  CHECK(padnet_travel_cdf(c.p, 30.0, 1.0, 0.0, &f0) == PADNET_OK);
  CHECK(padnet_travel_cdf(c.p, 30.0, 1.0, 1e4, &f1) == PADNET_OK);
  CHECK(f0 >= 0.0);
  CHECK(f1 == doctest::Approx(1.0));

  padnet_sim_coverage s{};
  REQUIRE(padnet_simulate_coverage(c.p, PADNET_SCENARIO_TWO, PADNET_INTERFERERS_ANALYSIS_MATCHED,
                                   2000, 7, &s) == PADNET_OK);
  CHECK(s.drops == 2000);
  CHECK(s.ci_lo <= s.total);
  CHECK(s.total <= s.ci_hi);
}

TEST_CASE("experiment table and custom run") {
  CHECK(padnet_experiment_count() == 6);
  bool found = false;
  for (size_t i = 0; i < padnet_experiment_count(); ++i)
    found = found || std::string(padnet_experiment_name(i)) == "custom_sweep";
  CHECK(found);
  CHECK(std::string(padnet_experiment_table()).find("fig4_cov_vs_lambda_c") != std::string::npos);

  Config c;
  REQUIRE(padnet_config_default(&c.p) == PADNET_OK);
  const auto dir = std::filesystem::temp_directory_path() / "padnet_capi_test";
  std::filesystem::remove_all(dir);
  const std::string out = dir.string();
  const double values[] = {1e-6, 2e-6};
  padnet_run_options o{};
  o.out_dir = out.c_str();
  o.drops = 0;
  o.sweep_key = "lambda_t";
  o.sweep_values = values;
  o.sweep_count = 2;
  padnet_run_result r{};
  REQUIRE(padnet_run_experiment(c.p, "custom_sweep", &o, &r) == PADNET_OK);
  CHECK(r.rows == 2);
  CHECK(std::filesystem::exists(dir / "custom_sweep.csv"));
  CHECK(std::filesystem::exists(dir / "custom_sweep.manifest.json"));

  CHECK(padnet_run_experiment(c.p, "fig4_cov_vs_lambda_c", &o, &r) ==
        PADNET_ERR_CONFIG);
  CHECK(padnet_run_experiment(c.p, "no_such_recipe", nullptr, &r) == PADNET_ERR_CONFIG);
  std::filesystem::remove_all(dir);
}
