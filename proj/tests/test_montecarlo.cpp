#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>

#include "padnet/montecarlo.hpp"
#include "padnet/travel.hpp"

using namespace padnet;

namespace {

SimulationOptions drops(std::size_t n, std::uint64_t seed = 11) {
  SimulationOptions o;
  o.n_drops = n;
  o.seed = seed;
  return o;
}

}  // namespace

TEST_CASE("wilson interval") {
  const auto p = wilson_interval(50000, 100000);
  CHECK(p.estimate == 0.5);
  CHECK(p.hi - p.lo < 0.01);
  CHECK(p.lo < 0.5);
  CHECK(p.hi > 0.5);
  const auto zero = wilson_interval(0, 100);
  CHECK(zero.lo == 0.0);
  CHECK(zero.hi > 0.0);
  CHECK(wilson_interval(100, 100).hi == 1.0);
}

TEST_CASE("coverage limits") {
  const NumericsConfig n;
  SystemParams easy;
  easy.gamma_thr = 1e-12;
  const auto all = simulate_coverage(Scenario::kOne, validate(easy), n, drops(2000));
  CHECK(all.p_total().estimate > 0.999);

  SystemParams loud;
  loud.sigma2 = 1e6;
  const auto none = simulate_coverage(Scenario::kTwo, validate(loud), n, drops(2000));
  CHECK(none.p_total().estimate == 0.0);

  std::size_t served = 0;
  for (const auto& row : all.served)
    for (std::size_t v : row) served += v;
  CHECK(served == 2000);
}

TEST_CASE("interference functional") {
  const SystemParams p;
  const NumericsConfig n;
  const double zero[] = {0.0};
  CHECK(simulate_interference_functional(zero, 100.0, 1e-5, p, n, 100, 3)[0].mean == 1.0);

  SystemParams empty = p;
  empty.lambda_t = 0.0;
  const double some[] = {1e6};
  CHECK(simulate_interference_functional(some, 0.0, 0.0, empty, n, 100, 3)[0].mean == 1.0);

  const double s[] = {1e5, 1e6, 1e7};
  const double t = 200.0;
  const auto mc = simulate_interference_functional(s, t, p.lambda_user, p, n, 20000, 5);
  for (const auto& e : mc) {
    const double exact = laplace_uav_field(e.s, t, p.lambda_user, p, n).value;
    CHECK(std::abs(e.mean - exact) < 4.0 * e.std_error + 1e-3);
  }
}

TEST_CASE("determinism across worker counts") {
  const auto vp = validate(SystemParams{});
  const NumericsConfig n;
  setenv("PADNET_THREADS", "1", 1);
  const auto a = simulate_coverage(Scenario::kOne, vp, n, drops(640, 99));
  setenv("PADNET_THREADS", "3", 1);
  const auto b = simulate_coverage(Scenario::kOne, vp, n, drops(640, 99));
  unsetenv("PADNET_THREADS");
  CHECK(a.served == b.served);
  CHECK(a.covered == b.covered);
  const auto c = simulate_coverage(Scenario::kOne, vp, n, drops(640, 100));
  CHECK(c.served != a.served);
}

TEST_CASE("drop log") {
  const auto vp = validate(SystemParams{});
  const NumericsConfig n;
  std::ostringstream log;
  auto opt = drops(300);
  opt.drop_log = &log;
  const auto e = simulate_coverage(Scenario::kTwo, vp, n, opt);
  std::istringstream in(log.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "drop_id,served_by,sinr_db,covered,user_cluster");
  std::size_t rows = 0;
  std::size_t covered = 0;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string id, by, db, cov, cluster;
    std::getline(row, id, ',');
    std::getline(row, by, ',');
    std::getline(row, db, ',');
    std::getline(row, cov, ',');
    std::getline(row, cluster, ',');
    CHECK(std::stoul(id) == rows);
    CHECK((std::stod(db) >= 0.0) == (cov == "1"));
    covered += cov == "1";
    ++rows;
  }
  CHECK(rows == 300);
  CHECK(covered == e.covered_count());
}

TEST_CASE("simulated coverage agrees with the analysis") {
  const auto vp = validate(SystemParams{});
  const NumericsConfig n;
  const auto sim = simulate_coverage(Scenario::kTwo, vp, n, drops(20000));
  const auto ana = coverage_scenario2(vp, n);
  CHECK(std::abs(sim.p_total().estimate - ana.p_total) < 0.03);
  CHECK(sim.lambda_u == doctest::Approx(ana.lambda_u));
  CHECK(sim.p_component(ServedBy::kUavLos).estimate ==
        doctest::Approx(ana.p_uav_los).epsilon(0.1));
}

TEST_CASE("pair-consistent mode") {
  const auto vp = validate(SystemParams{});
  const NumericsConfig n;
  auto opt = drops(200);
  opt.mode = InterfererMode::kPairConsistent;
  for (Scenario s : {Scenario::kOne, Scenario::kTwo}) {
    const auto e = simulate_coverage(s, vp, n, opt);
    CHECK(e.p_total().estimate > 0.0);
    CHECK(e.p_total().estimate < 1.0);
    CHECK(e.mode == InterfererMode::kPairConsistent);
  }
}

TEST_CASE("simulated energy") {
  const NumericsConfig n;
  SystemParams p;
  p.n_t = 0.0;
  const auto e1 = simulate_energy(Scenario::kOne, validate(p), n, 640, 4, 2e-5, 2000);
  const auto e2 = simulate_energy(Scenario::kTwo, validate(p), n, 640, 4, 2e-5, 2000);
  CHECK(e1.report.p_tot == doctest::Approx(e2.report.p_tot).epsilon(1e-14));
  CHECK(e1.report.ee / e2.report.ee == doctest::Approx(e1.report.se / e2.report.se));

  const auto again = simulate_energy(Scenario::kOne, validate(p), n, 640, 4, 2e-5, 2000);
  CHECK(again.report.ee == e1.report.ee);

  // With coverage held fixed, only the traveling-distance treatment differs.
  p.lambda_c = 1e-5;
  p.n_t = 200.0;
  const auto vp = validate(p);
  const auto sim = simulate_energy(Scenario::kOne, vp, n, 64, 4, std::nullopt, 20000);
  const double plug = total_power_s1(p.lambda_user, p.n_t, mean_l(p.lambda_c, p.d_nm, n), p.v,
                                     p.p_m, p.p_s, p.lambda_t, p.p_tbs);
  CHECK(std::abs(sim.report.p_tot / plug - 1.0) > 1e-3);

  const auto s2 = simulate_energy(Scenario::kTwo, vp, n, 64, 4, std::nullopt, 20000);
  CHECK(s2.report.lambda_u ==
        doctest::Approx(uav_density_s2(p.lambda_user, p.lambda_c, p.d_nm, n)).epsilon(0.02));
}
