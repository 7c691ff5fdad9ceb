#include <doctest.h>

#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "spinpair/experiments.hpp"

using namespace spinpair;

namespace {

nlohmann::json base_config() {
  return nlohmann::json{
      {"params",
       {{"mode", "scaled"}, {"M0", 0.9}, {"alpha", 1.0}, {"kappa1_star", 1.0},
        {"kappa2_star", 1.0}}},
      {"initial_state", "singlet"},
      {"t_end", 100.0},
      {"sample_count", 50}};
}

double first_time_below(const Trajectory& tr, const std::vector<double>& conc,
                        double threshold) {
  for (std::size_t i = 0; i < conc.size(); ++i) {
    if (conc[i] < threshold) return tr.times[i];
  }
  return std::numeric_limits<double>::infinity();
}

}  // namespace

TEST_CASE("config parsing and validation") {
  const ScenarioConfig cfg = ScenarioConfig::from_json(base_config());
  CHECK(cfg.model.M0 == 0.9);
  CHECK(cfg.model.alpha == 1.0);
  CHECK(cfg.model.rates.kappa[1] == 1.0);
  CHECK(cfg.preset == InitialStatePreset::Singlet);
  CHECK(cfg.t_end == 100.0);

  SUBCASE("field-level errors") {
    auto bad = base_config();
    bad["params"].erase("M0");
    CHECK_THROWS_WITH_AS(ScenarioConfig::from_json(bad),
                         doctest::Contains("params.M0"), std::invalid_argument);

    bad = base_config();
    bad["initial_state"] = "bell";
    CHECK_THROWS_WITH_AS(ScenarioConfig::from_json(bad),
                         doctest::Contains("initial_state"),
                         std::invalid_argument);

    bad = base_config();
    bad["t_end"] = -5.0;
    CHECK_THROWS_WITH_AS(ScenarioConfig::from_json(bad),
                         doctest::Contains("t_end"), std::invalid_argument);

    bad = base_config();
    bad["params"]["alpha"] = 1.5;
    CHECK_THROWS_AS(ScenarioConfig::from_json(bad), std::invalid_argument);

    bad = base_config();
    bad["params"]["kappa1_star"] = -1.0;
    CHECK_THROWS_AS(ScenarioConfig::from_json(bad), std::invalid_argument);

    bad = base_config();
    bad["sweep"] = {{"x", {{"param", "nope"}, {"min", 0}, {"max", 1}, {"count", 2}}},
                    {"y", {{"param", "alpha"}, {"min", 0}, {"max", 1}, {"count", 2}}}};
    CHECK_THROWS_WITH_AS(ScenarioConfig::from_json(bad),
                         doctest::Contains("sweep.x"), std::invalid_argument);
  }

  SUBCASE("physical mode") {
    nlohmann::json j = base_config();
    j["params"] = {{"mode", "physical"}, {"J", 2.0},   {"M0", 0.5},
                   {"alpha", 0.3},       {"tau_c", 0.1}, {"omega_d", 1.0},
                   {"omega0", 10.0},     {"theta", 1.0}, {"phi", 0.5}};
    const ScenarioConfig cfg2 = ScenarioConfig::from_json(j);
    CHECK(cfg2.model.J == 2.0);
    CHECK(cfg2.model.rates.kappa[0] > 0.0);
  }
}

TEST_CASE("scaled time is the default clock") {
  // on a J = 2 model, the state at J t = x (scaled clock) is the state at
  // t = x / 2 on the physical clock
  nlohmann::json j = base_config();
  j["params"] = {{"mode", "physical"}, {"J", 2.0},   {"M0", 0.9},
                 {"alpha", 0.5},       {"tau_c", 0.1}, {"omega_d", 1.0},
                 {"omega0", 10.0},     {"theta", 1.0}, {"phi", 0.5}};
  j["initial_state"] = "dipolar_order";
  j["sampling"] = "linear";
  j["sample_count"] = 11;
  j["t_end"] = 10.0;
  const ScenarioConfig scaled = ScenarioConfig::from_json(j);
  CHECK(scaled.scaled_time);

  j["time_unit"] = "physical";
  j["t_end"] = 5.0;
  const ScenarioConfig physical = ScenarioConfig::from_json(j);
  CHECK_FALSE(physical.scaled_time);

  const ScenarioResult a = run_scenario(scaled);
  const ScenarioResult b = run_scenario(physical);
  for (std::size_t i = 0; i < a.trajectory.states.size(); ++i) {
    CHECK(a.trajectory.times[i] == doctest::Approx(2.0 * b.trajectory.times[i]));
    CHECK((a.trajectory.states[i].block_vector() -
           b.trajectory.states[i].block_vector())
              .cwiseAbs()
              .maxCoeff() < 1e-9);
  }
}

TEST_CASE("scenario runs") {
  SUBCASE("stored singlet keeps unit concurrence in a common environment") {
    ScenarioConfig cfg = ScenarioConfig::from_json(base_config());
    const ScenarioResult r = run_scenario(cfg);
    for (double c : r.concurrence) {
      CHECK(c == doctest::Approx(1.0).epsilon(1e-8));
    }
    CHECK(r.steady.mode == SteadyStateMode::ConservedManifold);
  }

  SUBCASE("triplet dies faster under stronger dipolar coupling") {
    auto make = [](double k) {
      nlohmann::json j = base_config();
      j["params"]["alpha"] = 1.0;
      j["params"]["kappa1_star"] = k;
      j["params"]["kappa2_star"] = k;
      j["initial_state"] = "triplet";
      j["t_end"] = 1e3;
      j["sample_count"] = 300;
      j["log_decades"] = 6.0;
      return ScenarioConfig::from_json(j);
    };
    const ScenarioResult weak = run_scenario(make(0.01));
    const ScenarioResult strong = run_scenario(make(100.0));
    const double t_weak = first_time_below(weak.trajectory, weak.concurrence, 0.01);
    const double t_strong =
        first_time_below(strong.trajectory, strong.concurrence, 0.01);
    CHECK(std::isfinite(t_weak));
    CHECK(std::isfinite(t_strong));
    CHECK(t_strong < t_weak);
  }

  SUBCASE("dipolar order builds entanglement that later decays") {
    nlohmann::json j = base_config();
    j["params"]["alpha"] = 0.9999;
    j["params"]["kappa1_star"] = 0.01;
    j["params"]["kappa2_star"] = 0.01;
    j["initial_state"] = "dipolar_order";
    j["t_end"] = 1e6;
    j["sample_count"] = 400;
    j["log_decades"] = 8.0;
    const ScenarioResult r = run_scenario(ScenarioConfig::from_json(j));
    const ConcurrenceSummary s =
        summarize_concurrence(r.trajectory.times, r.concurrence);
    CHECK(s.max_value > 0.3);
    CHECK(r.concurrence.front() == doctest::Approx(0.0));
    CHECK(r.concurrence.back() < 1e-6);
    CHECK(std::isfinite(s.decay_time));
    CHECK(s.decay_time > s.time_of_max);
  }
}

TEST_CASE("concurrence summary estimator") {
  const std::vector<double> times{0.0, 1.0, 2.0, 3.0, 4.0};
  const std::vector<double> conc{0.0, 1.0, 0.8, 0.2, 0.1};
  const ConcurrenceSummary s = summarize_concurrence(times, conc);
  CHECK(s.max_value == 1.0);
  CHECK(s.time_of_max == 1.0);
  // 1/e crossing between t=2 and t=3, linear interpolation
  const double th = 1.0 / std::numbers::e;
  CHECK(s.decay_time == doctest::Approx(2.0 + (th - 0.8) / (0.2 - 0.8)));

  const ConcurrenceSummary flat =
      summarize_concurrence(times, {0.5, 0.5, 0.5, 0.5, 0.5});
  CHECK(std::isinf(flat.decay_time));
}

TEST_CASE("csv output is deterministic and schema-stable") {
  ScenarioConfig cfg = ScenarioConfig::from_json(base_config());
  cfg.sample_count = 20;
  const ScenarioResult a = run_scenario(cfg);
  const ScenarioResult b = run_scenario(cfg);
  std::ostringstream sa, sb;
  write_trajectory_csv(sa, a.trajectory, a.concurrence);
  write_trajectory_csv(sb, b.trajectory, b.concurrence);
  CHECK(sa.str() == sb.str());
  CHECK(sa.str().substr(0, sa.str().find('\n')) ==
        "t,Mz,Mzz,Mc,Mx,My,Mxy,Mxz,Myz,Ax,Ay,Az,Axy,Axz,Ayz,Ac,concurrence");
}

TEST_CASE("sweeps") {
  nlohmann::json j = base_config();
  j["initial_state"] = "dipolar_order";
  j["t_end"] = 200.0;
  j["sample_count"] = 120;
  j["log_decades"] = 5.0;

  SUBCASE("constant grid reproduces the single-cell run") {
    j["params"]["kappa1_star"] = 0.0;
    j["params"]["kappa2_star"] = 0.0;
    j["sweep"] = {{"x", {{"param", "kappa1_star"}, {"min", 0.0}, {"max", 0.0}, {"count", 3}}},
                  {"y", {{"param", "alpha"}, {"min", 1.0}, {"max", 1.0}, {"count", 3}}}};
    ScenarioConfig cfg = ScenarioConfig::from_json(j);
    const SweepResult r = run_sweep(cfg, 1);
    REQUIRE(r.cells.size() == 9);

    ScenarioConfig single = cfg;
    single.sweep.reset();
    const ScenarioResult ref = run_scenario(single);
    const ConcurrenceSummary s =
        summarize_concurrence(ref.trajectory.times, ref.concurrence);
    for (const auto& c : r.cells) {
      CHECK(c.error.empty());
      CHECK(c.max_concurrence == s.max_value);
    }
  }

  SUBCASE("failing cells are recorded and the sweep continues") {
    // M0 above 1 is rejected by validation inside the affected cells only
    j["sweep"] = {{"x", {{"param", "M0"}, {"min", 0.8}, {"max", 1.2}, {"count", 3}}},
                  {"y", {{"param", "alpha"}, {"min", 1.0}, {"max", 1.0}, {"count", 1}}}};
    ScenarioConfig cfg = ScenarioConfig::from_json(j);
    const SweepResult r = run_sweep(cfg, 1);
    REQUIRE(r.cells.size() == 3);
    CHECK(r.cells[0].error.empty());
    CHECK(r.cells[1].error.empty());
    CHECK_FALSE(r.cells[2].error.empty());
    CHECK(r.cells[0].max_concurrence > 0.0);
  }

  SUBCASE("results do not depend on the worker count") {
    j["sweep"] = {{"x", {{"param", "kappa1_star"}, {"min", 0.01}, {"max", 10.0},
                          {"count", 3}, {"scale", "log"}}},
                  {"y", {{"param", "alpha"}, {"min", 0.99}, {"max", 1.0}, {"count", 2}}}};
    ScenarioConfig cfg = ScenarioConfig::from_json(j);
    const SweepResult r1 = run_sweep(cfg, 1);
    const SweepResult r3 = run_sweep(cfg, 3);
    REQUIRE(r1.cells.size() == r3.cells.size());
    for (std::size_t i = 0; i < r1.cells.size(); ++i) {
      CHECK(r1.cells[i].max_concurrence == r3.cells[i].max_concurrence);
      CHECK(r1.cells[i].decay_time == r3.cells[i].decay_time);
    }
  }

  SUBCASE("monotonicity of the stored entanglement maximum") {
    // nondecreasing in alpha at fixed kappa; nonincreasing in kappa at fixed alpha
    j["t_end"] = 1e3;
    j["sample_count"] = 300;
    j["log_decades"] = 6.0;
    j["sweep"] = {{"x", {{"param", "kappa1_star"}, {"min", 0.01}, {"max", 100.0},
                          {"count", 4}, {"scale", "log"}}},
                  {"y", {{"param", "alpha"}, {"min", 0.95}, {"max", 1.0}, {"count", 4}}}};
    ScenarioConfig cfg = ScenarioConfig::from_json(j);
    const SweepResult r = run_sweep(cfg, 1);
    const int nx = 4, ny = 4;
    auto cell = [&](int ix, int iy) -> const SweepCell& {
      return r.cells[static_cast<std::size_t>(ix * ny + iy)];
    };
    for (int ix = 0; ix < nx; ++ix) {
      for (int iy = 0; iy + 1 < ny; ++iy) {
        CHECK(cell(ix, iy + 1).max_concurrence >=
              cell(ix, iy).max_concurrence - 1e-9);
      }
    }
    for (int iy = 0; iy < ny; ++iy) {
      for (int ix = 0; ix + 1 < nx; ++ix) {
        CHECK(cell(ix + 1, iy).max_concurrence <=
              cell(ix, iy).max_concurrence + 1e-9);
      }
    }
  }
}

TEST_CASE("figure emission") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "spinpair_fig_test";
  fs::remove_all(dir);

  emit_figure_data(Figure::Fig2a, dir);
  std::ifstream mf(dir / "fig2a_manifest.json");
  REQUIRE(mf.good());
  nlohmann::json manifest;
  mf >> manifest;
  CHECK(manifest["figure"] == "fig2a");
  CHECK(manifest["files"].size() == 10);  // 5 couplings x 2 alphas
  CHECK(manifest["protocol"]["initial_state"] == "singlet");

  // every alpha = 1 singlet curve is flat at concurrence 1
  for (const auto& entry : manifest["files"]) {
    if (entry["alpha"].get<double>() != 1.0) continue;
    std::ifstream csv(dir / entry["file"].get<std::string>());
    REQUIRE(csv.good());
    std::string line;
    std::getline(csv, line);  // header
    while (std::getline(csv, line)) {
      const double c = std::stod(line.substr(line.rfind(',') + 1));
      CHECK(c == doctest::Approx(1.0).epsilon(1e-8));
    }
  }
  fs::remove_all(dir);
}

TEST_CASE("sweep csv and metadata") {
  nlohmann::json j = base_config();
  j["initial_state"] = "dipolar_order";
  j["t_end"] = 50.0;
  j["sample_count"] = 60;
  j["sweep"] = {{"x", {{"param", "kappa1_star"}, {"min", 0.1}, {"max", 1.0}, {"count", 2}}},
                {"y", {{"param", "alpha"}, {"min", 0.99}, {"max", 1.0}, {"count", 2}}}};
  ScenarioConfig cfg = ScenarioConfig::from_json(j);
  const SweepResult r = run_sweep(cfg, 1);
  std::ostringstream os;
  write_sweep_csv(os, r);
  const std::string head = os.str().substr(0, os.str().find('\n'));
  CHECK(head ==
        "kappa1_star,alpha,max_concurrence,time_of_max,decay_time,Mz_ss,Mzz_ss,"
        "Mc_ss,error");

  const ScenarioResult sr = run_scenario([&] {
    ScenarioConfig c = cfg;
    c.sweep.reset();
    return c;
  }());
  const nlohmann::json meta = scenario_metadata(cfg, sr);
  CHECK(meta.contains("params"));
  CHECK(meta["initial_state"] == "dipolar_order");
  CHECK(meta["time_unit"] == "1/J");
  const nlohmann::json ssj = steady_state_json(cfg.model, sr.steady);
  CHECK(ssj.contains("mode"));
  CHECK(ssj.contains("values"));
  CHECK(ssj.contains("residual"));
}
