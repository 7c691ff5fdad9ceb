#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "spinpair/experiments.hpp"

namespace {

int fail(const std::string& type, const std::string& message) {
  nlohmann::json err{{"error", {{"type", type}, {"message", message}}}};
  std::cerr << err.dump() << std::endl;
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit dissipative dynamics and entanglement storage simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string outdir = "out";
  std::string basename = "run";
  double tol_override = 0.0;
  int workers = 1;
  std::string figure_name;
  std::string grid = "20x20";

  CLI::App* run = app.add_subcommand("run", "Integrate one scenario and write CSV/JSON");
  run->add_option("-c,--config", config_path, "Scenario config file (JSON)")->required();
  run->add_option("-o,--outdir", outdir, "Output directory");
  run->add_option("-b,--basename", basename, "Output file basename");
  run->add_option("--tol", tol_override, "Override integration tolerance");

  CLI::App* sweep = app.add_subcommand("sweep", "Run a two-parameter grid sweep");
  sweep->add_option("-c,--config", config_path, "Scenario config file with a sweep section")->required();
  sweep->add_option("-o,--outdir", outdir, "Output directory");
  sweep->add_option("-b,--basename", basename, "Output file basename");
  sweep->add_option("-w,--workers", workers, "Worker thread count");
  sweep->add_option("--tol", tol_override, "Override integration tolerance");

  CLI::App* figure = app.add_subcommand("figure", "Emit data for a standard figure protocol");
  figure->add_option("name", figure_name, "fig1|fig2a|fig2b|fig2c|fig3")->required();
  figure->add_option("-o,--outdir", outdir, "Output directory");
  figure->add_option("-w,--workers", workers, "Worker thread count");
  figure->add_option("--grid", grid, "Fig3 grid size, e.g. 20x20");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      spinpair::ScenarioConfig cfg = spinpair::ScenarioConfig::from_json_file(config_path);
      if (tol_override > 0.0) cfg.tol = tol_override;
      const spinpair::ScenarioResult result = spinpair::run_scenario(cfg);
      spinpair::write_scenario_outputs(cfg, result, outdir, basename);
      std::cout << "wrote " << outdir << "/" << basename << ".csv" << std::endl;
      return 0;
    }
    if (sweep->parsed()) {
      spinpair::ScenarioConfig cfg = spinpair::ScenarioConfig::from_json_file(config_path);
      if (tol_override > 0.0) cfg.tol = tol_override;
      const spinpair::SweepResult result = spinpair::run_sweep(cfg, workers);
      std::filesystem::create_directories(outdir);
      const auto csv_path = std::filesystem::path(outdir) / (basename + "_sweep.csv");
      {
        std::ofstream csv(csv_path);
        if (!csv) return fail("io", "cannot write " + csv_path.string());
        spinpair::write_sweep_csv(csv, result);
      }
      int failed = 0;
      nlohmann::json failures = nlohmann::json::array();
      for (const auto& c : result.cells) {
        if (!c.error.empty()) {
          ++failed;
          failures.push_back({{"x", c.x}, {"y", c.y}, {"error", c.error}});
        }
      }
      nlohmann::json manifest{
          {"x_axis", {{"param", result.x_axis.param}, {"min", result.x_axis.min},
                      {"max", result.x_axis.max}, {"count", result.x_axis.count},
                      {"scale", result.x_axis.log_scale ? "log" : "linear"}}},
          {"y_axis", {{"param", result.y_axis.param}, {"min", result.y_axis.min},
                      {"max", result.y_axis.max}, {"count", result.y_axis.count},
                      {"scale", result.y_axis.log_scale ? "log" : "linear"}}},
          {"params", spinpair::model_json(cfg.model)},
          {"initial_state", spinpair::to_string(cfg.preset)},
          {"cells", result.cells.size()},
          {"failed_cells", failures}};
      std::ofstream mf(std::filesystem::path(outdir) / (basename + "_sweep_manifest.json"));
      mf << manifest.dump(2) << '\n';
      std::cout << "wrote " << csv_path.string() << " (" << failed
                << " failed cells)" << std::endl;
      return failed == 0 ? 0 : fail("sweep", std::to_string(failed) + " cells failed");
    }
    if (figure->parsed()) {
      const auto which = spinpair::figure_from_string(figure_name);
      if (!which) return fail("usage", "unknown figure: " + figure_name);
      int gx = 20, gy = 20;
      if (std::sscanf(grid.c_str(), "%dx%d", &gx, &gy) != 2 || gx < 1 || gy < 1) {
        return fail("usage", "bad --grid, expected NxM");
      }
      spinpair::emit_figure_data(*which, outdir, workers, gx, gy);
      std::cout << "wrote " << figure_name << " data to " << outdir << std::endl;
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    return fail("config", e.what());
  } catch (const std::exception& e) {
    return fail("runtime", e.what());
  }
  return fail("usage", "no subcommand");
}
