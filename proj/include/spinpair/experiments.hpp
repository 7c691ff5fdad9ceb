#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinpair/dynamics.hpp"
#include "spinpair/entanglement.hpp"
#include "spinpair/params.hpp"

namespace spinpair {

enum class InitialStatePreset { Singlet, Triplet, DipolarOrder, Zero, Thermal, Custom };

std::string to_string(InitialStatePreset p);

enum class Representation { Block, Liouville };

struct SweepAxis {
  std::string param;  // one of the overridable model parameters
  double min = 0.0;
  double max = 0.0;
  int count = 0;
  bool log_scale = false;

  std::vector<double> grid() const;
};

struct ScenarioConfig {
  Model model;
  InitialStatePreset preset = InitialStatePreset::Zero;
  ObservableVector custom_init;  // used only with Custom
  double t_end = 1e4;            // in units of 1/J unless scaled_time is off
  int sample_count = 400;
  bool log_sampling = true;
  double log_decades = 6.0;
  double tol = 1e-10;
  bool scaled_time = true;  // report time as J t; opt out for physical units
  Representation representation = Representation::Block;
  std::optional<std::pair<SweepAxis, SweepAxis>> sweep;

  ObservableVector initial_observables() const;
  IntegrateOptions integrate_options() const;

  static ScenarioConfig from_json(const nlohmann::json& j);
  static ScenarioConfig from_json_file(const std::filesystem::path& path);
};

// Overridable parameter names accepted by sweeps ("alpha", "M0",
// "kappa0_star", "kappa1_star", "kappa2_star", "delta_kappa1_star",
// "delta_kappa2_star", "omega_d0_star", "delta_omega_star").
bool is_sweep_param(const std::string& name);
Model with_param(const Model& m, const std::string& name, double value);

struct ScenarioResult {
  Trajectory trajectory;
  std::vector<double> concurrence;
  SteadyState steady;
};

ScenarioResult run_scenario(const ScenarioConfig& cfg);

// Concurrence summary of one trajectory.
struct ConcurrenceSummary {
  double max_value = 0.0;
  double time_of_max = 0.0;
  double decay_time = 0.0;  // first fall below max/e after the max; inf if never
};

ConcurrenceSummary summarize_concurrence(const std::vector<double>& times,
                                         const std::vector<double>& concurrence);

struct SweepCell {
  double x = 0.0, y = 0.0;
  SteadyState steady;
  double max_concurrence = 0.0;
  double time_of_max = 0.0;
  double decay_time = 0.0;
  std::string error;  // nonempty when the cell failed
};

struct SweepResult {
  SweepAxis x_axis, y_axis;
  std::vector<SweepCell> cells;  // row-major over (x, y), y fastest
};

SweepResult run_sweep(const ScenarioConfig& cfg, int workers = 1);

// --- serialization ---

// Trajectory CSV schema:
// t, Mz, Mzz, Mc, Mx, My, Mxy, Mxz, Myz, Ax, Ay, Az, Axy, Axz, Ayz, Ac, concurrence
void write_trajectory_csv(std::ostream& os, const Trajectory& traj,
                          const std::vector<double>& concurrence);
void write_sweep_csv(std::ostream& os, const SweepResult& result);

nlohmann::json model_json(const Model& m);
nlohmann::json observables_json(const ObservableVector& v);
nlohmann::json steady_state_json(const Model& m, const SteadyState& s);
nlohmann::json scenario_metadata(const ScenarioConfig& cfg, const ScenarioResult& r);

// Writes basename.csv, basename_meta.json and basename_steady.json.
void write_scenario_outputs(const ScenarioConfig& cfg, const ScenarioResult& r,
                            const std::filesystem::path& outdir,
                            const std::string& basename);

enum class Figure { Fig1, Fig2a, Fig2b, Fig2c, Fig3 };

std::optional<Figure> figure_from_string(const std::string& name);

// Emits the per-curve CSV files (or the sweep grid for Fig3) plus a manifest.
void emit_figure_data(Figure which, const std::filesystem::path& outdir,
                      int workers = 1, int grid_x = 20, int grid_y = 20);

}  // namespace spinpair
